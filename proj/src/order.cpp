#include "chow/order.hpp"

#include <algorithm>
#include <sstream>

namespace chow {

MonomialOrder MonomialOrder::lex(SpacePtr space) {
    return MonomialOrder(Kind::Lex, std::move(space));
}

MonomialOrder MonomialOrder::grevlex(SpacePtr space) {
    return MonomialOrder(Kind::GrevLex, std::move(space));
}

MonomialOrder MonomialOrder::block_elim(SpacePtr space, std::vector<int> first_blocks) {
    MonomialOrder o(Kind::BlockElim, space);
    std::vector<bool> first(space->block_count(), false);
    for (int b : first_blocks) {
        if (b < 0 || b >= space->block_count())
            fail(Errc::invalid_argument, "block index out of range in elimination order");
        if (first[b]) fail(Errc::invalid_argument, "duplicate block in elimination order");
        first[b] = true;
    }
    o.block_seq_ = std::move(first_blocks);
    for (int b = 0; b < space->block_count(); ++b)
        if (!first[b]) o.block_seq_.push_back(b);
    return o;
}

MonomialOrder MonomialOrder::grevlex_last_var(SpacePtr space, int last_var) {
    if (last_var < 0 || last_var >= space->total_vars())
        fail(Errc::invalid_argument, "variable index out of range");
    MonomialOrder o(Kind::GrevLexLastVar, std::move(space));
    o.last_var_ = last_var;
    return o;
}

namespace {

// grevlex tie-break over a variable range scanned [hi-1 .. lo]: the first
// position from the back where exponents differ decides; smaller exponent
// wins. Entries are sorted by variable, so walk both from the back.
int revlex_scan(const Monomial& a, const Monomial& b, int lo, int hi) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    auto ia = ea.rbegin();
    auto ib = eb.rbegin();
    auto skip = [&](auto& it, const auto& end) {
        while (it != end && (it->first >= hi || it->first < lo)) ++it;
    };
    skip(ia, ea.rend());
    skip(ib, eb.rend());
    while (ia != ea.rend() || ib != eb.rend()) {
        if (ib == eb.rend() || (ia != ea.rend() && ia->first > ib->first)) {
            // a has a variable further back that b lacks -> a has larger
            // exponent there -> a is smaller
            return -1;
        }
        if (ia == ea.rend() || ib->first > ia->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia;
        ++ib;
        skip(ia, ea.rend());
        skip(ib, eb.rend());
    }
    return 0;
}

int degree_in_range(const Monomial& m, int lo, int hi) {
    int d = 0;
    for (const auto& [v, e] : m.entries())
        if (v >= lo && v < hi) d += e;
    return d;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::Lex:
        return Monomial::cmp_lex(a, b);
    case Kind::GrevLex: {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db ? 1 : -1;
        return revlex_scan(a, b, 0, space_->total_vars());
    }
    case Kind::GrevLexLastVar: {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db ? 1 : -1;
        // designated variable sits at the very back of the scan
        int ea = a.exponent(last_var_), eb = b.exponent(last_var_);
        if (ea != eb) return ea < eb ? 1 : -1;
        // remaining variables keep flat positions; scan from the back skipping it
        const Monomial a2 = a.without_variable(last_var_);
        const Monomial b2 = b.without_variable(last_var_);
        return revlex_scan(a2, b2, 0, space_->total_vars());
    }
    case Kind::BlockElim: {
        for (int blk : block_seq_) {
            int lo = space_->block_offset(blk);
            int hi = lo + space_->block(blk).size;
            int da = degree_in_range(a, lo, hi);
            int db = degree_in_range(b, lo, hi);
            if (da != db) return da > db ? 1 : -1;
            int c = revlex_scan(a, b, lo, hi);
            if (c != 0) return c;
        }
        return 0;
    }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Lex: os << "lex"; break;
    case Kind::GrevLex: os << "grevlex"; break;
    case Kind::GrevLexLastVar: os << "grevlex(last=" << space_->var_name(last_var_) << ")"; break;
    case Kind::BlockElim:
        os << "block[";
        for (size_t i = 0; i < block_seq_.size(); ++i) {
            if (i) os << ",";
            os << space_->block(block_seq_[i]).name;
        }
        os << "]";
        break;
    }
    return os.str();
}

} // namespace chow
