#include "chow/poly.hpp"

#include <algorithm>
#include <sstream>

namespace chow {

namespace {

struct LexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_lex(a, b) > 0;
    }
};

} // namespace

Poly::Poly(SpacePtr space, std::vector<Term> terms_sorted_desc)
    : space_(std::move(space)), terms_(std::move(terms_sorted_desc)) {
    normalize_sorted();
}

void Poly::normalize_sorted() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.coef == 0; }),
                 terms_.end());
}

Poly Poly::constant(SpacePtr space, Rational c) {
    Poly p(std::move(space));
    if (c != 0) p.terms_.push_back({Monomial(), std::move(c)});
    return p;
}

Poly Poly::variable(SpacePtr space, int v) {
    Poly p(std::move(space));
    p.terms_.push_back({Monomial::variable(v), Rational(1)});
    return p;
}

Poly Poly::from_terms(SpacePtr space, std::vector<Term> unsorted) {
    std::map<Monomial, Rational, LexDesc> acc;
    for (auto& t : unsorted) {
        auto [it, fresh] = acc.emplace(std::move(t.mon), t.coef);
        if (!fresh) it->second += t.coef;
    }
    Poly p(std::move(space));
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) p.terms_.push_back({m, c});
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_space(space_, o.space_);
    Poly r(space_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int c;
        if (a == terms_.end())
            c = -1;
        else if (b == o.terms_.end())
            c = 1;
        else
            c = Monomial::cmp_lex(a->mon, b->mon);
        if (c > 0) {
            r.terms_.push_back(*a++);
        } else if (c < 0) {
            r.terms_.push_back(*b++);
        } else {
            Rational s = a->coef + b->coef;
            if (s != 0) r.terms_.push_back({a->mon, std::move(s)});
            ++a;
            ++b;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_term(const Rational& c, const Monomial& m) const {
    Poly r(space_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mon * m, t.coef * c});
    // multiplying by a fixed monomial preserves the lex ordering
    return r;
}

Poly Poly::scaled(const Rational& c) const { return times_term(c, Monomial()); }

Poly Poly::operator*(const Poly& o) const {
    require_same_space(space_, o.space_);
    std::map<Monomial, Rational, LexDesc> acc;
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& s : small.terms_) {
        for (const auto& t : large.terms_) {
            Monomial m = s.mon * t.mon;
            Rational c = s.coef * t.coef;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(c));
            else
                it->second += c;
        }
    }
    Poly r(space_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) fail(Errc::invalid_argument, "negative polynomial power");
    Poly r = Poly::constant(space_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_space(space_, o.space_) && terms_ == o.terms_;
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) fail(Errc::zero_input, "leading term of the zero polynomial");
    if (order.kind() == MonomialOrder::Kind::Lex) return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.compare(t.mon, best->mon) > 0) best = &t;
    return *best;
}

std::vector<int> Poly::multidegree() const {
    if (terms_.empty()) fail(Errc::zero_input, "multidegree of the zero polynomial");
    std::vector<int> deg = terms_.front().mon.block_degrees(*space_);
    for (size_t i = 1; i < terms_.size(); ++i) {
        if (terms_[i].mon.block_degrees(*space_) != deg)
            fail(Errc::not_multihomogeneous, "not multihomogeneous: " + to_string());
    }
    return deg;
}

bool Poly::is_multihomogeneous() const {
    if (terms_.empty()) return false;
    std::vector<int> deg = terms_.front().mon.block_degrees(*space_);
    for (size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].mon.block_degrees(*space_) != deg) return false;
    return true;
}

std::vector<Poly> Poly::multihomogeneous_components() const {
    std::map<std::vector<int>, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[t.mon.block_degrees(*space_)].push_back(t);
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& [deg, terms] : buckets) {
        Poly p(space_);
        p.terms_ = std::move(terms); // bucket order preserves lex-desc
        out.push_back(std::move(p));
    }
    return out;
}

int Poly::degree_in_block(int b) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mon.degree_in_block(*space_, b));
    return d;
}

bool Poly::uses_block(int b) const {
    for (const auto& t : terms_)
        if (t.mon.degree_in_block(*space_, b) > 0) return true;
    return false;
}

int Poly::min_exponent_of(int v) const {
    if (terms_.empty()) return 0;
    int m = terms_.front().mon.exponent(v);
    for (const auto& t : terms_) m = std::min(m, t.mon.exponent(v));
    return m;
}

Poly Poly::normalized_primitive(const MonomialOrder& order) const {
    if (terms_.empty()) fail(Errc::zero_input, "normalize of the zero polynomial");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& t : terms_) {
        num_gcd = gcd(num_gcd, t.coef.get_num());
        den_lcm = lcm(den_lcm, t.coef.get_den());
    }
    Rational lambda = make_rational(den_lcm, num_gcd);
    Poly r = scaled(lambda);
    if (r.leading_term(order).coef < 0) r = -r;
    return r;
}

Poly Poly::substituted(const std::map<int, Poly>& images, const SpacePtr& target) const {
    Poly result = Poly::zero(target);
    for (const auto& t : terms_) {
        Poly factor = Poly::constant(target, t.coef);
        for (const auto& [v, e] : t.mon.entries()) {
            auto it = images.find(v);
            Poly base = (it != images.end()) ? it->second : Poly::variable(target, v);
            factor = factor * base.pow(e);
        }
        result = result + factor;
    }
    return result;
}

Poly Poly::partially_evaluated(const std::map<int, Rational>& values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coef;
        std::vector<Monomial::Entry> kept;
        for (const auto& [v, e] : t.mon.entries()) {
            auto it = values.find(v);
            if (it == values.end()) {
                kept.emplace_back(v, e);
            } else {
                Rational val = it->second;
                for (int i = 0; i < e; ++i) c *= val;
            }
        }
        out.push_back({Monomial(std::move(kept)), std::move(c)});
    }
    return Poly::from_terms(space_, std::move(out));
}

Poly Poly::remapped(const SpacePtr& target, const std::vector<int>& var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<Monomial::Entry> ents;
        ents.reserve(t.mon.entries().size());
        for (const auto& [v, e] : t.mon.entries()) {
            int w = var_map.at(v);
            if (w < 0) fail(Errc::invalid_argument, "remap drops a used variable");
            ents.emplace_back(w, e);
        }
        out.push_back({Monomial(std::move(ents)), t.coef});
    }
    return Poly::from_terms(target, std::move(out));
}

std::vector<std::pair<Monomial, Poly>> Poly::collect_blocks(const std::vector<int>& blocks) const {
    std::vector<std::pair<int, int>> ranges;
    for (int b : blocks)
        ranges.emplace_back(space_->block_offset(b), space_->block_offset(b) + space_->block(b).size);
    auto in_ranges = [&](int v) {
        for (auto [lo, hi] : ranges)
            if (v >= lo && v < hi) return true;
        return false;
    };
    std::map<Monomial, std::vector<Term>, LexDesc> buckets;
    for (const auto& t : terms_) {
        std::vector<Monomial::Entry> key, rest;
        for (const auto& ent : t.mon.entries())
            (in_ranges(ent.first) ? key : rest).push_back(ent);
        buckets[Monomial(std::move(key))].push_back({Monomial(std::move(rest)), t.coef});
    }
    std::vector<std::pair<Monomial, Poly>> out;
    out.reserve(buckets.size());
    for (auto& [key, terms] : buckets)
        out.emplace_back(key, Poly::from_terms(space_, std::move(terms)));
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        bool coef_one = (c == 1);
        if (!coef_one || t.mon.is_one()) os << c.get_str();
        bool need_star = !coef_one || t.mon.is_one() ? !t.mon.is_one() : false;
        bool printed_var = false;
        for (const auto& [v, e] : t.mon.entries()) {
            if (need_star || printed_var) os << "*";
            os << space_->var_name(v);
            if (e > 1) os << "^" << e;
            printed_var = true;
            need_star = false;
        }
        first = false;
    }
    return os.str();
}

std::vector<int> add_degree_vectors(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) fail(Errc::invalid_argument, "degree vector length mismatch");
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

} // namespace chow
