#include "chow/monomial.hpp"

#include <algorithm>

namespace chow {

Monomial::Monomial(std::vector<Entry> entries) : exps_(std::move(entries)) {
    std::sort(exps_.begin(), exps_.end());
    // merge duplicates, drop zeros
    std::vector<Entry> out;
    out.reserve(exps_.size());
    for (const auto& [v, e] : exps_) {
        if (e < 0) fail(Errc::invalid_argument, "negative exponent");
        if (e == 0) continue;
        if (!out.empty() && out.back().first == v)
            out.back().second += e;
        else
            out.emplace_back(v, e);
    }
    exps_ = std::move(out);
}

Monomial Monomial::variable(int v, int e) {
    Monomial m;
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    if (e > 0) m.exps_.emplace_back(v, e);
    return m;
}

int Monomial::exponent(int v) const {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                               [](const Entry& a, int b) { return a.first < b; });
    if (it != exps_.end() && it->first == v) return it->second;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

int Monomial::degree_in_block(const VariableSpace& space, int b) const {
    int lo = space.block_offset(b);
    int hi = lo + space.block(b).size;
    int d = 0;
    for (const auto& [v, e] : exps_)
        if (v >= lo && v < hi) d += e;
    return d;
}

std::vector<int> Monomial::block_degrees(const VariableSpace& space) const {
    std::vector<int> deg(space.block_count(), 0);
    for (const auto& [v, e] : exps_) deg[space.block_of_var(v)] += e;
    return deg;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.exps_.reserve(exps_.size() + o.exps_.size());
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            r.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            r.exps_.push_back(*b++);
        } else {
            r.exps_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (b != o.exps_.end()) {
        if (a == exps_.end() || a->first > b->first) return std::nullopt;
        if (a->first < b->first) {
            r.exps_.push_back(*a++);
            continue;
        }
        if (a->second < b->second) return std::nullopt;
        if (a->second > b->second) r.exps_.emplace_back(a->first, a->second - b->second);
        ++a;
        ++b;
    }
    while (a != exps_.end()) r.exps_.push_back(*a++);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    auto a = exps_.begin();
    for (const auto& [v, e] : o.exps_) {
        while (a != exps_.end() && a->first < v) ++a;
        if (a == exps_.end() || a->first != v || a->second < e) return false;
    }
    return true;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
    Monomial r;
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            r.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            r.exps_.push_back(*b++);
        } else {
            r.exps_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::gcd_with(const Monomial& o) const {
    Monomial r;
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            r.exps_.emplace_back(a->first, std::min(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() && b != o.exps_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else
            return false;
    }
    return true;
}

Monomial Monomial::pow(int e) const {
    if (e < 0) fail(Errc::invalid_argument, "negative exponent");
    Monomial r;
    if (e == 0) return r;
    r.exps_ = exps_;
    for (auto& [v, x] : r.exps_) x *= e;
    return r;
}

Monomial Monomial::without_variable(int v) const {
    Monomial r;
    r.exps_.reserve(exps_.size());
    for (const auto& ent : exps_)
        if (ent.first != v) r.exps_.push_back(ent);
    return r;
}

int Monomial::cmp_lex(const Monomial& a, const Monomial& b) {
    auto i = a.exps_.begin();
    auto j = b.exps_.begin();
    while (i != a.exps_.end() && j != b.exps_.end()) {
        if (i->first != j->first) {
            // the monomial holding the earlier variable is larger
            return i->first < j->first ? 1 : -1;
        }
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i;
        ++j;
    }
    if (i != a.exps_.end()) return 1;
    if (j != b.exps_.end()) return -1;
    return 0;
}

} // namespace chow
