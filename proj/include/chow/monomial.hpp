#pragma once

#include <utility>
#include <vector>

#include "chow/variable_space.hpp"

namespace chow {

// Sparse exponent vector: (flat variable index, exponent) pairs, sorted by
// variable, no zero exponents stored.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);

    static Monomial variable(int v, int e = 1);

    const std::vector<Entry>& entries() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    int exponent(int v) const;
    int total_degree() const;
    int degree_in_block(const VariableSpace& space, int b) const;
    std::vector<int> block_degrees(const VariableSpace& space) const;
    int min_exponent_of(int v) const { return exponent(v); }

    Monomial operator*(const Monomial& o) const;
    // Componentwise quotient; nullopt when o does not divide *this.
    std::optional<Monomial> divided_by(const Monomial& o) const;
    bool divisible_by(const Monomial& o) const;
    Monomial lcm_with(const Monomial& o) const;
    Monomial gcd_with(const Monomial& o) const;
    bool coprime_with(const Monomial& o) const;
    Monomial pow(int e) const;
    // Remove the given variable entirely (used by saturation).
    Monomial without_variable(int v) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Plain lexicographic comparison on the flat variable sequence
    // (earlier variable = larger); used as the storage order of Poly terms.
    static int cmp_lex(const Monomial& a, const Monomial& b);

private:
    std::vector<Entry> exps_;
};

} // namespace chow
