#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "chow/monomial.hpp"
#include "chow/order.hpp"
#include "chow/scalar.hpp"

namespace chow {

struct Term {
    Monomial mon;
    Rational coef;

    bool operator==(const Term& o) const { return mon == o.mon && coef == o.coef; }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// block-structured variable space. Terms are kept sorted descending under
// the flat lex order, with no zero coefficients; equal values compare equal.
class Poly {
public:
    Poly() = default;
    explicit Poly(SpacePtr space) : space_(std::move(space)) {}
    Poly(SpacePtr space, std::vector<Term> terms_sorted_desc);

    static Poly zero(SpacePtr space) { return Poly(std::move(space)); }
    static Poly constant(SpacePtr space, Rational c);
    static Poly variable(SpacePtr space, int v);
    static Poly from_terms(SpacePtr space, std::vector<Term> unsorted);

    const SpacePtr& space() const { return space_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const; // -1 for zero

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& c) const;
    Poly times_term(const Rational& c, const Monomial& m) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Leading term under an arbitrary order (scan); under the storage lex
    // order this is terms().front().
    const Term& leading_term(const MonomialOrder& order) const;

    // Per-block degree vector; throws not_multihomogeneous / zero_input.
    std::vector<int> multidegree() const;
    bool is_multihomogeneous() const;
    // Split into multihomogeneous components, keyed by degree vector.
    std::vector<Poly> multihomogeneous_components() const;

    int degree_in_block(int b) const; // max over terms
    bool uses_block(int b) const;
    int min_exponent_of(int v) const; // min over terms (0 if some term lacks v)

    // lambda * p with lambda > 0 rational chosen so coefficients become
    // coprime integers; then sign fixed so the order-leading coefficient is
    // positive. Throws zero_input on 0.
    Poly normalized_primitive(const MonomialOrder& order) const;

    // Substitute variables by polynomials (missing entries = identity).
    Poly substituted(const std::map<int, Poly>& images, const SpacePtr& target) const;
    // Evaluate at rational values for every variable of selected blocks,
    // keeping the others symbolic. values maps flat var index -> value.
    Poly partially_evaluated(const std::map<int, Rational>& values) const;
    // Move the polynomial to another space via a flat variable index map.
    Poly remapped(const SpacePtr& target, const std::vector<int>& var_map) const;

    // Coefficient extraction: group terms by their sub-monomial supported on
    // `blocks`; returns pairs (sub-monomial over those blocks, cofactor poly
    // free of those blocks).
    std::vector<std::pair<Monomial, Poly>> collect_blocks(const std::vector<int>& blocks) const;

    std::string to_string() const; // canonical text grammar

private:
    void normalize_sorted(); // strip zero coefficients (terms_ already sorted)

    SpacePtr space_;
    std::vector<Term> terms_;
};

Poly parse_poly(const std::string& text, const SpacePtr& space);

std::vector<int> add_degree_vectors(const std::vector<int>& a, const std::vector<int>& b);

} // namespace chow
