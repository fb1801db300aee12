#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "chow/groebner.hpp"

namespace chow {

// Documented default randomness seed for every seeded operation.
inline constexpr uint64_t kDefaultSeed = 271828;

// Deterministic stream of small nonzero integers for generic coefficients.
class SliceRng {
public:
    explicit SliceRng(uint64_t seed) : eng_(seed) {}

    Integer small_nonzero() {
        uint64_t raw = eng_();
        long magnitude = static_cast<long>(raw % 97) + 1;
        bool negative = (raw >> 32) & 1;
        return Integer(negative ? -magnitude : magnitude);
    }

private:
    std::mt19937_64 eng_;
};

// Numerator of the multigraded Hilbert series of a monomial quotient,
// as sum of coef * t^shift over per-block degree shifts.
struct HilbertNumerator {
    std::vector<std::pair<Integer, std::vector<int>>> terms;
};

HilbertNumerator hilbert_numerator(std::vector<Monomial> lead_monomials,
                                   const VariableSpace& space, const Deadline& dl);

// Exact Hilbert function value of S/L at the given multidegree.
Integer hilbert_value(const HilbertNumerator& num, const VariableSpace& space,
                      const std::vector<int>& degs);

// Stabilized value of the Hilbert function for large multidegrees: the
// degree (with multiplicity) of a zero-dimensional multiprojective scheme
// whose lead-term staircase is given. nullopt when the function does not
// become constant (positive-dimensional scheme).
std::optional<Integer> stabilized_degree(const std::vector<Monomial>& lead_monomials,
                                         const VariableSpace& space, const Deadline& dl);

// Degree of the scheme cut out by `ideal` plus n_cuts generic linear forms
// in the variables of slice_block. nullopt when the slice fails to be
// zero-dimensional for the drawn coefficients.
std::optional<Integer> sliced_degree_once(const IdealGens& ideal, int slice_block, int n_cuts,
                                          SliceRng& rng, const Deadline& dl);

// Projective solvability: whether V(ideal) has a point with all listed
// blocks nonzero (Hilbert function stabilizes to a positive value).
// nullopt when the relevant locus is positive-dimensional.
std::optional<bool> has_relevant_point(const IdealGens& ideal, const Deadline& dl);

} // namespace chow
