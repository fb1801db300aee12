#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chow/scalar.hpp"

namespace chow {

struct BigCfg {
    size_t digit_cap = 1000000; // exact representation up to this many digits
    int start_precision = 64;   // mantissa digits for the summary fallback
    int max_precision = 8192;
};

// Arbitrary-precision value that degrades gracefully: exact integer while
// the decimal size stays under the cap, otherwise an exact digit count plus
// the leading 20 digits.
class BigNumber {
public:
    BigNumber() = default;

    static BigNumber from_exact(Integer v);
    static BigNumber from_summary(Integer digit_count, std::string leading);

    bool is_exact() const { return exact_; }
    const Integer& value() const; // exact values only
    const Integer& digit_count() const { return digits_; }
    const std::string& leading_digits() const { return leading_; }

    bool operator==(const BigNumber& o) const;
    std::string to_display() const;

private:
    bool exact_ = false;
    Integer value_;
    Integer digits_;
    std::string leading_;
};

// Groebner-degree bound instantiating the elimination estimate:
// delta(r, d) = ceil( 2 * (d^2/2 + d)^(2^r) ), computed exactly over the
// rationals with a single final ceiling.
BigNumber delta(long r, const Integer& d, const BigCfg& cfg = {});
// delta'(r, d) = d * delta(r, d)
BigNumber delta_prime(long r, const Integer& d, const BigCfg& cfg = {});
// k-fold self-composition of delta' in the d argument
BigNumber delta_iter(long k, long r, const Integer& d, const BigCfg& cfg = {});
// Delta(n, k, r, d') = delta_iter(k, r, max(d', k*(n+1)))
BigNumber Delta(long n, long k, long r, const Integer& d_prime, const BigCfg& cfg = {});

struct ChowComplexity {
    Integer m_bar; // (N+1)(M+1) - 1
    Integer C;     // phi(n, gamma, m_bar)
    BigNumber D;   // 2 * Delta(n, gamma, m_bar, d')
};

ChowComplexity chow_complexity(long n, const Integer& gamma, const Integer& M, long N,
                               const Integer& d_prime, const BigCfg& cfg = {});

struct GeometryInputs {
    long n = 1;
    long r_n = 1;
    std::optional<Rational> vol_K;
    std::optional<Rational> vol_rK; // defaults to r_n^n * vol_K
    std::optional<Rational> eps;
    std::optional<Rational> vol_H_rnK; // volume input for the general graph bound
    std::optional<long> N;
    std::optional<Integer> d_prime;
    std::optional<std::vector<Rational>> intersection_numbers; // H^i.K^(n-i), i=0..n
};

// (d_V, M_V): ceil(vol(r_n K)) and d_V + n - 1.
std::pair<Integer, Integer> embedding_bounds(const GeometryInputs& g);

enum class GraphBoundCase { general, nef, pluricanonical };
const char* graph_bound_case_name(GraphBoundCase c);

Integer graph_degree_bound(const GeometryInputs& g, GraphBoundCase which);

struct MapDegreeTargets {
    std::optional<Rational> KX_n;   // K_X^n
    std::optional<Rational> KY_n;   // K_Y^n
    std::optional<Rational> vol_KY; // vol(K_Y)
};

struct MapDegreeBounds {
    std::optional<Integer> nef_case;
    std::optional<Integer> big_case;
    std::optional<Integer> eps_case;
};

MapDegreeBounds map_degree_bounds(const GeometryInputs& g, const MapDegreeTargets& t);

struct BoundReport {
    Integer d_V, M_V, gamma_X, M_bar, C;
    BigNumber D, B;
    std::vector<std::pair<std::string, std::string>> provenance;

    std::string to_document() const;
};

// Full chain: embedding bounds, graph degree bound, Chow complexity and the
// final count B = gamma^3 * D^C. M defaults to M_V, gamma to the
// pluricanonical graph bound.
BoundReport total_bound(const GeometryInputs& g, std::optional<Integer> M = std::nullopt,
                        std::optional<Integer> gamma = std::nullopt, const BigCfg& cfg = {});

} // namespace chow
