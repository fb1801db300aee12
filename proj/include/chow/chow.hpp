#pragma once

#include "chow/cycle.hpp"
#include "chow/hilbert.hpp"

namespace chow {

// Associated form of an n-cycle of degree k in P^r: a polynomial over blocks
// u0..un of r+1 dual variables each, multihomogeneous of degree k per block,
// primitive-normalized. Vanishes exactly at the flags (u_0..u_n) whose common
// zero locus meets the cycle.
struct ChowForm {
    int n = 0, k = 0, r = 0;
    Poly form;
};

// Dual-variable space u0..un, each of size r+1 (prefix configurable so
// pushforward forms can live in v-blocks).
SpacePtr chow_space(int n, int r, const std::string& prefix = "u");

// Rename the dual blocks of a form (u <-> v) preserving slots.
ChowForm with_block_prefix(const ChowForm& f, const std::string& from, const std::string& to);

// Degree of a trusted-irreducible component via generic hyperplane slicing
// (seeded, two-trial agreement).
Integer cycle_component_degree(const CycleComponent& z, const Deadline& dl,
                               uint64_t seed = kDefaultSeed);

// Chow form of one component: incidence ideal I(Z) + <u_i . x>, saturated at
// the irrelevant locus of x, x eliminated, principal generator extracted.
// Cross-checks principality and the degree law. Multiplicity is ignored.
ChowForm chow_form_component(const CycleComponent& z, const Deadline& dl);

// Product of component forms raised to their multiplicities.
ChowForm chow_form_cycle(const Cycle& z, const Deadline& dl);

// Exact evaluation test: true iff the form vanishes at the given flags.
bool meets(const ChowForm& f, const std::vector<std::vector<Rational>>& flags);

// Projective dimension of the space of forms of degree k in each of the
// n+1 dual blocks: binom(k+r, r)^(n+1) - 1.
Integer phi(int n, int k, int r);
Integer phi(long n, const Integer& k, long r);

struct ChowInstanceLimits {
    int max_eliminated_vars = 6; // k*(r+1)
    int max_coefficient_vars = 128;
};

// Equations cutting the locus of associated forms of n-cycles of degree k
// supported in V(S), in the coefficient block F and the carried duals
// u1..un. Tiny instances only.
std::vector<Poly> chow_membership_equations(int n, int k, int r, const IdealGens& S,
                                            const Deadline& dl,
                                            const ChowInstanceLimits& limits = {});

} // namespace chow
