#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "chow/ideal.hpp"
#include "chow/order.hpp"

namespace chow {

// Resource budget for symbolic computations. Exceeding any limit raises
// DeadlineError with partial statistics instead of hanging.
struct Deadline {
    int max_basis_size = 5000;
    int max_total_degree = 60;
    std::chrono::milliseconds wall_budget{60000};

    void validate() const {
        if (max_basis_size <= 0 || max_total_degree <= 0 || wall_budget.count() <= 0)
            fail(Errc::invalid_argument, "deadline limits must be positive");
    }
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly> basis;
    bool reduced = false;
    long pairs_processed = 0;
    int max_degree_seen = 0;
};

// Reduced Groebner basis via Buchberger with sugar selection and both
// classical pair criteria. Deterministic for fixed input and order.
GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order, const Deadline& dl);

// Unique normal form of p modulo gb (gb must be reduced for uniqueness).
Poly reduce(const Poly& p, const GroebnerBasis& gb);

// Elimination ideal generators: GB under a block-elimination order with the
// dropped blocks first, filtered to polynomials free of dropped variables,
// returned over the restricted space as a reduced GB of the intersection.
IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& drop_blocks,
                    const Deadline& dl);

// Sole element of the reduced GB, normalized primitive; errors when the
// ideal is zero or needs more than one generator.
Poly principal_generator(const IdealGens& ideal, const MonomialOrder& order, const Deadline& dl);

// I : v^inf for one variable of a homogeneous ideal (grevlex-with-v-last
// basis, each element divided by its v power).
IdealGens saturate_variable(const IdealGens& ideal, int var, const Deadline& dl);

// I : m^inf where m is the irrelevant ideal of one block (intersection of
// the per-variable saturations). Requires homogeneous generators.
IdealGens saturate_block(const IdealGens& ideal, const std::string& block, const Deadline& dl);

// Intersection of two multigraded ideals (auxiliary-variable elimination).
IdealGens ideal_intersection(const IdealGens& a, const IdealGens& b, const Deadline& dl);

// Geometric projection for multiprojective ideals: saturate away the
// irrelevant locus of every dropped block, then eliminate those blocks.
IdealGens eliminate_saturated(const IdealGens& ideal, const std::vector<std::string>& drop_blocks,
                              const Deadline& dl);

// Membership helpers.
bool ideal_contains(const GroebnerBasis& gb, const Poly& p);
bool ideal_contains_all(const GroebnerBasis& gb, const std::vector<Poly>& ps);

} // namespace chow
