#pragma once

#include <vector>

#include "chow/poly.hpp"

namespace chow {

// Generating set of an ideal. Generators are nonzero and share one space;
// with check_graded they must each be multihomogeneous for the declared
// block grading. An empty list is the zero ideal.
struct IdealGens {
    SpacePtr space;
    std::vector<Poly> gens;

    IdealGens(SpacePtr space_, std::vector<Poly> gens_, bool check_graded = false)
        : space(std::move(space_)), gens(std::move(gens_)) {
        for (const auto& g : gens) {
            if (g.is_zero()) fail(Errc::zero_input, "zero generator in ideal");
            require_same_space(space, g.space());
            if (check_graded && !g.is_multihomogeneous())
                fail(Errc::not_multihomogeneous,
                     "generator not homogeneous per block grading: " + g.to_string());
        }
    }

    bool is_zero_ideal() const { return gens.empty(); }
};

} // namespace chow
