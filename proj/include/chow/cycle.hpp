#pragma once

#include "chow/ideal.hpp"

namespace chow {

// One irreducible component of a cycle in P^r: homogeneous ideal in a single
// block of r+1 variables, with dimension/multiplicity metadata.
// Irreducibility is trusted input.
struct CycleComponent {
    int ambient_r;
    int dim_n;
    IdealGens ideal;
    int multiplicity;

    CycleComponent(int ambient_r_, int dim_n_, IdealGens ideal_, int multiplicity_ = 1)
        : ambient_r(ambient_r_), dim_n(dim_n_), ideal(std::move(ideal_)),
          multiplicity(multiplicity_) {
        if (ambient_r < 1) fail(Errc::invalid_argument, "ambient dimension must be >= 1");
        if (dim_n < 0 || dim_n >= ambient_r)
            fail(Errc::invalid_argument, "cycle dimension must satisfy 0 <= n < r");
        if (multiplicity < 1) fail(Errc::invalid_argument, "multiplicity must be positive");
        if (ideal.space->block_count() != 1 || ideal.space->block(0).size != ambient_r + 1)
            fail(Errc::invalid_argument, "component ideal must live in one block of r+1 variables");
        for (const auto& g : ideal.gens)
            if (!g.is_multihomogeneous())
                fail(Errc::not_multihomogeneous, "component generator not homogeneous: " + g.to_string());
    }
};

// Pure-dimensional positive cycle: components sharing ambient and dimension.
struct Cycle {
    std::vector<CycleComponent> components;

    explicit Cycle(std::vector<CycleComponent> comps) : components(std::move(comps)) {
        if (components.empty()) fail(Errc::invalid_argument, "cycle needs at least one component");
        for (const auto& c : components) {
            if (c.ambient_r != components.front().ambient_r ||
                c.dim_n != components.front().dim_n)
                fail(Errc::invalid_argument, "cycle components must share ambient and dimension");
        }
    }

    int ambient_r() const { return components.front().ambient_r; }
    int dim_n() const { return components.front().dim_n; }
};

} // namespace chow
