#pragma once

#include "chow/chow.hpp"

namespace chow {

// n-dimensional cycle in P^N x P^M cut out by a bihomogeneous ideal over
// blocks x (size N+1) and y (size M+1); graphs of rational maps live here.
struct GraphCycle {
    int N, M;
    int dim_n;
    IdealGens ideal;
    std::optional<Integer> segre_degree; // deg Gamma metadata when known

    GraphCycle(int N_, int M_, int dim_n_, IdealGens ideal_,
               std::optional<Integer> segre_degree_ = std::nullopt)
        : N(N_), M(M_), dim_n(dim_n_), ideal(std::move(ideal_)),
          segre_degree(std::move(segre_degree_)) {
        if (dim_n < 1) fail(Errc::invalid_argument, "graph cycle dimension must be >= 1");
        if (ideal.space->block_count() != 2 || ideal.space->block(0).size != N + 1 ||
            ideal.space->block(1).size != M + 1)
            fail(Errc::invalid_argument, "graph ideal must live in blocks (x, y) of sizes N+1, M+1");
        for (const auto& g : ideal.gens)
            if (!g.is_multihomogeneous())
                fail(Errc::not_multihomogeneous,
                     "graph generator not bihomogeneous: " + g.to_string());
    }
};

// Result of pushing a graph cycle forward along the second projection:
// chow = normalize(root^d), of block degree k = deg2(Gamma) in each v_i.
struct PushforwardResult {
    ChowForm chow; // over v0..vn
    int k = 0;
    int d = 1;
    ChowForm root;
    std::string note;
};

// Intersection number of Gamma with n generic hyperplanes pulled back from
// the y factor; two independent random slices must agree.
int second_degree(const GraphCycle& gamma, const Deadline& dl, uint64_t seed = kDefaultSeed);

// Chow form of p_*(Gamma) via the incidence <v_i . y> + I(Gamma), with the
// map multiplicity recovered from deg2 and the largest d-th power extracted.
PushforwardResult pushforward_chow(const GraphCycle& gamma, const Deadline& dl,
                                   uint64_t seed = kDefaultSeed);

// Primitive H with normalize(H^d) = normalize(G), or nullopt. Leading
// coefficient chosen positive for even d.
std::optional<Poly> dth_root(const Poly& g, int d, const MonomialOrder& order);

// Set-theoretic composite of correspondences: eliminate the middle factor
// from I(H)(x,y) + I(G)(y,z). H in P^N x P^L, G in P^L x P^M; result over
// blocks (x, z).
IdealGens compose(const GraphCycle& h, const GraphCycle& g, const Deadline& dl);

} // namespace chow
