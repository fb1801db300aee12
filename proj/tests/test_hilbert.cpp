#include <doctest.h>

#include "chow/hilbert.hpp"

using namespace chow;

namespace {

Deadline quick() {
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(30000);
    return dl;
}

std::optional<Integer> degree_of(const IdealGens& I, int slice_block, int cuts, uint64_t seed) {
    SliceRng rng(seed);
    return sliced_degree_once(I, slice_block, cuts, rng, quick());
}

} // namespace

TEST_CASE("hilbert function of the full polynomial ring") {
    auto space = VariableSpace::make({{"x", 3}});
    HilbertNumerator num = hilbert_numerator({}, *space, quick());
    CHECK(hilbert_value(num, *space, {0}) == 1);
    CHECK(hilbert_value(num, *space, {2}) == 6);  // monomials of degree 2 in 3 vars
    CHECK(hilbert_value(num, *space, {3}) == 10);
}

TEST_CASE("staircase counting for a point of P^1") {
    auto space = VariableSpace::make({{"x", 2}});
    // lead-term ideal <x0>: one standard monomial per degree
    auto deg = stabilized_degree({Monomial::variable(0)}, *space, quick());
    REQUIRE(deg.has_value());
    CHECK(*deg == 1);
}

TEST_CASE("degrees of classical varieties via generic slicing") {
    // point [1:2] in P^1
    auto p1 = VariableSpace::make({{"x", 2}});
    IdealGens point(p1, {parse_poly("2*x0 - x1", p1)});
    auto d0 = degree_of(point, 0, 0, kDefaultSeed);
    REQUIRE(d0.has_value());
    CHECK(*d0 == 1);

    // line {x2 = x3 = 0} in P^3, 1-dimensional
    auto p3 = VariableSpace::make({{"x", 4}});
    IdealGens line(p3, {parse_poly("x2", p3), parse_poly("x3", p3)});
    auto d1 = degree_of(line, 0, 1, kDefaultSeed);
    REQUIRE(d1.has_value());
    CHECK(*d1 == 1);

    // conic x0*x2 - x1^2 in P^2
    auto p2 = VariableSpace::make({{"x", 3}});
    IdealGens conic(p2, {parse_poly("x0*x2 - x1^2", p2)});
    auto d2 = degree_of(conic, 0, 1, kDefaultSeed);
    REQUIRE(d2.has_value());
    CHECK(*d2 == 2);

    // twisted cubic in P^3
    IdealGens cubic(p3, {parse_poly("x0*x2 - x1^2", p3), parse_poly("x1*x3 - x2^2", p3),
                         parse_poly("x0*x3 - x1*x2", p3)});
    auto d3 = degree_of(cubic, 0, 1, kDefaultSeed);
    REQUIRE(d3.has_value());
    CHECK(*d3 == 3);
}

TEST_CASE("positive-dimensional slices do not stabilize") {
    auto p3 = VariableSpace::make({{"x", 4}});
    IdealGens surface(p3, {parse_poly("x0*x3 - x1*x2", p3)}); // quadric surface, dim 2
    // slicing with only one hyperplane leaves a curve
    auto d = degree_of(surface, 0, 1, kDefaultSeed);
    CHECK(!d.has_value());
    // two hyperplanes cut it down to deg(2) many points
    auto d2 = degree_of(surface, 0, 2, kDefaultSeed);
    REQUIRE(d2.has_value());
    CHECK(*d2 == 2);
}

TEST_CASE("bigraded slice degree of a graph") {
    // graph of the squaring map in P^1 x P^1
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    IdealGens graph(xy, {parse_poly("y0*x1^2 - y1*x0^2", xy)});
    auto d = degree_of(graph, 1, 1, kDefaultSeed);
    REQUIRE(d.has_value());
    CHECK(*d == 2);
}

TEST_CASE("relevant point detection") {
    auto p2 = VariableSpace::make({{"x", 3}});
    // flag through a point of the conic
    IdealGens solvable(p2, {parse_poly("x0*x2 - x1^2", p2), parse_poly("x0 - x1", p2),
                            parse_poly("x1 - x2", p2)});
    auto yes = has_relevant_point(solvable, quick());
    REQUIRE(yes.has_value());
    CHECK(*yes);

    IdealGens empty(p2, {parse_poly("x0", p2), parse_poly("x1", p2), parse_poly("x2", p2)});
    auto no = has_relevant_point(empty, quick());
    REQUIRE(no.has_value());
    CHECK(!*no);
}
