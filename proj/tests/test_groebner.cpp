#include <doctest.h>

#include <functional>
#include <random>

#include "chow/groebner.hpp"

using namespace chow;

namespace {

Deadline quick() {
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(30000);
    return dl;
}

// Sylvester resultant of two binary quadratics with symbolic coefficients,
// by exact cofactor expansion. Oracle for the elimination examples.
Poly sylvester_det(const SpacePtr& space) {
    auto var = [&](const std::string& name) {
        return Poly::variable(space, *space->parse_var(name));
    };
    Poly z = Poly::zero(space);
    std::vector<std::vector<Poly>> m = {
        {var("a0"), var("a1"), var("a2"), z},
        {z, var("a0"), var("a1"), var("a2")},
        {var("b0"), var("b1"), var("b2"), z},
        {z, var("b0"), var("b1"), var("b2")},
    };
    std::function<Poly(std::vector<std::vector<Poly>>)> det =
        [&](std::vector<std::vector<Poly>> mat) -> Poly {
        size_t n = mat.size();
        if (n == 1) return mat[0][0];
        Poly acc = Poly::zero(space);
        for (size_t c = 0; c < n; ++c) {
            if (mat[0][c].is_zero()) continue;
            std::vector<std::vector<Poly>> minor;
            for (size_t r = 1; r < n; ++r) {
                std::vector<Poly> row;
                for (size_t cc = 0; cc < n; ++cc)
                    if (cc != c) row.push_back(mat[r][cc]);
                minor.push_back(std::move(row));
            }
            Poly term = mat[0][c] * det(minor);
            acc = (c % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(m);
}

} // namespace

TEST_CASE("reduce: membership of a generator and units") {
    auto space = VariableSpace::make({{"x", 2}});
    auto lex = MonomialOrder::lex(space);
    Poly g1 = parse_poly("x0^2 - x1^2", space);
    Poly g2 = parse_poly("x0 - x1", space);
    GroebnerBasis gb = buchberger(IdealGens(space, {g1, g2}), lex, quick());
    CHECK(reduce(g1, gb).is_zero());
    CHECK(reduce(g2, gb).is_zero());

    GroebnerBasis gb2 = buchberger(
        IdealGens(space, {parse_poly("x0", space), parse_poly("x1", space)}), lex, quick());
    CHECK(reduce(parse_poly("1", space), gb2) == parse_poly("1", space));

    GroebnerBasis gb3 = buchberger(IdealGens(space, {parse_poly("x0", space)}), lex, quick());
    CHECK(reduce(parse_poly("x0^2", space), gb3).is_zero());
}

TEST_CASE("buchberger on small ideals") {
    auto space = VariableSpace::make({{"x", 2}});
    auto lex = MonomialOrder::lex(space);

    GroebnerBasis gb = buchberger(
        IdealGens(space, {parse_poly("x0", space), parse_poly("x1", space)}), lex, quick());
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == parse_poly("x1", space));
    CHECK(gb.basis[1] == parse_poly("x0", space));

    // <x0^2 - x1^2, x0 - x1> reduces to <x0 - x1> under lex x0 > x1
    GroebnerBasis gb2 = buchberger(
        IdealGens(space, {parse_poly("x0^2 - x1^2", space), parse_poly("x0 - x1", space)}), lex,
        quick());
    REQUIRE(gb2.basis.size() == 1);
    CHECK(gb2.basis[0] == parse_poly("x0 - x1", space));
}

TEST_CASE("every input generator reduces to zero mod the basis") {
    auto space = VariableSpace::make({{"x", 3}});
    std::mt19937_64 rng(41);
    auto grevlex = MonomialOrder::grevlex(space);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> gens;
        for (int i = 0; i < 3; ++i) {
            std::vector<Term> ts;
            for (int t = 0; t < 3; ++t) {
                std::vector<Monomial::Entry> ents;
                for (int v = 0; v < 3; ++v) {
                    int e = static_cast<int>(rng() % 3);
                    if (e) ents.emplace_back(v, e);
                }
                long c = static_cast<long>(rng() % 11) - 5;
                if (c == 0) c = 1;
                ts.push_back({Monomial(std::move(ents)), Rational(c)});
            }
            Poly p = Poly::from_terms(space, std::move(ts));
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        IdealGens ideal(space, gens);
        GroebnerBasis gb = buchberger(ideal, grevlex, quick());
        for (const auto& g : gens) CHECK(reduce(g, gb).is_zero());
        // determinism
        GroebnerBasis gb2 = buchberger(ideal, grevlex, quick());
        CHECK(gb.basis == gb2.basis);
    }
}

TEST_CASE("eliminate: twisted cubic, nothing to eliminate, zero ideal") {
    auto space = VariableSpace::make({{"x", 1}, {"y", 1}, {"z", 1}});
    IdealGens I(space, {parse_poly("y0 - x0^2", space), parse_poly("z0 - x0^3", space)});
    IdealGens out = eliminate(I, {"x"}, quick());
    REQUIRE(!out.gens.empty());
    Poly expected = parse_poly("y0^3 - z0^2", out.space);
    GroebnerBasis out_gb = buchberger(out, MonomialOrder::grevlex(out.space), quick());
    CHECK(ideal_contains(out_gb, expected));
    // every eliminated generator is free of x and lies in the original ideal
    GroebnerBasis gb = buchberger(I, MonomialOrder::grevlex(space), quick());
    std::vector<int> back(out.space->total_vars());
    back[0] = 1; // y0 -> y0
    back[1] = 2; // z0 -> z0
    for (const auto& g : out.gens) CHECK(reduce(g.remapped(space, back), gb).is_zero());

    auto space2 = VariableSpace::make({{"x", 2}, {"u", 2}});
    IdealGens I2(space2, {parse_poly("x0", space2)});
    IdealGens out2 = eliminate(I2, {"u"}, quick());
    REQUIRE(out2.gens.size() == 1);
    CHECK(out2.gens[0] == parse_poly("x0", out2.space));

    IdealGens I3(space2, {parse_poly("u00*x0 + u01*x1", space2), parse_poly("x1", space2)});
    IdealGens out3 = eliminate(I3, {"x"}, quick());
    CHECK(out3.gens.empty());
}

TEST_CASE("resultant-ideal elimination of generic binary quadratics gives Sylvester") {
    auto space = VariableSpace::make({{"x", 2}, {"a", 3}, {"b", 3}});
    Poly f = parse_poly("a0*x0^2 + a1*x0*x1 + a2*x1^2", space);
    Poly g = parse_poly("b0*x0^2 + b1*x0*x1 + b2*x1^2", space);
    IdealGens I(space, {f, g});
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(60000);
    // the raw intersection <f,g> ^ k[a,b] is zero (every member has positive
    // x-degree); the resultant ideal is the cone-free projection
    CHECK(eliminate(I, {"x"}, dl).gens.empty());
    IdealGens out = eliminate_saturated(I, {"x"}, dl);
    Poly gen = principal_generator(out, MonomialOrder::lex(out.space), dl);

    SpacePtr coeff_space = out.space;
    Poly oracle = sylvester_det(coeff_space).normalized_primitive(MonomialOrder::lex(coeff_space));
    CHECK(gen == oracle);
}

TEST_CASE("principal_generator") {
    auto space = VariableSpace::make({{"x", 2}});
    Poly f = parse_poly("x0 + x1", space);
    IdealGens I(space, {f.scaled(Rational(2)), f.scaled(Rational(3))});
    CHECK(principal_generator(I, MonomialOrder::lex(space), quick()) == f);

    IdealGens J(space, {parse_poly("x0", space), parse_poly("x1", space)});
    CHECK_THROWS_AS(principal_generator(J, MonomialOrder::lex(space), quick()), NotPrincipalError);
    CHECK_THROWS_AS(principal_generator(IdealGens(space, {}), MonomialOrder::lex(space), quick()),
                    Error);
}

TEST_CASE("saturation removes the cone point") {
    // I = <x1, u00*x0 + u01*x1>: saturating the x block leaves <x1, u00>
    auto space = VariableSpace::make({{"x", 2}, {"u0", 2}});
    IdealGens I(space, {parse_poly("x1", space), parse_poly("u00*x0 + u01*x1", space)});
    IdealGens sat = saturate_block(I, "x", quick());
    GroebnerBasis gb = buchberger(sat, MonomialOrder::grevlex(space), quick());
    CHECK(ideal_contains(gb, parse_poly("u00", space)));
    CHECK(ideal_contains(gb, parse_poly("x1", space)));
    CHECK(!ideal_contains(gb, parse_poly("u01", space)));
    // raw elimination of the unsaturated incidence ideal is zero
    CHECK(eliminate(I, {"x"}, quick()).gens.empty());
    // saturated projection is the point evaluation
    IdealGens proj = eliminate_saturated(I, {"x"}, quick());
    REQUIRE(proj.gens.size() == 1);
    CHECK(proj.gens[0] == parse_poly("u00", proj.space));
}

TEST_CASE("ideal intersection") {
    auto space = VariableSpace::make({{"x", 2}});
    IdealGens A(space, {parse_poly("x0", space)});
    IdealGens B(space, {parse_poly("x1", space)});
    IdealGens AB = ideal_intersection(A, B, quick());
    REQUIRE(AB.gens.size() == 1);
    CHECK(AB.gens[0] == parse_poly("x0*x1", space));
}

TEST_CASE("deadline exceeded is an error value with statistics") {
    auto space = VariableSpace::make({{"x", 2}, {"a", 3}, {"b", 3}});
    Poly f = parse_poly("a0*x0^2 + a1*x0*x1 + a2*x1^2", space);
    Poly g = parse_poly("b0*x0^2 + b1*x0*x1 + b2*x1^2", space);
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(60000);
    dl.max_total_degree = 2; // forces the degree guard
    try {
        buchberger(IdealGens(space, {f, g}), MonomialOrder::block_elim(space, {0}), dl);
        FAIL("expected DeadlineError");
    } catch (const DeadlineError& e) {
        CHECK(e.code() == Errc::deadline_exceeded);
        CHECK(e.max_degree_seen >= 2);
    }
}

TEST_CASE("reduced basis property: no leading term divides another, S-polys vanish") {
    auto space = VariableSpace::make({{"x", 3}});
    auto grevlex = MonomialOrder::grevlex(space);
    IdealGens I(space, {parse_poly("x0*x2 - x1^2", space), parse_poly("x1*x2 - x0^2", space)});
    GroebnerBasis gb = buchberger(I, grevlex, quick());
    REQUIRE(gb.reduced);
    for (size_t i = 0; i < gb.basis.size(); ++i)
        for (size_t j = 0; j < gb.basis.size(); ++j) {
            if (i == j) continue;
            CHECK(!gb.basis[i].leading_term(grevlex).mon.divisible_by(
                gb.basis[j].leading_term(grevlex).mon));
        }
    // S-polynomials reduce to zero
    for (size_t i = 0; i < gb.basis.size(); ++i)
        for (size_t j = i + 1; j < gb.basis.size(); ++j) {
            const Term& ti = gb.basis[i].leading_term(grevlex);
            const Term& tj = gb.basis[j].leading_term(grevlex);
            Monomial l = ti.mon.lcm_with(tj.mon);
            Poly s = gb.basis[i].times_term(Rational(1) / ti.coef, *l.divided_by(ti.mon)) -
                     gb.basis[j].times_term(Rational(1) / tj.coef, *l.divided_by(tj.mon));
            CHECK(reduce(s, gb).is_zero());
        }
}
