#include <doctest.h>

#include <random>

#include "chow/graph.hpp"

using namespace chow;

namespace {

Deadline quick() {
    Deadline dl;
    dl.wall_budget = std::chrono::milliseconds(60000);
    return dl;
}

GraphCycle squaring_graph() {
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    return GraphCycle(1, 1, 1, IdealGens(xy, {parse_poly("y0*x1^2 - y1*x0^2", xy)}));
}

GraphCycle diagonal_p1() {
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    return GraphCycle(1, 1, 1, IdealGens(xy, {parse_poly("y0*x1 - y1*x0", xy)}));
}

GraphCycle veronese_graph() {
    auto xy = VariableSpace::make({{"x", 2}, {"y", 3}});
    return GraphCycle(1, 2, 1,
                      IdealGens(xy, {parse_poly("y0*x1 - y1*x0", xy), parse_poly("y1*x1 - y2*x0", xy),
                                     parse_poly("y0*y2 - y1^2", xy)}));
}

GraphCycle swap_graph() {
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    // [x0:x1] -> [x1:x0]
    return GraphCycle(1, 1, 1, IdealGens(xy, {parse_poly("y0*x0 - y1*x1", xy)}));
}

// graph of a monomial map [x0:x1] -> [x0^a x1^(d-a) : x0^b x1^(d-b)]
GraphCycle monomial_map_graph(int a, int b, int d) {
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    std::vector<Term> t0 = {{Monomial::variable(2) * Monomial::variable(0).pow(b) *
                                 Monomial::variable(1).pow(d - b),
                             Rational(1)},
                            {Monomial::variable(3) * Monomial::variable(0).pow(a) *
                                 Monomial::variable(1).pow(d - a),
                             Rational(-1)}};
    return GraphCycle(1, 1, 1, IdealGens(xy, {Poly::from_terms(xy, t0)}));
}

Poly rand_poly(const SpacePtr& space, std::mt19937_64& rng, int max_terms, int max_exp) {
    std::vector<Term> ts;
    int nterms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < nterms; ++t) {
        std::vector<Monomial::Entry> ents;
        for (int v = 0; v < space->total_vars(); ++v) {
            int e = static_cast<int>(rng() % (max_exp + 1));
            if (e > 0) ents.emplace_back(v, e);
        }
        long c = static_cast<long>(rng() % 13) - 6;
        if (c == 0) c = 1;
        ts.push_back({Monomial(std::move(ents)), Rational(c)});
    }
    return Poly::from_terms(space, std::move(ts));
}

} // namespace

TEST_CASE("second degree of the standard example graphs") {
    CHECK(second_degree(diagonal_p1(), quick()) == 1);
    CHECK(second_degree(squaring_graph(), quick()) == 2);
    CHECK(second_degree(veronese_graph(), quick()) == 2);
    // determinism for a fixed seed
    CHECK(second_degree(squaring_graph(), quick(), 999) ==
          second_degree(squaring_graph(), quick(), 999));
}

TEST_CASE("second degree rejects graphs with lower-dimensional y-image") {
    // constant map: image = point [1:0]
    auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
    GraphCycle constant(1, 1, 1, IdealGens(xy, {parse_poly("y1", xy)}));
    CHECK_THROWS_AS(second_degree(constant, quick()), Error);
}

TEST_CASE("pushforward of the squaring graph: k=2, d=2, root = determinant") {
    PushforwardResult res = pushforward_chow(squaring_graph(), quick());
    CHECK(res.k == 2);
    CHECK(res.d == 2);
    CHECK(res.root.form.to_string() == "v00*v11 - v01*v10");
    Poly expected = res.root.form.pow(2).normalized_primitive(
        MonomialOrder::lex(res.chow.form.space()));
    CHECK(res.chow.form == expected);
    CHECK(res.note.empty());
}

TEST_CASE("pushforward of the diagonal: k=1, d=1") {
    PushforwardResult res = pushforward_chow(diagonal_p1(), quick());
    CHECK(res.k == 1);
    CHECK(res.d == 1);
    CHECK(res.root.form == res.chow.form);
    CHECK(res.chow.form.to_string() == "v00*v11 - v01*v10");
}

TEST_CASE("pushforward of the Veronese graph: k=2, d=1, root = conic chow form") {
    PushforwardResult res = pushforward_chow(veronese_graph(), quick());
    CHECK(res.k == 2);
    CHECK(res.d == 1);

    // oracle: Chow form of the image conic, computed independently
    auto p2 = VariableSpace::make({{"x", 3}});
    CycleComponent conic(2, 1, IdealGens(p2, {parse_poly("x0*x2 - x1^2", p2)}));
    ChowForm oracle = with_block_prefix(chow_form_component(conic, quick()), "u", "v");
    CHECK(res.root.form == oracle.form);
    CHECK(res.chow.form == oracle.form);
}

TEST_CASE("factorization law: second_degree = d * root block degree") {
    for (const GraphCycle& g : {squaring_graph(), diagonal_p1(), veronese_graph()}) {
        PushforwardResult res = pushforward_chow(g, quick());
        CHECK(second_degree(g, quick()) == res.d * res.root.k);
    }
}

TEST_CASE("pushforward of an identity-embedded conic equals its chow form") {
    // X' = Y' = conic in P^2, graph of the identity: x ~ y on the conic
    auto xy = VariableSpace::make({{"x", 3}, {"y", 3}});
    std::vector<Poly> gens = {
        parse_poly("x0*y1 - x1*y0", xy), parse_poly("x0*y2 - x2*y0", xy),
        parse_poly("x1*y2 - x2*y1", xy), parse_poly("x0*x2 - x1^2", xy),
    };
    GraphCycle identity(2, 2, 1, IdealGens(xy, gens));
    PushforwardResult res = pushforward_chow(identity, quick());
    CHECK(res.k == 2);
    CHECK(res.d == 1);

    auto p2 = VariableSpace::make({{"x", 3}});
    CycleComponent conic(2, 1, IdealGens(p2, {parse_poly("x0*x2 - x1^2", p2)}));
    ChowForm oracle = with_block_prefix(chow_form_component(conic, quick()), "u", "v");
    CHECK(res.chow.form == oracle.form);
}

TEST_CASE("dth_root on constructed powers and non-powers") {
    auto space = VariableSpace::make({{"u0", 2}, {"u1", 2}});
    auto lex = MonomialOrder::lex(space);

    Poly det = parse_poly("u00*u11 - u01*u10", space);
    auto r1 = dth_root(det.pow(2), 2, lex);
    REQUIRE(r1.has_value());
    CHECK(*r1 == det);

    CHECK(!dth_root(det, 2, lex).has_value());
    CHECK(dth_root(det, 1, lex) == det);
    CHECK(!dth_root(parse_poly("u00^2 + u01", space), 2, lex).has_value());
    CHECK_THROWS_AS(dth_root(Poly::zero(space), 2, lex), Error);
    CHECK_THROWS_AS(dth_root(det, 0, lex), Error);

    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 50; ++trial) {
        Poly h = rand_poly(space, rng, 5, 3);
        if (h.is_zero()) continue;
        int d = 2 + static_cast<int>(rng() % 2);
        Poly hd = h.pow(d);
        auto root = dth_root(hd, d, lex);
        REQUIRE(root.has_value());
        CHECK(*root == h.normalized_primitive(lex));
        CHECK(root->pow(d).normalized_primitive(lex) == hd.normalized_primitive(lex));
    }
}

TEST_CASE("dth_root agrees with the Veronese power-locus equations on tiny instances") {
    // binary quadratics: the squares form the locus cut by the elimination
    // of h from the proportionality between coeffs((h0*u0+h1*u1)^2) and g
    auto hg = VariableSpace::make({{"h", 2}, {"g", 3}});
    auto u = VariableSpace::make({{"u", 2}});
    Deadline dl = quick();

    std::vector<Poly> minors;
    std::vector<Poly> sq = {parse_poly("h0^2", hg), parse_poly("2*h0*h1", hg),
                            parse_poly("h1^2", hg)};
    std::vector<Poly> g = {parse_poly("g0", hg), parse_poly("g1", hg), parse_poly("g2", hg)};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) minors.push_back(sq[i] * g[j] - sq[j] * g[i]);
    IdealGens locus_sys(hg, minors);
    IdealGens locus = eliminate_saturated(locus_sys, {"h"}, dl);
    REQUIRE(!locus.gens.empty());

    auto eval_locus = [&](const Poly& quadratic) {
        Rational c0, c1, c2;
        for (const auto& t : quadratic.terms()) {
            int e0 = t.mon.exponent(0);
            if (e0 == 2) c0 = t.coef;
            else if (e0 == 1) c1 = t.coef;
            else c2 = t.coef;
        }
        const auto& gs = *locus.space;
        std::map<int, Rational> point{{gs.var_index(0, 0), c0},
                                      {gs.var_index(0, 1), c1},
                                      {gs.var_index(0, 2), c2}};
        for (const auto& gen : locus.gens)
            if (!gen.partially_evaluated(point).is_zero()) return false;
        return true;
    };

    auto lex = MonomialOrder::lex(u);
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Term> ts;
        for (int e = 0; e <= 2; ++e) {
            long c = static_cast<long>(rng() % 9) - 4;
            if (c != 0)
                ts.push_back({Monomial::variable(0).pow(e) * Monomial::variable(1).pow(2 - e),
                              Rational(c)});
        }
        Poly q = Poly::from_terms(u, std::move(ts));
        if (q.is_zero()) continue;
        CHECK(dth_root(q, 2, lex).has_value() == eval_locus(q));
    }
}

TEST_CASE("compose: squaring then swap is the graph of [x0:x1] -> [x1^2:x0^2]") {
    Deadline dl = quick();
    IdealGens comp = compose(squaring_graph(), swap_graph(), dl);

    // directly constructed graph ideal of the composite map
    auto xz = comp.space;
    Poly direct = parse_poly("z0*x0^2 - z1*x1^2", xz);

    GroebnerBasis comp_gb = buchberger(comp, MonomialOrder::grevlex(xz), dl);
    CHECK(ideal_contains(comp_gb, direct));
    GroebnerBasis direct_gb =
        buchberger(IdealGens(xz, {direct}), MonomialOrder::grevlex(xz), dl);
    CHECK(ideal_contains_all(direct_gb, comp.gens));
}

TEST_CASE("compose: identity is neutral on monomial maps") {
    Deadline dl = quick();
    for (auto [a, b, d] : {std::tuple{1, 0, 1}, {2, 0, 2}, {2, 1, 2}, {3, 0, 3}, {3, 1, 3}}) {
        GraphCycle g = monomial_map_graph(a, b, d);
        IdealGens comp = compose(diagonal_p1(), g, dl);
        // compare with g's ideal, relabelled to (x,z)
        std::vector<int> relabel(g.ideal.space->total_vars());
        for (int v = 0; v < 4; ++v) {
            auto [blk, slot] = g.ideal.space->block_slot(v);
            relabel[v] = comp.space->var_index(blk == 0 ? 0 : 1, slot);
        }
        std::vector<Poly> direct;
        for (const auto& gen : g.ideal.gens) direct.push_back(gen.remapped(comp.space, relabel));

        GroebnerBasis comp_gb = buchberger(comp, MonomialOrder::grevlex(comp.space), dl);
        CHECK(ideal_contains_all(comp_gb, direct));
        GroebnerBasis direct_gb =
            buchberger(IdealGens(comp.space, direct), MonomialOrder::grevlex(comp.space), dl);
        CHECK(ideal_contains_all(direct_gb, comp.gens));
    }
}

TEST_CASE("compose: two diagonals give the diagonal") {
    Deadline dl = quick();
    IdealGens comp = compose(diagonal_p1(), diagonal_p1(), dl);
    Poly diag = parse_poly("z0*x1 - z1*x0", comp.space);
    GroebnerBasis gb = buchberger(comp, MonomialOrder::grevlex(comp.space), dl);
    CHECK(ideal_contains(gb, diag));
    GroebnerBasis dgb = buchberger(IdealGens(comp.space, {diag}), MonomialOrder::grevlex(comp.space), dl);
    CHECK(ideal_contains_all(dgb, comp.gens));
}

TEST_CASE("compose is associative on monomial maps") {
    Deadline dl = quick();
    GraphCycle f = monomial_map_graph(2, 0, 2); // squaring
    GraphCycle g = monomial_map_graph(0, 1, 1); // swap
    GraphCycle h = monomial_map_graph(3, 0, 3); // cubing

    // composites come back over (x,z); relabel to (x,y) to feed compose again
    auto as_graph = [&](const IdealGens& I) {
        auto xy = VariableSpace::make({{"x", 2}, {"y", 2}});
        std::vector<int> m(I.space->total_vars());
        for (int v = 0; v < I.space->total_vars(); ++v) m[v] = v;
        std::vector<Poly> gens;
        for (const auto& gen : I.gens) gens.push_back(gen.remapped(xy, m));
        return GraphCycle(1, 1, 1, IdealGens(xy, gens));
    };

    IdealGens left = compose(as_graph(compose(f, g, dl)), h, dl);
    IdealGens right = compose(f, as_graph(compose(g, h, dl)), dl);

    GroebnerBasis left_gb = buchberger(left, MonomialOrder::grevlex(left.space), dl);
    GroebnerBasis right_gb = buchberger(right, MonomialOrder::grevlex(right.space), dl);
    CHECK(ideal_contains_all(left_gb, right.gens));
    CHECK(ideal_contains_all(right_gb, left.gens));
}

TEST_CASE("compose rejects mismatched middle factors") {
    CHECK_THROWS_AS(compose(veronese_graph(), squaring_graph(), quick()), Error);
}

TEST_CASE("pushforward of a degree-2 map onto the conic: k=4, d=2") {
    // x -> [x0^4 : x0^2 x1^2 : x1^4]: squaring composed with the 2-Veronese
    auto xy = VariableSpace::make({{"x", 2}, {"y", 3}});
    GraphCycle g(1, 2, 1,
                 IdealGens(xy, {parse_poly("y0*x1^2 - y1*x0^2", xy),
                                parse_poly("y1*x1^2 - y2*x0^2", xy),
                                parse_poly("y0*y2 - y1^2", xy)}));
    CHECK(second_degree(g, quick()) == 4);
    PushforwardResult res = pushforward_chow(g, quick());
    CHECK(res.k == 4);
    CHECK(res.d == 2);

    auto p2 = VariableSpace::make({{"x", 3}});
    CycleComponent conic(2, 1, IdealGens(p2, {parse_poly("x0*x2 - x1^2", p2)}));
    ChowForm oracle = with_block_prefix(chow_form_component(conic, quick()), "u", "v");
    CHECK(res.root.form == oracle.form);
    CHECK(res.chow.form ==
          oracle.form.pow(2).normalized_primitive(MonomialOrder::lex(oracle.form.space())));
}

TEST_CASE("pushforward of the P^2 diagonal is the 3x3 determinant") {
    auto xy = VariableSpace::make({{"x", 3}, {"y", 3}});
    GraphCycle diag(2, 2, 2,
                    IdealGens(xy, {parse_poly("x0*y1 - x1*y0", xy),
                                   parse_poly("x0*y2 - x2*y0", xy),
                                   parse_poly("x1*y2 - x2*y1", xy)}));
    PushforwardResult res = pushforward_chow(diag, quick());
    CHECK(res.k == 1);
    CHECK(res.d == 1);
    CHECK(res.chow.form.to_string() ==
          "v00*v11*v22 - v00*v12*v21 - v01*v10*v22 + v01*v12*v20 + v02*v10*v21 - v02*v11*v20");
}
