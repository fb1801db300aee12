#include <doctest.h>

#include <random>

#include "chow/order.hpp"
#include "chow/poly.hpp"

using namespace chow;

namespace {

Monomial rand_mon(int nvars, std::mt19937_64& rng, int max_exp = 4) {
    std::vector<Monomial::Entry> ents;
    for (int v = 0; v < nvars; ++v) {
        int e = static_cast<int>(rng() % (max_exp + 1));
        if (e > 0) ents.emplace_back(v, e);
    }
    return Monomial(std::move(ents));
}

} // namespace

TEST_CASE("orders are total, multiplicative, and respect 1 as least element") {
    auto space = VariableSpace::make({{"x", 2}, {"u", 3}});
    std::vector<MonomialOrder> orders = {
        MonomialOrder::lex(space),
        MonomialOrder::grevlex(space),
        MonomialOrder::block_elim(space, {0}),
        MonomialOrder::grevlex_last_var(space, 1),
    };
    std::mt19937_64 rng(23);
    for (const auto& ord : orders) {
        for (int i = 0; i < 300; ++i) {
            Monomial a = rand_mon(5, rng), b = rand_mon(5, rng), c = rand_mon(5, rng);
            int ab = ord.compare(a, b);
            CHECK(ab == -ord.compare(b, a));
            if (ab == 0) CHECK(a == b); // total on distinct monomials
            // multiplicative
            CHECK(ord.compare(a * c, b * c) == ab);
            // 1 is minimal (well-order on monomials)
            if (!a.is_one()) CHECK(ord.compare(a, Monomial()) > 0);
            // transitivity spot-check
            int bc = ord.compare(b, c);
            if (ab > 0 && bc > 0) CHECK(ord.compare(a, c) > 0);
        }
    }
}

TEST_CASE("grevlex tie break") {
    auto space = VariableSpace::make({{"x", 3}});
    auto grevlex = MonomialOrder::grevlex(space);
    // x0*x2 vs x1^2: equal degree; last differing variable is x2, where the
    // first has the larger exponent, so it is smaller
    Monomial a = Monomial::variable(0) * Monomial::variable(2);
    Monomial b = Monomial::variable(1).pow(2);
    CHECK(grevlex.compare(a, b) < 0);
}

TEST_CASE("lex leading term of the determinant matches the sign convention") {
    auto space = VariableSpace::make({{"u0", 2}, {"u1", 2}});
    Poly det = parse_poly("u00*u11 - u01*u10", space);
    auto lex = MonomialOrder::lex(space);
    CHECK(det.leading_term(lex).coef == 1);
}

TEST_CASE("block elimination order separates dropped blocks") {
    auto space = VariableSpace::make({{"x", 2}, {"u", 2}});
    auto ord = MonomialOrder::block_elim(space, {0});
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        Monomial a = rand_mon(4, rng);
        Monomial b = rand_mon(4, rng);
        bool a_has_x = a.degree_in_block(*space, 0) > 0;
        bool b_has_x = b.degree_in_block(*space, 0) > 0;
        if (a_has_x && !b_has_x) CHECK(ord.compare(a, b) > 0);
        if (!a_has_x && b_has_x) CHECK(ord.compare(a, b) < 0);
    }
}

TEST_CASE("grevlex_last_var pushes the chosen variable to the bottom") {
    auto space = VariableSpace::make({{"x", 3}});
    auto ord = MonomialOrder::grevlex_last_var(space, 0);
    // same degree: the monomial with the larger exponent in the designated
    // last variable x0 is smaller
    Monomial a = Monomial::variable(0).pow(2);
    Monomial b = Monomial::variable(1) * Monomial::variable(2);
    CHECK(ord.compare(a, b) < 0);
}
