#include "chow/graph.hpp"

#include <algorithm>

namespace chow {

int second_degree(const GraphCycle& gamma, const Deadline& dl, uint64_t seed) {
    SliceRng rng(seed);
    bool saw_empty = false;
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto a = sliced_degree_once(gamma.ideal, 1, gamma.dim_n, rng, dl);
        auto b = sliced_degree_once(gamma.ideal, 1, gamma.dim_n, rng, dl);
        if (a && b && *a == *b) {
            if (*a == 0)
                fail(Errc::invalid_argument,
                     "y-image is lower-dimensional (generic slice of the graph is empty)");
            if (!a->fits_sint_p())
                fail(Errc::invalid_argument, "second-projection degree out of range");
            return static_cast<int>(a->get_si());
        }
        if ((a && *a == 0) || (b && *b == 0)) saw_empty = true;
    }
    if (saw_empty)
        fail(Errc::invalid_argument,
             "y-image is lower-dimensional (generic slice empty or degenerate)");
    fail(Errc::unstable_count,
         "second-projection degree did not stabilize in 3 attempts "
         "(y-image may be lower-dimensional)");
}

namespace {

std::vector<int> divisors_descending(int k) {
    std::vector<int> out;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) out.push_back(d);
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace

PushforwardResult pushforward_chow(const GraphCycle& gamma, const Deadline& dl, uint64_t seed) {
    int n = gamma.dim_n;
    int M = gamma.M;

    std::vector<Block> blocks{{"x", gamma.N + 1}, {"y", M + 1}};
    for (int i = 0; i <= n; ++i) blocks.push_back({"v" + std::to_string(i), M + 1});
    SpacePtr W = VariableSpace::make(blocks);

    std::vector<int> var_map(gamma.ideal.space->total_vars());
    for (int v = 0; v < gamma.ideal.space->total_vars(); ++v) var_map[v] = v; // x,y lead W
    std::vector<Poly> gens;
    for (const auto& g : gamma.ideal.gens) gens.push_back(g.remapped(W, var_map));
    for (int i = 0; i <= n; ++i) {
        std::vector<Term> ts;
        for (int s = 0; s <= M; ++s)
            ts.push_back({Monomial::variable(W->var_index(2 + i, s)) *
                              Monomial::variable(W->var_index(1, s)),
                          Rational(1)});
        gens.push_back(Poly::from_terms(W, std::move(ts)));
    }
    IdealGens incidence(W, std::move(gens));

    IdealGens elim = eliminate_saturated(incidence, {"x", "y"}, dl);
    Poly reduced_form = principal_generator(elim, MonomialOrder::lex(elim.space), dl);

    std::vector<int> deg = reduced_form.multidegree();
    int k_red = deg.empty() ? 0 : deg.front();
    for (int d : deg)
        if (d != k_red)
            fail(Errc::not_principal, "pushforward eliminant is not equidegree in the v blocks");
    if (k_red <= 0)
        fail(Errc::not_principal, "pushforward eliminant is constant (y-image of wrong dimension)");

    int k = second_degree(gamma, dl, seed);
    if (k % k_red != 0)
        fail(Errc::invalid_argument,
             "pushforward is not of the form d*Y': deg2 = " + std::to_string(k) +
                 " is not a multiple of the reduced eliminant degree " + std::to_string(k_red) +
                 " (image with non-uniform component multiplicities)");
    int d0 = k / k_red;

    MonomialOrder lex = MonomialOrder::lex(elim.space);
    Poly full = reduced_form.pow(d0).normalized_primitive(lex);

    PushforwardResult out;
    out.k = k;
    out.chow = ChowForm{n, k, M, full};
    for (int d : divisors_descending(k)) {
        auto root = dth_root(full, d, lex);
        if (root) {
            out.d = d;
            out.root = ChowForm{n, k / d, M, *root};
            break;
        }
    }
    if (out.d > d0)
        out.note = "reduced eliminant is itself a proper power; the graph ideal may be "
                   "non-reduced or the image reducible";
    return out;
}

std::optional<Poly> dth_root(const Poly& g, int d, const MonomialOrder& order) {
    if (d <= 0) fail(Errc::invalid_argument, "root exponent must be positive");
    if (g.is_zero()) fail(Errc::zero_input, "d-th root of the zero polynomial");

    Poly gn = g.normalized_primitive(order);
    if (d == 1) return gn;

    const Term& lt = gn.leading_term(order);
    std::vector<Monomial::Entry> root_ents;
    for (const auto& [v, e] : lt.mon.entries()) {
        if (e % d != 0) return std::nullopt;
        root_ents.emplace_back(v, e / d);
    }
    Monomial lm_root(std::move(root_ents));
    Integer lc_num = lt.coef.get_num(); // primitive => integer, positive leading
    if (lt.coef.get_den() != 1 || lc_num <= 0) return std::nullopt;
    Integer root_num;
    if (!exact_root(lc_num, static_cast<unsigned long>(d), root_num)) return std::nullopt;

    const SpacePtr& space = gn.space();
    Poly h = Poly::from_terms(space, {{lm_root, Rational(root_num)}});
    Monomial lm_pow = lm_root.pow(d - 1);
    Rational denom = Rational(d) * Rational(pow_ui(root_num, d - 1));
    Monomial last = lm_root;

    const long max_steps = std::max<long>(1000, 50 * static_cast<long>(gn.term_count()));
    for (long step = 0; step < max_steps; ++step) {
        Poly rem = gn - h.pow(d);
        if (rem.is_zero()) return h.normalized_primitive(order);
        const Term& t = rem.leading_term(order);
        auto m = t.mon.divided_by(lm_pow);
        if (!m) return std::nullopt;
        if (order.compare(*m, last) >= 0) return std::nullopt;
        h = h + Poly::from_terms(space, {{*m, t.coef / denom}});
        last = *m;
    }
    return std::nullopt;
}

IdealGens compose(const GraphCycle& h, const GraphCycle& g, const Deadline& dl) {
    if (h.M != g.N)
        fail(Errc::space_mismatch,
             "middle factors do not match: first graph maps into P^" + std::to_string(h.M) +
                 ", second is defined on P^" + std::to_string(g.N));
    int N = h.N, L = h.M, M = g.M;
    SpacePtr W = VariableSpace::make({{"x", N + 1}, {"y", L + 1}, {"z", M + 1}});

    std::vector<Poly> gens;
    {
        std::vector<int> hmap(h.ideal.space->total_vars());
        for (int v = 0; v < h.ideal.space->total_vars(); ++v) hmap[v] = v; // (x,y) -> (x,y)
        for (const auto& f : h.ideal.gens) gens.push_back(f.remapped(W, hmap));

        std::vector<int> gmap(g.ideal.space->total_vars());
        for (int v = 0; v < g.ideal.space->total_vars(); ++v) {
            auto [b, slot] = g.ideal.space->block_slot(v);
            gmap[v] = W->var_index(b + 1, slot); // (x,y) -> (y,z)
        }
        for (const auto& f : g.ideal.gens) gens.push_back(f.remapped(W, gmap));
    }

    IdealGens joint(W, std::move(gens));
    return eliminate_saturated(joint, {"y"}, dl);
}

} // namespace chow
