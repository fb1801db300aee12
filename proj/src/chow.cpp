#include "chow/chow.hpp"

#include <algorithm>
#include <functional>

namespace chow {

SpacePtr chow_space(int n, int r, const std::string& prefix) {
    std::vector<Block> blocks;
    blocks.reserve(n + 1);
    for (int i = 0; i <= n; ++i) blocks.push_back({prefix + std::to_string(i), r + 1});
    return VariableSpace::make(std::move(blocks));
}

ChowForm with_block_prefix(const ChowForm& f, const std::string& from, const std::string& to) {
    SpacePtr target = chow_space(f.n, f.r, to);
    const VariableSpace& src = *f.form.space();
    std::vector<int> var_map(src.total_vars(), -1);
    for (int v = 0; v < src.total_vars(); ++v) {
        auto [b, slot] = src.block_slot(v);
        std::string name = src.block(b).name;
        if (name.rfind(from, 0) != 0)
            fail(Errc::invalid_argument, "form block '" + name + "' lacks prefix '" + from + "'");
        auto nb = target->find_block(to + name.substr(from.size()));
        if (!nb) fail(Errc::invalid_argument, "block rename failed for '" + name + "'");
        var_map[v] = target->var_index(*nb, slot);
    }
    return ChowForm{f.n, f.k, f.r, f.form.remapped(target, var_map)};
}

Integer cycle_component_degree(const CycleComponent& z, const Deadline& dl, uint64_t seed) {
    SliceRng rng(seed);
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto a = sliced_degree_once(z.ideal, 0, z.dim_n, rng, dl);
        auto b = sliced_degree_once(z.ideal, 0, z.dim_n, rng, dl);
        if (a && b && *a == *b) {
            if (*a == 0)
                fail(Errc::invalid_argument,
                     "component has no points in the expected dimension (degree 0 slice)");
            return *a;
        }
    }
    fail(Errc::unstable_count, "generic slice degree did not stabilize in 3 attempts");
}

namespace {

// Incidence ideal of a component: I(Z)(x) + <u_i . x : i=0..n> over blocks
// (x, u0..un), with the component ideal remapped into the x block.
IdealGens component_incidence(const CycleComponent& z) {
    int r = z.ambient_r;
    int n = z.dim_n;
    std::vector<Block> blocks{{"x", r + 1}};
    for (int i = 0; i <= n; ++i) blocks.push_back({"u" + std::to_string(i), r + 1});
    SpacePtr W = VariableSpace::make(std::move(blocks));

    std::vector<int> var_map(z.ideal.space->total_vars());
    for (int v = 0; v < z.ideal.space->total_vars(); ++v) var_map[v] = v; // x block leads
    std::vector<Poly> gens;
    for (const auto& g : z.ideal.gens) gens.push_back(g.remapped(W, var_map));
    for (int i = 0; i <= n; ++i) {
        std::vector<Term> ts;
        for (int s = 0; s <= r; ++s) {
            Monomial m = Monomial::variable(W->var_index(0, s)) *
                         Monomial::variable(W->var_index(1 + i, s));
            ts.push_back({std::move(m), Rational(1)});
        }
        gens.push_back(Poly::from_terms(W, std::move(ts)));
    }
    return IdealGens(W, std::move(gens));
}

} // namespace

ChowForm chow_form_component(const CycleComponent& z, const Deadline& dl) {
    IdealGens incidence = component_incidence(z);
    IdealGens elim = eliminate_saturated(incidence, {"x"}, dl);
    Poly form = principal_generator(elim, MonomialOrder::lex(elim.space), dl);

    std::vector<int> deg = form.multidegree();
    int k = deg.empty() ? 0 : deg.front();
    for (int d : deg)
        if (d != k)
            fail(Errc::not_principal,
                 "eliminant is not equidegree across dual blocks (degenerate or reducible input)");
    if (k <= 0) fail(Errc::not_principal, "eliminant is constant (wrong dimension input)");

    Integer expected = cycle_component_degree(z, dl);
    if (expected != k)
        fail(Errc::invalid_argument,
             "degree law failed: eliminant degree " + std::to_string(k) + " vs cycle degree " +
                 expected.get_str() + " (reducible or mis-dimensioned input?)");

    return ChowForm{z.dim_n, k, z.ambient_r, std::move(form)};
}

ChowForm chow_form_cycle(const Cycle& z, const Deadline& dl) {
    std::optional<ChowForm> acc;
    for (const auto& comp : z.components) {
        ChowForm f = chow_form_component(comp, dl);
        Poly powered = f.form.pow(comp.multiplicity);
        if (!acc) {
            acc = ChowForm{f.n, f.k * comp.multiplicity, f.r, std::move(powered)};
        } else {
            acc->form = acc->form * powered;
            acc->k += f.k * comp.multiplicity;
        }
    }
    acc->form = acc->form.normalized_primitive(MonomialOrder::lex(acc->form.space()));
    return std::move(*acc);
}

bool meets(const ChowForm& f, const std::vector<std::vector<Rational>>& flags) {
    if (static_cast<int>(flags.size()) != f.n + 1)
        fail(Errc::dimension_mismatch,
             "expected " + std::to_string(f.n + 1) + " dual vectors, got " +
                 std::to_string(flags.size()));
    const VariableSpace& space = *f.form.space();
    std::map<int, Rational> values;
    for (int i = 0; i <= f.n; ++i) {
        const auto& vec = flags[i];
        if (static_cast<int>(vec.size()) != f.r + 1)
            fail(Errc::dimension_mismatch, "dual vector " + std::to_string(i) + " has wrong length");
        bool all_zero = true;
        for (const auto& c : vec)
            if (c != 0) all_zero = false;
        if (all_zero)
            fail(Errc::invalid_argument, "dual vector " + std::to_string(i) + " is zero");
        for (int s = 0; s <= f.r; ++s) values[space.var_index(i, s)] = vec[s];
    }
    Poly value = f.form.partially_evaluated(values);
    return value.is_zero();
}

Integer phi(long n, const Integer& k, long r) {
    if (n < 0 || k < 1 || r < 1) fail(Errc::invalid_argument, "phi requires n >= 0, k >= 1, r >= 1");
    Integer count = binomial(k + r, static_cast<unsigned long>(r));
    Integer total = 1;
    for (long i = 0; i <= n; ++i) total *= count;
    return total - 1;
}

Integer phi(int n, int k, int r) { return phi(static_cast<long>(n), Integer(k), static_cast<long>(r)); }

namespace {

// degree-k monomials in a block of `size` slots, descending lex on exponent
// vectors; the enumeration order indexes the generic-form coefficients.
std::vector<std::vector<int>> monomial_exponents(int k, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size, 0);
    // descending lex = first slot takes as much as possible first
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == size - 1) {
            cur[slot] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[slot] = e;
            rec(slot + 1, left - e);
        }
    };
    rec(0, k);
    return out;
}

Monomial exponents_to_monomial(const VariableSpace& space, int block, const std::vector<int>& exps) {
    std::vector<Monomial::Entry> ents;
    for (size_t s = 0; s < exps.size(); ++s)
        if (exps[s] > 0) ents.emplace_back(space.var_index(block, static_cast<int>(s)), exps[s]);
    return Monomial(std::move(ents));
}

} // namespace

std::vector<Poly> chow_membership_equations(int n, int k, int r, const IdealGens& S,
                                            const Deadline& dl, const ChowInstanceLimits& limits) {
    if (n < 0 || k < 1 || r < 1)
        fail(Errc::invalid_argument, "chow membership needs n >= 0, k >= 1, r >= 1");
    if (S.space->block_count() != 1 || S.space->block(0).size != r + 1)
        fail(Errc::invalid_argument, "support ideal must live in one block of r+1 variables");
    if (k * (r + 1) > limits.max_eliminated_vars)
        fail(Errc::instance_too_large,
             "instance requires eliminating " + std::to_string(k * (r + 1)) +
                 " point variables (limit " + std::to_string(limits.max_eliminated_vars) + ")");

    auto block_monomials = monomial_exponents(k, r + 1);
    long per_block = static_cast<long>(block_monomials.size());
    long coeff_count = 1;
    for (int i = 0; i <= n; ++i) {
        coeff_count *= per_block;
        if (coeff_count > limits.max_coefficient_vars)
            fail(Errc::instance_too_large, "coefficient space too large for a tiny instance");
    }

    // work space: F coefficients, carried duals u1..un, points x1..xk,
    // then temporaries u0, w, s0..sn
    std::vector<Block> blocks{{"F", static_cast<int>(coeff_count)}};
    for (int i = 1; i <= n; ++i) blocks.push_back({"u" + std::to_string(i), r + 1});
    for (int j = 1; j <= k; ++j) blocks.push_back({"x" + std::to_string(j), r + 1});
    size_t kept_blocks = blocks.size();
    blocks.push_back({"u0", r + 1});
    blocks.push_back({"w", r + 1});
    int pair_count = (r + 1) * r / 2;
    for (int i = 0; i <= n; ++i) blocks.push_back({"s" + std::to_string(i), pair_count});
    SpacePtr E = VariableSpace::make(blocks);

    auto u_block = [&](int i) { return *E->find_block("u" + std::to_string(i)); };
    auto x_block = [&](int j) { return *E->find_block("x" + std::to_string(j)); };
    int F_block = 0;
    int w_block = *E->find_block("w");
    auto s_block = [&](int i) { return *E->find_block("s" + std::to_string(i)); };

    // generic form: sum over coefficient tuples of F_c * prod_i mon_i(u_i)
    Poly F_generic = Poly::zero(E);
    {
        std::vector<Term> ts;
        std::vector<int> tuple(n + 1, 0);
        long idx = 0;
        while (true) {
            Monomial m = Monomial::variable(E->var_index(F_block, static_cast<int>(idx)));
            for (int i = 0; i <= n; ++i)
                m = m * exponents_to_monomial(*E, u_block(i), block_monomials[tuple[i]]);
            ts.push_back({std::move(m), Rational(1)});
            ++idx;
            int pos = n;
            while (pos >= 0) {
                if (++tuple[pos] < per_block) break;
                tuple[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        F_generic = Poly::from_terms(E, std::move(ts));
    }

    auto dual_pairing = [&](int dual_block, int point_block) {
        std::vector<Term> ts;
        for (int s = 0; s <= r; ++s)
            ts.push_back({Monomial::variable(E->var_index(dual_block, s)) *
                              Monomial::variable(E->var_index(point_block, s)),
                          Rational(1)});
        return Poly::from_terms(E, std::move(ts));
    };

    std::vector<Poly> equations;

    // condition: F(u_0,...) proportional to u_0(x_1)...u_0(x_k) in u_0
    {
        Poly product = Poly::constant(E, Rational(1));
        for (int j = 1; j <= k; ++j) product = product * dual_pairing(u_block(0), x_block(j));
        auto A = F_generic.collect_blocks({u_block(0)});
        auto B = product.collect_blocks({u_block(0)});
        // align the two coefficient vectors over the union of u0-monomials
        auto mon_less = [](const Monomial& a, const Monomial& b) {
            return Monomial::cmp_lex(a, b) > 0;
        };
        std::map<Monomial, std::pair<Poly, Poly>, decltype(mon_less)> rows(mon_less);
        for (auto& [m, p] : A) rows.emplace(m, std::pair{p, Poly::zero(E)});
        for (auto& [m, p] : B) {
            auto it = rows.find(m);
            if (it == rows.end())
                rows.emplace(m, std::pair{Poly::zero(E), p});
            else
                it->second.second = p;
        }
        std::vector<std::pair<Poly, Poly>> vec;
        for (auto& [m, ab] : rows) vec.push_back(ab);
        for (size_t a = 0; a < vec.size(); ++a)
            for (size_t b = a + 1; b < vec.size(); ++b) {
                Poly minor = vec[a].first * vec[b].second - vec[b].first * vec[a].second;
                if (!minor.is_zero()) equations.push_back(std::move(minor));
            }
    }

    // condition: support equations at every point
    {
        std::vector<int> base_map(S.space->total_vars());
        for (const auto& f : S.gens) {
            for (int j = 1; j <= k; ++j) {
                for (int v = 0; v < S.space->total_vars(); ++v)
                    base_map[v] = E->var_index(x_block(j), v);
                equations.push_back(f.remapped(E, base_map));
            }
        }
    }

    // condition: u_i(x_j) = 0 for the carried duals
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) equations.push_back(dual_pairing(u_block(i), x_block(j)));

    // condition: F vanishes on every flag through each point. Substitute
    // u_i -> w . s_i (antisymmetric s_i), collect in the s-monomials; the
    // coefficients must vanish at w = x_j.
    {
        auto pair_index = [&](int p, int q) {
            // slot of (p<q) in row-major enumeration
            int idx = 0;
            for (int a = 0; a < p; ++a) idx += r - a;
            return idx + (q - p - 1);
        };
        std::map<int, Poly> images;
        for (int i = 0; i <= n; ++i) {
            for (int q = 0; q <= r; ++q) {
                Poly img = Poly::zero(E);
                for (int p = 0; p <= r; ++p) {
                    if (p == q) continue;
                    int lo = std::min(p, q), hi = std::max(p, q);
                    int sv = E->var_index(s_block(i), pair_index(lo, hi));
                    Poly term = Poly::variable(E, E->var_index(w_block, p)) * Poly::variable(E, sv);
                    img = (p < q) ? img + term : img - term;
                }
                images[E->var_index(u_block(i), q)] = std::move(img);
            }
        }
        Poly expanded = F_generic.substituted(images, E);
        std::vector<int> s_blocks;
        for (int i = 0; i <= n; ++i) s_blocks.push_back(s_block(i));
        auto phis = expanded.collect_blocks(s_blocks);
        for (int j = 1; j <= k; ++j) {
            std::map<int, Poly> w_to_x;
            for (int s = 0; s <= r; ++s)
                w_to_x[E->var_index(w_block, s)] =
                    Poly::variable(E, E->var_index(x_block(j), s));
            for (const auto& [mon, coef] : phis) {
                Poly eq = coef.substituted(w_to_x, E);
                if (!eq.is_zero()) equations.push_back(std::move(eq));
            }
        }
    }

    // restrict to the kept blocks + x blocks, then project the points away
    std::vector<Block> inner_blocks(blocks.begin(), blocks.begin() + kept_blocks);
    SpacePtr W = VariableSpace::make(inner_blocks);
    std::vector<int> to_W(E->total_vars(), -1);
    for (size_t b = 0; b < kept_blocks; ++b)
        for (int s = 0; s < E->block(static_cast<int>(b)).size; ++s)
            to_W[E->var_index(static_cast<int>(b), s)] =
                W->var_index(static_cast<int>(b), s);
    std::vector<Poly> inner;
    for (auto& eq : equations)
        if (!eq.is_zero()) inner.push_back(eq.remapped(W, to_W));

    IdealGens system(W, std::move(inner));
    std::vector<std::string> drop;
    for (int j = 1; j <= k; ++j) drop.push_back("x" + std::to_string(j));
    IdealGens projected = eliminate_saturated(system, drop, dl);

    std::vector<Poly> out;
    for (const auto& g : projected.gens)
        out.push_back(g.normalized_primitive(MonomialOrder::lex(projected.space)));
    return out;
}

} // namespace chow
