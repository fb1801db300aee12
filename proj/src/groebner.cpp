#include "chow/groebner.hpp"

#include <algorithm>
#include <set>

namespace chow {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    const Deadline& dl;
    Clock::time_point start = Clock::now();
    long pairs = 0;
    int max_degree = 0;

    explicit Budget(const Deadline& d) : dl(d) { d.validate(); }

    void note_degree(int deg) { max_degree = std::max(max_degree, deg); }

    [[noreturn]] void blow(const std::string& what) const {
        throw DeadlineError("deadline exceeded (" + what + "); pairs processed: " +
                                std::to_string(pairs) + ", max degree seen: " +
                                std::to_string(max_degree),
                            pairs, max_degree);
    }

    void check_clock() const {
        if (Clock::now() - start > dl.wall_budget) blow("wall budget");
    }

    void check_degree(int deg) {
        note_degree(deg);
        if (deg > dl.max_total_degree) blow("max total degree");
    }

    void check_basis(size_t size) const {
        if (size > static_cast<size_t>(dl.max_basis_size)) blow("max basis size");
    }
};

// Polynomial as a term vector sorted descending under the active order.
struct OrdPoly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const { return terms.front(); }
};

OrdPoly to_ordered(const Poly& p, const MonomialOrder& order) {
    OrdPoly r;
    r.terms = p.terms();
    std::sort(r.terms.begin(), r.terms.end(), [&](const Term& a, const Term& b) {
        return order.compare(a.mon, b.mon) > 0;
    });
    return r;
}

Poly to_poly(const OrdPoly& p, const SpacePtr& space) {
    std::vector<Term> ts = p.terms;
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        return Monomial::cmp_lex(a.mon, b.mon) > 0;
    });
    return Poly(space, std::move(ts));
}

// r = a - c * m * b, all sorted under `order`.
OrdPoly sub_scaled(const OrdPoly& a, const Rational& c, const Monomial& m, const OrdPoly& b,
                   const MonomialOrder& order) {
    OrdPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    Monomial bm;
    bool bm_fresh = false;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            r.terms.push_back(a.terms[i++]);
            continue;
        }
        if (!bm_fresh) {
            bm = b.terms[j].mon * m;
            bm_fresh = true;
        }
        int cmp = (i == a.terms.size()) ? -1 : order.compare(a.terms[i].mon, bm);
        if (cmp > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            r.terms.push_back({std::move(bm), -c * b.terms[j].coef});
            ++j;
            bm_fresh = false;
        } else {
            Rational s = a.terms[i].coef - c * b.terms[j].coef;
            if (s != 0) r.terms.push_back({a.terms[i].mon, std::move(s)});
            ++i;
            ++j;
            bm_fresh = false;
        }
    }
    return r;
}

void make_primitive(OrdPoly& p) {
    if (p.terms.empty()) return;
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms) {
        num_gcd = gcd(num_gcd, t.coef.get_num());
        den_lcm = lcm(den_lcm, t.coef.get_den());
    }
    Rational lambda = make_rational(den_lcm, num_gcd);
    if (p.terms.front().coef < 0) lambda = -lambda;
    for (auto& t : p.terms) t.coef *= lambda;
}

struct BasisEntry {
    OrdPoly poly;
    Monomial lm;
    Rational lc;
    int sugar = 0;
};

// Full normal form of p against the basis entries, exact in the scaling of p.
OrdPoly normal_form(OrdPoly p, const std::vector<BasisEntry>& basis, const MonomialOrder& order,
                    Budget* budget) {
    OrdPoly rem;
    long steps = 0;
    while (!p.is_zero()) {
        if (budget && (++steps & 63) == 0) budget->check_clock();
        const Term& t = p.lead();
        bool reduced_step = false;
        for (const auto& g : basis) {
            auto q = t.mon.divided_by(g.lm);
            if (!q) continue;
            Rational c = t.coef / g.lc;
            p = sub_scaled(p, c, *q, g.poly, order);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            rem.terms.push_back(t);
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

void scale_terms(OrdPoly& p, const Integer& f) {
    if (f == 1) return;
    Rational rf(f);
    for (auto& t : p.terms) t.coef *= rf;
}

void strip_joint_content(OrdPoly& rem, OrdPoly& p) {
    Integer g = 0;
    for (const auto& t : rem.terms) g = gcd(g, t.coef.get_num());
    for (const auto& t : p.terms) g = gcd(g, t.coef.get_num());
    if (g <= 1) return;
    Rational inv = make_rational(Integer(1), g);
    for (auto& t : rem.terms) t.coef *= inv;
    for (auto& t : p.terms) t.coef *= inv;
}

// Fraction-free normal form: the result is a positive integer multiple of
// the true normal form, with all intermediates kept over the integers.
// Basis entries must be primitive with integer coefficients.
OrdPoly normal_form_scaled(OrdPoly p, const std::vector<BasisEntry>& basis,
                           const MonomialOrder& order, Budget* budget) {
    // clear denominators once up front
    Integer den = 1;
    for (const auto& t : p.terms) den = lcm(den, t.coef.get_den());
    scale_terms(p, den);

    OrdPoly rem;
    long steps = 0;
    while (!p.is_zero()) {
        if (budget && (++steps & 63) == 0) budget->check_clock();
        if ((steps & 31) == 0) strip_joint_content(rem, p);
        const Term& t = p.lead();
        bool reduced_step = false;
        for (const auto& g : basis) {
            auto q = t.mon.divided_by(g.lm);
            if (!q) continue;
            Integer ct = t.coef.get_num();
            Integer lcg = g.lc.get_num();
            Integer gg = gcd(ct, lcg);
            Integer f;
            mpz_divexact(f.get_mpz_t(), lcg.get_mpz_t(), gg.get_mpz_t());
            scale_terms(p, f);
            scale_terms(rem, f);
            // the scaled lead coefficient is divisible by lcg exactly
            Rational c = p.lead().coef / g.lc;
            p = sub_scaled(p, c, *q, g.poly, order);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            rem.terms.push_back(t);
            p.terms.erase(p.terms.begin());
        }
    }
    return rem;
}

struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
    int lcm_degree;
};

} // namespace

GroebnerBasis buchberger(const IdealGens& ideal, const MonomialOrder& order, const Deadline& dl) {
    require_same_space(ideal.space, order.space());
    Budget budget(dl);

    std::vector<BasisEntry> basis;
    auto add_entry = [&](OrdPoly p, int sugar) {
        make_primitive(p);
        BasisEntry e;
        e.lm = p.lead().mon;
        e.lc = p.lead().coef;
        e.sugar = sugar;
        e.poly = std::move(p);
        basis.push_back(std::move(e));
    };

    for (const auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        OrdPoly og = to_ordered(g, order);
        budget.check_degree(g.total_degree());
        add_entry(std::move(og), g.total_degree());
    }
    GroebnerBasis out{order, {}, false, 0, 0};
    if (basis.empty()) {
        out.reduced = true;
        return out;
    }

    // sugar strategy: smallest sugar first, then smallest lcm, then indices
    auto pair_less = [&order](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> done;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            Pair p;
            p.i = i;
            p.j = j;
            p.lcm = basis[i].lm.lcm_with(basis[j].lm);
            p.lcm_degree = p.lcm.total_degree();
            int si = basis[i].sugar + p.lcm_degree - basis[i].lm.total_degree();
            int sj = basis[j].sugar + p.lcm_degree - basis[j].lm.total_degree();
            p.sugar = std::max(si, sj);
            queue.insert(std::move(p));
        }
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        budget.check_clock();
        budget.check_basis(basis.size());

        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        ++budget.pairs;
        done.insert({pr.i, pr.j});

        // product criterion
        if (basis[pr.i].lm.coprime_with(basis[pr.j].lm)) continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!pr.lcm.divisible_by(basis[k].lm)) continue;
            auto key = [&](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        const BasisEntry& f = basis[pr.i];
        const BasisEntry& g = basis[pr.j];
        Monomial mf = *pr.lcm.divided_by(f.lm);
        Monomial mg = *pr.lcm.divided_by(g.lm);
        // fraction-free S-polynomial: lc_g*(lcm/ltf)*f - lc_f*(lcm/ltg)*g
        OrdPoly s = sub_scaled(OrdPoly{}, -g.lc, mf, f.poly, order);
        s = sub_scaled(s, f.lc, mg, g.poly, order);

        OrdPoly h = normal_form_scaled(std::move(s), basis, order, &budget);
        if (h.is_zero()) continue;
        int hdeg = 0;
        for (const auto& t : h.terms) hdeg = std::max(hdeg, t.mon.total_degree());
        budget.check_degree(hdeg);
        int sugar = std::max(pr.sugar, hdeg);
        add_entry(std::move(h), sugar);
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: keep entries whose lm is not divisible by another kept lm
    std::vector<int> order_idx(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        int c = order.compare(basis[a].lm, basis[b].lm);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<BasisEntry> minimal;
    for (int idx : order_idx) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (basis[idx].lm.divisible_by(kept.lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[idx]);
    }

    // tail-reduce each against the others
    std::vector<Poly> result;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisEntry> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        OrdPoly nf = normal_form_scaled(minimal[i].poly, others, order, &budget);
        make_primitive(nf);
        result.push_back(to_poly(nf, ideal.space));
    }

    out.basis = std::move(result);
    out.reduced = true;
    out.pairs_processed = budget.pairs;
    out.max_degree_seen = budget.max_degree;
    return out;
}

Poly reduce(const Poly& p, const GroebnerBasis& gb) {
    require_same_space(p.space(), gb.order.space());
    std::vector<BasisEntry> basis;
    basis.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        BasisEntry e;
        e.poly = to_ordered(g, gb.order);
        e.lm = e.poly.lead().mon;
        e.lc = e.poly.lead().coef;
        basis.push_back(std::move(e));
    }
    OrdPoly nf = normal_form(to_ordered(p, gb.order), basis, gb.order, nullptr);
    return to_poly(nf, p.space());
}

IdealGens eliminate(const IdealGens& ideal, const std::vector<std::string>& drop_blocks,
                    const Deadline& dl) {
    std::vector<int> drop_idx;
    for (const auto& name : drop_blocks) {
        auto b = ideal.space->find_block(name);
        if (!b) fail(Errc::invalid_argument, "unknown block '" + name + "'");
        drop_idx.push_back(*b);
    }
    std::sort(drop_idx.begin(), drop_idx.end()); // declared drop-first order
    MonomialOrder order = MonomialOrder::block_elim(ideal.space, drop_idx);

    SpacePtr target = ideal.space->without_blocks(drop_blocks);
    std::vector<int> var_map(ideal.space->total_vars(), -1);
    for (int v = 0; v < ideal.space->total_vars(); ++v) {
        auto [b, slot] = ideal.space->block_slot(v);
        if (std::find(drop_idx.begin(), drop_idx.end(), b) != drop_idx.end()) continue;
        auto nb = target->find_block(ideal.space->block(b).name);
        var_map[v] = target->var_index(*nb, slot);
    }

    if (ideal.is_zero_ideal()) return IdealGens(target, {});
    GroebnerBasis gb = buchberger(ideal, order, dl);
    std::vector<Poly> kept;
    for (const auto& g : gb.basis) {
        bool uses_dropped = false;
        for (int b : drop_idx)
            if (g.uses_block(b)) {
                uses_dropped = true;
                break;
            }
        if (!uses_dropped) kept.push_back(g.remapped(target, var_map));
    }
    return IdealGens(target, std::move(kept));
}

Poly principal_generator(const IdealGens& ideal, const MonomialOrder& order, const Deadline& dl) {
    if (ideal.is_zero_ideal()) fail(Errc::not_principal, "zero ideal has no principal generator");
    GroebnerBasis gb = buchberger(ideal, order, dl);
    if (gb.basis.empty()) fail(Errc::not_principal, "zero ideal has no principal generator");
    if (gb.basis.size() != 1)
        throw NotPrincipalError("not principal (" + std::to_string(gb.basis.size()) + " generators)",
                                static_cast<int>(gb.basis.size()));
    return gb.basis.front().normalized_primitive(order);
}

IdealGens saturate_variable(const IdealGens& ideal, int var, const Deadline& dl) {
    if (ideal.is_zero_ideal()) return ideal;
    for (const auto& g : ideal.gens) {
        int d = g.terms().front().mon.total_degree();
        for (const auto& t : g.terms())
            if (t.mon.total_degree() != d)
                fail(Errc::invalid_argument, "saturation requires homogeneous generators");
    }
    bool appears = false;
    for (const auto& g : ideal.gens) {
        for (const auto& t : g.terms())
            if (t.mon.exponent(var) > 0) {
                appears = true;
                break;
            }
        if (appears) break;
    }
    if (!appears) return ideal;

    MonomialOrder order = MonomialOrder::grevlex_last_var(ideal.space, var);
    GroebnerBasis gb = buchberger(ideal, order, dl);
    std::vector<Poly> sat;
    sat.reserve(gb.basis.size());
    for (const auto& g : gb.basis) {
        int m = g.min_exponent_of(var);
        if (m == 0) {
            sat.push_back(g);
            continue;
        }
        std::vector<Term> ts;
        ts.reserve(g.terms().size());
        for (const auto& t : g.terms()) {
            Monomial q = *t.mon.divided_by(Monomial::variable(var, m));
            ts.push_back({std::move(q), t.coef});
        }
        sat.push_back(Poly::from_terms(ideal.space, std::move(ts)));
    }
    return IdealGens(ideal.space, std::move(sat));
}

namespace {

// raw intersection via the auxiliary-variable trick; generators come back
// as the eliminated GB, possibly not multihomogeneous
IdealGens intersection_raw(const IdealGens& a, const IdealGens& b, const Deadline& dl) {
    require_same_space(a.space, b.space);
    if (a.is_zero_ideal() || b.is_zero_ideal()) return IdealGens(a.space, {});

    std::string tname = "tt";
    while (a.space->find_block(tname)) tname += "t";
    SpacePtr ext = a.space->with_block({tname, 1});
    int tv = ext->total_vars() - 1;

    std::vector<int> id_map(a.space->total_vars());
    for (int v = 0; v < a.space->total_vars(); ++v) id_map[v] = v;

    Poly t = Poly::variable(ext, tv);
    Poly one_minus_t = Poly::constant(ext, Rational(1)) - t;
    std::vector<Poly> gens;
    for (const auto& f : a.gens) gens.push_back(f.remapped(ext, id_map) * t);
    for (const auto& g : b.gens) gens.push_back(g.remapped(ext, id_map) * one_minus_t);

    IdealGens J(ext, std::move(gens));
    return eliminate(J, {tname}, dl);
}

// members of a multigraded ideal split into multigraded members
IdealGens split_components(const IdealGens& I) {
    std::vector<Poly> out;
    for (const auto& g : I.gens)
        for (auto& comp : g.multihomogeneous_components())
            out.push_back(comp.normalized_primitive(MonomialOrder::lex(I.space)));
    auto poly_less = [](const Poly& x, const Poly& y) {
        const auto& tx = x.terms();
        const auto& ty = y.terms();
        for (size_t i = 0; i < tx.size() && i < ty.size(); ++i) {
            int c = Monomial::cmp_lex(tx[i].mon, ty[i].mon);
            if (c != 0) return c < 0;
            if (tx[i].coef != ty[i].coef) return tx[i].coef < ty[i].coef;
        }
        return tx.size() < ty.size();
    };
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return IdealGens(I.space, std::move(out));
}

} // namespace

IdealGens ideal_intersection(const IdealGens& a, const IdealGens& b, const Deadline& dl) {
    return split_components(intersection_raw(a, b, dl));
}

IdealGens saturate_block(const IdealGens& ideal, const std::string& block, const Deadline& dl) {
    auto b = ideal.space->find_block(block);
    if (!b) fail(Errc::invalid_argument, "unknown block '" + block + "'");
    if (ideal.is_zero_ideal()) return ideal;

    // intersect the per-variable saturations; components are split only at
    // the end so downstream Bayer saturations see homogeneous generators
    std::optional<IdealGens> acc;
    for (int slot = 0; slot < ideal.space->block(*b).size; ++slot) {
        int v = ideal.space->var_index(*b, slot);
        IdealGens sat_v = saturate_variable(ideal, v, dl);
        if (!acc)
            acc = std::move(sat_v);
        else
            acc = intersection_raw(*acc, sat_v, dl);
    }
    return split_components(*acc);
}

IdealGens eliminate_saturated(const IdealGens& ideal, const std::vector<std::string>& drop_blocks,
                              const Deadline& dl) {
    IdealGens j = ideal;
    for (const auto& name : drop_blocks) j = saturate_block(j, name, dl);
    return eliminate(j, drop_blocks, dl);
}

bool ideal_contains(const GroebnerBasis& gb, const Poly& p) {
    if (p.is_zero()) return true;
    if (gb.basis.empty()) return false;
    return reduce(p, gb).is_zero();
}

bool ideal_contains_all(const GroebnerBasis& gb, const std::vector<Poly>& ps) {
    for (const auto& p : ps)
        if (!ideal_contains(gb, p)) return false;
    return true;
}

} // namespace chow
