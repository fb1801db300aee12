#include "chow/hilbert.hpp"

#include <algorithm>
#include <map>

namespace chow {

namespace {

using Clock = std::chrono::steady_clock;

struct NumTerms {
    std::map<std::vector<int>, Integer> terms;

    void add(const std::vector<int>& shift, const Integer& c) {
        auto it = terms.find(shift);
        if (it == terms.end())
            terms.emplace(shift, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return Monomial::cmp_lex(a, b) > 0;
    });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (m.divisible_by(kept)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

struct NumeratorBuilder {
    const VariableSpace& space;
    Clock::time_point start;
    std::chrono::milliseconds budget;
    long nodes = 0;

    void guard() {
        if ((++nodes & 255) == 0 && Clock::now() - start > budget)
            fail(Errc::deadline_exceeded, "hilbert numerator recursion exceeded wall budget");
    }

    // K(S/L) with L = <gens> minimal. K(0) = 1; exact sequence on a pivot
    // power splits the general case.
    NumTerms run(std::vector<Monomial> gens, const std::vector<int>& shift, const Integer& coef) {
        guard();
        NumTerms out;
        if (coef == 0) return out;
        for (const auto& m : gens)
            if (m.is_one()) return out; // S/<1> = 0
        if (gens.empty()) {
            out.add(shift, coef);
            return out;
        }

        // pairwise coprime: peel generators off one at a time,
        // K = prod (1 - t^deg m_i)
        bool coprime = true;
        for (size_t i = 0; i < gens.size() && coprime; ++i)
            for (size_t j = i + 1; j < gens.size() && coprime; ++j)
                if (!gens[i].coprime_with(gens[j])) coprime = false;
        if (coprime) {
            NumTerms acc;
            acc.add(shift, coef);
            for (const auto& m : gens) {
                NumTerms next;
                std::vector<int> md = m.block_degrees(space);
                for (const auto& [s, c] : acc.terms) {
                    next.add(s, c);
                    std::vector<int> s2 = s;
                    for (size_t b = 0; b < s2.size(); ++b) s2[b] += md[b];
                    next.add(s2, -c);
                }
                acc = std::move(next);
                guard();
            }
            return acc;
        }

        // pivot: variable occurring in the most generators, with its least
        // positive exponent among them
        std::map<int, std::pair<int, int>> stats; // var -> (count, min exp)
        for (const auto& m : gens)
            for (const auto& [v, e] : m.entries()) {
                auto it = stats.find(v);
                if (it == stats.end())
                    stats[v] = {1, e};
                else {
                    it->second.first += 1;
                    it->second.second = std::min(it->second.second, e);
                }
            }
        int pivot_var = -1, pivot_exp = 1, best_count = 0;
        for (const auto& [v, ce] : stats)
            if (ce.first > best_count) {
                best_count = ce.first;
                pivot_var = v;
                pivot_exp = ce.second;
            }
        Monomial pivot = Monomial::variable(pivot_var, pivot_exp);

        // K(L) = K(L + <p>) + t^deg(p) K(L : p)
        std::vector<Monomial> plus; // minimal gens of L + <p>
        plus.push_back(pivot);
        for (const auto& m : gens)
            if (!m.divisible_by(pivot)) plus.push_back(m);

        std::vector<Monomial> colon; // gens of L : p
        colon.reserve(gens.size());
        for (const auto& m : gens) {
            Monomial g = m.gcd_with(pivot);
            colon.push_back(*m.divided_by(g));
        }
        colon = minimalize(std::move(colon));

        std::vector<int> shift_p = shift;
        std::vector<int> pd = pivot.block_degrees(space);
        for (size_t b = 0; b < shift_p.size(); ++b) shift_p[b] += pd[b];

        NumTerms left = run(std::move(plus), shift, coef);
        NumTerms right = run(std::move(colon), shift_p, coef);
        for (const auto& [s, c] : left.terms) out.add(s, c);
        for (const auto& [s, c] : right.terms) out.add(s, c);
        return out;
    }
};

Integer count_monomials(int degree, int nvars) {
    if (degree < 0) return 0;
    return binomial(Integer(degree + nvars - 1), static_cast<unsigned long>(nvars - 1));
}

} // namespace

HilbertNumerator hilbert_numerator(std::vector<Monomial> lead_monomials,
                                   const VariableSpace& space, const Deadline& dl) {
    NumeratorBuilder builder{space, Clock::now(), dl.wall_budget};
    NumTerms acc = builder.run(minimalize(std::move(lead_monomials)),
                               std::vector<int>(space.block_count(), 0), Integer(1));
    HilbertNumerator out;
    out.terms.reserve(acc.terms.size());
    for (auto& [s, c] : acc.terms) out.terms.emplace_back(c, s);
    return out;
}

Integer hilbert_value(const HilbertNumerator& num, const VariableSpace& space,
                      const std::vector<int>& degs) {
    Integer total = 0;
    for (const auto& [c, shift] : num.terms) {
        Integer prod = c;
        for (int b = 0; b < space.block_count() && prod != 0; ++b) {
            Integer cnt = count_monomials(degs[b] - shift[b], space.block(b).size);
            prod *= cnt;
        }
        total += prod;
    }
    return total;
}

std::optional<Integer> stabilized_degree(const std::vector<Monomial>& lead_monomials,
                                         const VariableSpace& space, const Deadline& dl) {
    HilbertNumerator num = hilbert_numerator(lead_monomials, space, dl);
    int nblocks = space.block_count();
    std::vector<int> base(nblocks, 0);
    for (const auto& [c, shift] : num.terms)
        for (int b = 0; b < nblocks; ++b) base[b] = std::max(base[b], shift[b] + 1);

    // On degs >= base the function is a polynomial of per-block degree
    // size_b - 1; constancy on a grid with size_b points per axis is
    // constancy everywhere beyond.
    std::vector<int> sizes(nblocks);
    for (int b = 0; b < nblocks; ++b) sizes[b] = space.block(b).size;

    std::optional<Integer> value;
    std::vector<int> idx(nblocks, 0);
    while (true) {
        std::vector<int> degs(nblocks);
        for (int b = 0; b < nblocks; ++b) degs[b] = base[b] + idx[b];
        Integer h = hilbert_value(num, space, degs);
        if (!value)
            value = h;
        else if (*value != h)
            return std::nullopt;
        int b = 0;
        while (b < nblocks) {
            if (++idx[b] < sizes[b]) break;
            idx[b] = 0;
            ++b;
        }
        if (b == nblocks) break;
    }
    return value;
}

std::optional<Integer> sliced_degree_once(const IdealGens& ideal, int slice_block, int n_cuts,
                                          SliceRng& rng, const Deadline& dl) {
    std::vector<Poly> gens = ideal.gens;
    int lo = ideal.space->block_offset(slice_block);
    int size = ideal.space->block(slice_block).size;
    for (int c = 0; c < n_cuts; ++c) {
        std::vector<Term> ts;
        ts.reserve(size);
        for (int s = 0; s < size; ++s)
            ts.push_back({Monomial::variable(lo + s), Rational(rng.small_nonzero())});
        gens.push_back(Poly::from_terms(ideal.space, std::move(ts)));
    }
    IdealGens sliced(ideal.space, std::move(gens));
    GroebnerBasis gb = buchberger(sliced, MonomialOrder::grevlex(ideal.space), dl);
    std::vector<Monomial> lts;
    lts.reserve(gb.basis.size());
    for (const auto& g : gb.basis) lts.push_back(g.leading_term(gb.order).mon);
    return stabilized_degree(lts, *ideal.space, dl);
}

std::optional<bool> has_relevant_point(const IdealGens& ideal, const Deadline& dl) {
    if (ideal.is_zero_ideal()) return true;
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(ideal.space), dl);
    std::vector<Monomial> lts;
    for (const auto& g : gb.basis) lts.push_back(g.leading_term(gb.order).mon);
    auto deg = stabilized_degree(lts, *ideal.space, dl);
    if (!deg) return std::nullopt;
    return *deg > 0;
}

} // namespace chow
