#include "chow/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "chow/chow.hpp"

namespace chow {

namespace {

struct PrecisionLoss {};

// Positive value enclosed in [lo, hi] * 10^e10 with bounded mantissas.
struct Interval {
    Integer lo, hi;
    Integer e10;
};

Integer ten_pow(const Integer& e) {
    if (e < 0 || !e.fits_ulong_p() || e.get_ui() > 10000000)
        fail(Errc::invalid_argument, "decimal exponent out of range");
    return pow_ui(Integer(10), e.get_ui());
}

struct Calc {
    size_t digit_cap;
    int precision;

    void renorm(Interval& x) const {
        size_t dh = decimal_digits(x.hi);
        if (dh <= static_cast<size_t>(precision)) return;
        Integer shift(static_cast<unsigned long>(dh - precision));
        Integer p = ten_pow(shift);
        Integer lo, hi, rem;
        mpz_fdiv_q(lo.get_mpz_t(), x.lo.get_mpz_t(), p.get_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), x.hi.get_mpz_t(), p.get_mpz_t());
        x.lo = std::move(lo);
        x.hi = std::move(hi);
        x.e10 += shift;
        if (x.lo < 1) x.lo = 1;
    }

    Interval from_integer(const Integer& v) const {
        if (v <= 0) fail(Errc::invalid_argument, "interval arithmetic needs positive values");
        Interval x{v, v, Integer(0)};
        renorm(x);
        return x;
    }

    Interval from_rational(const Rational& q) const {
        if (q <= 0) fail(Errc::invalid_argument, "interval arithmetic needs positive values");
        unsigned long s = static_cast<unsigned long>(precision) + decimal_digits(q.get_den()) + 4;
        Integer scaled_num = q.get_num() * pow_ui(Integer(10), s);
        Interval x;
        mpz_fdiv_q(x.lo.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
        mpz_cdiv_q(x.hi.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
        x.e10 = -Integer(s);
        renorm(x);
        return x;
    }

    Interval mul(const Interval& a, const Interval& b) const {
        Interval x{a.lo * b.lo, a.hi * b.hi, a.e10 + b.e10};
        renorm(x);
        return x;
    }

    Interval add_small(const Interval& a, const Integer& k) const {
        Interval x = a;
        if (x.e10 <= 0) {
            Integer p = ten_pow(-x.e10);
            x.lo += k * p;
            x.hi += k * p;
        } else if (x.e10 > Integer(static_cast<unsigned long>(decimal_digits(k)))) {
            x.hi += 1; // k is below one mantissa ulp
        } else {
            Integer p = ten_pow(x.e10);
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
            x.lo += q;
            mpz_cdiv_q(q.get_mpz_t(), k.get_mpz_t(), p.get_mpz_t());
            x.hi += q;
        }
        renorm(x);
        return x;
    }

    Interval halve(const Interval& a) const {
        Interval x{a.lo * 5, a.hi * 5, a.e10 - 1};
        renorm(x);
        return x;
    }

    Interval pow(const Interval& base, const Integer& e) const {
        if (e < 1) fail(Errc::invalid_argument, "interval pow needs exponent >= 1");
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        Interval acc = base;
        for (size_t i = bits - 1; i-- > 0;) {
            acc = mul(acc, acc);
            if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = mul(acc, base);
        }
        return acc;
    }

    // widen the upper bound by one (in value) to absorb a final ceiling
    Interval ceil_adjust(const Interval& a) const {
        Interval x = a;
        if (x.e10 <= 0)
            x.hi += ten_pow(-x.e10);
        else
            x.hi += 1; // one mantissa ulp over-covers a unit step
        renorm(x);
        return x;
    }

    Integer digit_count(const Interval& a) const {
        Interval x = a;
        if (x.e10 < 0) {
            Integer p = ten_pow(-x.e10);
            Integer lo, hi;
            mpz_fdiv_q(lo.get_mpz_t(), x.lo.get_mpz_t(), p.get_mpz_t());
            mpz_cdiv_q(hi.get_mpz_t(), x.hi.get_mpz_t(), p.get_mpz_t());
            if (lo < 1) throw PrecisionLoss{};
            x = Interval{lo, hi, Integer(0)};
        }
        Integer dlo = Integer(static_cast<unsigned long>(decimal_digits(x.lo))) + x.e10;
        Integer dhi = Integer(static_cast<unsigned long>(decimal_digits(x.hi))) + x.e10;
        if (dlo != dhi) throw PrecisionLoss{};
        return dlo;
    }

    std::string leading_digits(const Interval& a, size_t count) const {
        digit_count(a); // ensure unambiguous magnitude
        std::string lo = a.lo.get_str();
        std::string hi = a.hi.get_str();
        if (lo.size() != hi.size()) throw PrecisionLoss{};
        std::string lp = lo.substr(0, std::min(count, lo.size()));
        std::string hp = hi.substr(0, std::min(count, hi.size()));
        if (lp != hp) throw PrecisionLoss{};
        return lp;
    }
};

// Exact integer while small, enclosing interval once past the digit cap.
struct BigValue {
    bool exact = true;
    Integer value;     // exact
    Interval interval; // otherwise

    static BigValue from_exact(Integer v) { return BigValue{true, std::move(v), {}}; }
};

struct Ops {
    Calc calc;

    Interval as_interval(const BigValue& v) const {
        return v.exact ? calc.from_integer(v.value) : v.interval;
    }

    BigValue demote(Interval iv) const { return BigValue{false, Integer(0), std::move(iv)}; }

    BigValue mul(const BigValue& a, const BigValue& b) const {
        if (a.exact && b.exact) {
            size_t da = decimal_digits(a.value), db = decimal_digits(b.value);
            if (da + db <= calc.digit_cap + 1) {
                Integer v = a.value * b.value;
                if (decimal_digits(v) <= calc.digit_cap) return BigValue::from_exact(std::move(v));
                return demote(calc.from_integer(v));
            }
        }
        return demote(calc.mul(as_interval(a), as_interval(b)));
    }

    BigValue pow(const BigValue& base, const Integer& e) const {
        if (e == 0) return BigValue::from_exact(Integer(1));
        if (base.exact) {
            size_t db = decimal_digits(base.value);
            // digits(base^e) <= e * digits(base)
            if (e.fits_ulong_p() && Integer(Integer(static_cast<unsigned long>(db)) * e) <=
                                        Integer(static_cast<unsigned long>(calc.digit_cap))) {
                Integer v = pow_ui(base.value, e.get_ui());
                if (decimal_digits(v) <= calc.digit_cap) return BigValue::from_exact(std::move(v));
                return demote(calc.from_integer(v));
            }
        }
        return demote(calc.pow(as_interval(base), e));
    }

    // delta(r, d) = ceil(2 * (d^2/2 + d)^(2^r)); the base q = d(d+2)/2 is
    // computed exactly as a rational before the power.
    BigValue delta(long r, const BigValue& d) const {
        if (r < 1) fail(Errc::invalid_argument, "delta requires r >= 1");
        if (r > 1000000) fail(Errc::invalid_argument, "delta exponent 2^r out of supported range");
        Integer e2 = pow_ui(Integer(2), static_cast<unsigned long>(r));
        if (d.exact) {
            if (d.value < 1) fail(Errc::invalid_argument, "delta requires d >= 1");
            Rational q = make_rational(d.value * (d.value + 2), Integer(2));
            size_t dq = decimal_digits(q.get_num());
            if (e2.fits_ulong_p() &&
                Integer(Integer(static_cast<unsigned long>(dq)) * e2) <=
                    Integer(static_cast<unsigned long>(calc.digit_cap))) {
                Rational p;
                mpz_pow_ui(mpq_numref(p.get_mpq_t()), q.get_num_mpz_t(), e2.get_ui());
                mpz_pow_ui(mpq_denref(p.get_mpq_t()), q.get_den_mpz_t(), e2.get_ui());
                p.canonicalize();
                Integer v = ceil_to_integer(2 * p);
                if (decimal_digits(v) <= calc.digit_cap) return BigValue::from_exact(std::move(v));
                return demote(calc.from_integer(v));
            }
        }
        // interval route: q = d*(d+2)/2
        Interval di = as_interval(d);
        Interval q = calc.halve(calc.mul(di, calc.add_small(di, Integer(2))));
        Interval p = calc.pow(q, e2);
        Interval v = calc.mul(calc.from_integer(Integer(2)), p);
        return demote(calc.ceil_adjust(v));
    }

    BigValue delta_prime(long r, const BigValue& d) const { return mul(d, delta(r, d)); }

    BigValue delta_iter(long k, long r, const BigValue& d) const {
        if (k < 1) fail(Errc::invalid_argument, "delta_iter requires k >= 1");
        BigValue acc = d;
        for (long i = 0; i < k; ++i) acc = delta_prime(r, acc);
        return acc;
    }

    BigNumber finalize(const BigValue& v) const {
        if (v.exact) {
            return BigNumber::from_exact(v.value);
        }
        Integer digits = calc.digit_count(v.interval);
        std::string leading = calc.leading_digits(v.interval, 20);
        return BigNumber::from_summary(std::move(digits), std::move(leading));
    }
};

template <typename F>
auto with_precision(const BigCfg& cfg, F&& body) {
    for (int p = cfg.start_precision; p <= cfg.max_precision; p *= 2) {
        Ops ops{Calc{cfg.digit_cap, p}};
        try {
            return body(ops);
        } catch (const PrecisionLoss&) {
            continue;
        }
    }
    fail(Errc::invalid_argument, "value straddles a representation boundary at max precision");
}

Rational require_positive(const std::optional<Rational>& v, const std::string& what) {
    if (!v) fail(Errc::missing_input, "missing input: " + what);
    if (*v <= 0) fail(Errc::invalid_argument, what + " must be positive");
    return *v;
}

Rational rational_pow(const Rational& q, long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

} // namespace

BigNumber BigNumber::from_exact(Integer v) {
    BigNumber b;
    b.exact_ = true;
    b.value_ = std::move(v);
    b.digits_ = Integer(static_cast<unsigned long>(decimal_digits(b.value_)));
    std::string s = b.value_.get_str();
    if (!s.empty() && s[0] == '-') s = s.substr(1);
    b.leading_ = s.substr(0, std::min<size_t>(20, s.size()));
    return b;
}

BigNumber BigNumber::from_summary(Integer digit_count, std::string leading) {
    BigNumber b;
    b.exact_ = false;
    b.digits_ = std::move(digit_count);
    b.leading_ = std::move(leading);
    return b;
}

const Integer& BigNumber::value() const {
    if (!exact_) fail(Errc::invalid_argument, "value exceeds the digit cap; only a summary is kept");
    return value_;
}

bool BigNumber::operator==(const BigNumber& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return value_ == o.value_;
    return digits_ == o.digits_ && leading_ == o.leading_;
}

std::string BigNumber::to_display() const {
    if (exact_) return value_.get_str();
    return "~" + leading_ + "e+" + Integer(digits_ - 1).get_str() + " (" + digits_.get_str() + " digits)";
}

BigNumber delta(long r, const Integer& d, const BigCfg& cfg) {
    return with_precision(cfg, [&](const Ops& ops) {
        return ops.finalize(ops.delta(r, BigValue::from_exact(d)));
    });
}

BigNumber delta_prime(long r, const Integer& d, const BigCfg& cfg) {
    return with_precision(cfg, [&](const Ops& ops) {
        return ops.finalize(ops.delta_prime(r, BigValue::from_exact(d)));
    });
}

BigNumber delta_iter(long k, long r, const Integer& d, const BigCfg& cfg) {
    return with_precision(cfg, [&](const Ops& ops) {
        return ops.finalize(ops.delta_iter(k, r, BigValue::from_exact(d)));
    });
}

BigNumber Delta(long n, long k, long r, const Integer& d_prime, const BigCfg& cfg) {
    if (n < 1 || k < 1 || r < 1 || d_prime < 1)
        fail(Errc::invalid_argument, "Delta requires positive arguments");
    Integer d = std::max(d_prime, Integer(Integer(k) * Integer(n + 1)));
    return delta_iter(k, r, d, cfg);
}

ChowComplexity chow_complexity(long n, const Integer& gamma, const Integer& M, long N,
                               const Integer& d_prime, const BigCfg& cfg) {
    if (n < 1 || gamma < 1 || M < 1 || N < 1 || d_prime < 1)
        fail(Errc::invalid_argument, "chow_complexity requires positive arguments");
    ChowComplexity out;
    out.m_bar = Integer(N + 1) * (M + 1) - 1;
    if (!out.m_bar.fits_slong_p())
        fail(Errc::invalid_argument, "M_bar out of supported range");
    long m_bar = out.m_bar.get_si();
    out.C = phi(n, gamma, m_bar);
    if (!gamma.fits_slong_p()) fail(Errc::invalid_argument, "gamma out of supported range");
    out.D = with_precision(cfg, [&](const Ops& ops) {
        Integer d = std::max(d_prime, Integer(gamma * Integer(n + 1)));
        BigValue dd = ops.delta_iter(gamma.get_si(), m_bar, BigValue::from_exact(d));
        return ops.finalize(ops.mul(BigValue::from_exact(Integer(2)), dd));
    });
    return out;
}

std::pair<Integer, Integer> embedding_bounds(const GeometryInputs& g) {
    if (g.n < 1) fail(Errc::invalid_argument, "dimension n must be >= 1");
    if (g.r_n < 1) fail(Errc::invalid_argument, "r_n must be >= 1");
    Rational vol_rK;
    if (g.vol_rK) {
        vol_rK = require_positive(g.vol_rK, "vol(r_n K)");
    } else {
        Rational vk = require_positive(g.vol_K, "vol(K) (or supply vol(r_n K) directly)");
        vol_rK = rational_pow(Rational(g.r_n), g.n) * vk;
    }
    Integer d_V = ceil_to_integer(vol_rK);
    Integer M_V = d_V + g.n - 1;
    return {d_V, M_V};
}

const char* graph_bound_case_name(GraphBoundCase c) {
    switch (c) {
    case GraphBoundCase::general: return "general";
    case GraphBoundCase::nef: return "nef";
    case GraphBoundCase::pluricanonical: return "pluricanonical";
    }
    return "?";
}

Integer graph_degree_bound(const GeometryInputs& g, GraphBoundCase which) {
    if (g.n < 1 || g.r_n < 1) fail(Errc::invalid_argument, "need n >= 1 and r_n >= 1");
    switch (which) {
    case GraphBoundCase::general: {
        Rational v = require_positive(g.vol_H_rnK, "vol(H + r_n K)");
        return ceil_to_integer(v);
    }
    case GraphBoundCase::nef: {
        if (!g.intersection_numbers)
            fail(Errc::missing_input, "missing input: intersection numbers H^i.K^(n-i)");
        const auto& table = *g.intersection_numbers;
        if (static_cast<long>(table.size()) != g.n + 1)
            fail(Errc::invalid_argument, "intersection table needs n+1 entries");
        Rational total(0);
        for (long i = 0; i <= g.n; ++i) {
            Rational coef(binomial(Integer(g.n), static_cast<unsigned long>(i)));
            total += coef * rational_pow(Rational(g.r_n), g.n - i) * table[i];
        }
        if (total <= 0) fail(Errc::invalid_argument, "nef expansion is not positive");
        return ceil_to_integer(total);
    }
    case GraphBoundCase::pluricanonical: {
        Rational vk = require_positive(g.vol_K, "vol(K)");
        Rational v = rational_pow(Rational(2 * g.r_n), g.n) * vk;
        return ceil_to_integer(v);
    }
    }
    fail(Errc::invalid_argument, "unknown graph bound case");
}

MapDegreeBounds map_degree_bounds(const GeometryInputs& g, const MapDegreeTargets& t) {
    MapDegreeBounds out;
    if (t.KX_n && t.KY_n) {
        if (*t.KY_n <= 0) fail(Errc::invalid_argument, "K_Y^n must be positive");
        out.nef_case = floor_to_integer(*t.KX_n / *t.KY_n);
    }
    if (t.vol_KY) {
        Rational vk = require_positive(g.vol_K, "vol(K)");
        if (*t.vol_KY <= 0) fail(Errc::invalid_argument, "vol(K_Y) must be positive");
        out.big_case = floor_to_integer(vk / *t.vol_KY);
    }
    if (g.eps) {
        Rational vk = require_positive(g.vol_K, "vol(K)");
        Rational e = require_positive(g.eps, "eps");
        out.eps_case = floor_to_integer(vk / e);
    }
    return out;
}

BoundReport total_bound(const GeometryInputs& g, std::optional<Integer> M,
                        std::optional<Integer> gamma, const BigCfg& cfg) {
    BoundReport rep;
    auto [d_V, M_V] = embedding_bounds(g);
    rep.d_V = d_V;
    rep.M_V = M_V;
    rep.gamma_X = gamma ? *gamma : graph_degree_bound(g, GraphBoundCase::pluricanonical);
    if (rep.gamma_X < 1) fail(Errc::invalid_argument, "gamma must be >= 1");
    Integer M_used = M ? *M : M_V;
    if (!g.N) fail(Errc::missing_input, "missing input: ambient dimension N");
    Integer d_prime = g.d_prime ? *g.d_prime : d_V;
    if (d_prime < 1) fail(Errc::invalid_argument, "d' must be >= 1");

    ChowComplexity cc = chow_complexity(g.n, rep.gamma_X, M_used, *g.N, d_prime, cfg);
    rep.M_bar = cc.m_bar;
    rep.C = cc.C;
    rep.D = cc.D;

    if (!rep.gamma_X.fits_slong_p() || !rep.M_bar.fits_slong_p())
        fail(Errc::invalid_argument, "bound parameters out of supported range");
    rep.B = with_precision(cfg, [&](const Ops& ops) {
        Integer d = std::max(d_prime, Integer(rep.gamma_X * Integer(g.n + 1)));
        BigValue dd = ops.delta_iter(rep.gamma_X.get_si(), rep.M_bar.get_si(),
                                     BigValue::from_exact(d));
        BigValue D = ops.mul(BigValue::from_exact(Integer(2)), dd);
        BigValue DC = ops.pow(D, rep.C);
        BigValue g3 = BigValue::from_exact(rep.gamma_X * rep.gamma_X * rep.gamma_X);
        return ops.finalize(ops.mul(g3, DC));
    });

    rep.provenance = {
        {"d_V", "ceil(vol(r_n*K)), vol(r_n*K) = r_n^n * vol(K) when not supplied"},
        {"M_V", "d_V + n - 1"},
        {"d_prime", g.d_prime ? "supplied" : "d_V (degree bound for equations of X')"},
        {"gamma_X", gamma ? "supplied" : "ceil((2*r_n)^n * vol(K)) [pluricanonical case]"},
        {"M_bar", "(N+1)*(M+1) - 1"},
        {"C", "phi(n, gamma_X, M_bar) = binom(gamma_X + M_bar, M_bar)^(n+1) - 1"},
        {"D", "2 * Delta(n, gamma_X, M_bar, d'); Delta(n,k,r,d') = delta_iter(k, r, max(d', "
              "k*(n+1))); delta(r,d) = ceil(2*(d^2/2 + d)^(2^r)) [Dube-type bound]"},
        {"B", "gamma_X^3 * D^C"},
    };
    return rep;
}

std::string BoundReport::to_document() const {
    std::ostringstream os;
    os << "d_V = " << d_V.get_str() << "\n";
    os << "M_V = " << M_V.get_str() << "\n";
    os << "gamma_X = " << gamma_X.get_str() << "\n";
    os << "M_bar = " << M_bar.get_str() << "\n";
    os << "C = " << C.get_str() << "\n";
    os << "D.digits = " << D.digit_count().get_str() << "\n";
    os << "D.leading = " << D.leading_digits() << "\n";
    if (D.is_exact()) os << "D = " << D.value().get_str() << "\n";
    os << "B.digits = " << B.digit_count().get_str() << "\n";
    os << "B.leading = " << B.leading_digits() << "\n";
    if (B.is_exact()) os << "B = " << B.value().get_str() << "\n";
    for (const auto& [key, label] : provenance)
        os << "formula." << key << " = " << label << "\n";
    return os.str();
}

} // namespace chow
