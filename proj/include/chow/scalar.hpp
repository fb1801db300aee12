#pragma once

#include <gmpxx.h>

#include <string>

#include "chow/error.hpp"

namespace chow {

// Exact arithmetic everywhere: integers are GMP mpz, field scalars are GMP
// mpq kept canonical (lowest terms, denominator > 0, zero = 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        fail(Errc::parse_error, "bad rational literal: " + text);
    if (q.get_den() == 0) fail(Errc::parse_error, "zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline Integer floor_to_integer(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_to_integer(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact d-th root; returns false if base is not a perfect d-th power.
inline bool exact_root(const Integer& base, unsigned long d, Integer& out) {
    if (d == 0) return false;
    int exact = mpz_root(out.get_mpz_t(), base.get_mpz_t(), d);
    return exact != 0;
}

inline size_t decimal_digits(const Integer& v) {
    if (v == 0) return 1;
    size_t s = mpz_sizeinbase(v.get_mpz_t(), 10); // exact or one too big
    if (s > 1) {
        Integer p = pow_ui(Integer(10), static_cast<unsigned long>(s - 1));
        if (mpz_cmpabs(v.get_mpz_t(), p.get_mpz_t()) < 0) --s;
    }
    return s;
}

} // namespace chow
