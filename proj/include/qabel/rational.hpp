#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qabel {

// Exact arbitrary-precision rational. GMP keeps values canonical (den > 0,
// gcd(num, den) = 1) as long as they are built through the helpers below;
// construct from raw num/den pairs via rat() which canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// A denominator factor vanished at the sampled point. The point is
// inadmissible for the identity under test; campaigns resample with the
// next attempt counter. Never a verification failure by itself.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Gamma_j[x;q] vanished where it sits in a denominator (second
// transformation machinery). Also just "resample" to the campaign layer.
class gamma_zero_error : public pole_error {
public:
    gamma_zero_error() : pole_error("gamma factor vanished") {}
};

// Entry-level side condition unmet (e.g. a required perfect square).
class constraint_error : public std::runtime_error {
public:
    explicit constraint_error(const std::string& what) : std::runtime_error(what) {}
};

// n below a recurrence's offset.
class range_error : public std::out_of_range {
public:
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

inline const Rational& guard_nonzero(const Rational& x) {
    if (x == 0) throw pole_error("pole");
    return x;
}

// a / b with the zero-divisor translated into a resample signal.
inline Rational div_exact(const Rational& a, const Rational& b) {
    if (b == 0) throw pole_error("pole");
    return a / b;
}

// Exact x^n for integer n; 0^negative signals a pole.
inline Rational pow_int(const Rational& x, long n) {
    if (n == 0) return Rational(1);
    if (x == 0) {
        if (n < 0) throw pole_error("pole");
        return Rational(0);
    }
    mpz_class num, den;
    const unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
    if (n < 0) num.swap(den);
    return rat(num, den);
}

inline Rational abs_rat(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace qabel
