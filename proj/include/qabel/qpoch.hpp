#pragma once

#include <array>
#include <initializer_list>
#include <vector>

#include "qabel/rational.hpp"

namespace qabel {

// (a;q)_n for any integer n. Nonnegative n is the plain product
// prod_{k=0}^{n-1} (1 - a q^k); negative n uses the reflection rule
// (a;q)_{-m} = 1 / prod_{j=1}^{m} (1 - a q^{-j}) and signals a pole when a
// reflected factor vanishes.
Rational qpoch(const Rational& a, const Rational& q, long n);

// (a1,...,am;q)_n convenience.
Rational qpoch(std::initializer_list<Rational> args, const Rational& q, long n);

struct PochFactor {
    Rational argument;
    Rational base;
    long length = 0;
};

// Product of q-shifted factorials with per-factor bases and lengths.
Rational qpoch_multi(const std::vector<PochFactor>& factors);

// D(x) := 1 - x extended multiplicatively: D(x1,...,xm) = prod (1 - xi).
Rational dfun(std::initializer_list<Rational> args);
Rational dfun(const std::vector<Rational>& args);

// Four values with four tracked half-bases (base_i = sigma_i^2).
struct QuadrupleSpec {
    std::array<Rational, 4> x;
    std::array<Rational, 4> sigma;
};

// Gamma_k[x;q] = (x1 x2 (s1 s2)^k - x3 x4 (s3 s4)^k)
//             * (x1 x3 (s1 s3)^k - x2 x4 (s2 s4)^k)
//             * (x1 x4 (s1 s4)^k - x2 x3 (s2 s3)^k),
// exact for any integer k (negative k goes through pow_int of the sigmas).
Rational gamma_k(const QuadrupleSpec& spec, long k);

struct KL {
    Rational K;  // x1 x2 x3 x4
    Rational L;  // sigma1 sigma2 sigma3 sigma4, the positive-branch sqrt of the base product
};

KL kl_constants(const QuadrupleSpec& spec);

}  // namespace qabel
