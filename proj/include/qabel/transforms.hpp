#pragma once

#include <array>
#include <map>
#include <string>

#include "qabel/qpoch.hpp"
#include "qabel/sample.hpp"

namespace qabel {

// The sixteen parameters of the master transformations: a_i and x_i are
// supplied directly and squared internally, bases through half-bases
// (p_i = sigma_p_i^2, q_i = sigma_q_i^2).
struct MasterParams {
    std::array<Rational, 4> a;
    std::array<Rational, 4> sigma_p;
    std::array<Rational, 4> x;
    std::array<Rational, 4> sigma_q;

    Rational p(int i) const { return sigma_p[i] * sigma_p[i]; }
    Rational q(int i) const { return sigma_q[i] * sigma_q[i]; }
    QuadrupleSpec a_side() const { return {a, sigma_p}; }
    QuadrupleSpec x_side() const { return {x, sigma_q}; }
};

// Reads symbols a1..a4, x1..x4 and half-bases p1..p4, q1..q4.
MasterParams master_from_point(const ParamPoint& pt);

// The telescoped sequences and their closed-form differences.
Rational master_A(const MasterParams& m, long k);             // prod (a_i^2;p_i)_k / (K/a_i^2;L/p_i)_k
Rational master_B(const MasterParams& m, long k);             // prod (x_i^2;q_i)_k / (K0/x_i^2;L0/q_i)_k
Rational master_B2(const MasterParams& m, long k);            // second transformation's B_k
Rational master_A_minus1_closed(const MasterParams& m);       // prod (L/p_i - K/a_i^2)/(p_i - a_i^2)
Rational delta_A_closed(const MasterParams& m, long k);
Rational nabla_B_closed(const MasterParams& m, long k);
Rational nabla_B2_closed(const MasterParams& m, long k);

// First transformation. LHS and RHS are independent code paths sharing only
// the qkernel primitives; residual = LHS - RHS, exactly 0 at admissible points.
Rational thm1_lhs(const MasterParams& m, long n);
Rational thm1_rhs(const MasterParams& m, long n);
Rational thm1_residual(const MasterParams& m, long n);
// k-th LHS summand, exposed for the term-wise Abel decomposition checks.
Rational thm1_lhs_term(const MasterParams& m, long k);

// Second transformation.
Rational thm2_lhs(const MasterParams& m, long n);
Rational thm2_rhs(const MasterParams& m, long n);
Rational thm2_residual(const MasterParams& m, long n);

// Third transformation, printed form; the derivation form is exposed as a
// second residual that must also vanish.
Rational thm3_lhs(const MasterParams& m, long n);
Rational thm3_rhs(const MasterParams& m, long n);
Rational thm3_residual(const MasterParams& m, long n);
Rational thm3_derivation_residual(const MasterParams& m, long n);

// General multibasic transformation with rational exponents r_i, s_i over a
// single base q = t^(2*denom), t = base_sigma, so every power that appears is
// an exact integer power of t.
struct ExponentParams {
    std::array<Rational, 4> r;
    std::array<Rational, 4> s;
    Rational base_sigma;
    std::map<std::string, Rational> scalars;  // a,b,c,d,e,x,y,z,w,u

    long common_denominator() const;  // lcm of all exponent denominators
    Rational base() const;            // q = t^(2*common_denominator)
    // q^e for rational e whose rescaled exponent is integral.
    Rational qpow(const Rational& e) const;
};

Rational thm41_lhs(const ExponentParams& ep, long n);
Rational thm41_rhs(const ExponentParams& ep, long n);
Rational thm41_residual(const ExponentParams& ep, long n);
Rational thm41_a_minus1_closed(const ExponentParams& ep);  // Eq.-level closed boundary value
Rational thm41_a_seq(const ExponentParams& ep, long k);    // the telescoped A_k, defined at k = -1 too

}  // namespace qabel
