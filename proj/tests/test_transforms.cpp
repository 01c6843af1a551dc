#include <doctest.h>

#include "qabel/abel.hpp"
#include "qabel/transforms.hpp"

using namespace qabel;

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    long next(long lo, long hi) { return lo + static_cast<long>(splitmix64(state) % (hi - lo + 1)); }
    Rational rational(long den = 8) {
        long n = 0;
        while (n == 0) n = next(-den, den);
        return rat(n, next(1, den));
    }
    Rational sigma(long den = 6) {
        for (;;) {
            const Rational v = rational(den);
            if (v * v != 1) return v;
        }
    }
};

MasterParams random_master(Rng& rng) {
    MasterParams m;
    for (int i = 0; i < 4; ++i) {
        m.a[i] = rng.rational();
        m.x[i] = rng.rational();
        m.sigma_p[i] = rng.sigma();
        m.sigma_q[i] = rng.sigma();
    }
    return m;
}

ExponentParams random_exponent_params(Rng& rng, const std::array<Rational, 4>& r,
                                      const std::array<Rational, 4>& s) {
    ExponentParams ep;
    ep.r = r;
    ep.s = s;
    ep.base_sigma = rng.sigma(4);
    for (const char* k : {"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}) ep.scalars[k] = rng.rational();
    return ep;
}

}  // namespace

TEST_CASE("thm1: n = 0 collapses and random points vanish") {
    Rng rng(211);
    int done = 0;
    while (done < 25) {
        const MasterParams m = random_master(rng);
        try {
            for (long n = 0; n <= 5; ++n) {
                const Rational r = thm1_residual(m, n);
                CHECK(r == 0);
            }
            ++done;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("thm1 LHS decomposes as B_k Delta A_k, term by term") {
    Rng rng(223);
    int done = 0;
    while (done < 8) {
        const MasterParams m = random_master(rng);
        try {
            for (long k = 0; k <= 4; ++k) {
                const Rational lhs = thm1_lhs_term(m, k);
                const Rational rhs = master_B(m, k) * delta_A_closed(m, k);
                CHECK(lhs == rhs);
            }
            // the k = 0 summand is the telescoped boundary A_0 - A_{-1}
            const Rational t0 = thm1_lhs_term(m, 0);
            const Rational b0 = (master_A(m, 0) - master_A(m, -1)) * master_B(m, 0);
            CHECK(t0 == b0);
            ++done;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("thm2: random points vanish; tuned Gamma zero signals GammaZero") {
    Rng rng(227);
    int done = 0;
    while (done < 25) {
        const MasterParams m = random_master(rng);
        try {
            for (long n = 0; n <= 5; ++n) {
                const Rational r = thm2_residual(m, n);
                CHECK(r == 0);
            }
            ++done;
        } catch (const pole_error&) {
        }
    }
    // x1 x2 s1 s2 = x3 x4 s3 s4 makes Gamma_1[x;q] = 0
    MasterParams m = random_master(rng);
    m.x = {Rational(2), Rational(3), Rational(1), Rational(6)};
    m.sigma_q = {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    CHECK_THROWS_AS((void)thm2_residual(m, 3), gamma_zero_error);
}

TEST_CASE("thm3: printed form and derivation form vanish") {
    Rng rng(229);
    int done = 0;
    while (done < 25) {
        const MasterParams m = random_master(rng);
        try {
            for (long n = 0; n <= 4; ++n) {
                const Rational r1 = thm3_residual(m, n);
                const Rational r2 = thm3_derivation_residual(m, n);
                CHECK(r1 == 0);
                CHECK(r2 == 0);
            }
            ++done;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("thm41: acceptance exponent patterns vanish") {
    const Rational h = rat(1, 2), o(1), th = rat(3, 2);
    const std::array<std::array<Rational, 4>, 3> rp = {{{h, h, h, h}, {h, h, o, o}, {h, h, th, th}}};
    const std::array<std::array<Rational, 4>, 3> sp = {{{h, h, h, h}, {h, o, o, o}, {h, h, th, th}}};
    Rng rng(233);
    for (int pat = 0; pat < 3; ++pat) {
        int done = 0;
        while (done < 10) {
            const ExponentParams ep = random_exponent_params(rng, rp[pat], sp[pat]);
            try {
                for (long n = 0; n <= 4; ++n) {
                    const Rational r = thm41_residual(ep, n);
                    CHECK(r == 0);
                }
                const Rational am1 = thm41_a_minus1_closed(ep);
                const Rational am1_seq = thm41_a_seq(ep, -1);
                CHECK(am1 == am1_seq);
                ++done;
            } catch (const pole_error&) {
            }
        }
    }
}

TEST_CASE("thm41 with all exponents 1/2 degenerates to thm1") {
    // With r_i = s_i = 1/2 the common denominator is 2, so thm41 works over
    // Q = t^4 with every Pochhammer base equal to Q. The matching thm1
    // instance has p_i = q_i = Q, a_i^2 = (bQ, dQ, eQ, bc^2deQ/a^2) and
    // x_i^2 = (yQ, wQ, uQ, yz^2wuQ/x^2). Sampling square scalars
    // b = rb^2, ..., c = a*rca, z = x*rzx makes every root exact: the
    // half-base of Q is t^2 and e.g. sqrt(bQ) = rb t^2.
    Rng rng(239);
    int done = 0;
    while (done < 10) {
        const Rational t = rng.sigma(4);
        const Rational s2 = t * t;  // half-base of Q = t^4
        const Rational rb = rng.rational(5), rd = rng.rational(5), re = rng.rational(5), rca = rng.rational(5);
        const Rational ry = rng.rational(5), rw = rng.rational(5), ru = rng.rational(5), rzx = rng.rational(5);
        const Rational a = rng.rational(5), x = rng.rational(5);
        ExponentParams ep;
        ep.r = {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
        ep.s = ep.r;
        ep.base_sigma = t;
        ep.scalars = {{"a", a},          {"b", rb * rb}, {"c", a * rca}, {"d", rd * rd}, {"e", re * re},
                      {"x", x},          {"y", ry * ry}, {"z", x * rzx}, {"w", rw * rw}, {"u", ru * ru}};
        MasterParams m;
        m.sigma_p = {s2, s2, s2, s2};
        m.sigma_q = {s2, s2, s2, s2};
        m.a = {rb * s2, rd * s2, re * s2, rb * rd * re * rca * s2};
        m.x = {ry * s2, rw * s2, ru * s2, ry * rw * ru * rzx * s2};
        try {
            for (long n = 0; n <= 3; ++n) {
                const Rational r41 = thm41_residual(ep, n);
                const Rational r1 = thm1_residual(m, n);
                const Rational l41 = thm41_lhs(ep, n), l1 = thm1_lhs(m, n);
                const Rational h41 = thm41_rhs(ep, n), h1 = thm1_rhs(m, n);
                CHECK(r41 == 0);
                CHECK(r1 == 0);
                CHECK(l41 == l1);
                CHECK(h41 == h1);
            }
            ++done;
        } catch (const pole_error&) {
        }
    }
}
