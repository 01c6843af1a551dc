#include <doctest.h>

#include <cmath>

#include "qabel/qpoch.hpp"
#include "qabel/sample.hpp"
#include "qabel/theta.hpp"

using namespace qabel;

namespace {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t s) : state(s) {}
    long next(long lo, long hi) { return lo + static_cast<long>(splitmix64(state) % (hi - lo + 1)); }
    Rational rational(long den = 12) {
        long n = 0;
        while (n == 0) n = next(-den, den);
        return rat(n, next(1, den));
    }
    Rational sigma(long den = 8) {
        for (;;) {
            const Rational v = rational(den);
            if (v * v != 1) return v;
        }
    }
};

// Direct-product oracle, independent of qpoch's implementation path.
Rational poch_oracle(const Rational& a, const Rational& q, long n) {
    Rational r(1);
    for (long k = 0; k < n; ++k) r *= (1 - a * pow_int(q, k));
    return r;
}

}  // namespace

TEST_CASE("qpoch basic values") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) CHECK(qpoch(rng.rational(), rng.rational(), 0) == 1);
    CHECK(poch_oracle(rat(1, 2), rat(1, 2), 2) == rat(3, 8));
    CHECK(qpoch(rat(1, 2), rat(1, 2), 2) == rat(3, 8));
    // reflection value cross-checked against the splitting law with m=1, n=-1
    CHECK(qpoch(rat(1, 4), rat(1, 2), -1) == Rational(2));
    const Rational a = rat(1, 4), q = rat(1, 2);
    CHECK(qpoch(a, q, 0) == qpoch(a, q, 1) * qpoch(a * q, q, -1));
}

TEST_CASE("qpoch splitting law subsumes the reflection rule") {
    Rng rng(11);
    int checked = 0;
    while (checked < 300) {
        const Rational a = rng.rational(), q = rng.sigma();
        const long m = rng.next(-8, 8), n = rng.next(-8, 8);
        try {
            const Rational lhs = qpoch(a, q, m + n);
            const Rational rhs = qpoch(a, q, m) * qpoch(a * pow_int(q, m), q, n);
            CHECK(lhs == rhs);
            ++checked;
        } catch (const pole_error&) {
        }
    }
}

TEST_CASE("qpoch_multi") {
    CHECK(qpoch_multi({}) == 1);
    CHECK(qpoch_multi({{rat(1, 2), rat(1, 2), 2}, {rat(1, 3), rat(1, 2), 1}}) == rat(1, 4));
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        const PochFactor f1{rng.rational(), rng.sigma(), rng.next(0, 5)};
        const PochFactor zero{rng.rational(), rng.sigma(), 0};
        CHECK(qpoch_multi({f1, zero}) == qpoch_multi({f1}));
    }
}

TEST_CASE("dfun") {
    CHECK(dfun({Rational(0)}) == 1);
    CHECK(dfun({Rational(2), Rational(3)}) == 2);
    CHECK(dfun({}) == 1);
}

TEST_CASE("four-term identity and its variant at random points") {
    Rng rng(101);
    int done = 0;
    while (done < 100) {
        const Rational b = rng.rational(), c = rng.rational(), x = rng.rational(), z = rng.rational();
        if (b == 0 || c == 0 || z == 0) continue;
        const Rational lhs = dfun({c * x, x / c, b * z, z / b}) - dfun({b * x, x / b, c * z, z / c});
        const Rational rhs = (z / c) * dfun({b * c, c / b, x * z, x / z});
        CHECK(lhs - rhs == 0);
        const Rational lhs2 = dfun({c * x, x / c, b * z, z / b}) - (z / c) * dfun({b * c, c / b, x * z, x / z});
        CHECK(lhs2 - dfun({b * x, x / b, c * z, z / c}) == 0);
        ++done;
    }
}

TEST_CASE("gamma_k closed forms and antisymmetry") {
    QuadrupleSpec s;
    s.x = {Rational(1), Rational(1), Rational(1), Rational(1)};
    s.sigma = {rat(1, 2), rat(1, 2), rat(1, 3), rat(1, 3)};
    CHECK(gamma_k(s, 2) == 0);

    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        QuadrupleSpec t;
        for (int j = 0; j < 4; ++j) {
            t.x[j] = rng.rational();
            t.sigma[j] = rng.sigma();
        }
        // k = 0: all power factors are 1
        const Rational g0 = (t.x[0] * t.x[1] - t.x[2] * t.x[3]) * (t.x[0] * t.x[2] - t.x[1] * t.x[3]) *
                            (t.x[0] * t.x[3] - t.x[1] * t.x[2]);
        CHECK(gamma_k(t, 0) == g0);
        // Swapping the (x,sigma) pairs in slots 3 and 4 exchanges the second
        // and third factors and leaves the first alone, so gamma_k is
        // invariant under the swap (checked against the spelled-out factors).
        QuadrupleSpec sw = t;
        std::swap(sw.x[2], sw.x[3]);
        std::swap(sw.sigma[2], sw.sigma[3]);
        auto factor = [](const QuadrupleSpec& s, int i, int j, int l, int m, long k) -> Rational {
            return s.x[i] * s.x[j] * pow_int(s.sigma[i] * s.sigma[j], k) -
                   s.x[l] * s.x[m] * pow_int(s.sigma[l] * s.sigma[m], k);
        };
        for (long k = -1; k <= 5; ++k) {
            CHECK(gamma_k(sw, k) == gamma_k(t, k));
            CHECK(factor(sw, 0, 1, 2, 3, k) == factor(t, 0, 1, 2, 3, k));
            CHECK(factor(sw, 0, 2, 1, 3, k) == factor(t, 0, 3, 1, 2, k));
            CHECK(factor(sw, 0, 3, 1, 2, k) == factor(t, 0, 2, 1, 3, k));
        }
    }
}

TEST_CASE("gamma_k vanishes when a factor is tuned to zero") {
    // x1 x2 s1 s2 = x3 x4 s3 s4 makes the first factor vanish at k = 1
    QuadrupleSpec s;
    s.x = {Rational(2), Rational(3), Rational(1), Rational(6)};
    s.sigma = {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    CHECK(gamma_k(s, 1) == 0);
}

TEST_CASE("kl_constants") {
    QuadrupleSpec ones;
    ones.x = {Rational(1), Rational(1), Rational(1), Rational(1)};
    ones.sigma = ones.x;
    CHECK(kl_constants(ones).K == 1);
    CHECK(kl_constants(ones).L == 1);
    QuadrupleSpec s;
    s.x = {Rational(1), Rational(1), Rational(1), Rational(1)};
    s.sigma = {Rational(2), Rational(2), Rational(2), Rational(2)};
    const KL kl = kl_constants(s);
    CHECK(kl.K == 1);
    CHECK(kl.L == 16);
    QuadrupleSpec h;
    h.x = s.x;
    h.sigma = {rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)};
    CHECK(kl_constants(h).L == rat(1, 16));
    CHECK(kl_constants(h).L * kl_constants(h).L == rat(1, 256));
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        QuadrupleSpec t;
        Rational prod(1);
        for (int j = 0; j < 4; ++j) {
            t.x[j] = rng.rational();
            t.sigma[j] = rng.sigma();
            prod *= t.sigma[j] * t.sigma[j];
        }
        const KL k = kl_constants(t);
        CHECK(k.L * k.L == prod);
    }
}

TEST_CASE("theta_trunc zero at x = 1 and Weierstrass residual") {
    const mpfr_prec_t prec = 128;
    const BigFloat q(0.5, prec);
    CHECK(theta_trunc(BigFloat(1.0, prec), q, 5).is_zero());

    auto theta4 = [&](double a, double b, double c, double d, const BigFloat& qq, long terms) {
        return theta_trunc(BigFloat(a, prec), qq, terms) * theta_trunc(BigFloat(b, prec), qq, terms) *
               theta_trunc(BigFloat(c, prec), qq, terms) * theta_trunc(BigFloat(d, prec), qq, terms);
    };
    const double b = 0.7, c = -1.3, x = 0.4, z = 2.1;
    for (double qd : {0.5, -0.5, 0.3}) {
        const BigFloat qq(qd, prec);
        const BigFloat lhs = theta4(c * x, x / c, b * z, z / b, qq, 64) - theta4(b * x, x / b, c * z, z / c, qq, 64);
        const BigFloat rhs = BigFloat(z / c, prec) * theta4(b * c, c / b, x * z, x / z, qq, 64);
        CHECK(abs(lhs - rhs) < 1e-10);
    }

    // doubling the truncation changes theta by < 2^-30 relative at |q| = 1/2
    const BigFloat x0(0.4, prec);
    const BigFloat t32 = theta_trunc(x0, q, 32);
    const BigFloat t64 = theta_trunc(x0, q, 64);
    CHECK(abs(t64 - t32) / abs(t64) < std::ldexp(1.0, -30));

    CHECK(theta_default_terms(1e-12, 0.5) > 32);
    CHECK_THROWS_AS(theta_trunc(x0, BigFloat(1.5, prec), 8), std::domain_error);
}
