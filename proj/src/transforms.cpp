#include "qabel/transforms.hpp"

#include <numeric>

namespace qabel {

namespace {

Rational sq(const Rational& v) { return v * v; }

}  // namespace

MasterParams master_from_point(const ParamPoint& pt) {
    MasterParams m;
    const char* an[4] = {"a1", "a2", "a3", "a4"};
    const char* xn[4] = {"x1", "x2", "x3", "x4"};
    const char* pn[4] = {"p1", "p2", "p3", "p4"};
    const char* qn[4] = {"q1", "q2", "q3", "q4"};
    for (int i = 0; i < 4; ++i) {
        m.a[i] = pt.value(an[i]);
        m.x[i] = pt.value(xn[i]);
        m.sigma_p[i] = pt.sigma(pn[i]);
        m.sigma_q[i] = pt.sigma(qn[i]);
    }
    return m;
}

Rational master_A(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.a_side());
    Rational r(1);
    for (int i = 0; i < 4; ++i) {
        r *= qpoch(sq(m.a[i]), m.p(i), k);
        r = div_exact(r, qpoch(div_exact(kl.K, sq(m.a[i])), div_exact(kl.L, m.p(i)), k));
    }
    return r;
}

Rational master_B(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.x_side());
    Rational r(1);
    for (int i = 0; i < 4; ++i) {
        r *= qpoch(sq(m.x[i]), m.q(i), k);
        r = div_exact(r, qpoch(div_exact(kl.K, sq(m.x[i])), div_exact(kl.L, m.q(i)), k));
    }
    return r;
}

Rational master_B2(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.x_side());
    Rational r = pow_int(Rational(-1), k);
    r = div_exact(r, guard_nonzero(qpoch(kl.K, kl.L, k)));
    Rational Lj(1);
    for (long j = 0; j < k; ++j) {
        const Rational g = gamma_k(m.x_side(), j);
        if (g == 0) throw gamma_zero_error();
        r *= div_exact(kl.K * Lj, g);
        Lj *= kl.L;
    }
    for (int i = 0; i < 4; ++i) r *= qpoch(sq(m.x[i]), m.q(i), k);
    return r;
}

Rational master_A_minus1_closed(const MasterParams& m) {
    const KL kl = kl_constants(m.a_side());
    Rational r(1);
    for (int i = 0; i < 4; ++i) {
        const Rational num = div_exact(kl.L, m.p(i)) - div_exact(kl.K, sq(m.a[i]));
        const Rational den = m.p(i) - sq(m.a[i]);
        r *= div_exact(num, guard_nonzero(den));
    }
    return r;
}

Rational delta_A_closed(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.a_side());
    const Rational KLk = kl.K * pow_int(kl.L, k - 1);
    Rational r = gamma_k(m.a_side(), k - 1) * div_exact(KLk - 1, guard_nonzero(KLk));
    for (int i = 0; i < 4; ++i) {
        r *= qpoch(sq(m.a[i]), m.p(i), k - 1);
        r = div_exact(r, qpoch(div_exact(kl.K, sq(m.a[i])), div_exact(kl.L, m.p(i)), k));
    }
    return r;
}

Rational nabla_B_closed(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.x_side());
    const Rational KLk = kl.K * pow_int(kl.L, k);
    Rational r = gamma_k(m.x_side(), k) * div_exact(1 - KLk, guard_nonzero(KLk));
    for (int i = 0; i < 4; ++i) {
        r *= qpoch(sq(m.x[i]), m.q(i), k);
        r = div_exact(r, qpoch(div_exact(kl.K, sq(m.x[i])), div_exact(kl.L, m.q(i)), k + 1));
    }
    return r;
}

Rational nabla_B2_closed(const MasterParams& m, long k) {
    const KL kl = kl_constants(m.x_side());
    Rational r = pow_int(Rational(-1), k);
    r = div_exact(r, guard_nonzero(sq(kl.K) * pow_int(kl.L, 2 * k) * qpoch(kl.K, kl.L, k + 1)));
    Rational Lj(1);
    for (long j = 0; j <= k; ++j) {
        const Rational g = gamma_k(m.x_side(), j);
        if (g == 0) throw gamma_zero_error();
        r *= div_exact(kl.K * Lj, g);
        Lj *= kl.L;
    }
    const Rational KLk = kl.K * pow_int(kl.L, k);
    for (int i = 0; i < 4; ++i)
        r *= (KLk - sq(m.x[i]) * pow_int(m.q(i), k)) * qpoch(sq(m.x[i]), m.q(i), k);
    return r;
}

// ---------------------------------------------------------------- thm 2.1

Rational thm1_lhs_term(const MasterParams& m, long k) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    const Rational KLk = kla.K * pow_int(kla.L, k - 1);
    Rational t = gamma_k(m.a_side(), k - 1) * div_exact(KLk - 1, guard_nonzero(KLk));
    for (int i = 0; i < 4; ++i) {
        t *= qpoch(sq(m.a[i]), m.p(i), k - 1);
        t = div_exact(t, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), k));
        t *= qpoch(sq(m.x[i]), m.q(i), k);
        t = div_exact(t, qpoch(div_exact(klx.K, sq(m.x[i])), div_exact(klx.L, m.q(i)), k));
    }
    return t;
}

Rational thm1_lhs(const MasterParams& m, long n) {
    Rational s(0);
    for (long k = 0; k < n; ++k) s += thm1_lhs_term(m, k);
    return s;
}

Rational thm1_rhs(const MasterParams& m, long n) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    Rational boundary(1);
    for (int i = 0; i < 4; ++i) {
        boundary *= qpoch(sq(m.a[i]), m.p(i), n - 1);
        boundary = div_exact(boundary, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), n - 1));
        boundary *= qpoch(sq(m.x[i]), m.q(i), n);
        boundary = div_exact(boundary, qpoch(div_exact(klx.K, sq(m.x[i])), div_exact(klx.L, m.q(i)), n));
    }
    Rational s(0);
    for (long k = 0; k < n; ++k) {
        const Rational KLk = klx.K * pow_int(klx.L, k);
        Rational t = gamma_k(m.x_side(), k) * div_exact(1 - KLk, guard_nonzero(KLk));
        for (int i = 0; i < 4; ++i) {
            t *= qpoch(sq(m.x[i]), m.q(i), k);
            t = div_exact(t, qpoch(div_exact(klx.K, sq(m.x[i])), div_exact(klx.L, m.q(i)), k + 1));
            t *= qpoch(sq(m.a[i]), m.p(i), k);
            t = div_exact(t, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), k));
        }
        s += t;
    }
    return boundary - master_A_minus1_closed(m) + s;
}

Rational thm1_residual(const MasterParams& m, long n) { return thm1_lhs(m, n) - thm1_rhs(m, n); }

// ---------------------------------------------------------------- thm 2.2

Rational thm2_lhs(const MasterParams& m, long n) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    Rational s(0);
    for (long k = 0; k < n; ++k) {
        const Rational KLk = kla.K * pow_int(kla.L, k - 1);
        Rational t = pow_int(Rational(-1), k) * gamma_k(m.a_side(), k - 1);
        t = div_exact(t, guard_nonzero(qpoch(klx.K, klx.L, k)));
        t *= div_exact(KLk - 1, guard_nonzero(KLk));
        for (int i = 0; i < 4; ++i) {
            t *= qpoch(sq(m.a[i]), m.p(i), k - 1) * qpoch(sq(m.x[i]), m.q(i), k);
            t = div_exact(t, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), k));
        }
        Rational Lj(1);
        for (long j = 0; j < k; ++j) {
            const Rational g = gamma_k(m.x_side(), j);
            if (g == 0) throw gamma_zero_error();
            t *= div_exact(klx.K * Lj, g);
            Lj *= klx.L;
        }
        s += t;
    }
    return s;
}

Rational thm2_rhs(const MasterParams& m, long n) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    Rational boundary = pow_int(Rational(-1), n);
    boundary = div_exact(boundary, guard_nonzero(qpoch(klx.K, klx.L, n)));
    for (int i = 0; i < 4; ++i) {
        boundary *= qpoch(sq(m.a[i]), m.p(i), n - 1) * qpoch(sq(m.x[i]), m.q(i), n);
        boundary = div_exact(boundary, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), n - 1));
    }
    {
        Rational Lj(1);
        for (long j = 0; j < n; ++j) {
            const Rational g = gamma_k(m.x_side(), j);
            if (g == 0) throw gamma_zero_error();
            boundary *= div_exact(klx.K * Lj, g);
            Lj *= klx.L;
        }
    }
    Rational s(0);
    for (long k = 0; k < n; ++k) {
        Rational t = pow_int(Rational(-1), k);
        t = div_exact(t, guard_nonzero(qpoch(klx.K, klx.L, k + 1)));
        Rational Lj(1);
        for (long j = 0; j <= k; ++j) {
            const Rational g = gamma_k(m.x_side(), j);
            if (g == 0) throw gamma_zero_error();
            t *= div_exact(klx.K * Lj, g);
            Lj *= klx.L;
        }
        const Rational KLk = klx.K * pow_int(klx.L, k);
        for (int i = 0; i < 4; ++i) {
            const Rational xiqik = sq(m.x[i]) * pow_int(m.q(i), k);
            t *= qpoch(sq(m.a[i]), m.p(i), k) * qpoch(sq(m.x[i]), m.q(i), k);
            t *= (1 - div_exact(KLk, guard_nonzero(xiqik)));
            t = div_exact(t, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), k));
        }
        s += t;
    }
    return boundary - master_A_minus1_closed(m) + s;
}

Rational thm2_residual(const MasterParams& m, long n) { return thm2_lhs(m, n) - thm2_rhs(m, n); }

// ---------------------------------------------------------------- thm 2.3

Rational thm3_lhs(const MasterParams& m, long n) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    Rational inner(-1);
    for (long k = 1; k <= n; ++k) {
        const Rational KLk = kla.K * pow_int(kla.L, k - 1);
        Rational t = gamma_k(m.a_side(), k - 1) * div_exact(1 - KLk, guard_nonzero(KLk));
        for (int i = 0; i < 4; ++i) {
            t *= qpoch(sq(m.a[i]), m.p(i), k - 1);
            t = div_exact(t, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), k));
            const Rational L0qi = div_exact(klx.L, m.q(i));
            t *= qpoch(pow_int(L0qi, -n) * div_exact(sq(m.x[i]), klx.K), L0qi, k);
            t = div_exact(t, qpoch(div_exact(pow_int(m.q(i), -n), sq(m.x[i])), m.q(i), k));
        }
        inner += t;
    }
    Rational pre(1);
    for (int i = 0; i < 4; ++i) {
        pre *= qpoch(sq(m.x[i]), m.q(i), n + 1);
        pre = div_exact(pre, qpoch(div_exact(klx.K, sq(m.x[i])), div_exact(klx.L, m.q(i)), n + 1));
    }
    return pre * inner;
}

Rational thm3_rhs(const MasterParams& m, long n) {
    const KL kla = kl_constants(m.a_side());
    const KL klx = kl_constants(m.x_side());
    Rational inner(-1);
    for (long k = 0; k <= n; ++k) {
        const Rational KLk = klx.K * pow_int(klx.L, k);
        Rational t = gamma_k(m.x_side(), k) * div_exact(1 - KLk, guard_nonzero(KLk));
        for (int i = 0; i < 4; ++i) {
            t *= qpoch(sq(m.x[i]), m.q(i), k);
            t = div_exact(t, qpoch(div_exact(klx.K, sq(m.x[i])), div_exact(klx.L, m.q(i)), k + 1));
            const Rational Lpi = div_exact(kla.L, m.p(i));
            t *= qpoch(pow_int(Lpi, 1 - n) * div_exact(sq(m.a[i]), kla.K), Lpi, k);
            t = div_exact(t, qpoch(div_exact(pow_int(m.p(i), 1 - n), sq(m.a[i])), m.p(i), k));
        }
        inner += t;
    }
    Rational pre(1);
    for (int i = 0; i < 4; ++i) {
        pre *= qpoch(sq(m.a[i]), m.p(i), n);
        pre = div_exact(pre, qpoch(div_exact(kla.K, sq(m.a[i])), div_exact(kla.L, m.p(i)), n));
    }
    return pre * inner;
}

Rational thm3_residual(const MasterParams& m, long n) { return thm3_lhs(m, n) - thm3_rhs(m, n); }

Rational thm3_derivation_residual(const MasterParams& m, long n) {
    // alpha_k = Delta A_k and beta_k = Nabla B_k in closed form.
    Rational s1(0);
    for (long k = 1; k <= n; ++k) s1 += delta_A_closed(m, k) * master_B(m, n + 1 - k);
    Rational s2(0);
    for (long k = 0; k <= n; ++k) s2 += nabla_B_closed(m, k) * master_A(m, n - k);
    return s1 + s2 - (master_A(m, n) - master_B(m, n + 1));
}

// ---------------------------------------------------------------- thm 4.1

long ExponentParams::common_denominator() const {
    long d = 1;
    for (const auto& e : r) d = std::lcm(d, static_cast<long>(e.get_den().get_si()));
    for (const auto& e : s) d = std::lcm(d, static_cast<long>(e.get_den().get_si()));
    return d;
}

Rational ExponentParams::base() const { return pow_int(base_sigma, 2 * common_denominator()); }

Rational ExponentParams::qpow(const Rational& e) const {
    const Rational scaled = e * 2 * common_denominator();
    if (scaled.get_den() != 1) throw std::logic_error("thm41: non-integral rescaled exponent");
    return pow_int(base_sigma, scaled.get_num().get_si());
}

namespace {

struct Thm41Ctx {
    const ExponentParams& ep;
    Rational q;
    Rational a, b, c, d, e, x, y, z, w, u;
    Rational rsum, ssum;
    std::array<Rational, 4> upper_p, lower_p, upper_q, lower_q;

    explicit Thm41Ctx(const ExponentParams& p) : ep(p) {
        q = p.base();
        a = p.scalars.at("a"); b = p.scalars.at("b"); c = p.scalars.at("c");
        d = p.scalars.at("d"); e = p.scalars.at("e"); x = p.scalars.at("x");
        y = p.scalars.at("y"); z = p.scalars.at("z"); w = p.scalars.at("w");
        u = p.scalars.at("u");
        rsum = p.r[0] + p.r[1] + p.r[2] + p.r[3];
        ssum = p.s[0] + p.s[1] + p.s[2] + p.s[3];
        upper_p = {b * q, d * q, e * q, div_exact(b * c * c * d * e * q, guard_nonzero(a * a))};
        lower_p = {div_exact(c * d * e * q, guard_nonzero(a)), div_exact(b * c * e * q, a),
                   div_exact(b * c * d * q, a), div_exact(a * q, guard_nonzero(c))};
        upper_q = {y * q, w * q, u * q, div_exact(y * z * z * w * u * q, guard_nonzero(x * x))};
        lower_q = {div_exact(z * w * u * q, guard_nonzero(x)), div_exact(y * z * u * q, x),
                   div_exact(y * z * w * q, x), div_exact(x * q, guard_nonzero(z))};
    }

    Rational p_ratio(long knum, long kden) const {
        Rational r(1);
        for (int i = 0; i < 4; ++i) {
            r *= qpoch(upper_p[i], ep.qpow(2 * ep.r[i]), knum);
            r = div_exact(r, qpoch(lower_p[i], ep.qpow(rsum - 2 * ep.r[i]), kden));
        }
        return r;
    }

    Rational q_ratio(long knum, long kden) const {
        Rational r(1);
        for (int i = 0; i < 4; ++i) {
            r *= qpoch(upper_q[i], ep.qpow(2 * ep.s[i]), knum);
            r = div_exact(r, qpoch(lower_q[i], ep.qpow(ssum - 2 * ep.s[i]), kden));
        }
        return r;
    }
};

}  // namespace

Rational thm41_lhs(const ExponentParams& ep, long n) {
    const Thm41Ctx ctx(ep);
    const auto& r = ep.r;
    Rational s(0);
    for (long k = 0; k < n; ++k) {
        Rational t = div_exact(ctx.a, ctx.c) *
                     dfun({div_exact(ctx.c * ctx.e, ctx.a) * ep.qpow((r[2] + r[3] - r[0] - r[1]) * (k - 1)),
                           div_exact(ctx.b * ctx.c, ctx.a) * ep.qpow((r[0] + r[3] - r[1] - r[2]) * (k - 1)),
                           div_exact(ctx.c * ctx.d, ctx.a) * ep.qpow((r[1] + r[3] - r[0] - r[2]) * (k - 1)),
                           div_exact(ctx.b * ctx.c * ctx.d * ctx.e, ctx.a) * ep.qpow(ctx.rsum * (k - 1) + 2)});
        t *= ep.qpow((ctx.rsum - 2 * r[3]) * (k - 1) + 1);
        t *= ctx.p_ratio(k - 1, k) * ctx.q_ratio(k, k);
        s += t;
    }
    return s;
}

Rational thm41_a_minus1_closed(const ExponentParams& ep) {
    const Thm41Ctx ctx(ep);
    Rational r(1);
    for (int i = 0; i < 4; ++i) {
        const Rational num = ep.qpow(ctx.rsum - 2 * ep.r[i]) - ctx.lower_p[i];
        const Rational den = ep.qpow(2 * ep.r[i]) - ctx.upper_p[i];
        r *= div_exact(num, guard_nonzero(den));
    }
    return r;
}

Rational thm41_a_seq(const ExponentParams& ep, long k) {
    const Thm41Ctx ctx(ep);
    return ctx.p_ratio(k, k);
}

Rational thm41_rhs(const ExponentParams& ep, long n) {
    const Thm41Ctx ctx(ep);
    const auto& sv = ep.s;
    Rational rhs = ctx.p_ratio(n - 1, n - 1) * ctx.q_ratio(n, n) - thm41_a_minus1_closed(ep);
    Rational s(0);
    for (long k = 0; k < n; ++k) {
        Rational t = div_exact(ctx.x, ctx.z) *
                     dfun({div_exact(ctx.y * ctx.z, ctx.x) * ep.qpow((sv[0] + sv[3] - sv[1] - sv[2]) * k),
                           div_exact(ctx.z * ctx.u, ctx.x) * ep.qpow((sv[2] + sv[3] - sv[0] - sv[1]) * k),
                           div_exact(ctx.z * ctx.w, ctx.x) * ep.qpow((sv[1] + sv[3] - sv[0] - sv[2]) * k),
                           div_exact(ctx.y * ctx.z * ctx.w * ctx.u, ctx.x) * ep.qpow(ctx.ssum * k + 2)});
        t *= ep.qpow((ctx.ssum - 2 * sv[3]) * k + 1);
        t *= ctx.q_ratio(k, k + 1) * ctx.p_ratio(k, k);
        s += t;
    }
    return rhs - s;
}

Rational thm41_residual(const ExponentParams& ep, long n) { return thm41_lhs(ep, n) - thm41_rhs(ep, n); }

}  // namespace qabel
