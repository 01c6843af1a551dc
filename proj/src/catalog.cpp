#include "qabel/catalog.hpp"

#include <algorithm>

#include "qabel/phi.hpp"
#include "qabel/qpoch.hpp"
#include "qabel/transforms.hpp"

namespace qabel {

const char* kind_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::finite: return "finite";
        case IdentityKind::infinite: return "infinite";
        case IdentityKind::recurrence: return "recurrence";
    }
    return "?";
}

Rational Monomial::eval(const ParamPoint& pt) const {
    Rational r = coef;
    for (const auto& [sym, e] : powers) {
        const Rational v = pt.values.count(sym) ? pt.value(sym) : pt.base(sym);
        r *= pow_int(v, e);
    }
    return r;
}

std::string Monomial::str() const {
    std::string s = coef.get_str();
    for (const auto& [sym, e] : powers) {
        s += "*" + sym;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

Monomial mono(const Rational& coef, std::initializer_list<std::pair<const char*, int>> pows) {
    Monomial m;
    m.coef = coef;
    for (const auto& [s, e] : pows) m.powers.emplace_back(s, e);
    return m;
}

Monomial mono(std::initializer_list<std::pair<const char*, int>> pows) { return mono(Rational(1), pows); }

bool Constraint::holds(const ParamPoint& pt) const {
    switch (kind) {
        case Kind::nonzero: return lhs.eval(pt) != 0;
        case Kind::neq: return lhs.eval(pt) != rhs.eval(pt);
        case Kind::abs_lt: return abs_rat(lhs.eval(pt)) < rhs.coef;
    }
    return false;
}

std::string Constraint::str() const {
    switch (kind) {
        case Kind::nonzero: return "nonzero(" + lhs.str() + ")";
        case Kind::neq: return "neq(" + lhs.str() + "," + rhs.str() + ")";
        case Kind::abs_lt: return "abs_lt(" + lhs.str() + "," + rhs.coef.get_str() + ")";
    }
    return "?";
}

Constraint nonzero(Monomial m) { return {Constraint::Kind::nonzero, std::move(m), {}}; }
Constraint neq(Monomial a, Monomial b) { return {Constraint::Kind::neq, std::move(a), std::move(b)}; }
Constraint abs_lt(Monomial m, const Rational& bound) {
    Constraint c{Constraint::Kind::abs_lt, std::move(m), {}};
    c.rhs.coef = bound;
    return c;
}

Rational IdentityEntry::residual(const ParamPoint& pt, long n) const {
    if (!lhs || !rhs) throw std::logic_error("entry '" + id + "' has no exact evaluators");
    if (n < n_min) throw range_error(id + ": n below recurrence offset " + std::to_string(n_min));
    return lhs(pt, n) - rhs(pt, n);
}

namespace {

using R = Rational;

R P(std::initializer_list<R> args, const R& q, long n) { return qpoch(args, q, n); }

R dv(const R& a, const R& b) { return div_exact(a, b); }

// ----------------------------------------------------------------- sec. 3.1

// a0 of Eq. (chi0) and a1 of Eq. (chi1).
R chi0(const R& a, const R& b, const R& c, const R& d, const R& e) {
    R num = a * (1 - dv(b * c, a)) * (1 - dv(c * d, a)) * (1 - dv(c * e, a)) * (1 - dv(b * c * d * e, a));
    R den = c * (1 - dv(b * c * d, a)) * (1 - dv(b * c * e, a)) * (1 - dv(c * d * e, a)) * (1 - dv(a, c));
    return dv(num, guard_nonzero(den));
}

R chi1(const R& x, const R& y, const R& z, const R& w, const R& u) {
    R num = x * (1 - dv(y * z, x)) * (1 - dv(z * w, x)) * (1 - dv(z * u, x)) * (1 - dv(y * z * w * u, x));
    R den = z * (1 - y) * (1 - w) * (1 - u) * (1 - dv(y * z * z * w * u, x * x));
    return dv(num, guard_nonzero(den));
}

// The eight Pochhammer argument blocks of Eq. (rogerspsi65).
R rp65_pnum(const R& a, const R& b, const R& c, const R& d, const R& e, const R& p, long k) {
    return P({b, d, e, dv(b * c * c * d * e, a * a)}, p, k);
}
R rp65_pden_shift(const R& a, const R& b, const R& c, const R& d, const R& e, const R& p, long k) {
    return P({dv(a * p, c), dv(b * c * e * p, a), dv(b * c * d * p, a), dv(c * d * e * p, a)}, p, k);
}
R rp65_pden(const R& a, const R& b, const R& c, const R& d, const R& e, const R& p, long k) {
    return P({dv(a, c), dv(b * c * e, a), dv(b * c * d, a), dv(c * d * e, a)}, p, k);
}
R rp65_qnum_shift(const R& x, const R& y, const R& z, const R& w, const R& u, const R& q, long k) {
    return P({y * q, w * q, u * q, dv(y * z * z * w * u * q, x * x)}, q, k);
}
R rp65_qnum(const R& x, const R& y, const R& z, const R& w, const R& u, const R& q, long k) {
    return P({y, w, u, dv(y * z * z * w * u, x * x)}, q, k);
}
R rp65_qden(const R& x, const R& y, const R& z, const R& w, const R& u, const R& q, long k) {
    return P({dv(x * q, z), dv(z * w * u * q, x), dv(y * z * u * q, x), dv(y * z * w * q, x)}, q, k);
}

// --------------------------------------------------- recurrence families

// F_n(a) of Theorem 3.2 (sum of Eq. (ooooo) truncated at n terms).
R quad_F(const R& a, const R& b, const R& c, const R& d, const R& q, long n) {
    R s(0);
    const R q2 = q * q;
    for (long k = 0; k < n; ++k) {
        R t = (1 - a * b * c * pow_int(q, 3 * k - 1)) * pow_int(q, k);
        t *= P({dv(a * b * c, q), d, dv(q, d)}, q, k) * P({dv(a * c, q), dv(a * b, q), b * c * q}, q2, k);
        t = dv(t, P({q2, dv(a * b * c * q, d), a * b * c * d}, q2, k) * P({dv(a, q), b * q, c * q}, q, k));
        s += t;
    }
    return s;
}

R quad_C(const R& a, const R& b, const R& c, const R& d, const R& q) {
    R num = (1 - dv(a, q)) * (1 - a) * (1 - dv(a * b * c * q, d)) * (1 - a * b * c * d);
    R den = (1 - a * b * c) * (1 - dv(a * b * c, q)) * (1 - dv(a, d)) * (1 - dv(a * d, q));
    return dv(num, guard_nonzero(den));
}

R quad_B(const R& a, const R& b, const R& c, const R& d, const R& q, long n) {
    const R q2 = q * q;
    R t = a * (1 - dv(pow_int(q, n + 1), a)) * (1 - a * pow_int(q, n));
    t = dv(t, guard_nonzero((1 - pow_int(q, 2 * n)) * (1 - a * b * c) * (1 - dv(a, d)) * (q - a * d)));
    t *= P({a * b * c, d, dv(q, d)}, q, n);
    t = dv(t, P({q2, dv(a * b * c * q * q2, d), a * b * c * d * q2}, q2, n - 1));
    t *= P({a * c * q, a * b * q, b * c * q}, q2, n);
    t = dv(t, P({a * q, b * q, c * q}, q, n));
    return t;
}

// prod_{i=0}^{k} 1/C(a q^{2i}) in the closed Pochhammer form printed after
// the iterated solution.
R quad_invC_closed(const R& a, const R& b, const R& c, const R& d, const R& q, long k) {
    const R q2 = q * q;
    R num = qpoch(dv(a * b * c, q), q, 2 * k + 2) * qpoch(dv(a, d), q2, k + 1) * qpoch(dv(a * d, q), q2, k + 1);
    R den = qpoch(dv(a, q), q, 2 * k + 2) * qpoch(dv(a * b * c * q, d), q2, k + 1) * qpoch(a * b * c * d, q2, k + 1);
    return dv(num, guard_nonzero(den));
}

// G_n(a,c) of the cubic transformation, Eq. (gabc).
R cubic_G(const R& a, const R& b, const R& c, const R& q, long n) {
    R s(0);
    const R q3 = q * q * q;
    for (long k = 0; k < n; ++k) {
        R t = dv((a * pow_int(q, 4 * k) - 1) * pow_int(q, k), guard_nonzero(R(1) - a));
        t *= P({a, b}, q, k);
        t = dv(t, P({dv(a * q, c), dv(c * q, a * b)}, q, k));
        t *= P({c, dv(a * a * b, c)}, q3, k);
        t = dv(t, P({q3, dv(q3 * a, b)}, q3, k));
        t *= qpoch(dv(q, b), q, 2 * k);
        t = dv(t, qpoch(a * b, q, 2 * k));
        s += t;
    }
    return s;
}

// G_n(a,b) of the quartic transformation, Eq. (functiongab).
R quartic_G(const R& a, const R& b, const R& q, long n) {
    R s(0);
    const R q2 = q * q, q3 = q * q * q, q4 = q2 * q2;
    for (long k = 0; k < n; ++k) {
        R t = (1 - a * a * b * b * pow_int(q, 5 * k - 2)) * pow_int(q, k);
        t *= P({a, b}, q, k) * qpoch(dv(a * a * b * b, q2), q4, k);
        t = dv(t, P({a * b * b * q2, a * a * b * q2}, q4, k) * qpoch(q, q, k));
        t *= P({a * b * q, dv(a * b, q), a * b}, q3, k);
        t = dv(t, P({a * b * q, a * b, dv(a * b, q)}, q2, k));
        s += t;
    }
    return s;
}

// G_n(a,c) of Chu's quintic, Eq. (chufun); sums k = 0..n.
R quintic_G(const R& a, const R& c, const R& q, long n) {
    R s(0);
    const R q5 = pow_int(q, 5);
    for (long k = 0; k <= n; ++k) {
        R t = (1 - pow_int(a, 3) * pow_int(q, 6 * k - 1)) * pow_int(q, k);
        t *= P({a * a * c, dv(pow_int(a, 3), c)}, q5, k);
        t = dv(t, P({c, dv(a, c)}, q, k));
        t *= P({q * a, dv(a, q)}, q, 2 * k);
        t = dv(t, qpoch(q * a * a, q, 4 * k));
        s += t;
    }
    return s;
}

// tau(k) of Eq. (xrma-2): the assembled exponent -k(k-1)/2 is an integer
// power of the half-base sigma.
R zzzz_tau(const R& a, const R& b, const R& c, const R& sigma, long k) {
    const R q = sigma * sigma;
    const R den = (q - a * b) * (q - a * c);
    return dv(pow_int(-a, k) * pow_int(sigma, -k * (k - 1)), guard_nonzero(pow_int(den, k)));
}

// T(k) of Eq. (xinrong-tomorrow444).
R t444_T(const R& q, long k) {
    const R q2 = q * q;
    const R r = dv(qpoch(q, q2, k), guard_nonzero(qpoch(q2, q2, k)));
    return pow_int(R(-1), k) * pow_int(q, -k * (k - 1)) * r * r;
}

// ------------------------------------------------------------ entry builders

IdentityEntry make_thm1() {
    IdentityEntry e;
    e.id = "thm1";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 2.1, Eq. (pppppp)";
    e.symbols = {{"a1", "a2", "a3", "a4", "x1", "x2", "x3", "x4"},
                 {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q4"}};
    e.default_n_max = 5;
    e.default_trials = 25;
    e.lhs = [](const ParamPoint& pt, long n) -> Rational { return thm1_lhs(master_from_point(pt), n); };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational { return thm1_rhs(master_from_point(pt), n); };
    e.extra_residuals.emplace_back("k0-summand-vs-telescoped-boundary", [](const ParamPoint& pt, long) -> Rational {
        const MasterParams m = master_from_point(pt);
        return thm1_lhs_term(m, 0) - (master_A(m, 0) - master_A(m, -1)) * master_B(m, 0);
    });
    return e;
}

IdentityEntry make_thm2() {
    IdentityEntry e;
    e.id = "thm2";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 2.2, Eq. (identityfinal-II)";
    e.symbols = {{"a1", "a2", "a3", "a4", "x1", "x2", "x3", "x4"},
                 {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q4"}};
    e.default_n_max = 5;
    e.default_trials = 25;
    e.lhs = [](const ParamPoint& pt, long n) -> Rational { return thm2_lhs(master_from_point(pt), n); };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational { return thm2_rhs(master_from_point(pt), n); };
    return e;
}

IdentityEntry make_thm3() {
    IdentityEntry e;
    e.id = "thm3";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 2.3, Eq. (alpha-beta-new)";
    e.symbols = {{"a1", "a2", "a3", "a4", "x1", "x2", "x3", "x4"},
                 {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q4"}};
    e.default_n_max = 4;
    e.default_trials = 25;
    e.lhs = [](const ParamPoint& pt, long n) -> Rational { return thm3_lhs(master_from_point(pt), n); };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational { return thm3_rhs(master_from_point(pt), n); };
    e.extra_residuals.emplace_back("derivation-form", [](const ParamPoint& pt, long n) -> Rational {
        return thm3_derivation_residual(master_from_point(pt), n);
    });
    return e;
}

ExponentParams thm41_params(const ParamPoint& pt, const std::array<R, 4>& r, const std::array<R, 4>& s) {
    ExponentParams ep;
    ep.r = r;
    ep.s = s;
    ep.base_sigma = pt.sigma("t");
    for (const char* k : {"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}) ep.scalars[k] = pt.value(k);
    return ep;
}

IdentityEntry make_thm41() {
    IdentityEntry e;
    e.id = "thm41";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 4.1, Eq. (pppppp-generalid)";
    e.symbols = {{"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}, {"t"}};
    e.default_n_max = 4;
    e.default_trials = 10;
    const R h = rat(1, 2), o = R(1), th = rat(3, 2);
    // The three acceptance exponent patterns.
    static const std::array<std::array<R, 4>, 3> RP = {{{h, h, h, h}, {h, h, o, o}, {h, h, th, th}}};
    static const std::array<std::array<R, 4>, 3> SP = {{{h, h, h, h}, {h, o, o, o}, {h, h, th, th}}};
    e.lhs = [](const ParamPoint& pt, long n) -> Rational { return thm41_lhs(thm41_params(pt, RP[0], SP[0]), n); };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational { return thm41_rhs(thm41_params(pt, RP[0], SP[0]), n); };
    e.extra_residuals.emplace_back("pattern-(1/2,1/2,1,1)x(1/2,1,1,1)", [](const ParamPoint& pt, long n) -> Rational {
        return thm41_residual(thm41_params(pt, RP[1], SP[1]), n);
    });
    e.extra_residuals.emplace_back("pattern-(1/2,1/2,3/2,3/2)", [](const ParamPoint& pt, long n) -> Rational {
        return thm41_residual(thm41_params(pt, RP[2], SP[2]), n);
    });
    e.extra_residuals.emplace_back("a-minus-1-closed-form", [](const ParamPoint& pt, long) -> Rational {
        R r(0);
        for (int i = 0; i < 3; ++i) {
            const ExponentParams ep = thm41_params(pt, RP[i], SP[i]);
            r += thm41_a_minus1_closed(ep) - thm41_a_seq(ep, -1);
        }
        return r;
    });
    return e;
}

IdentityEntry make_finalnew2() {
    IdentityEntry e;
    e.id = "c3.1-finalnew2";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (pppppp-1-finalnew-2)";
    e.symbols = {{"x1", "x2", "x3", "x4"}, {"q1", "q2", "q3", "q4"}};
    e.parent_id = "thm1";
    e.substitution_note = "p_i = q_i, a_i = x_i sqrt(q_i); scale prod (1-x_i^2)/(1-K0/x_i^2)";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        QuadrupleSpec xs;
        for (int i = 0; i < 4; ++i) {
            xs.x[i] = pt.value("x" + std::to_string(i + 1));
            xs.sigma[i] = pt.sigma("q" + std::to_string(i + 1));
        }
        const KL kl = kl_constants(xs);
        R s(0);
        for (long k = 0; k < n; ++k) {
            const R g = gamma_k(xs, k);
            R p1(1), p2(1), core(1);
            for (int i = 0; i < 4; ++i) {
                const R xi2 = xs.x[i] * xs.x[i];
                const R qi = xs.sigma[i] * xs.sigma[i];
                p1 *= 1 - dv(kl.K, xi2) * pow_int(dv(kl.L, qi), k);
                p2 *= 1 - xi2 * pow_int(qi, k);
                core *= dv(qpoch(xi2, qi, k), qpoch(dv(kl.K, xi2), dv(kl.L, qi), k + 1));
            }
            const R KLk = kl.K * pow_int(kl.L, k);
            s += g * (p1 + p2) * dv(KLk - 1, guard_nonzero(KLk)) * core * core;
        }
        return s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        QuadrupleSpec xs;
        for (int i = 0; i < 4; ++i) {
            xs.x[i] = pt.value("x" + std::to_string(i + 1));
            xs.sigma[i] = pt.sigma("q" + std::to_string(i + 1));
        }
        const KL kl = kl_constants(xs);
        R b(1);
        for (int i = 0; i < 4; ++i) {
            const R xi2 = xs.x[i] * xs.x[i];
            const R qi = xs.sigma[i] * xs.sigma[i];
            b *= dv(qpoch(xi2, qi, n), qpoch(dv(kl.K, xi2), dv(kl.L, qi), n));
        }
        return b * b - 1;
    };
    return e;
}

IdentityEntry make_rogerspsi65() {
    IdentityEntry e;
    e.id = "c3.2-rogerspsi65";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (rogerspsi65) with Eqs. (chi0)/(chi1)";
    e.symbols = {{"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}, {"p", "q"}};
    e.parent_id = "thm1";
    e.substitution_note =
        "p_i = p, a_i^2 = (bp,dp,ep,bc^2dep/a^2); q_i = q, x_i^2 = (yq,wq,uq,yz^2wuq/x^2); "
        "scale (1-b)(1-d)(1-e)(1-bc^2de/a^2)/((1-bcd/a)(1-bce/a)(1-cde/a)(1-a/c))";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        const R beta = dv(b * c * d * ee, a);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R t = dv((1 - beta * pow_int(p, 2 * k)) * pow_int(p, k), guard_nonzero(R(1) - beta));
            t *= dv(rp65_pnum(a, b, c, d, ee, p, k), rp65_pden_shift(a, b, c, d, ee, p, k));
            t *= dv(rp65_qnum_shift(x, y, z, w, u, q, k), rp65_qden(x, y, z, w, u, q, k));
            s += t;
        }
        return chi0(a, b, c, d, ee) * s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        R t1 = dv(rp65_pnum(a, b, c, d, ee, p, n), rp65_pden(a, b, c, d, ee, p, n));
        t1 *= dv(rp65_qnum_shift(x, y, z, w, u, q, n), rp65_qden(x, y, z, w, u, q, n));
        const R gamma = dv(y * z * w * u, x);
        R s(0);
        for (long k = 1; k <= n; ++k) {
            R t = dv((1 - gamma * pow_int(q, 2 * k)) * pow_int(q, k), guard_nonzero(R(1) - gamma));
            t *= dv(rp65_qnum(x, y, z, w, u, q, k), rp65_qden(x, y, z, w, u, q, k));
            t *= dv(rp65_pnum(a, b, c, d, ee, p, k), rp65_pden(a, b, c, d, ee, p, k));
            s += t;
        }
        return t1 - 1 - chi1(x, y, z, w, u) * s;
    };
    return e;
}

IdentityEntry make_ex25() {
    IdentityEntry e;
    e.id = "ex3.3-gr-ex2.5";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Gasper-Rahman Ex. 2.5 sum";
    e.symbols = {{"y", "w", "u"}, {"q"}};
    e.parent_id = "c3.2-rogerspsi65";
    e.substitution_note = "a = bc, x = z; scale 1";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), q = pt.base("q");
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv((1 - y * w * u * pow_int(q, 2 * k)) * pow_int(q, k), guard_nonzero(R(1) - y * w * u));
            t *= dv(P({y, w, u, y * w * u}, q, k), P({q, w * u * q, y * u * q, y * w * q}, q, k));
            s += t;
        }
        return s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), q = pt.base("q");
        return dv(P({y * q, w * q, u * q, y * w * u * q}, q, n), P({q, w * u * q, y * u * q, y * w * q}, q, n));
    };
    return e;
}

IdentityEntry make_imp34() {
    IdentityEntry e;
    e.id = "eq-important-3.4";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (important-3.4)";
    e.symbols = {{"a", "b", "c", "d", "e", "y", "u", "z"}, {"p", "q"}};
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R y = pt.value("y"), u = pt.value("u"), z = pt.value("z");
        const R p = pt.base("p"), q = pt.base("q");
        const R beta = dv(b * c * d * ee, a);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R t = dv(1 - beta * pow_int(p, 2 * k), guard_nonzero(R(1) - beta));
            t *= dv(rp65_pnum(a, b, c, d, ee, p, k), rp65_pden_shift(a, b, c, d, ee, p, k));
            t *= dv(P({y * q, u * q}, q, k), P({z * u * q, y * z * q}, q, k));
            t *= pow_int(p * z, k);
            s += t;
        }
        return chi0(a, b, c, d, ee) * s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R y = pt.value("y"), u = pt.value("u"), z = pt.value("z");
        const R p = pt.base("p"), q = pt.base("q");
        R t1 = dv(rp65_pnum(a, b, c, d, ee, p, n), rp65_pden(a, b, c, d, ee, p, n));
        t1 *= dv(P({y * q, u * q}, q, n), P({z * u * q, y * z * q}, q, n)) * pow_int(z, n);
        const R den = guard_nonzero(z * (1 - y) * (1 - u));
        const R t2 = dv((1 - y * z) * (1 - u * z), den);
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv(1 - y * z * u * pow_int(q, 2 * k), guard_nonzero(R(1) - y * z * u));
            t *= dv(P({y, u}, q, k), P({z * u * q, y * z * q}, q, k));
            t *= dv(rp65_pnum(a, b, c, d, ee, p, k), rp65_pden(a, b, c, d, ee, p, k)) * pow_int(z, k);
            s += t;
        }
        return t1 - t2 + dv((1 - z) * (1 - y * z * u), den) * s;
    };
    return e;
}

IdentityEntry make_imp37() {
    IdentityEntry e;
    e.id = "eq-important-3.7";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (important-3.7)";
    e.symbols = {{"a", "b", "c", "d", "x", "y", "z", "w", "u"}, {"p", "q"}};
    e.parent_id = "c3.2-rogerspsi65";
    e.substitution_note = "e = 0 (plain substitution, exact); scale 1";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        const R pre = dv(a * (1 - dv(b * c, a)) * (1 - dv(c * d, a)),
                         guard_nonzero(c * (1 - dv(b * c * d, a)) * (1 - dv(a, c))));
        R s(0);
        for (long k = 0; k < n; ++k) {
            R t = dv(P({b, d}, p, k), P({dv(a * p, c), dv(b * c * d * p, a)}, p, k)) * pow_int(p, k);
            t *= dv(rp65_qnum_shift(x, y, z, w, u, q, k), rp65_qden(x, y, z, w, u, q, k));
            s += t;
        }
        return pre * s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        R t1 = dv(P({b, d}, p, n), P({dv(a, c), dv(b * c * d, a)}, p, n));
        t1 *= dv(rp65_qnum_shift(x, y, z, w, u, q, n), rp65_qden(x, y, z, w, u, q, n));
        const R gamma = dv(y * z * w * u, x);
        R s(0);
        for (long k = 1; k <= n; ++k) {
            R t = dv((1 - gamma * pow_int(q, 2 * k)) * pow_int(q, k), guard_nonzero(R(1) - gamma));
            t *= dv(rp65_qnum(x, y, z, w, u, q, k), rp65_qden(x, y, z, w, u, q, k));
            t *= dv(P({b, d}, p, k), P({dv(a, c), dv(b * c * d, a)}, p, k));
            s += t;
        }
        return t1 - 1 - chi1(x, y, z, w, u) * s;
    };
    return e;
}

// ----------------------------------------------------------------- sec. 3.2

IdentityEntry make_zzzz() {
    IdentityEntry e;
    e.id = "t3.4-zzzz";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 3.4, Eq. (zzzz) with Eqs. (xrma-1)/(xrma-2)";
    e.symbols = {{"a", "b", "c", "d"}, {"q"}};
    e.parent_id = "thm2";
    e.substitution_note =
        "p_1=p_2=q, p_3=p_4=q^2, a_i^2 = (dq,q^2/d,bcq^3,a^2bcq^2); q_i likewise, "
        "x_i^2 = (abc,q^2/a,acq,abq); scale (1-d)(1-q/d)(1-a^2bc)(1-bcq)/((1-a)(1-abcq/d)(1-abcd))";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R sg = pt.sigma("q");
        const R q = sg * sg, q2 = q * q, q3 = q2 * q;
        const R C0 = dv((1 - dv(a, d)) * (q - a * d) * (1 - a * b * c),
                        guard_nonzero(a * (1 - dv(a * b * c * q, d)) * (1 - a * b * c * d)));
        R s(0);
        for (long k = 0; k < n; ++k) {
            R t = dv((1 - a * b * c * pow_int(q, 3 * k + 1)) * pow_int(q, k), guard_nonzero(R(1) - a));
            t *= zzzz_tau(a, b, c, sg, k);
            t *= P({d, dv(q, d)}, q, k) * P({b * c * q, a * a * b * c}, q2, k);
            t = dv(t, P({dv(a * b * c * q3, d), a * b * c * d * q2}, q2, k) * qpoch(a * q, q, k));
            t *= qpoch(a * b * c * q, q, k) * P({a * c * q, a * b * q}, q2, k);
            t = dv(t, qpoch(a * b * c * q2, q3, k) * qpoch(a, q, k));
            s += t;
        }
        return C0 * s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R sg = pt.sigma("q");
        const R q = sg * sg, q2 = q * q, q3 = q2 * q;
        R t1 = zzzz_tau(a, b, c, sg, n) * (1 - dv(pow_int(q, n + 1), guard_nonzero(a)));
        t1 *= P({d, dv(q, d)}, q, n) * P({b * c * q, a * a * b * c}, q2, n);
        t1 = dv(t1, P({dv(a * b * c * q, d), a * b * c * d}, q2, n) * qpoch(a, q, n));
        t1 *= qpoch(a * b * c, q, n) * P({a * c * q, a * b * q}, q2, n);
        t1 = dv(t1, qpoch(a * b * c * q2, q3, n) * qpoch(a, q, n));
        R s(0);
        for (long k = 1; k <= n; ++k) {
            R t = (1 - pow_int(q, 2 * k)) * (1 - a * a * b * c * pow_int(q, 2 * k - 2)) *
                  (1 - b * pow_int(q, k)) * (1 - c * pow_int(q, k));
            t = dv(t, guard_nonzero((1 - dv(a * b * c, q)) * (1 - dv(a * c, q)) * (1 - dv(a * b, q))));
            t *= zzzz_tau(a, b, c, sg, k);
            t *= P({d, dv(q, d)}, q, k) * P({b * c * q, a * a * b * c}, q2, k);
            t = dv(t, P({dv(a * b * c * q, d), a * b * c * d}, q2, k) * qpoch(a, q, k));
            t *= qpoch(dv(a * b * c, q), q, k) * P({dv(a * c, q), dv(a * b, q)}, q2, k);
            t = dv(t, qpoch(a * b * c * q2, q3, k) * qpoch(a, q, k));
            s += t;
        }
        return t1 - (1 - dv(q, a)) - s;
    };
    return e;
}

IdentityEntry make_t333() {
    IdentityEntry e;
    e.id = "eq-xinrong-tomorrow333";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (xinrong-tomorrow333)";
    e.symbols = {{"a", "d"}, {"q"}};
    e.parent_id = "t3.4-zzzz";
    e.substitution_note = "b = c = 0 (plain substitution); scale 1";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), d = pt.value("d"), sg = pt.sigma("q");
        const R q = sg * sg;
        R s(0);
        for (long k = 0; k < n; ++k) {
            // (-a q^{-k/2-1/2})^k = (-a)^k sigma^{-k(k+1)}
            R t = dv(P({d, dv(q, d)}, q, k), P({a, a * q}, q, k));
            t *= pow_int(-a, k) * pow_int(sg, -k * (k + 1));
            s += t;
        }
        const R pre = dv((1 - dv(a, guard_nonzero(d))) * (q - a * d), guard_nonzero(a * (1 - a)));
        return pre * s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), d = pt.value("d"), sg = pt.sigma("q");
        const R q = sg * sg;
        const R an = qpoch(a, q, n);
        R t1 = dv(P({d, dv(q, d)}, q, n), guard_nonzero(an * an));
        t1 *= pow_int(-a, n) * pow_int(sg, -n * (n - 1) - 4 * n) * (1 - dv(pow_int(q, n + 1), a));
        R s(0);
        for (long k = 1; k <= n; ++k) {
            const R ak = qpoch(a, q, k);
            R t = dv(P({d, dv(q, d)}, q, k), guard_nonzero(ak * ak)) * (1 - pow_int(q, 2 * k));
            t *= pow_int(-a, k) * pow_int(sg, -k * (k + 3));
            s += t;
        }
        return t1 - (1 - dv(q, a)) - s;
    };
    return e;
}

IdentityEntry make_t444() {
    IdentityEntry e;
    e.id = "eq-xinrong-tomorrow444";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (xinrong-tomorrow444)";
    e.symbols = {{}, {"q"}};
    e.parent_id = "eq-xinrong-tomorrow333";
    e.substitution_note = "base q -> q^2 then a = q^2, d = q; scale (1-q)";
    e.default_n_max = 6;
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R q = pt.base("q");
        R s(0);
        for (long k = 0; k < n; ++k)
            s += t444_T(q, k) * dv(1 - q, guard_nonzero(R(1) - pow_int(q, 2 * k + 2)));
        return s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R q = pt.base("q");
        const R om = guard_nonzero(R(1) - q);
        R t1 = t444_T(q, n) * dv(pow_int(q, -2 * n) - 1, om);
        R s(0);
        for (long k = 1; k <= n; ++k)
            s += t444_T(q, k) * dv(pow_int(q, -2 * k) - pow_int(q, 2 * k), om);
        return t1 - s;
    };
    return e;
}

IdentityEntry make_typeII() {
    IdentityEntry e;
    e.id = "eq-type-II-concrete";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (type-II-concrete)";
    e.symbols = {{"a", "b", "c"}, {"q"}};
    e.parent_id = "thm2";
    e.substitution_note =
        "p-side (q,q,q^3,q^3), a_i^2 = (aq,q/ab,cq^3,a^2bq^3/c); q-side (q,q^2,q^2,q^3), "
        "x_i^2 = (b,q/b,q^2/b,a^2bq^3); parent index n+1; rearrangement only (scale 1)";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), sg = pt.sigma("q");
        const R q = sg * sg, q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
        const R w = dv(a * b * q, guard_nonzero(R(1) - a * b * b));
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv((1 - a * b * pow_int(q, 2 * k)) * (1 - a * pow_int(q, 4 * k)),
                     guard_nonzero((1 - a * b) * (1 - a * pow_int(q, k))));
            t *= pow_int(w, k) * pow_int(sg, -k * (k - 1));
            t *= qpoch(b, q, k) * qpoch(dv(q, b), q, 2 * k);
            t = dv(t, qpoch(a * q3, q4, k) * qpoch(a * q2, q, k));
            t *= qpoch(dv(R(1), a * b), q, k) * P({c, dv(a * a * b, c)}, q3, k);
            t = dv(t, P({dv(a * q, c), dv(c * q, a * b)}, q, k) * qpoch(q3, q3, k));
            s += t;
        }
        return s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), sg = pt.sigma("q");
        const R q = sg * sg, q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
        const R w = dv(a * b, guard_nonzero(R(1) - a * b * b));
        R t1 = dv(P({q * a, dv(q, a * b)}, q, n) * P({q3 * c, dv(q3 * a * a * b, c)}, q3, n),
                  P({q3, q3 * a * a * b}, q3, n) * P({dv(q * a, c), dv(q * c, a * b)}, q, n));
        t1 *= qpoch(b, q, n + 1) * qpoch(dv(q, b), q, 2 * n + 2) * qpoch(q3 * a * a * b, q3, n + 1);
        t1 = dv(t1, qpoch(a * q3, q4, n + 1) * P({a * q, a * q2}, q, n + 1));
        t1 *= pow_int(w, n + 1) * pow_int(sg, -n * (n + 1));
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = (1 - dv(a * pow_int(q, 3 * k + 3), b)) * (1 - a * b * pow_int(q, 2 * k + 1)) *
                  (1 - a * b * pow_int(q, 2 * k + 2)) * (1 - dv(pow_int(q, k), a * b));
            t = dv(t, guard_nonzero((1 - a * q2) * (1 - a * q3) * (1 - a * pow_int(q, k + 1))));
            t *= pow_int(w, k + 1) * pow_int(sg, -k * (k + 1));
            t *= qpoch(b, q, k) * qpoch(dv(q, b), q, 2 * k);
            t = dv(t, qpoch(a * pow_int(q, 7), q4, k) * qpoch(q3, q3, k));
            t *= qpoch(dv(q, a * b), q, k) * P({c * q3, dv(a * a * b * q3, c)}, q3, k);
            t = dv(t, P({a * q3, dv(a * q, c), dv(c * q, a * b)}, q, k));
            s += t;
        }
        return t1 - s;
    };
    return e;
}

IdentityEntry make_binom888() {
    IdentityEntry e;
    e.id = "binom888";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Remark, Eq. (xinrong-tomorrow888)";
    e.symbols = {{}, {}};
    e.n_min = 1;
    e.default_n_max = 30;
    e.default_trials = 1;
    e.lhs = [](const ParamPoint&, long n) -> Rational {
        R s(0);
        for (long k = 0; k < n; ++k) {
            mpz_class bk;
            mpz_bin_uiui(bk.get_mpz_t(), 2 * k, k);
            s += pow_int(R(-16), n - k) * dv(R(bk * bk), R(k + 1));
        }
        return s;
    };
    e.rhs = [](const ParamPoint&, long n) -> Rational {
        mpz_class bn;
        mpz_bin_uiui(bn.get_mpz_t(), 2 * n, n);
        R s = R(4 * n) * R(bn * bn);
        for (long k = 1; k <= n; ++k) {
            mpz_class bk;
            mpz_bin_uiui(bk.get_mpz_t(), 2 * k, k);
            s -= 8 * pow_int(R(-16), n - k) * R(bk * bk) * k;
        }
        return s;
    };
    return e;
}

// ----------------------------------------------------------------- sec. 3.3

IdentityEntry make_thirdadded() {
    IdentityEntry e;
    e.id = "c3.5-thirdadded";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Theorem 3.5, Eq. (thirdadded); \"cd/,\" read as cd/a";
    e.symbols = {{"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}, {"p", "q"}};
    e.parent_id = "thm3";
    e.substitution_note =
        "p_i = p, a_i^2 = (bp,dp,ep,bc^2dep/a^2); q_i = q, x_i^2 = (yq,wq,uq,yz^2wuq/x^2); "
        "scale 1/D with D = (1-a/c)(1-bcd/a)(1-bce/a)(1-cde/a)/((1-b)(1-d)(1-e)(1-bc^2de/a^2))";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        R pre = dv(P({y * q, w * q, u * q, dv(y * z * z * w * u * q, x * x)}, q, n + 1),
                   P({dv(q * u * w * z, x), dv(q * u * y * z, x), dv(q * w * y * z, x), dv(q * x, z)}, q, n + 1));
        const R beta = dv(b * c * d * ee, a);
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv(1 - beta * pow_int(p, 2 * k), guard_nonzero(R(1) - beta)) * pow_int(p, k);
            t *= dv(P({b, d, ee, dv(b * c * c * d * ee, a * a)}, p, k),
                    P({dv(c * d * ee * p, a), dv(b * c * ee * p, a), dv(b * c * d * p, a), dv(a * p, c)}, p, k));
            const R qn1 = pow_int(q, -1 - n);
            t *= dv(P({dv(x * qn1, u * w * z), dv(x * qn1, u * y * z), dv(x * qn1, w * y * z), dv(z * qn1, x)}, q, k),
                    P({dv(qn1, y), dv(qn1, w), dv(qn1, u), dv(qn1 * x * x, u * w * y * z * z)}, q, k));
            s += t;
        }
        const R dnum = dfun({dv(b * c, a), dv(c * d, a), dv(c * ee, a), dv(b * c * d * ee, a)});
        const R dden = dfun({dv(c * d * ee, a), dv(b * c * ee, a), dv(b * c * d, a), dv(a, c)});
        return pre * (1 + dv(a, c) * dv(dnum, guard_nonzero(dden)) * s);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R p = pt.base("p"), q = pt.base("q");
        R pre = dv(P({b, d, ee, dv(b * c * c * d * ee, a * a)}, p, n + 1),
                   P({dv(c * d * ee, a), dv(b * c * ee, a), dv(b * c * d, a), dv(a, c)}, p, n + 1));
        const R q2 = q * q;
        const R gamma = dv(u * w * y * z * q2, x);
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv(1 - gamma * pow_int(q, 2 * k), guard_nonzero(R(1) - gamma)) * pow_int(q, k);
            t *= dv(P({y * q, w * q, u * q, dv(y * z * z * w * u * q, x * x)}, q, k),
                    P({dv(q2 * u * w * z, x), dv(q2 * u * y * z, x), dv(q2 * w * y * z, x), dv(q2 * x, z)}, q, k));
            const R pn = pow_int(p, -n);
            t *= dv(P({dv(a * pn, c * d * ee), dv(a * pn, b * c * ee), dv(a * pn, b * c * d), dv(c * pn, a)}, p, k),
                    P({dv(pn, b), dv(pn, d), dv(pn, ee), dv(a * a * pn, b * c * c * d * ee)}, p, k));
            s += t;
        }
        const R dnum = dfun({dv(y * z, x), dv(z * u, x), dv(z * w, x), gamma});
        const R dden = dfun({dv(q * u * w * z, x), dv(q * u * y * z, x), dv(q * w * y * z, x), dv(q * x, z)});
        return pre * (1 + dv(x * q, z) * dv(dnum, guard_nonzero(dden)) * s);
    };
    return e;
}

IdentityEntry make_bibasic() {
    IdentityEntry e;
    e.id = "eq-bibasic-gasper";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Gasper's bibasic summation (from Eq. (thirdadded) at x = zw)";
    e.symbols = {{"a", "b", "c", "d", "e"}, {"p"}};
    e.parent_id = "c3.5-thirdadded";
    e.substitution_note = "x = zw; scale (a/c) D(bc/a,cd/a,ce/a,bcde/a)/D(cde/a,bce/a,bcd/a,a/c)";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R p = pt.base("p");
        const R beta = dv(b * c * d * ee, a);
        R s(0);
        for (long k = 0; k <= n; ++k) {
            R t = dv(1 - beta * pow_int(p, 2 * k), guard_nonzero(R(1) - beta)) * pow_int(p, k);
            t *= dv(P({b, d, ee, dv(b * c * c * d * ee, a * a)}, p, k),
                    P({dv(a * p, c), dv(c * d * ee * p, a), dv(b * c * ee * p, a), dv(b * c * d * p, a)}, p, k));
            s += t;
        }
        return s;
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R p = pt.base("p");
        R pre = dv((1 - dv(c, a)) * (1 - dv(c * d * ee, a)) * (1 - dv(b * c * ee, a)) * (1 - dv(b * c * d, a)),
                   guard_nonzero((1 - dv(b * c, a)) * (1 - dv(c * d, a)) * (1 - dv(c * ee, a)) * (1 - dv(b * c * d * ee, a))));
        R tail = dv(P({b, d, ee, dv(b * c * c * d * ee, a * a)}, p, n + 1),
                    P({dv(a, c), dv(c * d * ee, a), dv(b * c * ee, a), dv(b * c * d, a)}, p, n + 1));
        return pre * (1 - tail);
    };
    return e;
}

IdentityEntry make_succeed() {
    IdentityEntry e;
    e.id = "eq-succeed-10phi9";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary, Eq. (succeed): terminating 10phi9 transformation";
    // Root parameterization: e = m^2/(bd) so sqrt(bde) = m; u = t^2/(ywq) so
    // sqrt(ywuq) = t. Raw (b,d,e,y,w,u) with non-square products are rejected
    // by construction.
    e.symbols = {{"b", "d", "m", "y", "w", "t"}, {"q"}};
    // The derivation's substitution (p = q, c = a, z = xq) lands on a
    // removable singularity of the third transformation's grouping: with
    // z = xq the factor (K0/x4^2; L0/q4)_{n+1} = (1;q)_{n+1} vanishes in a
    // denominator and is cancelled by the (1-a/c)(1-qx/z) multiplier before
    // specializing. No exact point substitution exists, so this entry
    // carries no specialization chain.
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R b = pt.value("b"), d = pt.value("d"), m = pt.value("m");
        const R y = pt.value("y"), w = pt.value("w"), t = pt.value("t");
        const R q = pt.base("q");
        const R ee = dv(m * m, guard_nonzero(b * d));
        const R u = dv(t * t, guard_nonzero(y * w * q));
        const R A = b * d * ee;
        const R qn = pow_int(q, -n);
        return phi_sum_exact(
            {A, q * m, -(q * m), b, d, ee, dv(qn, u * w * q * q), dv(qn, u * y * q * q), dv(qn, w * y * q * q), qn},
            {m, -m, d * ee * q, b * ee * q, b * d * q, dv(qn, y * q), dv(qn, w * q), dv(qn, u * q),
             dv(qn, u * w * y * q * q * q)},
            q, q, n);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R b = pt.value("b"), d = pt.value("d"), m = pt.value("m");
        const R y = pt.value("y"), w = pt.value("w"), t = pt.value("t");
        const R q = pt.base("q");
        const R ee = dv(m * m, guard_nonzero(b * d));
        const R u = dv(t * t, guard_nonzero(y * w * q));
        const R q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
        R pre = dv(P({b * q, d * q, ee * q, b * d * ee * q, u * w * q3, u * y * q3, w * y * q3}, q, n),
                   P({d * ee * q, b * ee * q, b * d * q, y * q2, w * q2, u * q2, y * w * u * q4}, q, n));
        const R B = y * w * u * q3;
        const R qn = pow_int(q, -n);
        return pre * phi_sum_exact(
                         {B, q2 * t, -(q2 * t), y * q, w * q, u * q, dv(qn, d * ee), dv(qn, b * ee), dv(qn, b * d), qn},
                         {q * t, -(q * t), q3 * u * w, q3 * u * y, q3 * w * y, dv(qn, b), dv(qn, d), dv(qn, ee),
                          dv(qn, b * d * ee)},
                         q, q, n);
    };
    return e;
}

// ------------------------------------------------------------- recurrences

IdentityEntry make_quad_recurrence() {
    IdentityEntry e;
    e.id = "t3.2-quad-recurrence";
    e.kind = IdentityKind::recurrence;
    e.paper_anchor = "Theorem 3.2, Eq. (analticrec): F_n(aq^2) = C(a) F_{n+1}(a) + B_n(a)";
    e.symbols = {{"a", "b", "c", "d"}, {"q"}};
    e.n_min = 1;  // B_n carries (1 - q^{2n}) in a denominator
    e.default_n_max = 6;
    e.parent_id = "thm1";
    e.substitution_note =
        "p_1=p_2=q, p_3=p_4=q^2, a_i^2 = (dq,q^2/d,bcq^3,a^2bcq^2); x_i^2 = (abc,q^2/a,acq,abq); "
        "scale (1-abc)(1-a/d)(q-ad)/(a(1-d)(1-q/d)(1-bcq)(1-a^2bc))";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R q = pt.base("q");
        return quad_F(a * q * q, b, c, d, q, n);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R q = pt.base("q");
        return quad_C(a, b, c, d, q) * quad_F(a, b, c, d, q, n + 1) + quad_B(a, b, c, d, q, n);
    };
    // Coefficient-product telescoping: prod_{i=0}^{k} 1/C(a q^{2i}) equals the
    // closed Pochhammer form, k <= 6.
    e.extra_residuals.emplace_back("invC-product-closed-form", [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d");
        const R q = pt.base("q");
        R direct(1);
        for (long i = 0; i <= n; ++i)
            direct = dv(direct, guard_nonzero(quad_C(a * pow_int(q, 2 * i), b, c, d, q)));
        return direct - quad_invC_closed(a, b, c, d, q, n);
    });
    return e;
}

IdentityEntry make_cubic_recurrence() {
    IdentityEntry e;
    e.id = "cubic-recurrence";
    e.kind = IdentityKind::recurrence;
    e.paper_anchor = "Theorem, Eq. (pppppp-revised) for G_n(a,c) of Eq. (gabc)";
    e.symbols = {{"a", "b", "c"}, {"q"}};
    e.n_min = 1;
    e.default_n_max = 6;
    e.parent_id = "thm1";
    e.substitution_note =
        "(p_1,p_2,p_3,p_4) = (q,q,q^3,q^3), a_i^2 = (aq,q/ab,cq^3,a^2bq^3/c); "
        "(q_1,q_2,q_3,q_4) = (q,q^2,q^2,q^3), x_i^2 = (b,q/b,q^2/b,a^2bq^3); rearrangement multiplier";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), q = pt.base("q");
        return cubic_G(a, b, c, q, n);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), q = pt.base("q");
        const R q3 = q * q * q;
        R r1 = dv((1 - a * b * b) * qpoch(a * q, q, 3),
                  guard_nonzero(qpoch(a * b, q, 3) * (1 - dv(q3 * a, b))));
        r1 *= cubic_G(a * q3, b, c * q3, q, n);
        R r2 = dv(a * b, guard_nonzero((1 - a) * (1 - a * b)));
        r2 *= dv(P({a, b}, q, n), P({dv(q * a, c), dv(q * c, a * b)}, q, n - 1));
        r2 *= dv(P({q3 * c, dv(q3 * a * a * b, c)}, q3, n - 1), P({q3, q3 * a * a * b}, q3, n - 1));
        r2 *= dv(qpoch(dv(q, b), q, 2 * n), qpoch(q * a * b, q, 2 * n));
        r2 *= dv(qpoch(q3 * a * a * b, q3, n), qpoch(dv(q3 * a, b), q3, n));
        return r1 + r2;
    };
    return e;
}

IdentityEntry make_quartic_recurrence() {
    IdentityEntry e;
    e.id = "quartic-recurrence";
    e.kind = IdentityKind::recurrence;
    e.paper_anchor = "Theorem, Eq. (wantedresult) for G_n(a,b) of Eq. (functiongab)";
    e.symbols = {{"a", "b"}, {"q"}};
    e.n_min = 3;  // relates G_n to G_{n-3}
    e.default_n_max = 7;
    e.parent_id = "thm1";
    e.substitution_note =
        "p_1=p_2=q, p_3=p_4=q^4, a_i^2 = (aq,bq,abq^2,a^2b^2q^2); q_1=q, q_2=q_3=q_4=q^3, "
        "x_i^2 = (abq,ab/q^2,ab/q,ab); rearrangement multiplier";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), q = pt.base("q");
        return quartic_G(a, b, q, n);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), q = pt.base("q");
        const R q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
        R r1 = a * b * (1 - dv(a * b, q)) * q4 * P({a * q, b * q}, q, 3) * qpoch(dv(-a * b, q), q2, 4);
        r1 = dv(r1, guard_nonzero((1 - a * b * pow_int(q, 7)) * P({a * b * b * q2, a * a * b * q2}, q4, 3)));
        r1 *= quartic_G(a * q4, b * q4, q, n - 3);
        R r2 = dv(P({a * q, b * q}, q, n - 1) * qpoch(a * b * q2, q4, n - 1) * qpoch(dv(a * a * b * b, q2), q4, n),
                  P({a * b * b * q2, a * a * b * q2}, q4, n - 1) * P({a * b * q, q}, q, n - 1));
        r2 *= dv(qpoch(a * b * q, q, n) * P({dv(a * b, q2), dv(a * b, q), a * b}, q3, n),
                 qpoch(dv(a * b, q2), q4, n) * P({a * b * q, a * b, dv(a * b, q)}, q2, n));
        return r1 + r2;
    };
    return e;
}

IdentityEntry make_quintic() {
    IdentityEntry e;
    e.id = "c4.6-quintic";
    e.kind = IdentityKind::recurrence;
    e.paper_anchor = "Quintic transformation, Eqs. (chufun)/(4.6)";
    e.symbols = {{"a", "c"}, {"q"}};
    e.n_min = 0;
    e.default_n_max = 4;
    e.parent_id = "c4.6-(3,3)-type";
    e.substitution_note =
        "(b,d,e,t1) = (a,aq,a^2q/c,cq/a), (y,w,u,t2) = (a/q,a,acq^2,1/cq), r = s = (1,3/2,5/2); "
        "parent index n+1; rearrangement multiplier";
    e.lhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), c = pt.value("c"), q = pt.base("q");
        return quintic_G(a, c, q, n);
    };
    e.rhs = [](const ParamPoint& pt, long n) -> Rational {
        const R a = pt.value("a"), c = pt.value("c"), q = pt.base("q");
        const R q2 = q * q, q3 = q2 * q, q5 = q3 * q2;
        const R a2 = a * a, a3 = a2 * a;
        R r1 = quintic_G(q * a, q3 * c, q, n);
        r1 *= dv(dfun({q * a, a, dv(a, q), a2 * c}), guard_nonzero(dfun({dv(R(1), a), c, q * c, q2 * c})));
        r1 *= dv(qpoch(dv(q * c, a), q, 2), guard_nonzero(qpoch(q * a2, q, 2)));
        R r2 = dv(dfun({a * c, a2, dv(a2, q), dv(q * c, a)}), guard_nonzero(dfun({a, c, c * q})));
        R r3 = dv(dfun({pow_int(q, 3 + 3 * n) * a * c, q * a, dv(R(1), a), dv(a, q), a2 * c, dv(a3, c)}),
                  guard_nonzero(dfun({c, dv(R(1), q * c), q2 * c, q * a2, q2 * a2})));
        r3 *= dv(P({q5 * a2 * c, dv(q5 * a3, c)}, q5, n), P({q3 * c, dv(a, c)}, q, n));
        r3 *= dv(P({q * a, q2 * a}, q, 2 * n), qpoch(q3 * a2, q, 4 * n));
        return r1 + r2 + r3;
    };
    return e;
}

// --------------------------------------------------------- sec. 4 corollaries

// Shared helper: q = t^(2D); tp(e) = q^e for exponents e with denominator
// dividing D.
struct BasePow {
    R t;
    long D;
    R q;
    BasePow(const ParamPoint& pt, long common_den) : t(pt.sigma("t")), D(common_den) {
        q = pow_int(t, 2 * D);
    }
    R operator()(const R& e) const {
        const R scaled = e * 2 * D;
        return pow_int(t, scaled.get_num().get_si());
    }
};

IdentityEntry make_c42() {
    IdentityEntry e;
    e.id = "c4.2-(1,1)-type";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary 4.2, Eq. (pppppp-generalid-new): (1,1)-type, instance (r,s) = (1, 1/2)";
    e.symbols = {{"a", "b", "c", "d", "e", "x", "y", "z", "w", "u"}, {"t"}};
    e.parent_id = "thm41";
    e.substitution_note = "p = q, r_i = r, s_i = s; rearrangement only (scale 1)";
    static const R rr = R(1), ss = rat(1, 2);
    auto pratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R q = bp.q;
        const R q2r = bp(2 * rr);
        return dv(P({b * q, d * q, ee * q, dv(b * c * c * d * ee * q, a * a)}, q2r, knum),
                  P({dv(c * d * ee * q, a), dv(b * c * ee * q, a), dv(b * c * d * q, a), dv(a * q, c)}, q2r, kden));
    };
    auto qratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R q = bp.q;
        const R q2s = bp(2 * ss);
        return dv(P({y * q, w * q, u * q, dv(y * z * z * w * u * q, x * x)}, q2s, knum),
                  P({dv(z * w * u * q, x), dv(y * z * u * q, x), dv(y * z * w * q, x), dv(x * q, z)}, q2s, kden));
    };
    e.lhs = [pratio, qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R beta = dv(b * c * d * ee, a);
        R pre = dv(a, guard_nonzero(c)) *
                dfun({dv(c * ee, a), dv(b * c, a), dv(c * d, a), beta * bp(2 - 4 * rr)});
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dv(1 - beta * bp(4 * rr * k + 2 - 4 * rr), guard_nonzero(R(1) - beta * bp(2 - 4 * rr)));
            tt *= pratio(bp, pt, k - 1, k) * qratio(bp, pt, k, k);
            tt *= bp(2 * rr * k + 1 - 2 * rr);
            s += tt;
        }
        return pre * s;
    };
    e.rhs = [pratio, qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const R a = pt.value("a"), b = pt.value("b"), c = pt.value("c"), d = pt.value("d"), ee = pt.value("e");
        const R x = pt.value("x"), y = pt.value("y"), z = pt.value("z"), w = pt.value("w"), u = pt.value("u");
        const R q = bp.q;
        R t1 = pratio(bp, pt, n - 1, n - 1) * qratio(bp, pt, n, n);
        const R e2r1 = bp(2 * rr - 1);
        R am1 = dv((e2r1 - dv(c * d * ee, a)) * (e2r1 - dv(b * c * ee, a)) * (e2r1 - dv(b * c * d, a)) * (e2r1 - dv(a, c)),
                   guard_nonzero((e2r1 - b) * (e2r1 - d) * (e2r1 - ee) * (e2r1 - dv(b * c * c * d * ee, a * a))));
        const R gam = dv(y * z * w * u, x);
        R pre2 = dv(x, guard_nonzero(z)) * dfun({dv(y * z, x), dv(z * u, x), dv(z * w, x), gam * q});
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dv(1 - gam * bp(4 * ss * k + 2), guard_nonzero(R(1) - gam * q));
            tt *= qratio(bp, pt, k, k + 1) * pratio(bp, pt, k, k);
            tt *= bp(2 * ss * k + 1);
            s += tt;
        }
        return t1 - am1 - pre2 * s;
    };
    return e;
}

// (2,2)/(2,3)/(3,3)-type corollaries share the p-side block with t_1.
struct T1Block {
    R b, d, ee, t1;
    R q;
    const BasePow& bp;
    R r1, r2;
    T1Block(const ParamPoint& pt, const BasePow& bpow, const R& rr1, const R& rr2)
        : b(pt.value("b")), d(pt.value("d")), ee(pt.value("e")), t1(pt.value("t1")), q(bpow.q), bp(bpow),
          r1(rr1), r2(rr2) {}
    R ratio(long knum, long kden) const {
        return dv(P({b * q, d * q}, bp(2 * r1), knum) * P({ee * q, b * d * ee * t1 * t1 * q}, bp(2 * r2), knum),
                  P({d * ee * t1 * q, b * ee * t1 * q}, bp(2 * r2), kden) *
                      P({b * d * t1 * q, dv(q, t1)}, bp(2 * r1), kden));
    }
    R c0() const { return dv((1 - b * t1) * (1 - d * t1), guard_nonzero(t1)); }
    R a_minus1() const {
        const R e2r1 = bp(2 * r1), e2r2 = bp(2 * r2);
        return dv((e2r2 - d * ee * t1 * q) * (e2r2 - b * ee * t1 * q) * (e2r1 - b * d * t1 * q) * (e2r1 - dv(q, t1)),
                  guard_nonzero((e2r1 - b * q) * (e2r1 - d * q) * (e2r2 - ee * q) * (e2r2 - b * d * ee * t1 * t1 * q)));
    }
};

IdentityEntry make_c43() {
    IdentityEntry e;
    e.id = "c4.3-(2,2)-type";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary 4.3, (2,2)-type; instance (r1,r2,s1,s2) = (1/2,1,1/2,1) (quadratic pattern)";
    e.symbols = {{"b", "d", "e", "y", "w", "u", "t1", "t2"}, {"t"}};
    e.parent_id = "thm41";
    e.substitution_note =
        "p = q, (r_i) = (r1,r1,r2,r2), (s_i) = (s1,s1,s2,s2), c = a t1, z = x t2; A_{-1} numerator "
        "factors corrected to (q^{2r2}-det1 q)(q^{2r2}-bet1 q)(q^{2r1}-bdt1 q); scale 1";
    static const R r1 = rat(1, 2), r2 = R(1), s1 = rat(1, 2), s2 = R(1);
    auto qratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        const R q = bp.q;
        return dv(P({y * q, w * q}, bp(2 * s1), knum) * P({u * q, y * w * u * t2 * t2 * q}, bp(2 * s2), knum),
                  P({w * u * t2 * q, y * u * t2 * q}, bp(2 * s2), kden) *
                      P({y * w * t2 * q, dv(q, t2)}, bp(2 * s1), kden));
    };
    e.lhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = (1 - pb.ee * pb.t1 * bp(2 * (r2 - r1) * (k - 1))) *
                   (1 - pb.b * pb.d * pb.ee * pb.t1 * bp(2 * (r1 + r2) * (k - 1) + 2));
            tt *= bp(2 * r1 * (k - 1) + 1);
            tt *= pb.ratio(k - 1, k) * qratio(bp, pt, k, k);
            s += tt;
        }
        return pb.c0() * s;
    };
    e.rhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        R t1term = pb.ratio(n - 1, n - 1) * qratio(bp, pt, n, n);
        const R d0 = dv((1 - y * t2) * (1 - w * t2), guard_nonzero(t2));
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = (1 - u * t2 * bp(2 * (s2 - s1) * k)) * (1 - y * w * u * t2 * bp(2 * (s1 + s2) * k + 2));
            tt *= bp(2 * s1 * k + 1);
            tt *= qratio(bp, pt, k, k + 1) * pb.ratio(k, k);
            s += tt;
        }
        return t1term - pb.a_minus1() - d0 * s;
    };
    return e;
}

IdentityEntry make_c44() {
    IdentityEntry e;
    e.id = "c4.4-(2,2)b-type";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary 4.4, (2,2)-type variant; instance (r1,r2,s1,s2) = (1/2,2,1/2,3/2) (quartic pattern)";
    e.symbols = {{"b", "d", "e", "y", "w", "u", "t1", "t2"}, {"t"}};
    e.parent_id = "thm41";
    e.substitution_note = "p = q, (r_i) = (r1,r1,r2,r2), (s_i) = (s1,s2,s2,s2), c = a t1, z = x t2; scale 1";
    static const R r1 = rat(1, 2), r2 = R(2), s1 = rat(1, 2), s2 = rat(3, 2);
    auto qratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        const R q = bp.q;
        return dv(P({y * q}, bp(2 * s1), knum) * P({w * q, u * q, y * w * u * t2 * t2 * q}, bp(2 * s2), knum),
                  P({w * u * t2 * q}, bp(3 * s2 - s1), kden) *
                      P({y * u * t2 * q, y * w * t2 * q, dv(q, t2)}, bp(s1 + s2), kden));
    };
    e.lhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({pb.ee * pb.t1 * bp(2 * (r2 - r1) * (k - 1)),
                         pb.b * pb.d * pb.ee * pb.t1 * bp(2 * (r1 + r2) * (k - 1) + 2)});
            tt *= bp(2 * r1 * (k - 1) + 1);
            tt *= pb.ratio(k - 1, k) * qratio(bp, pt, k, k);
            s += tt;
        }
        return pb.c0() * s;
    };
    e.rhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        R t1term = pb.ratio(n - 1, n - 1) * qratio(bp, pt, n, n);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({y * t2 * bp((s1 - s2) * k), u * t2 * bp((s2 - s1) * k), w * t2 * bp((s2 - s1) * k),
                         y * w * u * t2 * bp((s1 + 3 * s2) * k + 2)});
            tt *= bp((s1 + s2) * k + 1);
            tt *= qratio(bp, pt, k, k + 1) * pb.ratio(k, k);
            s += tt;
        }
        return t1term - pb.a_minus1() - dv(R(1), guard_nonzero(t2)) * s;
    };
    return e;
}

IdentityEntry make_c45() {
    IdentityEntry e;
    e.id = "c4.5-(2,3)-type";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary 4.5, (2,3)-type; instance (r1,r2) = (1/2,3/2), (s1,s2,s3) = (1/2,1,3/2) (cubic pattern)";
    e.symbols = {{"b", "d", "e", "y", "w", "u", "t1", "t2"}, {"t"}};
    e.parent_id = "thm41";
    e.substitution_note = "p = q, (r_i) = (r1,r1,r2,r2), (s_i) = (s1,s2,s2,s3), c = a t1, z = x t2; scale 1";
    static const R r1 = rat(1, 2), r2 = rat(3, 2), s1 = rat(1, 2), s2 = R(1), s3 = rat(3, 2);
    auto qratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        const R q = bp.q;
        return dv(P({y * q}, bp(2 * s1), knum) * P({w * q, u * q}, bp(2 * s2), knum) *
                      P({y * w * u * t2 * t2 * q}, bp(2 * s3), knum),
                  P({w * u * t2 * q}, bp(2 * s2 + s3 - s1), kden) *
                      P({y * u * t2 * q, y * w * t2 * q}, bp(s1 + s3), kden) *
                      P({dv(q, t2)}, bp(s1 + 2 * s2 - s3), kden));
    };
    e.lhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({pb.ee * pb.t1 * bp(2 * (r2 - r1) * (k - 1)),
                         pb.b * pb.d * pb.ee * pb.t1 * bp(2 * (r1 + r2) * (k - 1) + 2)});
            tt *= bp(2 * r1 * (k - 1) + 1);
            tt *= pb.ratio(k - 1, k) * qratio(bp, pt, k, k);
            s += tt;
        }
        return pb.c0() * s;
    };
    e.rhs = [qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const T1Block pb(pt, bp, r1, r2);
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        R t1term = pb.ratio(n - 1, n - 1) * qratio(bp, pt, n, n);
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({y * t2 * bp((s1 + s3 - 2 * s2) * k), u * t2 * bp((s3 - s1) * k), w * t2 * bp((s3 - s1) * k),
                         y * w * u * t2 * bp((s1 + 2 * s2 + s3) * k + 2)});
            tt *= bp((s1 + 2 * s2 - s3) * k + 1);
            tt *= qratio(bp, pt, k, k + 1) * pb.ratio(k, k);
            s += tt;
        }
        return t1term - pb.a_minus1() - dv(R(1), guard_nonzero(t2)) * s;
    };
    return e;
}

IdentityEntry make_c46() {
    IdentityEntry e;
    e.id = "c4.6-(3,3)-type";
    e.kind = IdentityKind::finite;
    e.paper_anchor = "Corollary 4.6, (3,3)-type; instance r = s = (1,3/2,5/2) (quintic pattern)";
    e.symbols = {{"b", "d", "e", "y", "w", "u", "t1", "t2"}, {"t"}};
    e.parent_id = "thm41";
    e.substitution_note =
        "p = q, (r_i) = (r1,r1,r2,r3), (s_i) = (s1,s1,s2,s3), c = a t1, z = x t2; printed LHS lacks "
        "the q-side ratio and prints (q/t2)_k for (q/t2)_{k+1}; corrected from Theorem 4.1. Scale 1";
    static const R r1 = R(1), r2 = rat(3, 2), r3 = rat(5, 2);
    static const R s1 = R(1), s2 = rat(3, 2), s3 = rat(5, 2);
    static const R rsum = 2 * r1 + r2 + r3, ssum = 2 * s1 + s2 + s3;
    auto pratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R b = pt.value("b"), d = pt.value("d"), ee = pt.value("e"), t1 = pt.value("t1");
        const R q = bp.q;
        return dv(P({b * q, d * q}, bp(2 * r1), knum) * P({ee * q}, bp(2 * r2), knum) *
                      P({b * d * ee * t1 * t1 * q}, bp(2 * r3), knum),
                  P({d * ee * q * t1, b * ee * q * t1}, bp(rsum - 2 * r1), kden) *
                      P({b * d * q * t1}, bp(rsum - 2 * r2), kden) * P({dv(q, t1)}, bp(rsum - 2 * r3), kden));
    };
    auto qratio = [](const BasePow& bp, const ParamPoint& pt, long knum, long kden) -> Rational {
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        const R q = bp.q;
        return dv(P({y * q, w * q}, bp(2 * s1), knum) * P({u * q}, bp(2 * s2), knum) *
                      P({y * t2 * t2 * w * u * q}, bp(2 * s3), knum),
                  P({w * u * q * t2, y * u * q * t2}, bp(ssum - 2 * s1), kden) *
                      P({y * w * q * t2}, bp(ssum - 2 * s2), kden) * P({dv(q, t2)}, bp(ssum - 2 * s3), kden));
    };
    e.lhs = [pratio, qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const R b = pt.value("b"), d = pt.value("d"), ee = pt.value("e"), t1 = pt.value("t1");
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({ee * t1 * bp((r2 + r3 - 2 * r1) * (k - 1)), b * t1 * bp((r3 - r2) * (k - 1)),
                         d * t1 * bp((r3 - r2) * (k - 1)), b * d * ee * t1 * bp(rsum * (k - 1) + 2)});
            tt *= bp((rsum - 2 * r3) * (k - 1) + 1);
            tt *= pratio(bp, pt, k - 1, k) * qratio(bp, pt, k, k);
            s += tt;
        }
        return dv(R(1), guard_nonzero(t1)) * s;
    };
    e.rhs = [pratio, qratio](const ParamPoint& pt, long n) -> Rational {
        const BasePow bp(pt, 2);
        const R b = pt.value("b"), d = pt.value("d"), ee = pt.value("e"), t1 = pt.value("t1");
        const R y = pt.value("y"), w = pt.value("w"), u = pt.value("u"), t2 = pt.value("t2");
        const R q = bp.q;
        R t1term = pratio(bp, pt, n - 1, n - 1) * qratio(bp, pt, n, n);
        R am1 = dv((bp(rsum - 2 * r1) - d * ee * q * t1) * (bp(rsum - 2 * r1) - b * ee * q * t1) *
                       (bp(rsum - 2 * r2) - b * d * q * t1) * (bp(rsum - 2 * r3) - dv(q, t1)),
                   guard_nonzero((bp(2 * r1) - b * q) * (bp(2 * r1) - d * q) * (bp(2 * r2) - ee * q) *
                                 (bp(2 * r3) - b * t1 * t1 * d * ee * q)));
        R s(0);
        for (long k = 0; k < n; ++k) {
            R tt = dfun({y * t2 * bp((s3 - s2) * k), u * t2 * bp((s2 + s3 - 2 * s1) * k), w * t2 * bp((s3 - s2) * k),
                         y * w * u * t2 * bp(ssum * k + 2)});
            tt *= bp((ssum - 2 * s3) * k + 1);
            tt *= qratio(bp, pt, k, k + 1) * pratio(bp, pt, k, k);
            s += tt;
        }
        return t1term - am1 - dv(R(1), guard_nonzero(t2)) * s;
    };
    return e;
}

// ----------------------------------------------------------- infinite stubs

IdentityEntry make_infinite(const std::string& id, const std::string& anchor, SymbolSet syms,
                            std::vector<Constraint> cons) {
    IdentityEntry e;
    e.id = id;
    e.kind = IdentityKind::infinite;
    e.paper_anchor = anchor;
    e.symbols = std::move(syms);
    e.constraints = std::move(cons);
    e.default_trials = 3;
    return e;
}

}  // namespace

Catalog::Catalog() {
    const Rational half = rat(1, 2);
    entries_.push_back(make_thm1());
    entries_.push_back(make_thm2());
    entries_.push_back(make_thm3());
    entries_.push_back(make_thm41());
    entries_.push_back(make_finalnew2());
    entries_.push_back(make_rogerspsi65());
    entries_.push_back(make_ex25());
    entries_.push_back(make_imp34());
    entries_.push_back(make_imp37());
    entries_.push_back(make_zzzz());
    entries_.push_back(make_t333());
    entries_.push_back(make_t444());
    entries_.push_back(make_typeII());
    entries_.push_back(make_binom888());
    entries_.push_back(make_thirdadded());
    entries_.push_back(make_bibasic());
    entries_.push_back(make_succeed());
    entries_.push_back(make_quad_recurrence());
    entries_.push_back(make_cubic_recurrence());
    entries_.push_back(make_quartic_recurrence());
    entries_.push_back(make_quintic());
    entries_.push_back(make_c42());
    entries_.push_back(make_c43());
    entries_.push_back(make_c44());
    entries_.push_back(make_c45());
    entries_.push_back(make_c46());

    entries_.push_back(make_infinite(
        "eq-magic", "Corollary, Eq. (magic): |z| < 1 limit of Eq. (important-3.4)",
        {{"a", "b", "c", "d", "e", "y", "u", "z"}, {"p", "q"}},
        {abs_lt(mono({{"z", 1}}), 1), abs_lt(mono({{"p", 1}}), half), abs_lt(mono({{"q", 1}}), half)}));
    entries_.push_back(make_infinite(
        "eq-phiseries-2", "Corollary, Eq. (phiseries-2): 8phi7 form; bde = m^2, yzu = g^2",
        {{"b", "d", "m", "y", "z", "g"}, {"q"}},
        {abs_lt(mono({{"z", 1}}), 1), abs_lt(mono({{"q", 1}}), half)}));
    entries_.push_back(make_infinite(
        "eq-1.39", "Corollary, Eq. (1.39): |a/cd| < 1",
        {{"a", "c", "d", "x", "y", "z", "w", "u"}, {"p", "q"}},
        {abs_lt(mono({{"a", 1}, {"c", -1}, {"d", -1}}), 1), abs_lt(mono({{"p", 1}}), half),
         abs_lt(mono({{"q", 1}}), half)}));
    entries_.push_back(make_infinite(
        "eq-phiseries-1-new", "Corollary, Eq. (phiseries-1-new): 5phi4 = 7phi6; ywu = g^2",
        {{"a", "c", "d", "y", "w", "g"}, {"q"}},
        {abs_lt(mono({{"a", 1}, {"c", -1}, {"d", -1}}), 1), abs_lt(mono({{"q", 1}}), half)}));
    entries_.push_back(make_infinite(
        "t3.2-solution-gasperid-new", "Theorem 3.2, Eq. (gasperid-new): solved form of G(a)",
        {{"a", "b", "c", "d"}, {"q"}},
        {abs_lt(mono({{"q", 1}}), half), abs_lt(mono({{"a", 1}}), half), abs_lt(mono({{"b", 1}}), half),
         abs_lt(mono({{"c", 1}}), half), abs_lt(mono({{"d", 1}}), rat(3, 2))}));
    entries_.push_back(make_infinite(
        "eq-gasperid-222", "Corollary, Eq. (gasperid-222): c = 0 case",
        {{"a", "b", "d"}, {"q"}},
        {abs_lt(mono({{"q", 1}}), half), abs_lt(mono({{"a", 1}}), half), abs_lt(mono({{"b", 1}}), half),
         abs_lt(mono({{"d", 1}}), rat(3, 2))}));
    entries_.push_back(make_infinite(
        "eq-gasperid-333", "Corollary, Eq. (gasperid-333): b = 0 case",
        {{"a", "d"}, {"q"}},
        {abs_lt(mono({{"q", 1}}), half), abs_lt(mono({{"a", 1}}), half), abs_lt(mono({{"d", 1}}), rat(3, 2))}));
    entries_.push_back(make_infinite(
        "wangxu-cubic-limit", "Corollary (Wang-Xu), n -> infinity of Eq. (pppppp-revised)",
        {{"a", "b", "c"}, {"q"}},
        {abs_lt(mono({{"q", 1}}), half), abs_lt(mono({{"a", 1}}), half), abs_lt(mono({{"b", 1}}), half),
         abs_lt(mono({{"c", 1}}), half)}));
    entries_.push_back(make_infinite(
        "eq-3.47", "Corollary, Eq. (3.47): c -> 0, n -> infinity of Eq. (type-II-concrete)",
        {{"a", "b"}, {"q"}},
        {abs_lt(mono({{"q", 1}}), half), abs_lt(mono({{"a", 1}}), half), abs_lt(mono({{"b", 1}}), half)}));

    std::sort(entries_.begin(), entries_.end(),
              [](const IdentityEntry& a, const IdentityEntry& b) { return a.id < b.id; });
    aliases_ = {{"t3.2-solution", "t3.2-solution-gasperid-new"}};
}

const Catalog& Catalog::instance() {
    static const Catalog cat;
    return cat;
}

const IdentityEntry* Catalog::find(const std::string& id) const {
    for (const auto& [alias, target] : aliases_)
        if (alias == id) return find(target);
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

const IdentityEntry& Catalog::at(const std::string& id) const {
    const IdentityEntry* e = find(id);
    if (!e) throw std::invalid_argument("unknown identity id '" + id + "'");
    return *e;
}

std::vector<const IdentityEntry*> Catalog::by_kind(IdentityKind k) const {
    std::vector<const IdentityEntry*> out;
    for (const auto& e : entries_)
        if (e.kind == k) out.push_back(&e);
    return out;
}

std::vector<IdentityInfo> list_identities() {
    std::vector<IdentityInfo> out;
    for (const auto& e : Catalog::instance().entries()) {
        IdentityInfo info;
        info.id = e.id;
        info.kind = e.kind;
        info.paper_anchor = e.paper_anchor;
        info.free_symbols = e.symbols.scalars;
        for (const auto& h : e.symbols.half_bases) info.free_symbols.push_back(h);
        out.push_back(std::move(info));
    }
    return out;
}

Rational finite_residual(const std::string& id, const ParamPoint& pt, long n) {
    const IdentityEntry& e = Catalog::instance().at(id);
    if (e.kind != IdentityKind::finite) throw std::invalid_argument(id + " is not a finite identity");
    for (const auto& c : e.constraints)
        if (!c.holds(pt)) throw constraint_error(id + ": constraint " + c.str() + " unmet");
    return e.residual(pt, n);
}

Rational recurrence_residual(const std::string& id, const ParamPoint& pt, long n) {
    const IdentityEntry& e = Catalog::instance().at(id);
    if (e.kind != IdentityKind::recurrence) throw std::invalid_argument(id + " is not a recurrence");
    return e.residual(pt, n);
}

Rational binomial_identity_residual(long n) {
    if (n < 1) throw range_error("binomial identity needs n >= 1");
    const IdentityEntry& e = Catalog::instance().at("binom888");
    return e.residual(ParamPoint{}, n);
}

}  // namespace qabel
