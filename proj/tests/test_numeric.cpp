#include <doctest.h>

#include "qabel/numeric.hpp"
#include "qabel/qpoch.hpp"

using namespace qabel;

namespace {

ParamPoint pt_of(std::initializer_list<std::pair<const char*, Rational>> vals,
                 std::initializer_list<std::pair<const char*, Rational>> halves) {
    ParamPoint p;
    for (const auto& [k, v] : vals) p.values[k] = v;
    for (const auto& [k, v] : halves) p.half_bases[k] = v;
    return p;
}

}  // namespace

TEST_CASE("phi_eval: argument zero gives exactly one") {
    NumericPolicy pol;
    PhiSeries s;
    s.base = BigFloat(0.5, pol.precision_bits);
    s.argument = BigFloat(pol.precision_bits);  // zero
    s.upper = {BigFloat(3.0, pol.precision_bits)};
    const PhiResult r = phi_eval(s, pol);
    CHECK(r.value == BigFloat(1L, pol.precision_bits));
    CHECK(r.tail_bound.is_zero());
}

TEST_CASE("phi_eval sums the geometric series") {
    // upper = {q} cancels the implicit (q;q)_n, leaving sum z^n = 1/(1-z).
    NumericPolicy pol;
    PhiSeries s;
    s.base = BigFloat(rat(1, 3), pol.precision_bits);
    s.argument = BigFloat(0.5, pol.precision_bits);
    s.upper = {s.base};
    const PhiResult r = phi_eval(s, pol);
    CHECK(abs(r.value - BigFloat(2.0, pol.precision_bits)) < 1e-12);
    // the tail bound is honest: summing 4x more terms stays within it
    NumericPolicy fine = pol;
    fine.target_eps = 1e-30;
    const PhiResult r4 = phi_eval(s, fine);
    CHECK(abs(r4.value - r.value) <= r.tail_bound);
}

TEST_CASE("phi_eval diverges on |z| >= 1 and flags max_terms") {
    NumericPolicy pol;
    pol.max_terms = 64;
    PhiSeries s;
    s.base = BigFloat(0.5, pol.precision_bits);
    s.argument = BigFloat(1.25, pol.precision_bits);
    s.upper = {s.base};
    CHECK_THROWS_AS((void)phi_eval(s, pol), diverged_error);
    s.argument = BigFloat(0.99999, pol.precision_bits);
    CHECK_THROWS_AS((void)phi_eval(s, pol), max_terms_error);
}

TEST_CASE("qpoch_inf_f converges with a sound tail") {
    NumericPolicy pol;
    const BigFloat a(rat(1, 3), pol.precision_bits);
    const BigFloat q(rat(1, 2), pol.precision_bits);
    const SeriesResult r = qpoch_inf_f(a, q, pol);
    CHECK(r.sound());
    // cross-check against a long finite product
    CHECK(abs(r.value - qpoch_f(a, q, 400)) < 1e-11);
}

TEST_CASE("every infinite identity passes at a convenient point") {
    NumericPolicy pol;
    struct Case {
        const char* id;
        ParamPoint pt;
    };
    const Rational h = rat(1, 2);
    const std::vector<Case> cases = {
        {"eq-magic",
         pt_of({{"a", rat(3, 7)}, {"b", rat(2, 5)}, {"c", rat(1, 3)}, {"d", rat(-1, 4)}, {"e", rat(2, 7)},
                {"y", rat(1, 5)}, {"u", rat(-2, 7)}, {"z", rat(1, 4)}},
               {{"p", h}, {"q", h}})},
        {"eq-phiseries-2",
         pt_of({{"b", rat(1, 5)}, {"d", rat(2, 5)}, {"m", rat(1, 4)}, {"y", rat(1, 5)}, {"z", rat(1, 4)},
                {"g", rat(1, 3)}},
               {{"q", h}})},
        {"eq-1.39",
         pt_of({{"a", rat(1, 5)}, {"c", rat(2, 5)}, {"d", rat(3, 2)}, {"x", rat(1, 2)}, {"y", rat(1, 5)},
                {"z", rat(1, 4)}, {"w", rat(-1, 3)}, {"u", rat(2, 5)}},
               {{"p", h}, {"q", h}})},
        {"eq-phiseries-1-new",
         pt_of({{"a", rat(1, 5)}, {"c", rat(2, 5)}, {"d", rat(3, 2)}, {"y", rat(1, 5)}, {"w", rat(1, 4)},
                {"g", rat(1, 3)}},
               {{"q", h}})},
        {"t3.2-solution-gasperid-new",
         pt_of({{"a", rat(2, 5)}, {"b", rat(1, 4)}, {"c", rat(-1, 5)}, {"d", rat(3, 7)}}, {{"q", h}})},
        {"eq-gasperid-222", pt_of({{"a", rat(2, 5)}, {"b", rat(1, 4)}, {"d", rat(3, 7)}}, {{"q", h}})},
        {"eq-gasperid-333", pt_of({{"a", rat(2, 5)}, {"d", rat(3, 7)}}, {{"q", h}})},
        {"wangxu-cubic-limit",
         pt_of({{"a", rat(1, 4)}, {"b", rat(2, 7)}, {"c", rat(3, 5)}}, {{"q", rat(1, 2)}})},
        {"eq-3.47", pt_of({{"a", rat(1, 4)}, {"b", rat(2, 7)}}, {{"q", h}})},
    };
    for (const auto& c : cases) {
        CAPTURE(c.id);
        const NumericOutcome out = infinite_residual(c.id, c.pt, pol);
        CHECK(out.tails_sound);
        CHECK(out.residual_abs < 1e-10);
    }
}

TEST_CASE("gasperid-new holds at higher precision too") {
    NumericPolicy pol;
    pol.precision_bits = 192;
    pol.target_eps = 1e-20;
    const ParamPoint pt =
        pt_of({{"a", rat(2, 5)}, {"b", rat(1, 4)}, {"c", rat(-1, 5)}, {"d", rat(3, 7)}}, {{"q", rat(1, 2)}});
    const NumericOutcome out = infinite_residual("t3.2-solution-gasperid-new", pt, pol);
    CHECK(out.tails_sound);
    CHECK(out.residual_abs < 1e-18);
}

TEST_CASE("iterated quadratic solution closes") {
    NumericPolicy pol;
    const ParamPoint pt =
        pt_of({{"a", rat(2, 5)}, {"b", rat(1, 4)}, {"c", rat(-1, 5)}, {"d", rat(3, 7)}}, {{"q", rat(1, 3)}});
    for (long it : {1L, 5L}) {
        const NumericOutcome out = iterate_solution_residual(pt, pol, it);
        CHECK(out.tails_sound);
        CHECK(out.residual_abs < (it == 1 ? 1e-10 : 1e-9));
    }
    CHECK_THROWS_AS((void)iterate_solution_residual(pt, pol, 0), std::invalid_argument);
}

TEST_CASE("coefficient product matches its Pochhammer closed form in floats") {
    const mpfr_prec_t prec = 128;
    const BigFloat a(rat(2, 5), prec), b(rat(1, 4), prec), cc(rat(-1, 5), prec), d(rat(3, 7), prec);
    const BigFloat q(rat(1, 3), prec), one(1L, prec);
    auto C = [&](const BigFloat& aa) {
        return (one - aa / q) * (one - aa) * (one - aa * b * cc * q / d) * (one - aa * b * cc * d) /
               ((one - aa * b * cc) * (one - aa * b * cc / q) * (one - aa / d) * (one - aa * d / q));
    };
    const long k = 6;
    BigFloat direct = one;
    for (long i = 0; i <= k; ++i) direct /= C(a * pow_si(q, 2 * i));
    const BigFloat q2 = q * q;
    const BigFloat closed = qpoch_f(a * b * cc / q, q, 2 * k + 2) * qpoch_f(a / d, q2, k + 1) *
                            qpoch_f(a * d / q, q2, k + 1) /
                            (qpoch_f(a / q, q, 2 * k + 2) * qpoch_f(a * b * cc * q / d, q2, k + 1) *
                             qpoch_f(a * b * cc * d, q2, k + 1));
    CHECK(abs(direct - closed) < 1e-12);
}

TEST_CASE("truncation residuals of eq-magic decrease monotonically") {
    // Independent partial-sum oracle for both sides of the identity.
    const mpfr_prec_t prec = 128;
    const BigFloat a(rat(3, 7), prec), b(rat(2, 5), prec), cc(rat(1, 3), prec), d(rat(-1, 4), prec),
        e(rat(2, 7), prec), y(rat(1, 5), prec), u(rat(-2, 7), prec), z(rat(1, 4), prec);
    const BigFloat p(rat(1, 4), prec), q(rat(1, 4), prec);
    const BigFloat one(1L, prec);
    auto lhs_partial = [&](long N) {
        const BigFloat a0 = a * (one - b * cc / a) * (one - cc * d / a) * (one - cc * e / a) *
                            (one - b * cc * d * e / a) /
                            (cc * (one - b * cc * d / a) * (one - b * cc * e / a) * (one - cc * d * e / a) *
                             (one - a / cc));
        BigFloat s(prec);
        for (long k = 0; k < N; ++k) {
            BigFloat t = (one - b * cc * d * e / a * pow_si(p, 2 * k)) / (one - b * cc * d * e / a);
            t *= pow_si(p * z, k);
            t *= qpoch_f(b, p, k) * qpoch_f(d, p, k) * qpoch_f(e, p, k) *
                 qpoch_f(b * cc * cc * d * e / (a * a), p, k);
            t /= qpoch_f(a * p / cc, p, k) * qpoch_f(b * cc * e * p / a, p, k) *
                 qpoch_f(b * cc * d * p / a, p, k) * qpoch_f(cc * d * e * p / a, p, k);
            t *= qpoch_f(y * q, q, k) * qpoch_f(u * q, q, k) / (qpoch_f(z * u * q, q, k) * qpoch_f(y * z * q, q, k));
            s += t;
        }
        return a0 * s;
    };
    auto rhs_partial = [&](long N) {
        BigFloat r = -(u * z - one) * (y * z - one) / (z * (u - one) * (y - one));
        BigFloat s(prec);
        for (long k = 0; k < N; ++k) {
            BigFloat t = (one - y * z * u * pow_si(q, 2 * k)) / (one - y * z * u) * pow_si(z, k);
            t *= qpoch_f(y, q, k) * qpoch_f(u, q, k) / (qpoch_f(z * u * q, q, k) * qpoch_f(y * z * q, q, k));
            t *= qpoch_f(b, p, k) * qpoch_f(d, p, k) * qpoch_f(e, p, k) *
                 qpoch_f(b * cc * cc * d * e / (a * a), p, k);
            t /= qpoch_f(a / cc, p, k) * qpoch_f(b * cc * e / a, p, k) * qpoch_f(b * cc * d / a, p, k) *
                 qpoch_f(cc * d * e / a, p, k);
            s += t;
        }
        return r + (one - z) * (one - y * z * u) / (z * (one - y) * (one - u)) * s;
    };
    BigFloat prev(1e9, prec);
    for (long N : {5L, 10L, 20L, 40L}) {
        const BigFloat res = abs(lhs_partial(N) - rhs_partial(N));
        CHECK(res < prev);
        prev = res;
    }
    CHECK(prev < 1e-8);  // the n = 40 truncation already matches to tolerance
}
