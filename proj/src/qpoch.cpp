#include "qabel/qpoch.hpp"

namespace qabel {

Rational qpoch(const Rational& a, const Rational& q, long n) {
    Rational r(1);
    if (n >= 0) {
        Rational qk(1);
        for (long k = 0; k < n; ++k) {
            r *= (1 - a * qk);
            qk *= q;
        }
        return r;
    }
    if (q == 0) throw pole_error("pole");
    const Rational qinv = div_exact(Rational(1), q);
    Rational qj(1);
    for (long j = 1; j <= -n; ++j) {
        qj *= qinv;
        const Rational f = 1 - a * qj;
        if (f == 0) throw pole_error("pole");
        r *= f;
    }
    return div_exact(Rational(1), r);
}

Rational qpoch(std::initializer_list<Rational> args, const Rational& q, long n) {
    Rational r(1);
    for (const auto& a : args) r *= qpoch(a, q, n);
    return r;
}

Rational qpoch_multi(const std::vector<PochFactor>& factors) {
    Rational r(1);
    for (const auto& f : factors) r *= qpoch(f.argument, f.base, f.length);
    return r;
}

Rational dfun(std::initializer_list<Rational> args) {
    Rational r(1);
    for (const auto& x : args) r *= (1 - x);
    return r;
}

Rational dfun(const std::vector<Rational>& args) {
    Rational r(1);
    for (const auto& x : args) r *= (1 - x);
    return r;
}

Rational gamma_k(const QuadrupleSpec& spec, long k) {
    const auto& x = spec.x;
    const auto& s = spec.sigma;
    const Rational f1 = x[0] * x[1] * pow_int(s[0] * s[1], k) - x[2] * x[3] * pow_int(s[2] * s[3], k);
    const Rational f2 = x[0] * x[2] * pow_int(s[0] * s[2], k) - x[1] * x[3] * pow_int(s[1] * s[3], k);
    const Rational f3 = x[0] * x[3] * pow_int(s[0] * s[3], k) - x[1] * x[2] * pow_int(s[1] * s[2], k);
    return f1 * f2 * f3;
}

KL kl_constants(const QuadrupleSpec& spec) {
    KL out;
    out.K = spec.x[0] * spec.x[1] * spec.x[2] * spec.x[3];
    out.L = spec.sigma[0] * spec.sigma[1] * spec.sigma[2] * spec.sigma[3];
    return out;
}

}  // namespace qabel
