#include "qabel/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace qabel {

BigFloat theta_trunc(const BigFloat& x, const BigFloat& q, long terms) {
    if (!(abs(q) < 1.0)) throw std::domain_error("theta_trunc: |q| must be < 1");
    if (x.is_zero()) throw std::domain_error("theta_trunc: x must be nonzero");
    if (terms < 1) throw std::domain_error("theta_trunc: terms must be >= 1");
    const mpfr_prec_t prec = x.prec() > q.prec() ? x.prec() : q.prec();
    BigFloat one(1L, prec);
    BigFloat r = one;
    BigFloat qx = q / x;
    BigFloat qk = one;
    for (long k = 0; k < terms; ++k) {
        r *= (one - x * qk) * (one - qx * qk);
        qk *= q;
    }
    return r;
}

long theta_default_terms(double eps, double q_abs) {
    if (!(q_abs > 0.0 && q_abs < 1.0)) throw std::domain_error("theta_default_terms: need 0 < |q| < 1");
    if (!(eps > 0.0)) throw std::domain_error("theta_default_terms: need eps > 0");
    return static_cast<long>(std::ceil(std::log(eps) / std::log(q_abs))) + 8;
}

}  // namespace qabel
