#include "qabel/phi.hpp"

#include "qabel/qpoch.hpp"

namespace qabel {

Rational phi_sum_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& q, const Rational& z, long nmax) {
    Rational s(0);
    for (long k = 0; k <= nmax; ++k) {
        Rational t = pow_int(z, k);
        for (const auto& a : upper) t *= qpoch(a, q, k);
        t = div_exact(t, guard_nonzero(qpoch(q, q, k)));
        for (const auto& b : lower) t = div_exact(t, qpoch(b, q, k));
        s += t;
    }
    return s;
}

}  // namespace qabel
