#include "qabel/abel.hpp"

#include "qabel/transforms.hpp"

namespace qabel {

Rational delta(const Sequence& s, long k) { return s(k) - s(k - 1); }

Rational nabla(const Sequence& s, long k) { return s(k) - s(k + 1); }

Rational abel_sbp_residual(const Sequence& A, const Sequence& B, long n) {
    Rational lhs(0);
    for (long k = 0; k < n; ++k) lhs += B(k) * delta(A, k);
    Rational rhs = A(n - 1) * B(n) - A(-1) * B(0);
    for (long k = 0; k < n; ++k) rhs += A(k) * nabla(B, k);
    return lhs - rhs;
}

Rational exchange_residual(const Sequence& alpha, const Sequence& beta, long n) {
    Rational lhs(0), rhs(0);
    for (long k = 0; k <= n; ++k) {
        Rational ib(0), ia(0);
        for (long i = 0; i <= n - k; ++i) {
            ib += beta(i);
            ia += alpha(i);
        }
        lhs += alpha(k) * ib;
        rhs += beta(k) * ia;
    }
    return lhs - rhs;
}

Rational closed_diff_residual(ClosedDiff which, const ParamPoint& point, long k) {
    const MasterParams m = master_from_point(point);
    switch (which) {
        case ClosedDiff::diffak: {
            Sequence A([&m](long i) { return master_A(m, i); });
            return delta_A_closed(m, k) - delta(A, k);
        }
        case ClosedDiff::diffbk: {
            Sequence B([&m](long i) { return master_B(m, i); });
            return nabla_B_closed(m, k) - nabla(B, k);
        }
        case ClosedDiff::diffbbk: {
            Sequence B2([&m](long i) { return master_B2(m, i); });
            return nabla_B2_closed(m, k) - nabla(B2, k);
        }
    }
    throw std::logic_error("closed_diff_residual: unknown selector");
}

}  // namespace qabel
