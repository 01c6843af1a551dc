#pragma once

#include "qabel/bigfloat.hpp"

namespace qabel {

// Truncated modified Jacobi theta theta(x;q) = (x;q)_inf (q/x;q)_inf:
// prod_{k=0}^{terms-1} (1 - x q^k)(1 - (q/x) q^k). Numeric only; requires
// |q| < 1 and x != 0.
BigFloat theta_trunc(const BigFloat& x, const BigFloat& q, long terms);

// Truncation length making the dropped tail of log(theta) smaller than eps,
// plus a fixed safety margin.
long theta_default_terms(double eps, double q_abs);

}  // namespace qabel
