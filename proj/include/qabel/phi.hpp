#pragma once

#include <vector>

#include "qabel/rational.hpp"

namespace qabel {

// Truncation of the basic hypergeometric series
//   sum_{k=0}^{nmax} (a1,...,ar;q)_k / ((b1,...,b_{r-1};q)_k (q;q)_k) z^k
// in exact rationals. Used for the terminating (q^{-n} upper parameter)
// series of the catalog, where the truncation at nmax equals the full sum.
Rational phi_sum_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                       const Rational& q, const Rational& z, long nmax);

}  // namespace qabel
