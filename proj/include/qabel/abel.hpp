#pragma once

#include <functional>
#include <map>

#include "qabel/rational.hpp"
#include "qabel/sample.hpp"

namespace qabel {

// A sequence of exact rationals indexed from -1 upward (Abel's lemma needs
// A_{-1}). Terms are memoized: an n-term summation-by-parts run touches each
// index a handful of times and A_k costs O(k) Pochhammer factors. The memo is
// per-instance and not synchronized; keep one Sequence per worker.
class Sequence {
public:
    explicit Sequence(std::function<Rational(long)> term) : term_(std::move(term)) {}

    const Rational& operator()(long k) const {
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(k, term_(k)).first->second;
    }

private:
    std::function<Rational(long)> term_;
    mutable std::map<long, Rational> memo_;
};

// Delta X_k := X_k - X_{k-1}
Rational delta(const Sequence& s, long k);
// Nabla X_k := X_k - X_{k+1}
Rational nabla(const Sequence& s, long k);

// Sum_{k=0}^{n-1} B_k Delta A_k - [A_{n-1} B_n - A_{-1} B_0 + Sum_{k=0}^{n-1} A_k Nabla B_k].
// Zero for every pair of sequences; this is the module's defining oracle.
Rational abel_sbp_residual(const Sequence& A, const Sequence& B, long n);

// Sum_{k=0}^{n} alpha_k Sum_{i=0}^{n-k} beta_i - Sum_{k=0}^{n} beta_k Sum_{i=0}^{n-k} alpha_i.
Rational exchange_residual(const Sequence& alpha, const Sequence& beta, long n);

enum class ClosedDiff { diffak, diffbk, diffbbk };

// Closed-form difference minus the direct delta/nabla of the corresponding
// telescoped sequence, at the master-parameter point (symbols a1..a4, x1..x4,
// half-bases p1..p4, q1..q4). Exactly 0; certifies the telescoping steps.
Rational closed_diff_residual(ClosedDiff which, const ParamPoint& point, long k);

}  // namespace qabel
