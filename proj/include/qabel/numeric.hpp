#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qabel/bigfloat.hpp"
#include "qabel/sample.hpp"

namespace qabel {

// Infinite identities are evaluated at exact rational seed points converted
// to BigFloat at the policy's precision, so runs are bit-reproducible.
using FloatPoint = ParamPoint;

struct NumericPolicy {
    double target_eps = 1e-12;
    long max_terms = 4096;
    mpfr_prec_t precision_bits = 128;
    double kappa = 10.0;  // condition factor multiplying target_eps in pass checks
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& w) : std::runtime_error(w) {}
};
class diverged_error : public numeric_error {
public:
    diverged_error() : numeric_error("series ratio test failed") {}
};
class max_terms_error : public numeric_error {
public:
    max_terms_error() : numeric_error("max_terms reached before tolerance") {}
};

// One summed series: the partial sum S_N chosen by the geometric stopping
// rule, its certified truncation bound, the oversummed value S_{4N} used by
// the soundness probe, and an allowance for the rounding noise of the partial
// sums themselves (the probe measures truncation plus roundoff, so the
// comparison must too).
struct SeriesResult {
    BigFloat value;
    BigFloat tail_bound;
    BigFloat oversum;
    BigFloat fp_noise;
    long terms = 0;

    bool sound() const { return abs(oversum - value) <= tail_bound + fp_noise; }
};

// Sums sum_k term(k) where |term(k+1)/term(k)| <= ratio_bound(k) and
// ratio_bound is nonincreasing. Stops once the geometric tail estimate drops
// below policy.target_eps, then keeps summing to 4N for the soundness probe.
SeriesResult sum_series(const std::function<BigFloat(long)>& term,
                        const std::function<BigFloat(long)>& ratio_bound,
                        const NumericPolicy& policy);

struct PhiSeries {
    std::vector<BigFloat> upper;
    std::vector<BigFloat> lower;  // excluding the implicit (q;q)_k
    BigFloat base;
    BigFloat argument;
};

struct PhiResult {
    BigFloat value;
    BigFloat tail_bound;
    long terms = 0;
};

// Basic hypergeometric series evaluation with the exact symbolic term ratio
// and a certified geometric tail majorant. Argument 0 returns exactly 1.
PhiResult phi_eval(const PhiSeries& s, const NumericPolicy& policy);

// (a;q)_n and (a;q)_infty in BigFloat; the infinite product truncates with a
// certified log-tail below eps and also runs the 4x soundness probe.
BigFloat qpoch_f(const BigFloat& a, const BigFloat& q, long n);
SeriesResult qpoch_inf_f(const BigFloat& a, const BigFloat& q, const NumericPolicy& policy);

// Outcome of one infinite-identity evaluation.
struct NumericOutcome {
    BigFloat lhs;
    BigFloat rhs;
    BigFloat residual_abs;
    BigFloat tail_total;    // sum of all constituent tail bounds
    bool tails_sound = true;
    std::vector<SeriesResult> parts;  // per-series diagnostics (sums and products)

    // The kappa condition factor absorbs cancellation; the gate scales with
    // the magnitude of the two sides so ill-conditioned sample points (large
    // intermediate values) are judged by their relative residual.
    bool pass(const NumericPolicy& policy) const {
        const BigFloat one(1L, residual_abs.prec());
        const BigFloat scale = max(one, max(abs(lhs), abs(rhs)));
        return tails_sound &&
               residual_abs < BigFloat(policy.target_eps * policy.kappa, residual_abs.prec()) * scale;
    }
};

// Evaluates the infinite identity with the given id (catalog kind=infinite).
NumericOutcome infinite_residual(const std::string& id, const FloatPoint& point,
                                 const NumericPolicy& policy);

// Residual of the iterated quadratic solution: F_inf(a q^{2(n+1)}) computed
// directly vs the n-times-iterated recurrence, n = iterations. Point carries
// a, b, c, d and half-base q.
NumericOutcome iterate_solution_residual(const FloatPoint& point, const NumericPolicy& policy,
                                         long iterations);

}  // namespace qabel
