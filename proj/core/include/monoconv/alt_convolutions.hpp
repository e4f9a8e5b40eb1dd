#pragma once

#include <functional>
#include <string>
#include <vector>

#include "monoconv/measures.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv {

/// z -> K(z) = z - H(z)
struct KTransform {
    std::function<cplx(cplx)> K;
    std::string provenance;
    cplx operator()(cplx z) const { return K(z); }
};

KTransform k_transform(const Measure& m);
KTransform k_transform(const TransformEvaluator& h);

/// Exact boolean convolution of atomic measures.
AtomicMeasure boolean_convolve_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu);

/// mu boolean-convolved with nu; exact when both are atomic, otherwise
/// inverted on xs.
Measure boolean_convolve(const Measure& mu, const Measure& nu, const std::vector<double>& xs);

bool boolean_subordinator_check(double gamma, const Measure& tau);
bool boolean_symmetry_check(const KTransform& K, const std::vector<cplx>& sample);

struct FreeCounterexampleParams {
    double a = 0.0;
    double c = 0.0;
    double t = 0.0;
};

cplx free_counterexample_H(const FreeCounterexampleParams& p, cplx z);
/// a t - t^2/4 + c
double free_branch_point(const FreeCounterexampleParams& p);
/// Mass of mu_t on (1e-6, inf) from grid inversion.
double free_positive_mass(const FreeCounterexampleParams& p);
std::vector<bool> free_positivity_timeline(const FreeCounterexampleParams& p,
                                           const std::vector<double>& ts);
/// Bisection on the verdict between t_lo (false) and t_hi (true).
double free_positivity_transition(const FreeCounterexampleParams& p, double t_lo, double t_hi,
                                  double tol = 1e-3);

}  // namespace monoconv
