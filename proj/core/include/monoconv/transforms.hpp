#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoconv/measures.hpp"

namespace monoconv {

/// z -> H(z) on the upper half-plane, with a note on where it came from.
struct TransformEvaluator {
    std::function<cplx(cplx)> H;
    std::string provenance;
    /// Extra candidate atom positions for inversion.
    std::vector<double> atom_hints;

    cplx operator()(cplx z) const { return H(z); }
};

/// H = z + b + int (1+xz)/(x-z) d eta
struct NevanlinnaRep {
    double b = 0.0;
    Measure eta = AtomicMeasure{};
};

/// H = a + z + int d rho/(x-z), a = -mean, rho(R) = variance
struct FiniteVarianceRep {
    double a = 0.0;
    Measure rho = AtomicMeasure{};
};

struct Collision {
    cplx z1;
    cplx z2;
    double im_product() const { return z1.imag() * z2.imag(); }
};

cplx cauchy_G(const Measure& m, cplx z);
cplx reciprocal_H(const Measure& m, cplx z);
TransformEvaluator evaluator_of(const Measure& m);
TransformEvaluator closed_form(std::function<cplx(cplx)> H, std::string label);

cplx evaluate(const NevanlinnaRep& rep, cplx z);
cplx evaluate(const FiniteVarianceRep& rep, cplx z);

FiniteVarianceRep finite_variance_rep(const Measure& m);
NevanlinnaRep nevanlinna_rep(const FiniteVarianceRep& rep);

// ---- inversion ----

/// Geometric 1e-2 .. 1e-7 with ratio 1/sqrt(10).
std::vector<double> default_eps_schedule();

struct InversionDiagnostics {
    std::size_t divergent_points = 0;
    /// Grid points where |G(x+i eps)| keeps growing as eps shrinks although
    /// no atom was confirmed there (heuristic boundary-divergence scan).
    std::vector<double> boundary_divergence;
    std::vector<double> rejected_candidates;
};

inline constexpr double kAtomThreshold = 1e-5;

/// Density from the boundary values of G = 1/h with Richardson
/// extrapolation over eps, plus atoms found at sign changes of Re h.
GridMeasure stieltjes_invert(const TransformEvaluator& h, const std::vector<double>& xs,
                             const std::vector<double>& eps_schedule = default_eps_schedule(),
                             InversionDiagnostics* diagnostics = nullptr);

/// Extrapolated lim iy G(a+iy); 0 below the atom threshold.
double atom_weight_at(const TransformEvaluator& h, double a,
                      const std::vector<double>& y_schedule = default_eps_schedule());

/// mu((-inf, b)) through a contour form of the inversion formula; no grid.
double mass_below(const TransformEvaluator& h, double b);
/// mu((b, inf)), same technique.
double mass_above(const TransformEvaluator& h, double b);
/// mu((a, b)).
double interval_mass(const TransformEvaluator& h, double a, double b);

// ---- injectivity ----

/// Default seed pairs: a few imaginary-axis pairs followed by all pairs of
/// a 10x10 grid with Im log-spaced in [0.05, 20] and Re in [-10, 10].
std::vector<std::pair<cplx, cplx>> default_collision_seeds();

/// Damped Newton on h(z) - h(z1) from each seed pair; returns the collision
/// with the largest Im z1 * Im z2, if any.
std::optional<Collision> collision_search(
    const TransformEvaluator& h,
    const std::vector<std::pair<cplx, cplx>>& seeds = default_collision_seeds());

/// floor(rho(R) / (Im z1 Im z2)); 0 flags a contradiction.
long divisibility_bound(const FiniteVarianceRep& rep, const Collision& collision);

/// Support of the measure in [0, inf) from its Nevanlinna pair.
bool positivity_check(const NevanlinnaRep& rep);

}  // namespace monoconv
