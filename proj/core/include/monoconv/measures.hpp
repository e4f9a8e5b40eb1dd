#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "monoconv/errors.hpp"

namespace monoconv {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMergeTol = 1e-9;          // relative to 1+|x|
inline constexpr double kSupportThreshold = 1e-12;  // density floor for support queries
inline constexpr double kAtomicMassTol = 1e-12;
inline constexpr double kGridMassTol = 1e-3;

struct Atom {
    double x;
    double w;
};

/// Finite positive combination of point masses, kept sorted and merged.
class AtomicMeasure {
public:
    AtomicMeasure() = default;
    /// Sorts, merges positions closer than the merge tolerance and rejects
    /// non-positive or non-finite weights.
    explicit AtomicMeasure(std::vector<Atom> atoms);

    static AtomicMeasure dirac(double a) { return AtomicMeasure({{a, 1.0}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    double mass() const;
    std::vector<double> positions() const;
    std::vector<double> weights() const;

private:
    std::vector<Atom> atoms_;
};

/// Declared power-law tails beyond the sampled window: density ~ C|x|^{-p}.
/// A NaN exponent means the density vanishes outside the window.
struct TailModel {
    double left_exponent = std::numeric_limits<double>::quiet_NaN();
    double right_exponent = std::numeric_limits<double>::quiet_NaN();
    bool unbounded_left() const { return left_exponent == left_exponent; }
    bool unbounded_right() const { return right_exponent == right_exponent; }
};

/// Sampled density on a strictly increasing grid plus an atomic part.
class GridMeasure {
public:
    GridMeasure() = default;
    GridMeasure(std::vector<double> xs, std::vector<double> density, AtomicMeasure atoms = {},
                TailModel tail = {});

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& density() const { return density_; }
    const AtomicMeasure& atoms() const { return atoms_; }
    const TailModel& tail() const { return tail_; }

    double density_mass() const;
    double mass() const { return density_mass() + atoms_.mass(); }

private:
    std::vector<double> xs_;
    std::vector<double> density_;
    AtomicMeasure atoms_;
    TailModel tail_;
};

// Analytic families. Parameters only; sampling happens in the transforms layer.
struct Arcsine {
    double t;
};
struct DeformedArcsine {
    double t;
    double c;
};
struct MonotonePoisson {
    double lambda;
    double t;
};
struct Stable {
    double alpha;
    cplx b;
    cplx c;
    double t;
};
struct Dirac {
    double a;
};

using AnalyticFamily = std::variant<Arcsine, DeformedArcsine, MonotonePoisson, Stable, Dirac>;
using Measure = std::variant<AtomicMeasure, GridMeasure, AnalyticFamily>;

struct Bounds {
    double lo;
    double hi;
};

/// Outer interval guaranteed to contain supp(nu |> mu), and the reach the
/// convolution is guaranteed to attain: a <= a_reach and b >= b_reach.
struct ConvBounds {
    Bounds outer;
    double a_reach;
    double b_reach;
};

std::string family_name(const AnalyticFamily& f);

/// Throws ValidationError for malformed parameters.
void validate(const Measure& m);

double total_mass(const Measure& m);
bool is_probability(const Measure& m);
Bounds support_bounds(const Measure& m);
ConvBounds conv_support_bounds(const Measure& nu, const Measure& mu);
Measure dilate(const Measure& m, double lambda);

/// Trapezoid rule on a sampled function.
double trapezoid(const std::vector<double>& xs, const std::vector<double>& ys);

/// Integral of f against a finite measure: exact sum on atoms, trapezoid on
/// grids. Analytic families are rejected (ValidationError).
template <class F>
double integrate(const Measure& m, F&& f);

/// Value of the integral of 1/x against tau when supp tau is in [0,inf),
/// tau has no atom at 0 and the integral converges; nullopt otherwise.
std::optional<double> positive_inverse_integral(const Measure& tau);

/// Lower and upper ends of supp tau for a finite (non-probability) measure;
/// returns (+inf, -inf) for the zero measure.
Bounds measure_extent(const Measure& tau);

bool is_zero_measure(const Measure& m);

/// Mirror image x -> -x.
Measure reflect(const Measure& m);

// ---- template implementation ----

template <class F>
double integrate(const Measure& m, F&& f) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) {
        double s = 0.0;
        for (const auto& at : a->atoms()) s += at.w * f(at.x);
        return s;
    }
    if (const auto* g = std::get_if<GridMeasure>(&m)) {
        std::vector<double> ys(g->xs().size());
        for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = g->density()[i] * f(g->xs()[i]);
        double s = trapezoid(g->xs(), ys);
        for (const auto& at : g->atoms().atoms()) s += at.w * f(at.x);
        return s;
    }
    if (const auto* fam = std::get_if<AnalyticFamily>(&m)) {
        if (const auto* d = std::get_if<Dirac>(fam)) return f(d->a);
    }
    throw ValidationError("integrate: analytic family needs explicit sampling");
}

}  // namespace monoconv
