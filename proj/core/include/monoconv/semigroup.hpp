#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monoconv/measures.hpp"
#include "monoconv/ode.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv {

/// Monotone Levy-Khintchine vector field A(z) = -gamma + int (1+xz)/(x-z) d tau.
/// Either an explicit pair (gamma, tau) or a closed-form A with declared
/// support bounds for tau.
class VectorField {
public:
    VectorField(double gamma, Measure tau);

    static VectorField closed_form(std::function<cplx(cplx)> A, Bounds tau_extent,
                                   std::string label);

    bool has_pair() const { return !closed_; }
    double gamma() const;
    const Measure& tau() const;
    const std::string& label() const { return label_; }

    /// Lower and upper ends of supp tau; (+inf, -inf) for tau = 0.
    Bounds tau_extent() const { return extent_; }

    cplx operator()(cplx z) const;

private:
    VectorField() = default;
    double gamma_ = 0.0;
    Measure tau_ = AtomicMeasure{};
    std::shared_ptr<const std::function<cplx(cplx)>> closed_;
    Bounds extent_{kInf, -kInf};
    std::string label_;
};

cplx field_eval(const VectorField& V, cplx z);
/// A'(z): exact for atomic tau, trapezoid for grids, central differences otherwise.
cplx field_derivative(const VectorField& V, cplx z);
/// Field of the mirrored semigroup, A_r(z) = -conj(A(-conj z)).
VectorField reflect(const VectorField& V);

cplx flow(const VectorField& V, cplx z0, double t, const OdeOptions& opt = {});
/// z -> H_t(z) - shift.
TransformEvaluator flow_evaluator(const VectorField& V, double t, double shift = 0.0);

enum class AtomCase { A, Aprime, B, C, D };
enum class EdgeCase { a, b, c };

struct CaseLabel {
    std::optional<AtomCase> atom;  // only when a(tau) > 0
    EdgeCase edge = EdgeCase::a;
    double a_tau = 0.0;
    /// Zero of A on (-inf, a(tau)) when it exists, NaN otherwise.
    double u0 = std::numeric_limits<double>::quiet_NaN();
    /// lim_{u -> a(tau)-} A(u) is zero within tolerance.
    bool edge_limit_zero = false;
};

std::string to_string(AtomCase c);
std::string to_string(EdgeCase c);

CaseLabel classify_field(const VectorField& V);

struct AtomTrack {
    std::vector<double> times;
    std::vector<double> theta;
    std::vector<double> weight;
    AtomCase label = AtomCase::A;
    /// First time theta reaches a(tau) in case D, +inf otherwise.
    double death_time = kInf;
};

struct EdgeTrack {
    std::vector<double> times;
    std::vector<double> E;
    EdgeCase label = EdgeCase::a;
    bool low_confidence = false;
};

struct FlowResult {
    std::vector<double> times;
    std::vector<cplx> H_values;
    std::optional<AtomTrack> atom;
    std::optional<EdgeTrack> edge;
    std::optional<CaseLabel> label;
};

AtomTrack atom_track(const VectorField& V, double T, int steps);
EdgeTrack support_edge(const VectorField& V, double T, int steps);
FlowResult evolve(const VectorField& V, cplx z0, double T, int steps);

bool subordinator_check(const VectorField& V);
bool bounded_below_check(const VectorField& V);

GridMeasure markov_kernel(const VectorField& V, double t, double x, const std::vector<double>& xs,
                          const std::vector<double>& eps_schedule = default_eps_schedule());

}  // namespace monoconv
