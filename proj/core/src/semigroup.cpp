#include "monoconv/semigroup.hpp"

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

namespace monoconv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

cplx pair_eval(double gamma, const Measure& tau, cplx z) {
    cplx s = -gamma;
    auto atoms = [&](const AtomicMeasure& a) {
        for (const auto& at : a.atoms()) {
            const cplx d = at.x - z;
            if (d == cplx(0.0)) throw PoleAt(at.x);
            s += at.w * (1.0 + at.x * z) / d;
        }
    };
    if (const auto* a = std::get_if<AtomicMeasure>(&tau)) {
        atoms(*a);
    } else if (const auto* g = std::get_if<GridMeasure>(&tau)) {
        const auto& xs = g->xs();
        const auto& f = g->density();
        if (z.imag() == 0.0) {
            const Bounds b = support_bounds(Measure{GridMeasure(xs, f)});
            if (b.lo <= z.real() && z.real() <= b.hi) throw PoleAt(z.real());
        }
        auto term = [&](std::size_t i) { return f[i] * (1.0 + xs[i] * z) / (xs[i] - z); };
        cplx prev = term(0);
        for (std::size_t i = 1; i < xs.size(); ++i) {
            const cplx cur = term(i);
            s += 0.5 * (xs[i] - xs[i - 1]) * (cur + prev);
            prev = cur;
        }
        atoms(g->atoms());
    } else {
        atoms(AtomicMeasure::dirac(std::get<Dirac>(std::get<AnalyticFamily>(tau)).a));
    }
    return s;
}

cplx pair_derivative(const Measure& tau, cplx z) {
    cplx s = 0.0;
    auto atoms = [&](const AtomicMeasure& a) {
        for (const auto& at : a.atoms()) {
            const cplx d = at.x - z;
            if (d == cplx(0.0)) throw PoleAt(at.x);
            s += at.w * (1.0 + at.x * at.x) / (d * d);
        }
    };
    if (const auto* a = std::get_if<AtomicMeasure>(&tau)) {
        atoms(*a);
    } else if (const auto* g = std::get_if<GridMeasure>(&tau)) {
        const auto& xs = g->xs();
        const auto& f = g->density();
        for (std::size_t i = 1; i < xs.size(); ++i) {
            const cplx d0 = xs[i - 1] - z, d1 = xs[i] - z;
            s += 0.5 * (xs[i] - xs[i - 1]) *
                 (f[i - 1] * (1.0 + xs[i - 1] * xs[i - 1]) / (d0 * d0) + f[i] * (1.0 + xs[i] * xs[i]) / (d1 * d1));
        }
        atoms(g->atoms());
    } else {
        atoms(AtomicMeasure::dirac(std::get<Dirac>(std::get<AnalyticFamily>(tau)).a));
    }
    return s;
}

double real_field(const VectorField& V, double u) { return V(cplx(u, 0.0)).real(); }

template <class F>
double bisect_increasing(F&& f, double lo, double hi) {
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> time_grid(double T, int steps) {
    if (!(T >= 0.0) || steps < 1) throw ValidationError("need T >= 0 and at least one step");
    std::vector<double> ts(steps + 1);
    for (int i = 0; i <= steps; ++i) ts[i] = T * double(i) / double(steps);
    return ts;
}

template <class F>
double quad(F&& f, double a, double b) {
    if (a == b) return 0.0;
    static thread_local boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, a, b, 1e-13);
}

// root of a decreasing function on [lo, hi] with f(lo) > 0 > f(hi)
template <class F>
double solve_decreasing(F&& f, double lo, double hi) {
    std::uintmax_t iters = 300;
    auto tol = boost::math::tools::eps_tolerance<double>(48);
    auto r = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
    return 0.5 * (r.first + r.second);
}

}  // namespace

VectorField::VectorField(double gamma, Measure tau) : gamma_(gamma), tau_(std::move(tau)) {
    if (!std::isfinite(gamma)) throw ValidationError("gamma must be finite");
    if (const auto* f = std::get_if<AnalyticFamily>(&tau_); f && !std::holds_alternative<Dirac>(*f))
        throw ValidationError("tau must be an atomic, grid or dirac measure");
    extent_ = measure_extent(tau_);
    label_ = "pair";
}

VectorField VectorField::closed_form(std::function<cplx(cplx)> A, Bounds tau_extent, std::string label) {
    VectorField V;
    V.closed_ = std::make_shared<const std::function<cplx(cplx)>>(std::move(A));
    V.extent_ = tau_extent;
    V.label_ = std::move(label);
    return V;
}

double VectorField::gamma() const {
    if (closed_) throw ValidationError("closed-form field '" + label_ + "' carries no explicit pair");
    return gamma_;
}

const Measure& VectorField::tau() const {
    if (closed_) throw ValidationError("closed-form field '" + label_ + "' carries no explicit pair");
    return tau_;
}

cplx VectorField::operator()(cplx z) const {
    if (closed_) return (*closed_)(z);
    return pair_eval(gamma_, tau_, z);
}

cplx field_eval(const VectorField& V, cplx z) { return V(z); }

cplx field_derivative(const VectorField& V, cplx z) {
    if (V.has_pair()) return pair_derivative(V.tau(), z);
    const double h = 1e-6 * (1.0 + std::abs(z));
    return (V(z + h) - V(z - h)) / (2.0 * h);
}

VectorField reflect(const VectorField& V) {
    if (V.has_pair()) return VectorField(-V.gamma(), reflect(V.tau()));
    const Bounds e = V.tau_extent();
    auto A = [V](cplx z) { return -std::conj(V(-std::conj(z))); };
    return VectorField::closed_form(A, {-e.hi, -e.lo}, "reflected " + V.label());
}

cplx flow(const VectorField& V, cplx z0, double t, const OdeOptions& opt) {
    if (!(t >= 0.0)) throw ValidationError("flow time must be non-negative");
    if (t == 0.0) return z0;
    auto f = [&V](cplx z) { return V(z); };
    if (z0.imag() > 0.0) return dopri5(f, z0, 0.0, t, opt, [](const cplx& z) { return z.imag() > 0.0; });
    return dopri5(f, z0, 0.0, t, opt);
}

TransformEvaluator flow_evaluator(const VectorField& V, double t, double shift) {
    TransformEvaluator h;
    h.H = [V, t, shift](cplx z) { return flow(V, z, t) - shift; };
    h.provenance = "flow:" + V.label();
    if (t == 0.0) h.atom_hints.push_back(shift);
    return h;
}

std::string to_string(AtomCase c) {
    switch (c) {
        case AtomCase::A: return "A";
        case AtomCase::Aprime: return "A'";
        case AtomCase::B: return "B";
        case AtomCase::C: return "C";
        case AtomCase::D: return "D";
    }
    return "?";
}

std::string to_string(EdgeCase c) {
    switch (c) {
        case EdgeCase::a: return "a";
        case EdgeCase::b: return "b";
        case EdgeCase::c: return "c";
    }
    return "?";
}

CaseLabel classify_field(const VectorField& V) {
    const Bounds ext = V.tau_extent();
    if (ext.lo == kInf) throw UnboundedBelowTau("tau is the zero measure; there is no support edge");
    if (ext.lo == -kInf) throw UnboundedBelowTau("supp tau is unbounded below");
    const double a = ext.lo;
    const double s = 1.0 + std::abs(a);
    auto A = [&](double u) { return real_field(V, u); };

    CaseLabel L;
    L.a_tau = a;
    // A increases on (-inf, a): scan outward from the edge for the first negative value.
    double prev_u = kNaN;
    bool found_negative = false;
    for (int j = 0; j <= 48; ++j) {
        const double u = a - s * 1e-12 * std::pow(10.0, 0.5 * j);
        double v;
        try {
            v = A(u);
        } catch (const PoleAt&) {
            continue;
        }
        if (v < 0.0) {
            found_negative = true;
            if (std::isnan(prev_u)) {
                L.edge = EdgeCase::c;
                L.edge_limit_zero = std::abs(v) < 1e-5;
            } else {
                L.edge = EdgeCase::b;
                L.u0 = bisect_increasing(A, u, prev_u);
            }
            break;
        }
        prev_u = u;
    }
    if (!found_negative) L.edge = EdgeCase::a;

    if (a > 0.0) {
        const double A0 = A(0.0);
        if (std::abs(A0) <= 1e-12) {
            L.atom = AtomCase::B;
            L.u0 = 0.0;
        } else if (A0 > 0.0) {
            L.atom = L.edge == EdgeCase::b ? AtomCase::Aprime : AtomCase::A;
        } else {
            L.atom = L.edge == EdgeCase::b ? AtomCase::C : AtomCase::D;
        }
    }
    return L;
}

AtomTrack atom_track(const VectorField& V, double T, int steps) {
    const CaseLabel L = classify_field(V);
    if (!L.atom) throw CaseMismatch("atom tracking needs a(tau) > 0");
    AtomTrack tr;
    tr.label = *L.atom;
    tr.times = time_grid(T, steps);
    const double a = L.a_tau;
    auto A = [&](double u) { return real_field(V, u); };

    if (tr.label == AtomCase::B) {
        const double d = field_derivative(V, cplx(0.0, 0.0)).real();
        for (double t : tr.times) {
            tr.theta.push_back(0.0);
            tr.weight.push_back(std::exp(-d * t));
        }
        return tr;
    }

    const double A0 = A(0.0);
    auto weight = [&](double th) { return std::clamp(A(th) / A0, 0.0, 1.0); };

    if (tr.label == AtomCase::D) {
        // theta runs up to a(tau); invert t = int_0^theta du / (-A(u))
        auto elapsed = [&](double th) { return quad([&](double u) { return -1.0 / A(u); }, 0.0, th); };
        double t0;
        try {
            t0 = elapsed(a);
            if (!std::isfinite(t0)) t0 = kInf;
        } catch (const std::exception&) {
            t0 = kInf;
        }
        tr.death_time = t0;
        for (double t : tr.times) {
            if (t == 0.0) {
                tr.theta.push_back(0.0);
                tr.weight.push_back(1.0);
            } else if (t >= t0) {
                tr.theta.push_back(a);
                tr.weight.push_back(0.0);
            } else {
                const double th = solve_decreasing([&](double x) { return t - elapsed(x); }, 0.0, a);
                tr.theta.push_back(th);
                tr.weight.push_back(weight(th));
            }
        }
        return tr;
    }

    // A, A', C: theta moves monotonically toward u0 and never reaches it.
    const double lo = tr.label == AtomCase::C ? 0.0 : (std::isnan(L.u0) ? -kInf : L.u0);
    const double hi = tr.label == AtomCase::C ? L.u0 : 0.0;
    auto rhs = [&](double th) { return -A(th); };
    auto guard = [&](const double& th) { return th >= lo && th <= hi; };
    double th = 0.0, tprev = 0.0;
    for (double t : tr.times) {
        th = dopri5(rhs, th, tprev, t, OdeOptions{}, guard);
        tprev = t;
        tr.theta.push_back(th);
        tr.weight.push_back(weight(th));
    }
    return tr;
}

EdgeTrack support_edge(const VectorField& V, double T, int steps) {
    const CaseLabel L = classify_field(V);
    EdgeTrack tr;
    tr.label = L.edge;
    tr.times = time_grid(T, steps);
    const double a = L.a_tau;
    if (L.edge == EdgeCase::c) {
        tr.low_confidence = L.edge_limit_zero;
        tr.E.assign(tr.times.size(), a);
        return tr;
    }
    auto A = [&](double u) { return real_field(V, u); };
    // time for the edge to travel from a(tau) down to E
    auto travel = [&](double E) { return quad([&](double u) { return 1.0 / A(u); }, E, a); };
    const double floor = L.edge == EdgeCase::b ? L.u0 : -kInf;
    const double s = 1.0 + std::abs(a);
    for (double t : tr.times) {
        if (t == 0.0) {
            tr.E.push_back(a);
            continue;
        }
        auto F = [&](double E) { return travel(E) - t; };
        double lo;
        if (std::isfinite(floor)) {
            double d = 0.5 * (a - floor);
            lo = floor + d;
            while (!(F(lo) > 0.0)) {
                d *= 0.5;
                lo = floor + d;
                if (d < 1e-14 * s) break;
            }
        } else {
            double d = s;
            lo = a - d;
            while (!(F(lo) > 0.0)) {
                d *= 2.0;
                lo = a - d;
                if (d > 1e15 * s) throw StepUnderflow("support edge escaped to -infinity");
            }
        }
        tr.E.push_back(F(lo) > 0.0 ? solve_decreasing(F, lo, a) : lo);
    }
    return tr;
}

FlowResult evolve(const VectorField& V, cplx z0, double T, int steps) {
    FlowResult out;
    out.times = time_grid(T, steps);
    cplx z = z0;
    double tprev = 0.0;
    for (double t : out.times) {
        z = flow(V, z, t - tprev);
        tprev = t;
        out.H_values.push_back(z);
    }
    try {
        out.label = classify_field(V);
    } catch (const Error&) {
        return out;
    }
    if (out.label->atom) {
        try {
            out.atom = atom_track(V, T, steps);
        } catch (const Error&) {
        }
    }
    try {
        out.edge = support_edge(V, T, steps);
    } catch (const Error&) {
    }
    return out;
}

bool subordinator_check(const VectorField& V) {
    const auto inv = positive_inverse_integral(V.tau());
    if (!inv) return false;
    return V.gamma() >= *inv - 1e-12;
}

bool bounded_below_check(const VectorField& V) { return V.tau_extent().lo > -kInf; }

GridMeasure markov_kernel(const VectorField& V, double t, double x, const std::vector<double>& xs,
                          const std::vector<double>& eps_schedule) {
    if (!(t >= 0.0)) throw ValidationError("kernel time must be non-negative");
    return stieltjes_invert(flow_evaluator(V, t, x), xs, eps_schedule);
}

}  // namespace monoconv
