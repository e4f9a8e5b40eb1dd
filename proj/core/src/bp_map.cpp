#include "monoconv/bp_map.hpp"

#include <cmath>
#include <numbers>

namespace monoconv {

namespace {

// (e^{ixu} - 1 - ixu/(1+x^2)) (1+x^2)/x^2, continuous at x = 0
cplx khintchine_integrand(double x, double u) {
    if (x == 0.0) return -0.5 * u * u;
    const double y = x * u;
    const double s = std::sin(0.5 * y);
    const double re = -2.0 * s * s;
    double sin_minus = std::abs(y) < 1e-2 ? -y * y * y / 6.0 + y * y * y * y * y / 120.0 : std::sin(y) - y;
    const double im = sin_minus + y * x * x / (1.0 + x * x);
    return cplx(re, im) * ((1.0 + x * x) / (x * x));
}

}  // namespace

VectorField lambda_M(const ClassicalTriple& c) { return VectorField(c.gamma, c.tau); }

ClassicalTriple lambda_M_inverse(const VectorField& V) { return {V.gamma(), V.tau()}; }

cplx classical_cf(const ClassicalTriple& c, double u) {
    const double re = integrate(c.tau, [u](double x) { return khintchine_integrand(x, u).real(); });
    const double im = integrate(c.tau, [u](double x) { return khintchine_integrand(x, u).imag(); });
    return std::exp(cplx(re, c.gamma * u + im));
}

VectorField dilation_conjugate(const VectorField& V, double lambda) {
    if (!(lambda > 0.0)) throw ValidationError("dilation factor must be positive");
    if (!V.has_pair()) {
        const Bounds e = V.tau_extent();
        Bounds ne = e.lo <= e.hi ? Bounds{lambda * e.lo, lambda * e.hi} : e;
        auto A = [V, lambda](cplx z) { return lambda * V(z / lambda); };
        return VectorField::closed_form(A, ne, "dilated " + V.label());
    }
    const double l2 = lambda * lambda;
    // tau'(dy) = k(y) tau(d(y/lambda)),  k(y) = (lambda^2 + y^2)/(1 + y^2)
    auto k = [l2](double y) { return (l2 + y * y) / (1.0 + y * y); };
    const Measure& tau = V.tau();
    const double shift = integrate(tau, [l2](double x) { return x / (1.0 + l2 * x * x); });
    const double gamma = lambda * V.gamma() - lambda * (l2 - 1.0) * shift;
    auto map_atoms = [&](const AtomicMeasure& a) {
        std::vector<Atom> v;
        for (const auto& at : a.atoms()) v.push_back({lambda * at.x, at.w * k(lambda * at.x)});
        return AtomicMeasure(std::move(v));
    };
    if (const auto* a = std::get_if<AtomicMeasure>(&tau)) return VectorField(gamma, map_atoms(*a));
    if (const auto* g = std::get_if<GridMeasure>(&tau)) {
        std::vector<double> xs = g->xs(), d = g->density();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] *= lambda;
            d[i] *= k(xs[i]) / lambda;
        }
        return VectorField(gamma, GridMeasure(std::move(xs), std::move(d), map_atoms(g->atoms()), g->tail()));
    }
    const double x = std::get<Dirac>(std::get<AnalyticFamily>(tau)).a;
    return VectorField(gamma, map_atoms(AtomicMeasure::dirac(x)));
}

VectorField stable_pair(double alpha, cplx b, const StablePairOptions& opt) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw ValidationError("stable_pair needs 0 < alpha < 2");
    if (opt.points < 4 || !(opt.window > 0.0)) throw ValidationError("stable_pair needs a window and >= 4 points");
    constexpr double pi = std::numbers::pi;
    const double c1 = b.imag() / pi;
    const double c2 = (b * std::polar(1.0, pi * (1.0 - alpha))).imag() / pi;
    const double gamma = (b * std::polar(1.0, -pi * alpha / 2.0)).imag();
    const std::size_t half = opt.points / 2;
    const double xmin = 1e-8;
    std::vector<double> pos(half);
    for (std::size_t i = 0; i < half; ++i)
        pos[i] = xmin * std::pow(opt.window / xmin, double(i) / double(half - 1));
    // tau(dx) = x^2/(1+x^2) c |x|^{-1-alpha} dx
    auto dens = [alpha](double x, double c) {
        const double ax = std::abs(x);
        return c * std::pow(ax, 1.0 - alpha) / (1.0 + ax * ax);
    };
    std::vector<double> xs, d;
    xs.reserve(2 * half);
    d.reserve(2 * half);
    for (std::size_t i = half; i-- > 0;) {
        xs.push_back(-pos[i]);
        d.push_back(std::max(0.0, dens(pos[i], c2)));
    }
    for (std::size_t i = 0; i < half; ++i) {
        xs.push_back(pos[i]);
        d.push_back(std::max(0.0, dens(pos[i], c1)));
    }
    TailModel tail;
    if (c2 > 1e-15) tail.left_exponent = 1.0 + alpha;
    if (c1 > 1e-15) tail.right_exponent = 1.0 + alpha;
    return VectorField(gamma, GridMeasure(std::move(xs), std::move(d), {}, tail));
}

}  // namespace monoconv
