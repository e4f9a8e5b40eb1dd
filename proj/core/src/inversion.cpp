#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "monoconv/transforms.hpp"

namespace monoconv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Extrapolated {
    double value = kNaN;
    bool converged = false;
};

// Two-point Richardson on each consecutive pair (linear error in eps), then
// keep the pair whose neighbouring estimates agree best.
Extrapolated richardson(const std::vector<double>& eps, const std::vector<double>& v) {
    std::vector<double> R;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        if (!std::isfinite(v[k]) || !std::isfinite(v[k + 1])) {
            R.push_back(kNaN);
            continue;
        }
        const double r = eps[k + 1] / eps[k];
        R.push_back((v[k + 1] - r * v[k]) / (1.0 - r));
    }
    Extrapolated out;
    double best = kNaN;
    for (std::size_t k = 0; k + 1 < R.size(); ++k) {
        if (!std::isfinite(R[k]) || !std::isfinite(R[k + 1])) continue;
        const double d = std::abs(R[k + 1] - R[k]);
        if (!(d >= best)) {
            best = d;
            out.value = R[k + 1];
        }
    }
    if (std::isfinite(out.value)) {
        out.converged = best <= 1e-6 + 1e-2 * std::abs(out.value);
        return out;
    }
    for (std::size_t k = v.size(); k-- > 0;)
        if (std::isfinite(v[k])) return {v[k], false};
    return out;
}

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t nt = std::min<std::size_t>(hw, std::max<std::size_t>(1, n / 16));
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < n; i += nt) body(i);
        });
    for (auto& th : pool) th.join();
}

cplx safe_G(const TransformEvaluator& h, cplx z) {
    try {
        const cplx H = h(z);
        return 1.0 / H;
    } catch (const Error&) {
        return {kNaN, kNaN};
    }
}

double refine_zero(const TransformEvaluator& h, double lo, double hi, double eps) {
    auto f = [&](double x) {
        try {
            return h(cplx(x, eps)).real();
        } catch (const Error&) {
            return kNaN;
        }
    };
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (!std::isfinite(fm)) break;
        if ((fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Re G(b+iy) can blow up like y^{-1/2} at a support edge; y = u^2 smooths that.
// Tolerances sit above the noise floor of ODE-backed evaluators.
double vertical_leg(const TransformEvaluator& h, double b, double Y) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double u) { return 2.0 * u * (1.0 / h(cplx(b, u * u))).real(); };
    return gauss_kronrod<double, 31>::integrate(f, 0.0, std::sqrt(Y), 10, 1e-9);
}

// integral of Im G(x + iY) over x in (lo, hi); infinite ends allowed
double horizontal_leg(const TransformEvaluator& h, double lo, double hi, double Y) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double x) { return (1.0 / h(cplx(x, Y))).imag(); };
    if (std::isinf(lo) && std::isinf(hi)) return -std::numbers::pi;
    if (std::isinf(lo)) {
        auto g = [&](double s) { return f(hi - s); };
        return gauss_kronrod<double, 31>::integrate(g, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-9);
    }
    if (std::isinf(hi)) {
        auto g = [&](double s) { return f(lo + s); };
        return gauss_kronrod<double, 31>::integrate(g, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-9);
    }
    return gauss_kronrod<double, 31>::integrate(f, lo, hi, 10, 1e-9);
}

constexpr double kContourHeight = 1.0;

}  // namespace

std::vector<double> default_eps_schedule() {
    std::vector<double> eps;
    const double r = 1.0 / std::sqrt(10.0);
    double e = 1e-2;
    for (int k = 0; k < 11; ++k, e *= r) eps.push_back(e);
    eps.back() = 1e-7;
    return eps;
}

double atom_weight_at(const TransformEvaluator& h, double a, const std::vector<double>& ys) {
    std::vector<double> v(ys.size());
    for (std::size_t k = 0; k < ys.size(); ++k) {
        const cplx G = safe_G(h, cplx(a, ys[k]));
        v[k] = (cplx(0.0, ys[k]) * G).real();
    }
    Extrapolated e = richardson(ys, v);
    const double w = std::isfinite(e.value) ? e.value : 0.0;
    return w < kAtomThreshold ? 0.0 : w;
}

GridMeasure stieltjes_invert(const TransformEvaluator& h, const std::vector<double>& xs,
                             const std::vector<double>& eps, InversionDiagnostics* diagnostics) {
    if (xs.size() < 2) throw ValidationError("inversion grid needs at least two points");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw ValidationError("inversion grid must be strictly increasing");
    if (eps.size() < 3) throw ValidationError("eps schedule needs at least three values");
    for (std::size_t k = 0; k < eps.size(); ++k)
        if (!(eps[k] > 0.0) || (k > 0 && !(eps[k] < eps[k - 1])))
            throw ValidationError("eps schedule must be positive and decreasing");

    const std::size_t n = xs.size(), K = eps.size();
    std::vector<cplx> table(n * K);
    parallel_for(n, [&](std::size_t j) {
        for (std::size_t k = 0; k < K; ++k) table[j * K + k] = safe_G(h, cplx(xs[j], eps[k]));
    });

    // Atom candidates: Re H crosses zero upward between neighbours.
    const double eps_r = eps.back() * 1e-3;
    std::vector<double> candidates;
    std::vector<double> reH(n, kNaN);
    for (std::size_t j = 0; j < n; ++j) {
        const cplx G = table[j * K + K - 1];
        if (std::isfinite(G.real())) reH[j] = (1.0 / G).real();
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (!std::isfinite(reH[j]) || !std::isfinite(reH[j + 1])) continue;
        if (reH[j] == 0.0) candidates.push_back(xs[j]);
        else if (reH[j] < 0.0 && reH[j + 1] >= 0.0)
            candidates.push_back(reH[j + 1] == 0.0 ? xs[j + 1] : refine_zero(h, xs[j], xs[j + 1], eps_r));
    }
    for (double a : h.atom_hints) candidates.push_back(a);

    InversionDiagnostics diag;
    std::vector<Atom> atoms;
    for (double a : candidates) {
        bool seen = false;
        for (const auto& at : atoms)
            if (std::abs(at.x - a) < kMergeTol * (1.0 + std::abs(a))) seen = true;
        if (seen) continue;
        const double w = atom_weight_at(h, a, eps);
        if (w > 0.0) atoms.push_back({a, w});
        else diag.rejected_candidates.push_back(a);
    }

    std::vector<double> density(n, 0.0);
    std::vector<char> near_atom(n, 0), ok(n, 1);
    parallel_for(n, [&](std::size_t j) {
        const double x = xs[j];
        for (const auto& at : atoms)
            if (std::abs(x - at.x) < 1e-6 * (1.0 + std::abs(at.x))) near_atom[j] = 1;
        if (near_atom[j]) return;
        std::vector<double> v(K);
        for (std::size_t k = 0; k < K; ++k) {
            double val = -table[j * K + k].imag() / std::numbers::pi;
            for (const auto& at : atoms) {
                const double d = x - at.x;
                val -= at.w * eps[k] / (std::numbers::pi * (d * d + eps[k] * eps[k]));
            }
            v[k] = val;
        }
        Extrapolated e = richardson(eps, v);
        ok[j] = e.converged;
        density[j] = std::isfinite(e.value) ? std::max(0.0, e.value) : 0.0;
    });

    for (std::size_t j = 0; j < n; ++j) {
        if (!near_atom[j]) continue;
        double left = 0.0, right = 0.0;
        for (std::size_t i = j; i-- > 0;)
            if (!near_atom[i]) {
                left = density[i];
                break;
            }
        for (std::size_t i = j + 1; i < n; ++i)
            if (!near_atom[i]) {
                right = density[i];
                break;
            }
        density[j] = 0.5 * (left + right);
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (near_atom[j]) continue;
        if (!ok[j]) ++diag.divergent_points;
        const double g0 = std::abs(table[j * K]);
        const double g1 = std::abs(table[j * K + K - 1]);
        if (std::isfinite(g1) && g1 > 1e3 * std::max(g0, 1e-300)) diag.boundary_divergence.push_back(xs[j]);
    }
    if (diagnostics) *diagnostics = diag;
    if (double(diag.divergent_points) > 0.01 * double(n))
        throw GridTooCoarse("eps extrapolation failed at " + std::to_string(diag.divergent_points) + " of " +
                            std::to_string(n) + " grid points");
    return GridMeasure(xs, std::move(density), AtomicMeasure(std::move(atoms)));
}

double mass_below(const TransformEvaluator& h, double b) {
    const double Y = kContourHeight;
    const double v = vertical_leg(h, b, Y);
    const double w = horizontal_leg(h, -std::numeric_limits<double>::infinity(), b, Y);
    return (v - w) / std::numbers::pi;
}

double mass_above(const TransformEvaluator& h, double b) {
    const double Y = kContourHeight;
    const double v = vertical_leg(h, b, Y);
    const double w = horizontal_leg(h, b, std::numeric_limits<double>::infinity(), Y);
    return (-v - w) / std::numbers::pi;
}

double interval_mass(const TransformEvaluator& h, double a, double b) {
    if (!(a < b)) return 0.0;
    const double Y = kContourHeight;
    const double vb = vertical_leg(h, b, Y);
    const double va = vertical_leg(h, a, Y);
    const double w = horizontal_leg(h, a, b, Y);
    return (vb - va - w) / std::numbers::pi;
}

}  // namespace monoconv
