#include "monoconv/atomic_conv.hpp"

#include <cmath>

namespace monoconv {

namespace {

// Bisection to full double resolution on a bracket where f changes sign.
// `rising` tells which way f crosses zero between lo and hi.
template <class F>
double bisect(F&& f, double lo, double hi, bool rising) {
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double v = f(mid);
        if (v == 0.0) return mid;
        if ((v < 0.0) == rising) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double cauchy_real(const std::vector<Atom>& atoms, double x) {
    double s = 0.0;
    for (const auto& a : atoms) s += a.w / (x - a.x);
    return s;
}

void require_probability(const AtomicMeasure& m, const char* who) {
    if (m.empty() || std::abs(m.mass() - 1.0) > kAtomicMassTol)
        throw ValidationError(std::string(who) + " needs a probability measure");
}

}  // namespace

AtomicMeasure point_convolve(double b, const AtomicMeasure& nu) {
    require_probability(nu, "point_convolve");
    if (b == 0.0) return nu;
    const auto& at = nu.atoms();
    const std::size_t m = at.size();
    // Atoms of delta_b |> nu are the solutions of G_nu(x) = 1/b; G_nu decreases
    // between consecutive atoms, so each gap holds one root and the last one
    // sits outside on the side given by the sign of b.
    const double target = 1.0 / b;
    auto g = [&](double x) { return cauchy_real(at, x) - target; };
    std::vector<double> roots;
    roots.reserve(m);
    for (std::size_t k = 0; k + 1 < m; ++k) roots.push_back(bisect(g, at[k].x, at[k + 1].x, false));
    double width = std::abs(b) * std::max(1.0, nu.mass()) + 1.0;
    if (b > 0.0) {
        const double a = at.back().x;
        while (!(g(a + width) < 0.0)) width *= 2.0;
        roots.push_back(bisect(g, a, a + width, false));
    } else {
        const double a = at.front().x;
        while (!(g(a - width) > 0.0)) width *= 2.0;
        roots.insert(roots.begin(), bisect(g, a - width, a, false));
    }

    // mu_i = prod_k (b_i - a_k) / (b prod_{k != i} (b_i - b_k)), in log form
    std::vector<Atom> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        double logmag = -std::log(std::abs(b));
        bool negative = b < 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double d = roots[i] - at[k].x;
            logmag += std::log(std::abs(d));
            negative ^= d < 0.0;
            if (k != i) {
                const double e = roots[i] - roots[k];
                logmag -= std::log(std::abs(e));
                negative ^= e < 0.0;
            }
        }
        const double w = std::exp(logmag);
        if (negative || !(w > 0.0))
            throw AtomCollision("non-positive weight in point convolution; roots not separated");
        out.push_back({roots[i], w});
    }
    AtomicMeasure res(std::move(out));
    if (res.size() != m) throw AtomCollision("point convolution produced coinciding atoms");
    return res;
}

AtomicMeasure monotone_convolve_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    require_probability(mu, "monotone_convolve_atomic");
    require_probability(nu, "monotone_convolve_atomic");
    std::vector<Atom> all;
    all.reserve(mu.size() * nu.size());
    for (const auto& a : mu.atoms()) {
        const AtomicMeasure part = point_convolve(a.x, nu);
        for (const auto& p : part.atoms()) all.push_back({p.x, a.w * p.w});
    }
    AtomicMeasure res(std::move(all));
    if (res.size() != mu.size() * nu.size())
        throw AtomCollision("expected " + std::to_string(mu.size() * nu.size()) + " atoms, got " +
                            std::to_string(res.size()));
    return res;
}

InterlacingReport interlacing_check(const std::vector<double>& nu_atoms,
                                    const std::vector<double>& result_atoms, double b) {
    InterlacingReport r;
    r.a_positions = nu_atoms;
    r.b_positions = result_atoms;
    r.pattern = b < 0.0 ? ShiftPattern::LeftShift : ShiftPattern::RightShift;
    const std::size_t m = nu_atoms.size();
    if (result_atoms.size() != m) {
        r.first_violation = static_cast<long>(std::min(m, result_atoms.size()));
        return r;
    }
    if (b == 0.0) {
        for (std::size_t k = 0; k < m; ++k)
            if (std::abs(nu_atoms[k] - result_atoms[k]) > kMergeTol * (1.0 + std::abs(nu_atoms[k]))) {
                r.first_violation = static_cast<long>(k);
                return r;
            }
        r.valid = true;
        return r;
    }
    // b > 0: a_1 < b_1 < a_2 < ... < a_m < b_m;  b < 0: b_1 < a_1 < ... < b_m < a_m
    for (std::size_t k = 0; k < m; ++k) {
        const double a = nu_atoms[k], x = result_atoms[k];
        bool ok;
        if (b > 0.0) ok = a < x && (k + 1 == m || x < nu_atoms[k + 1]);
        else ok = x < a && (k == 0 || nu_atoms[k - 1] < x);
        if (!ok) {
            r.first_violation = static_cast<long>(k);
            return r;
        }
    }
    r.valid = true;
    return r;
}

PartialFractions atomic_H_partial_fractions(const AtomicMeasure& nu) {
    require_probability(nu, "atomic_H_partial_fractions");
    const auto& at = nu.atoms();
    PartialFractions pf;
    double mean = 0.0;
    for (const auto& a : at) mean += a.w * a.x;
    pf.alpha = -mean;
    auto G = [&](double x) { return cauchy_real(at, x); };
    for (std::size_t k = 0; k + 1 < at.size(); ++k) {
        const double p = bisect(G, at[k].x, at[k + 1].x, false);
        double s = 0.0;
        for (const auto& a : at) s += a.w / ((p - a.x) * (p - a.x));
        pf.poles.push_back({p, 1.0 / s});
    }
    return pf;
}

AtomicMeasure zeros_of_partial_fractions(const PartialFractions& pf) {
    const auto& P = pf.poles;
    auto H = [&](double x) {
        double s = pf.alpha + x;
        for (const auto& p : P) s += p.w / (p.x - x);
        return s;
    };
    auto dH = [&](double x) {
        double s = 1.0;
        for (const auto& p : P) s += p.w / ((p.x - x) * (p.x - x));
        return s;
    };
    std::vector<double> roots;
    if (P.empty()) {
        roots.push_back(-pf.alpha);
    } else {
        // H increases from -inf to +inf on every component of R minus the poles
        double d = 1.0;
        while (!(H(P.front().x - d) < 0.0)) d *= 2.0;
        roots.push_back(bisect(H, P.front().x - d, P.front().x, true));
        for (std::size_t k = 0; k + 1 < P.size(); ++k) roots.push_back(bisect(H, P[k].x, P[k + 1].x, true));
        d = 1.0;
        while (!(H(P.back().x + d) > 0.0)) d *= 2.0;
        roots.push_back(bisect(H, P.back().x, P.back().x + d, true));
    }
    std::vector<Atom> out;
    for (double r : roots) out.push_back({r, 1.0 / dH(r)});
    AtomicMeasure res(std::move(out));
    if (res.size() != roots.size()) throw AtomCollision("zeros of the partial fraction form coincide");
    return res;
}

}  // namespace monoconv
