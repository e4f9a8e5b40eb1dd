#include "monoconv/stable_laws.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "monoconv/transforms.hpp"

namespace monoconv {

namespace {

constexpr double kPi = std::numbers::pi;

double arg02pi(cplx w) {
    double a = std::arg(w);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

bool normalized(const StableParams& p) {
    const cplx want = p.alpha < 1.0 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
    return std::abs(p.b - want) < 1e-12;
}

}  // namespace

cplx upper_pow(cplx w, double s) {
    const double r = std::abs(w);
    if (r == 0.0) return s > 0.0 ? cplx(0.0) : cplx(std::pow(0.0, s));
    return std::polar(std::pow(r, s), s * arg02pi(w));
}

bool stable_valid(double alpha, cplx b, cplx c) {
    if (!(alpha > 0.0 && alpha <= 2.0)) return false;
    if (!(std::abs(b) > 0.0) || !std::isfinite(std::abs(b)) || !std::isfinite(std::abs(c))) return false;
    const double tol = 1e-12;
    const double ab = arg02pi(b);
    if (alpha <= 1.0) {
        if (!(ab >= -tol && ab <= alpha * kPi + tol)) return false;
    } else {
        if (!(ab >= (alpha - 1.0) * kPi - tol && ab <= kPi + tol)) return false;
    }
    if (alpha != 1.0 && c.imag() > 0.0) return false;
    return true;
}

cplx stable_H(const StableParams& p, cplx z) {
    if (p.t == 0.0) return z;
    const cplx W = upper_pow(z - p.c, p.alpha) + p.b * p.t;
    if (z.imag() > 0.0 && W.real() > 0.0 && std::abs(W.imag()) <= 1e-14 * std::abs(W))
        throw BranchCutHit("intermediate value on the positive real axis");
    return p.c + upper_pow(W, 1.0 / p.alpha);
}

VectorField stable_field(double alpha, cplx b, cplx c) {
    if (!stable_valid(alpha, b, c)) throw ValidationError("stable parameters fail the validity conditions");
    // Boundary values of Im A give the Levy density: right of c it is
    // proportional to Im b, left of c to Im(b e^{i pi (1-alpha)}).
    Bounds ext;
    if (c.imag() < 0.0) {
        ext = {-kInf, kInf};
    } else if (alpha == 1.0 && std::abs(b.imag()) < 1e-15) {
        ext = {kInf, -kInf};
    } else {
        const double right = b.imag();
        const double left = (b * std::polar(1.0, kPi * (1.0 - alpha))).imag();
        const double tol = 1e-12 * std::abs(b);
        ext.lo = std::abs(left) <= tol ? c.real() : -kInf;
        ext.hi = std::abs(right) <= tol ? c.real() : kInf;
    }
    std::ostringstream os;
    os << "stable(alpha=" << alpha << ",b=" << b << ",c=" << c << ")";
    return VectorField::closed_form([alpha, b, c](cplx z) { return (b / alpha) * upper_pow(z - c, 1.0 - alpha); },
                                    ext, os.str());
}

SupportCase stable_support_case(const StableParams& p) {
    if (!stable_valid(p.alpha, p.b, p.c)) throw ValidationError("stable parameters fail the validity conditions");
    if (!normalized(p)) throw UnnormalizedB("case table needs b = 1 for alpha < 1 and b = -1 for 1 <= alpha <= 2");
    SupportCase sc;
    const double a = p.alpha, t = p.t;
    if (t == 0.0) {
        sc.case_id = 0;
        sc.ac_empty = true;
        sc.atom = Atom{0.0, 1.0};
        return sc;
    }
    if (a == 1.0) {
        sc.case_id = 8;
        sc.ac_empty = true;
        sc.atom = Atom{-p.b.real() * t, 1.0};
        return sc;
    }
    if (p.c.imag() < 0.0) {
        sc.case_id = 1;
        sc.ac = {-kInf, kInf};
        return sc;
    }
    const double c = p.c.real();
    if (a == 2.0) {
        sc.case_id = c >= 0.0 ? 2 : 3;
        sc.ac = {c - std::sqrt(t), c + std::sqrt(t)};
        const double r = std::sqrt(c * c + t);
        const double w = std::abs(c) / r;
        if (w > 0.0) sc.atom = Atom{c >= 0.0 ? c - r : c + r, w};
        return sc;
    }
    const double ca = std::pow(std::abs(c), a);
    if (a > 1.0) {
        sc.case_id = c >= 0.0 ? 4 : 5;
        sc.ac = {-kInf, c + std::pow(t, 1.0 / a)};
        if (c < 0.0) sc.atom = Atom{c + std::pow(ca + t, 1.0 / a), std::pow(ca / (ca + t), (a - 1.0) / a)};
        return sc;
    }
    sc.case_id = c >= 0.0 ? 6 : 7;
    sc.ac = {-kInf, c};
    if (c < 0.0 && t < ca) sc.atom = Atom{c + std::pow(ca - t, 1.0 / a), std::pow((ca - t) / ca, (1.0 - a) / a)};
    return sc;
}

StableDensity stable_density(const StableParams& p, const std::vector<double>& xs) {
    if (!stable_valid(p.alpha, p.b, p.c)) throw ValidationError("stable parameters fail the validity conditions");
    StableDensity out;
    const bool real_c = p.c.imag() == 0.0 && p.c.real() == p.c.real();
    const bool real_b = p.b.imag() == 0.0;
    const double c = p.c.real();
    if (real_c && real_b && (p.alpha == 2.0 || p.alpha == 0.5) && p.t > 0.0) {
        // b t only enters through |b| t once b has the conventional sign
        const double t = std::abs(p.b.real()) * p.t;
        const StableParams q{p.alpha, p.alpha < 1.0 ? cplx(1.0) : cplx(-1.0), p.c, t};
        std::vector<double> d(xs.size(), 0.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            if (p.alpha == 2.0) {
                const double u = x - c, q2 = t - u * u;
                if (q2 > 0.0) d[i] = std::sqrt(q2) / (kPi * (c * c + q2));
            } else if (x < c) {
                const double num = 2.0 * t * std::sqrt(c - x);
                const double den = (t * t + x) * (t * t + x) + 4.0 * t * t * (c - x);
                d[i] = num / (kPi * den);
            }
        }
        const SupportCase sc = stable_support_case(q);
        AtomicMeasure atoms = sc.atom ? AtomicMeasure({*sc.atom}) : AtomicMeasure{};
        out.measure = GridMeasure(xs, std::move(d), std::move(atoms));
        out.closed_form = true;
        return out;
    }
    out.measure = stieltjes_invert(evaluator_of(Measure{AnalyticFamily{p}}), xs);
    out.closed_form = false;
    return out;
}

}  // namespace monoconv
