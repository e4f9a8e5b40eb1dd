#include "monoconv/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "monoconv/atomic_conv.hpp"
#include "monoconv/moments.hpp"
#include "monoconv/semigroup.hpp"
#include "monoconv/stable_laws.hpp"

namespace monoconv {

namespace {

template <class F>
cplx integrate_c(const Measure& m, F&& f) {
    const double re = integrate(m, [&](double x) { return f(x).real(); });
    const double im = integrate(m, [&](double x) { return f(x).imag(); });
    return {re, im};
}

cplx atomic_G(const AtomicMeasure& a, cplx z) {
    cplx s = 0.0;
    for (const auto& at : a.atoms()) {
        const cplx d = z - at.x;
        if (d == cplx(0.0)) throw PoleAt(at.x);
        s += at.w / d;
    }
    return s;
}

cplx grid_G(const GridMeasure& g, cplx z) {
    const auto& xs = g.xs();
    const auto& f = g.density();
    if (z.imag() == 0.0) {
        const Bounds b = support_bounds(Measure{GridMeasure(xs, f)});
        if (b.lo <= z.real() && z.real() <= b.hi) throw PoleAt(z.real());
    }
    cplx s = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i)
        s += 0.5 * (xs[i] - xs[i - 1]) * (f[i] / (z - xs[i]) + f[i - 1] / (z - xs[i - 1]));
    return s + atomic_G(g.atoms(), z);
}

VectorField poisson_field(double lambda) {
    return VectorField(lambda / 2.0, AtomicMeasure({{1.0, lambda / 2.0}}));
}

cplx family_H(const AnalyticFamily& f, cplx z) {
    if (const auto* d = std::get_if<Dirac>(&f)) return z - d->a;
    if (const auto* a = std::get_if<Arcsine>(&f)) return stable_H(Stable{2.0, -1.0, 0.0, 2.0 * a->t}, z);
    if (const auto* d = std::get_if<DeformedArcsine>(&f))
        return stable_H(Stable{2.0, -1.0, d->c, 2.0 * d->t}, z);
    if (const auto* s = std::get_if<Stable>(&f)) return stable_H(*s, z);
    const auto& p = std::get<MonotonePoisson>(f);
    return flow(poisson_field(p.lambda), z, p.t);
}

std::vector<double> family_hints(const AnalyticFamily& f) {
    if (const auto* d = std::get_if<Dirac>(&f)) return {d->a};
    if (std::holds_alternative<MonotonePoisson>(f)) return {0.0};
    auto from_case = [](const Stable& s) -> std::vector<double> {
        if (s.t == 0.0) return {0.0};
        const bool normalized = std::abs(s.b - cplx(s.alpha < 1.0 ? 1.0 : -1.0, 0.0)) < 1e-12;
        if (!normalized) return {};
        auto sc = stable_support_case(s);
        if (sc.atom) return {sc.atom->x};
        return {};
    };
    if (const auto* d = std::get_if<DeformedArcsine>(&f)) return from_case(Stable{2.0, -1.0, d->c, 2.0 * d->t});
    if (const auto* s = std::get_if<Stable>(&f)) return from_case(*s);
    return {};
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return v;
}

}  // namespace

cplx cauchy_G(const Measure& m, cplx z) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return atomic_G(*a, z);
    if (const auto* g = std::get_if<GridMeasure>(&m)) return grid_G(*g, z);
    const auto& f = std::get<AnalyticFamily>(m);
    if (const auto* d = std::get_if<Dirac>(&f)) {
        if (z == cplx(d->a)) throw PoleAt(d->a);
        return 1.0 / (z - d->a);
    }
    return 1.0 / family_H(f, z);
}

cplx reciprocal_H(const Measure& m, cplx z) {
    if (const auto* f = std::get_if<AnalyticFamily>(&m)) {
        if (const auto* d = std::get_if<Dirac>(f)) return z - d->a;
        return family_H(*f, z);
    }
    const cplx G = cauchy_G(m, z);
    if (std::abs(G) < 1e-300) throw ZeroG("Cauchy transform vanishes at the evaluation point");
    return 1.0 / G;
}

TransformEvaluator evaluator_of(const Measure& m) {
    TransformEvaluator h;
    h.H = [m](cplx z) { return reciprocal_H(m, z); };
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) {
        h.provenance = "measure:atomic";
        h.atom_hints = a->positions();
    } else if (const auto* g = std::get_if<GridMeasure>(&m)) {
        h.provenance = "measure:grid";
        h.atom_hints = g->atoms().positions();
    } else {
        const auto& f = std::get<AnalyticFamily>(m);
        h.provenance = "family:" + family_name(f);
        h.atom_hints = family_hints(f);
    }
    return h;
}

TransformEvaluator closed_form(std::function<cplx(cplx)> H, std::string label) {
    TransformEvaluator h;
    h.H = std::move(H);
    h.provenance = "closed-form:" + label;
    return h;
}

cplx evaluate(const NevanlinnaRep& rep, cplx z) {
    return z + rep.b + integrate_c(rep.eta, [z](double x) { return (1.0 + x * z) / (x - z); });
}

cplx evaluate(const FiniteVarianceRep& rep, cplx z) {
    return rep.a + z + integrate_c(rep.rho, [z](double x) { return 1.0 / (x - z); });
}

FiniteVarianceRep finite_variance_rep(const Measure& m) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) {
        if (!is_probability(m)) throw ValidationError("finite_variance_rep needs a probability measure");
        PartialFractions pf = atomic_H_partial_fractions(*a);
        FiniteVarianceRep rep;
        rep.a = pf.alpha;
        rep.rho = pf.poles.empty() ? AtomicMeasure{} : AtomicMeasure(pf.poles);
        return rep;
    }
    if (const auto* f = std::get_if<AnalyticFamily>(&m)) {
        if (const auto* d = std::get_if<Dirac>(f)) return {-d->a, AtomicMeasure{}};
        if (const auto* s = std::get_if<Stable>(f); s && s->alpha < 2.0 && s->t > 0.0)
            throw InfiniteVariance("stable law with alpha < 2 has infinite variance");
    }
    if (const auto* g = std::get_if<GridMeasure>(&m)) {
        const auto& tail = g->tail();
        if ((tail.unbounded_left() && tail.left_exponent <= 3.0) ||
            (tail.unbounded_right() && tail.right_exponent <= 3.0))
            throw InfiniteVariance("declared tail has infinite second moment");
    }
    MomentSequence mom;
    try {
        mom = moments_of(m, 2);
    } catch (const DivergentMoment& e) {
        throw InfiniteVariance(e.what());
    }
    const double mean = mom[1] / mom[0];
    FiniteVarianceRep rep;
    rep.a = -mean;
    std::vector<double> xs;
    if (const auto* g = std::get_if<GridMeasure>(&m)) {
        xs = g->xs();
    } else {
        Bounds b = support_bounds(m);
        const double pad = 0.02 * (b.hi - b.lo) + 1e-3;
        xs = linspace(b.lo - pad, b.hi + pad, 2001);
    }
    TransformEvaluator h = evaluator_of(m);
    TransformEvaluator hr;
    hr.provenance = "finite-variance-rho";
    const double a = rep.a;
    hr.H = [h, a](cplx z) { return 1.0 / (z + a - h(z)); };
    rep.rho = stieltjes_invert(hr, xs);
    return rep;
}

NevanlinnaRep nevanlinna_rep(const FiniteVarianceRep& rep) {
    NevanlinnaRep out;
    out.b = rep.a + integrate(rep.rho, [](double x) { return x / (1.0 + x * x); });
    auto shrink = [](const AtomicMeasure& a) {
        std::vector<Atom> v = a.atoms();
        for (auto& at : v) at.w /= 1.0 + at.x * at.x;
        return AtomicMeasure(std::move(v));
    };
    if (const auto* a = std::get_if<AtomicMeasure>(&rep.rho)) {
        out.eta = shrink(*a);
    } else if (const auto* g = std::get_if<GridMeasure>(&rep.rho)) {
        std::vector<double> d = g->density();
        for (std::size_t i = 0; i < d.size(); ++i) d[i] /= 1.0 + g->xs()[i] * g->xs()[i];
        out.eta = GridMeasure(g->xs(), std::move(d), shrink(g->atoms()), g->tail());
    } else {
        throw ValidationError("nevanlinna_rep needs an atomic or grid rho");
    }
    return out;
}

std::vector<std::pair<cplx, cplx>> default_collision_seeds() {
    std::vector<std::pair<cplx, cplx>> seeds;
    for (double y : {0.5, 0.25, 0.1})
        seeds.emplace_back(cplx(0.0, y), cplx(0.0, 0.95 / y));
    std::vector<cplx> grid;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const double im = 0.05 * std::pow(20.0 / 0.05, double(j) / 9.0);
            const double re = -10.0 + 20.0 * double(i) / 9.0;
            grid.emplace_back(re, im);
        }
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < grid.size(); ++j)
            if (i != j) seeds.emplace_back(grid[i], grid[j]);
    return seeds;
}

std::optional<Collision> collision_search(const TransformEvaluator& h,
                                          const std::vector<std::pair<cplx, cplx>>& seeds) {
    std::optional<Collision> best;
    for (const auto& [z1, s2] : seeds) {
        if (z1.imag() <= 0.0 || s2.imag() <= 0.0) continue;
        try {
            const cplx target = h(z1);
            auto F = [&](cplx z) { return h(z) - target; };
            cplx z = s2;
            cplx Fz = F(z);
            bool converged = false;
            for (int it = 0; it < 200 && !converged; ++it) {
                const double d = 1e-7 * (1.0 + std::abs(z));
                const cplx dF = (F(z + d) - F(z - d)) / (2.0 * d);
                if (dF == cplx(0.0) || !std::isfinite(std::abs(dF))) break;
                cplx step = -Fz / dF;
                bool moved = false;
                for (int halve = 0; halve <= 40; ++halve) {
                    const cplx zn = z + step;
                    if (zn.imag() > 0.0) {
                        const cplx Fn = F(zn);
                        if (std::abs(Fn) < std::abs(Fz) || std::abs(Fz) < 1e-14) {
                            z = zn;
                            Fz = Fn;
                            moved = true;
                            break;
                        }
                    }
                    step *= 0.5;
                }
                if (!moved) break;
                if (std::abs(step) < 1e-12) converged = true;
            }
            if (std::abs(Fz) < 1e-10 && std::abs(z - z1) > 1e-6) {
                Collision c{z1, z};
                if (!best || c.im_product() > best->im_product() * (1.0 + 1e-9)) best = c;
            }
        } catch (const Error&) {
            continue;
        }
    }
    return best;
}

long divisibility_bound(const FiniteVarianceRep& rep, const Collision& collision) {
    const double rho = total_mass(rep.rho);
    if (!(rho > 0.0)) throw ZeroVariance("rho has zero mass; the measure is a point mass");
    const double p = collision.im_product();
    if (!(p > 0.0)) throw ValidationError("collision points must lie in the upper half-plane");
    return static_cast<long>(std::floor(rho / p * (1.0 + 1e-9)));
}

bool positivity_check(const NevanlinnaRep& rep) {
    const auto inv = positive_inverse_integral(rep.eta);
    if (!inv) return false;
    return rep.b + *inv <= 1e-12;
}

}  // namespace monoconv
