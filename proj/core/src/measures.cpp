#include "monoconv/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monoconv/semigroup.hpp"
#include "monoconv/stable_laws.hpp"
#include "monoconv/transforms.hpp"

namespace monoconv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_position(double a, double b) { return std::abs(a - b) < kMergeTol * (1.0 + std::abs(a)); }

Bounds merge(Bounds x, Bounds y) { return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)}; }

Bounds atom_bounds(const AtomicMeasure& a) {
    if (a.empty()) return {kInf, -kInf};
    return {a.atoms().front().x, a.atoms().back().x};
}

bool normalized_b(double alpha, cplx b) {
    const cplx want = alpha < 1.0 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0);
    return std::abs(b - want) < 1e-12;
}

Bounds stable_bounds(const Stable& s) {
    if (s.t == 0.0) return {0.0, 0.0};
    if (s.alpha == 1.0 && std::abs(s.b.imag()) < 1e-15) {
        const double x = -s.b.real() * s.t;
        return {x, x};
    }
    if (!normalized_b(s.alpha, s.b)) return {-kInf, kInf};
    SupportCase sc = stable_support_case(s);
    Bounds out = sc.ac_empty ? Bounds{kInf, -kInf} : sc.ac;
    if (sc.atom) out = merge(out, {sc.atom->x, sc.atom->x});
    return out;
}

Bounds poisson_bounds(const MonotonePoisson& p) {
    if (p.t == 0.0) return {0.0, 0.0};
    VectorField V(p.lambda / 2.0, AtomicMeasure({{1.0, p.lambda / 2.0}}));
    EdgeTrack upper = support_edge(reflect(V), p.t, 1);
    // The atom at 0 carries mass exp(-lambda t) > 0 and sits below the ac part.
    return {0.0, -upper.E.back()};
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
    for (const auto& a : atoms) {
        if (!std::isfinite(a.x) || !std::isfinite(a.w))
            throw ValidationError("atom with non-finite position or weight");
        if (a.w <= 0.0) throw ValidationError("atom weights must be positive");
    }
    std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
    for (const auto& a : atoms) {
        if (!atoms_.empty() && same_position(atoms_.back().x, a.x)) {
            Atom& last = atoms_.back();
            const double w = last.w + a.w;
            last.x = (last.x * last.w + a.x * a.w) / w;
            last.w = w;
        } else {
            atoms_.push_back(a);
        }
    }
}

double AtomicMeasure::mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.w;
    return s;
}

std::vector<double> AtomicMeasure::positions() const {
    std::vector<double> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back(a.x);
    return out;
}

std::vector<double> AtomicMeasure::weights() const {
    std::vector<double> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_) out.push_back(a.w);
    return out;
}

GridMeasure::GridMeasure(std::vector<double> xs, std::vector<double> density, AtomicMeasure atoms,
                         TailModel tail)
    : xs_(std::move(xs)), density_(std::move(density)), atoms_(std::move(atoms)), tail_(tail) {
    if (xs_.size() != density_.size()) throw ValidationError("grid xs and density differ in length");
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (!std::isfinite(xs_[i]) || !std::isfinite(density_[i]))
            throw ValidationError("grid contains non-finite values");
        if (density_[i] < 0.0) throw ValidationError("grid density must be non-negative");
        if (i > 0 && !(xs_[i] > xs_[i - 1])) throw ValidationError("grid xs must be strictly increasing");
    }
}

double GridMeasure::density_mass() const { return trapezoid(xs_, density_); }

double trapezoid(const std::vector<double>& xs, const std::vector<double>& ys) {
    double s = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) s += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
    return s;
}

std::string family_name(const AnalyticFamily& f) {
    return std::visit(overloaded{[](const Arcsine&) { return std::string("arcsine"); },
                                 [](const DeformedArcsine&) { return std::string("deformed_arcsine"); },
                                 [](const MonotonePoisson&) { return std::string("monotone_poisson"); },
                                 [](const Stable&) { return std::string("stable"); },
                                 [](const Dirac&) { return std::string("dirac"); }},
                      f);
}

void validate(const Measure& m) {
    const auto* fam = std::get_if<AnalyticFamily>(&m);
    if (!fam) return;  // atomic and grid measures validate on construction
    std::visit(overloaded{
                   [](const Arcsine& a) {
                       if (!(a.t > 0.0)) throw ValidationError("arcsine requires t > 0");
                   },
                   [](const DeformedArcsine& d) {
                       if (!(d.t > 0.0) || !std::isfinite(d.c))
                           throw ValidationError("deformed_arcsine requires t > 0 and finite c");
                   },
                   [](const MonotonePoisson& p) {
                       if (!(p.lambda > 0.0) || !(p.t >= 0.0))
                           throw ValidationError("monotone_poisson requires lambda > 0, t >= 0");
                   },
                   [](const Stable& s) {
                       if (!(s.t >= 0.0)) throw ValidationError("stable requires t >= 0");
                       if (!stable_valid(s.alpha, s.b, s.c))
                           throw ValidationError("stable parameters fail the validity conditions");
                   },
                   [](const Dirac& d) {
                       if (!std::isfinite(d.a)) throw ValidationError("dirac position must be finite");
                   }},
               *fam);
}

double total_mass(const Measure& m) {
    return std::visit(overloaded{[](const AtomicMeasure& a) { return a.mass(); },
                                 [](const GridMeasure& g) { return g.mass(); },
                                 [](const AnalyticFamily&) { return 1.0; }},
                      m);
}

bool is_probability(const Measure& m) {
    return std::visit(overloaded{[](const AtomicMeasure& a) { return std::abs(a.mass() - 1.0) <= kAtomicMassTol; },
                                 [](const GridMeasure& g) { return std::abs(g.mass() - 1.0) <= kGridMassTol; },
                                 [](const AnalyticFamily&) { return true; }},
                      m);
}

Bounds support_bounds(const Measure& m) {
    return std::visit(
        overloaded{
            [](const AtomicMeasure& a) { return atom_bounds(a); },
            [](const GridMeasure& g) {
                Bounds b{kInf, -kInf};
                const auto& xs = g.xs();
                const auto& d = g.density();
                for (std::size_t i = 0; i < xs.size(); ++i)
                    if (d[i] > kSupportThreshold) {
                        b.lo = xs[i];
                        break;
                    }
                for (std::size_t i = xs.size(); i-- > 0;)
                    if (d[i] > kSupportThreshold) {
                        b.hi = xs[i];
                        break;
                    }
                b = merge(b, atom_bounds(g.atoms()));
                if (g.tail().unbounded_left()) b.lo = -kInf;
                if (g.tail().unbounded_right()) b.hi = kInf;
                return b;
            },
            [](const AnalyticFamily& f) {
                return std::visit(
                    overloaded{[](const Arcsine& a) {
                                   const double r = std::sqrt(2.0 * a.t);
                                   return Bounds{-r, r};
                               },
                               [](const DeformedArcsine& d) {
                                   return stable_bounds(Stable{2.0, -1.0, d.c, 2.0 * d.t});
                               },
                               [](const MonotonePoisson& p) { return poisson_bounds(p); },
                               [](const Stable& s) { return stable_bounds(s); },
                               [](const Dirac& d) { return Bounds{d.a, d.a}; }},
                    f);
            }},
        m);
}

Bounds measure_extent(const Measure& tau) { return support_bounds(tau); }

bool is_zero_measure(const Measure& m) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return a->empty();
    if (const auto* g = std::get_if<GridMeasure>(&m)) {
        if (!g->atoms().empty()) return false;
        return std::all_of(g->density().begin(), g->density().end(),
                           [](double v) { return v <= kSupportThreshold; });
    }
    return false;
}

ConvBounds conv_support_bounds(const Measure& nu, const Measure& mu) {
    if (!is_probability(nu) || !is_probability(mu))
        throw ValidationError("conv_support_bounds requires probability measures");
    const Bounds bn = support_bounds(nu);
    const Bounds bm = support_bounds(mu);
    ConvBounds out;
    // delta_x |> mu lives in [a(mu), b(mu)+x] for x>0 and [a(mu)-|x|, b(mu)] for x<0.
    out.outer = {bm.lo + std::min(0.0, bn.lo), bm.hi + std::max(0.0, bn.hi)};
    out.a_reach = bm.lo;
    out.b_reach = bm.hi;
    if (bn.lo >= 0.0) out.a_reach = std::min(out.a_reach, bn.lo + bm.lo);
    if (bn.hi <= 0.0) out.b_reach = std::max(out.b_reach, bn.hi + bm.hi);
    return out;
}

Measure dilate(const Measure& m, double lambda) {
    if (!(lambda > 0.0)) throw ValidationError("dilation factor must be positive");
    auto scale_atoms = [lambda](const AtomicMeasure& a) {
        std::vector<Atom> v = a.atoms();
        for (auto& at : v) at.x *= lambda;
        return AtomicMeasure(std::move(v));
    };
    auto scale_grid = [&](const GridMeasure& g) {
        std::vector<double> xs = g.xs(), d = g.density();
        for (auto& x : xs) x *= lambda;
        for (auto& v : d) v /= lambda;
        return GridMeasure(std::move(xs), std::move(d), scale_atoms(g.atoms()), g.tail());
    };
    return std::visit(
        overloaded{[&](const AtomicMeasure& a) -> Measure { return scale_atoms(a); },
                   [&](const GridMeasure& g) -> Measure { return scale_grid(g); },
                   [&](const AnalyticFamily& f) -> Measure {
                       return std::visit(
                           overloaded{
                               [&](const Arcsine& a) -> Measure {
                                   return AnalyticFamily{Arcsine{lambda * lambda * a.t}};
                               },
                               [&](const DeformedArcsine& d) -> Measure {
                                   return AnalyticFamily{DeformedArcsine{lambda * lambda * d.t, lambda * d.c}};
                               },
                               [&](const Stable& s) -> Measure {
                                   return AnalyticFamily{
                                       Stable{s.alpha, s.b, lambda * s.c, std::pow(lambda, s.alpha) * s.t}};
                               },
                               [&](const Dirac& d) -> Measure { return AnalyticFamily{Dirac{lambda * d.a}}; },
                               [&](const MonotonePoisson& p) -> Measure {
                                   const Bounds b = support_bounds(Measure{f});
                                   const double pad = 0.05 * (b.hi - b.lo) + 1e-3;
                                   std::vector<double> xs(2001);
                                   for (std::size_t i = 0; i < xs.size(); ++i)
                                       xs[i] = b.lo - pad + (b.hi - b.lo + 2 * pad) * double(i) / 2000.0;
                                   (void)p;
                                   return scale_grid(stieltjes_invert(evaluator_of(Measure{f}), xs));
                               }},
                           f);
                   }},
        m);
}

std::optional<double> positive_inverse_integral(const Measure& tau) {
    auto atoms_part = [](const AtomicMeasure& a) -> std::optional<double> {
        double s = 0.0;
        for (const auto& at : a.atoms()) {
            if (std::abs(at.x) < kMergeTol) return std::nullopt;
            if (at.x < 0.0) return std::nullopt;
            s += at.w / at.x;
        }
        return s;
    };
    if (const auto* a = std::get_if<AtomicMeasure>(&tau)) return atoms_part(*a);
    if (const auto* fam = std::get_if<AnalyticFamily>(&tau)) {
        if (const auto* d = std::get_if<Dirac>(fam)) return atoms_part(AtomicMeasure::dirac(d->a));
        throw ValidationError("inverse integral needs an atomic or grid measure");
    }
    const auto& g = std::get<GridMeasure>(tau);
    auto sa = atoms_part(g.atoms());
    if (!sa) return std::nullopt;
    if (g.tail().unbounded_left()) return std::nullopt;
    const auto& xs = g.xs();
    const auto& f = g.density();
    std::size_t first = xs.size();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (f[i] > kSupportThreshold) {
            if (xs[i] < 0.0) return std::nullopt;
            if (first == xs.size()) first = i;
        }
    }
    if (first == xs.size()) return *sa;
    // Start from the panel ending at the first positive sample.
    std::size_t j = first > 0 ? first - 1 : first;
    if (xs[j] < 0.0) j = first;
    double s = 0.0;
    if (j + 1 < xs.size()) {
        const double x0 = xs[j], x1 = xs[j + 1], f0 = f[j], f1 = f[j + 1], h = x1 - x0;
        double panel;
        if (x0 == 0.0) {
            if (f0 > kSupportThreshold) return std::nullopt;
            panel = f1;
        } else {
            // exact integral of the linear interpolant divided by x
            const double L = std::log(x1 / x0);
            panel = f0 * L + (f1 - f0) / h * (h - x0 * L);
        }
        if (panel > 1e6) return std::nullopt;
        s += panel;
        for (std::size_t i = j + 2; i < xs.size(); ++i)
            s += 0.5 * (xs[i] - xs[i - 1]) * (f[i] / xs[i] + f[i - 1] / xs[i - 1]);
    }
    return s + *sa;
}

Measure reflect(const Measure& m) {
    auto mirror = [](const AtomicMeasure& a) {
        std::vector<Atom> v = a.atoms();
        for (auto& at : v) at.x = -at.x;
        return AtomicMeasure(std::move(v));
    };
    return std::visit(
        overloaded{[&](const AtomicMeasure& a) -> Measure { return mirror(a); },
                   [&](const GridMeasure& g) -> Measure {
                       std::vector<double> xs(g.xs().rbegin(), g.xs().rend());
                       std::vector<double> d(g.density().rbegin(), g.density().rend());
                       for (auto& x : xs) x = -x;
                       TailModel t;
                       t.left_exponent = g.tail().right_exponent;
                       t.right_exponent = g.tail().left_exponent;
                       return GridMeasure(std::move(xs), std::move(d), mirror(g.atoms()), t);
                   },
                   [&](const AnalyticFamily& f) -> Measure {
                       if (const auto* d = std::get_if<Dirac>(&f)) return AnalyticFamily{Dirac{-d->a}};
                       if (std::holds_alternative<Arcsine>(f)) return f;
                       if (const auto* d = std::get_if<DeformedArcsine>(&f))
                           return AnalyticFamily{DeformedArcsine{d->t, -d->c}};
                       throw ValidationError("reflection of this family is not represented");
                   }},
        m);
}

}  // namespace monoconv
