#include "monoconv/alt_convolutions.hpp"

#include <cmath>

#include "monoconv/atomic_conv.hpp"
#include "monoconv/semigroup.hpp"
#include "monoconv/stable_laws.hpp"

namespace monoconv {

namespace {

std::optional<AtomicMeasure> as_atomic(const Measure& m) {
    if (const auto* a = std::get_if<AtomicMeasure>(&m)) return *a;
    if (const auto* f = std::get_if<AnalyticFamily>(&m))
        if (const auto* d = std::get_if<Dirac>(f)) return AtomicMeasure::dirac(d->a);
    return std::nullopt;
}

}  // namespace

KTransform k_transform(const Measure& m) {
    KTransform k;
    k.K = [m](cplx z) { return z - reciprocal_H(m, z); };
    k.provenance = "K:" + evaluator_of(m).provenance;
    return k;
}

KTransform k_transform(const TransformEvaluator& h) {
    KTransform k;
    k.K = [h](cplx z) { return z - h(z); };
    k.provenance = "K:" + h.provenance;
    return k;
}

AtomicMeasure boolean_convolve_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu) {
    // H = z - K_mu - K_nu = z + alpha_mu + alpha_nu + sum of both pole families
    const PartialFractions a = atomic_H_partial_fractions(mu);
    const PartialFractions b = atomic_H_partial_fractions(nu);
    std::vector<Atom> poles = a.poles;
    poles.insert(poles.end(), b.poles.begin(), b.poles.end());
    PartialFractions sum;
    sum.alpha = a.alpha + b.alpha;
    if (!poles.empty()) sum.poles = AtomicMeasure(std::move(poles)).atoms();
    return zeros_of_partial_fractions(sum);
}

Measure boolean_convolve(const Measure& mu, const Measure& nu, const std::vector<double>& xs) {
    if (!is_probability(mu) || !is_probability(nu))
        throw ValidationError("boolean convolution needs probability measures");
    const auto am = as_atomic(mu), an = as_atomic(nu);
    if (am && an) return boolean_convolve_atomic(*am, *an);
    const TransformEvaluator hm = evaluator_of(mu), hn = evaluator_of(nu);
    TransformEvaluator h;
    h.H = [hm, hn](cplx z) { return hm(z) + hn(z) - z; };
    h.provenance = "boolean(" + hm.provenance + "," + hn.provenance + ")";
    return stieltjes_invert(h, xs);
}

bool boolean_subordinator_check(double gamma, const Measure& tau) {
    return subordinator_check(VectorField(gamma, tau));
}

bool boolean_symmetry_check(const KTransform& K, const std::vector<cplx>& sample) {
    double worst = 0.0;
    for (const cplx& z : sample) worst = std::max(worst, std::abs(-K(-std::conj(z)) - std::conj(K(z))));
    return worst < 1e-9;
}

double free_branch_point(const FreeCounterexampleParams& p) { return p.a * p.t - 0.25 * p.t * p.t + p.c; }

cplx free_counterexample_H(const FreeCounterexampleParams& p, cplx z) {
    if (p.t == 0.0) return z;
    const double t = p.t;
    return z - p.a * t + 0.5 * t * t + t * upper_pow(z - free_branch_point(p), 0.5);
}

double free_positive_mass(const FreeCounterexampleParams& p) {
    if (p.t == 0.0) return 0.0;
    const double lo = 1e-6;
    const double hi = std::max(free_branch_point(p), 0.0) + 2.0;
    std::vector<double> xs(2001);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = lo + (hi - lo) * double(i) / 2000.0;
    const GridMeasure g = stieltjes_invert(
        closed_form([p](cplx z) { return free_counterexample_H(p, z); }, "free-counterexample"), xs);
    double mass = g.density_mass();
    for (const auto& at : g.atoms().atoms())
        if (at.x > lo) mass += at.w;
    return mass;
}

std::vector<bool> free_positivity_timeline(const FreeCounterexampleParams& p, const std::vector<double>& ts) {
    if (!(p.a >= 0.0 && p.a * p.a > p.c)) throw ValidationError("counterexample regime needs a >= 0 and a^2 > c");
    std::vector<bool> out;
    for (double t : ts) {
        FreeCounterexampleParams q = p;
        q.t = t;
        out.push_back(free_positive_mass(q) < 1e-3);
    }
    return out;
}

double free_positivity_transition(const FreeCounterexampleParams& p, double t_lo, double t_hi, double tol) {
    auto verdict = [&](double t) -> bool { return free_positivity_timeline(p, {t}).front(); };
    if (verdict(t_lo) || !verdict(t_hi))
        throw ValidationError("transition bracket must go from not-positive to positive");
    while (t_hi - t_lo > tol) {
        const double mid = 0.5 * (t_lo + t_hi);
        if (verdict(mid)) t_hi = mid;
        else t_lo = mid;
    }
    return 0.5 * (t_lo + t_hi);
}

}  // namespace monoconv
