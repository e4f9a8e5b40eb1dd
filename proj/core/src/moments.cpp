#include "monoconv/moments.hpp"

#include <algorithm>
#include <cmath>

namespace monoconv {

namespace {

void check_tails(const TailModel& tail, int n) {
    // density ~ |x|^{-p}: the n-th moment needs p > n + 1
    if (tail.unbounded_left() && !(tail.left_exponent > n + 1))
        throw DivergentMoment("moment of order " + std::to_string(n) + " diverges on the left tail");
    if (tail.unbounded_right() && !(tail.right_exponent > n + 1))
        throw DivergentMoment("moment of order " + std::to_string(n) + " diverges on the right tail");
}

MomentSequence sum_moments(const Measure& m, int N) {
    MomentSequence out(N + 1);
    for (int n = 0; n <= N; ++n) out[n] = integrate(m, [n](double x) { return std::pow(x, n); });
    return out;
}

// Moments of the time-t member of the semigroup with field -1/(2(z-c))*s,
// i.e. pair (-s c/(2(1+c^2)), s/(2(1+c^2)) delta_c).
MomentSequence quadratic_stable_moments(double scale, double c, double t, int N) {
    const double w = scale / (2.0 * (1.0 + c * c));
    const FieldCoefficients r = field_coefficients(-w * c, AtomicMeasure({{c, w}}), N);
    return semigroup_moments(r, t, N);
}

MomentSequence family_moments(const AnalyticFamily& f, int N) {
    if (const auto* d = std::get_if<Dirac>(&f)) return sum_moments(AtomicMeasure::dirac(d->a), N);
    if (const auto* a = std::get_if<Arcsine>(&f)) {
        MomentSequence out(N + 1, 0.0);
        const double r2 = 2.0 * a->t;
        double even = 1.0;  // binom(2k,k)/4^k r^{2k}
        for (int k = 0; 2 * k <= N; ++k) {
            out[2 * k] = even;
            even *= r2 * double(2 * k + 1) * double(2 * k + 2) / (4.0 * double(k + 1) * double(k + 1));
        }
        return out;
    }
    if (const auto* d = std::get_if<DeformedArcsine>(&f)) return quadratic_stable_moments(1.0, d->c, 2.0 * d->t, N);
    if (const auto* p = std::get_if<MonotonePoisson>(&f)) {
        const FieldCoefficients r =
            field_coefficients(p->lambda / 2.0, AtomicMeasure({{1.0, p->lambda / 2.0}}), N);
        return semigroup_moments(r, p->t, N);
    }
    const auto& s = std::get<Stable>(f);
    if (s.t == 0.0 || N == 0) {
        MomentSequence out(N + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    if (s.alpha == 1.0 && s.b.imag() == 0.0 && s.c.imag() == 0.0)
        return sum_moments(AtomicMeasure::dirac(-s.b.real() * s.t), N);
    if (s.alpha == 2.0 && s.c.imag() == 0.0 && s.b.imag() == 0.0)
        return quadratic_stable_moments(-s.b.real(), s.c.real(), s.t, N);
    throw DivergentMoment("stable law with these parameters has no finite moments of order >= 1");
}

}  // namespace

double FieldCoefficients::operator()(int n) const {
    if (n < 1 || n > size()) throw ValidationError("field coefficient r_" + std::to_string(n) + " not available");
    return r[n - 1];
}

MomentSequence moments_of(const Measure& m, int N) {
    if (N < 0) throw ValidationError("moment order must be non-negative");
    if (const auto* g = std::get_if<GridMeasure>(&m)) check_tails(g->tail(), N);
    if (const auto* f = std::get_if<AnalyticFamily>(&m)) return family_moments(*f, N);
    return sum_moments(m, N);
}

MomentSequence convolve_moments(const MomentSequence& m_mu, const MomentSequence& m_nu, int L) {
    if (L < 0 || L > 16) throw ValidationError("convolve_moments supports orders 0..16");
    if (int(m_mu.size()) < L + 1 || int(m_nu.size()) < L + 1)
        throw ValidationError("moment sequences shorter than the requested order");
    // pw[k][j]: coefficient of z^{-j} in (sum_j m_j(nu) z^{-j})^{k+1}, i.e. the
    // sum over j_0 + ... + j_k = j of m_{j_0}(nu) ... m_{j_k}(nu)
    std::vector<std::vector<double>> pw(L + 1, std::vector<double>(L + 1, 0.0));
    for (int j = 0; j <= L; ++j) pw[0][j] = m_nu[j];
    for (int k = 1; k <= L; ++k)
        for (int j = 0; j <= L; ++j) {
            double s = 0.0;
            for (int i = 0; i <= j; ++i) s += pw[k - 1][i] * m_nu[j - i];
            pw[k][j] = s;
        }
    MomentSequence out(L + 1, 0.0);
    for (int l = 0; l <= L; ++l) {
        double s = 0.0;
        for (int k = 0; k <= l; ++k) s += m_mu[k] * pw[k][l - k];
        out[l] = s;
    }
    return out;
}

FieldCoefficients field_coefficients(double gamma, const Measure& tau, int N) {
    if (N < 1) throw ValidationError("need at least one field coefficient");
    const MomentSequence mt = moments_of(tau, N);
    FieldCoefficients r;
    r.r.resize(N);
    r.r[0] = gamma + (N >= 1 ? mt[1] : 0.0);
    for (int n = 2; n <= N; ++n) r.r[n - 1] = mt[n - 2] + mt[n];
    return r;
}

double semigroup_moment(const FieldCoefficients& r, double t, int n) {
    if (n < 0) throw ValidationError("moment order must be non-negative");
    if (n == 0) return 1.0;
    if (n > r.size()) throw ValidationError("not enough field coefficients for this order");
    // D[k][i]: sum over chains 1 = i_0 < ... < i_k = i of prod i_{p-1} r_{i_p - i_{p-1}}
    const int top = n + 1;
    std::vector<std::vector<double>> D(n + 1, std::vector<double>(top + 1, 0.0));
    D[0][1] = 1.0;
    for (int k = 1; k <= n; ++k)
        for (int j = 2; j <= top; ++j) {
            double s = 0.0;
            for (int i = 1; i < j; ++i)
                if (D[k - 1][i] != 0.0) s += D[k - 1][i] * double(i) * r(j - i);
            D[k][j] = s;
        }
    double out = 0.0, coef = 1.0;
    for (int k = 1; k <= n; ++k) {
        coef *= t / double(k);
        out += coef * D[k][top];
    }
    return out;
}

MomentSequence semigroup_moments(const FieldCoefficients& r, double t, int N) {
    MomentSequence out(N + 1);
    for (int n = 0; n <= N; ++n) out[n] = semigroup_moment(r, t, n);
    return out;
}

std::vector<double> moment_ode_rhs(const FieldCoefficients& r, const MomentSequence& m) {
    std::vector<double> out(m.size(), 0.0);
    for (int n = 1; n < int(m.size()); ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += double(k) * r(n - k + 1) * m[k - 1];
        out[n] = s;
    }
    return out;
}

double semigroup_consistency(const FieldCoefficients& r, double t, double s, int N) {
    const MomentSequence mt = semigroup_moments(r, t, N);
    const MomentSequence ms = semigroup_moments(r, s, N);
    const MomentSequence mts = semigroup_moments(r, t + s, N);
    const MomentSequence conv = convolve_moments(mt, ms, N);
    double err = 0.0;
    for (int n = 0; n <= N; ++n) err = std::max(err, std::abs(mts[n] - conv[n]));
    return err;
}

bool symmetry_diagnostic(double gamma, const Measure& tau, int N) {
    if (std::abs(gamma) >= 1e-12) return false;
    auto odd_vanish = [N](const Measure& m) {
        const MomentSequence mm = moments_of(m, N);
        for (int n = 1; n <= N; n += 2)
            if (std::abs(mm[n]) > 1e-10) return false;
        return true;
    };
    if (const auto* g = std::get_if<GridMeasure>(&tau)) {
        if (g->tail().unbounded_left() || g->tail().unbounded_right())
            throw ValidationError("symmetry diagnostic needs a compactly supported tau");
        if (!odd_vanish(g->atoms())) return false;
        // compare the density with its mirror image by linear interpolation
        const auto& xs = g->xs();
        const auto& f = g->density();
        auto at = [&](double x) {
            if (x < xs.front() || x > xs.back()) return 0.0;
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            if (it == xs.end()) return f.back();
            const std::size_t j = std::size_t(it - xs.begin());
            if (j == 0) return f.front();
            const double u = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
            return f[j - 1] + u * (f[j] - f[j - 1]);
        };
        double fmax = 0.0;
        for (double v : f) fmax = std::max(fmax, v);
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (std::abs(f[i] - at(-xs[i])) > 1e-9 * (1.0 + fmax)) return false;
        return true;
    }
    if (const auto* fam = std::get_if<AnalyticFamily>(&tau)) {
        if (const auto* d = std::get_if<Dirac>(fam)) return std::abs(d->a) < 1e-12;
        throw ValidationError("symmetry diagnostic needs an atomic or grid tau");
    }
    return odd_vanish(tau);
}

bool even_moment_tail_check(const Measure& tau, int n) {
    if (n < 0) throw ValidationError("order must be non-negative");
    if (const auto* g = std::get_if<GridMeasure>(&tau)) {
        const auto& t = g->tail();
        const double need = 2.0 * n + 1.0;
        if (t.unbounded_left() && !(t.left_exponent > need)) return false;
        if (t.unbounded_right() && !(t.right_exponent > need)) return false;
        return true;
    }
    if (const auto* f = std::get_if<AnalyticFamily>(&tau)) {
        try {
            moments_of(tau, 2 * n);
        } catch (const DivergentMoment&) {
            return false;
        }
        (void)f;
    }
    return true;
}

}  // namespace monoconv
