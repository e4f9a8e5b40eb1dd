#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "monoconv/errors.hpp"

namespace monoconv {

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    long max_steps = 0;  // 0: default_max_steps()
};

/// 10^6 unless MONOCONV_MAX_STEPS is set to a positive integer.
long default_max_steps();

namespace detail {
inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}
}  // namespace detail

/// Dormand-Prince 5(4) for a scalar ODE y' = f(y) (autonomous) from t0 to t1.
/// `admissible` rejects states outside the domain; rejected steps are halved.
template <class T, class F, class Guard>
T dopri5(F&& f, T y, double t0, double t1, const OdeOptions& opt, Guard&& admissible) {
    if (t1 == t0) return y;
    const long max_steps = opt.max_steps > 0 ? opt.max_steps : default_max_steps();
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);

    static constexpr double c21 = 1.0 / 5.0;
    static constexpr double c31 = 3.0 / 40.0, c32 = 9.0 / 40.0;
    static constexpr double c41 = 44.0 / 45.0, c42 = -56.0 / 15.0, c43 = 32.0 / 9.0;
    static constexpr double c51 = 19372.0 / 6561.0, c52 = -25360.0 / 2187.0,
                            c53 = 64448.0 / 6561.0, c54 = -212.0 / 729.0;
    static constexpr double c61 = 9017.0 / 3168.0, c62 = -355.0 / 33.0, c63 = 46732.0 / 5247.0,
                            c64 = 49.0 / 176.0, c65 = -5103.0 / 18656.0;
    static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                            b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
    static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                            e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

    T k1 = f(y);
    if (!detail::finite(k1)) throw StepUnderflow("vector field not finite at the initial point");
    double h = std::min(span, 1e-2 * (1.0 + detail::magnitude(y)) /
                                  std::max(1e-300, detail::magnitude(k1)));
    h = std::max(h, 1e-12 * span);
    double done = 0.0;
    long steps = 0;
    while (span - done > 1e-14 * span) {
        if (++steps > max_steps) throw StepUnderflow("integrator step budget exhausted");
        if (done + h > span) h = span - done;
        const double hs = dir * h;
        T k2 = f(y + hs * (c21 * k1));
        T k3 = f(y + hs * (c31 * k1 + c32 * k2));
        T k4 = f(y + hs * (c41 * k1 + c42 * k2 + c43 * k3));
        T k5 = f(y + hs * (c51 * k1 + c52 * k2 + c53 * k3 + c54 * k4));
        T k6 = f(y + hs * (c61 * k1 + c62 * k2 + c63 * k3 + c64 * k4 + c65 * k5));
        T ynew = y + hs * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        T k7 = f(ynew);
        T err = hs * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        bool ok = detail::finite(ynew) && detail::finite(k7) && detail::finite(err) &&
                  admissible(ynew);
        double ratio = 2.0;
        if (ok) {
            const double scale = opt.atol + opt.rtol * std::max(detail::magnitude(y),
                                                                detail::magnitude(ynew));
            ratio = detail::magnitude(err) / scale;
        }
        if (ok && ratio <= 1.0) {
            done += h;
            y = ynew;
            k1 = k7;
            h *= ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        } else {
            h *= ok ? std::max(0.1, 0.9 * std::pow(ratio, -0.2)) : 0.5;
        }
        if (h < 1e-15 * std::max(1.0, span) && span - done > 1e-14 * span)
            throw StepUnderflow("step size underflow");
    }
    return y;
}

template <class T, class F>
T dopri5(F&& f, T y, double t0, double t1, const OdeOptions& opt = {}) {
    return dopri5(std::forward<F>(f), y, t0, t1, opt, [](const T&) { return true; });
}

}  // namespace monoconv
