#pragma once

#include <vector>

#include "monoconv/measures.hpp"

namespace monoconv {

/// m_0 .. m_N
using MomentSequence = std::vector<double>;

/// Coefficients of A(z) = -sum_{n>=1} r_n z^{-(n-1)}; r[0] holds r_1.
struct FieldCoefficients {
    std::vector<double> r;
    double operator()(int n) const;
    int size() const { return static_cast<int>(r.size()); }
};

MomentSequence moments_of(const Measure& m, int N);

/// Moments of mu |> nu up to order L (L <= 16).
MomentSequence convolve_moments(const MomentSequence& m_mu, const MomentSequence& m_nu, int L);

/// r_1 = gamma + int x d tau, r_n = m_{n-2}((1+x^2) tau) for n >= 2.
FieldCoefficients field_coefficients(double gamma, const Measure& tau, int N);

double semigroup_moment(const FieldCoefficients& r, double t, int n);
MomentSequence semigroup_moments(const FieldCoefficients& r, double t, int N);

/// dm_n/dt for n = 0 .. size(m)-1 (the n = 0 entry is 0).
std::vector<double> moment_ode_rhs(const FieldCoefficients& r, const MomentSequence& m);

double semigroup_consistency(const FieldCoefficients& r, double t, double s, int N);

bool symmetry_diagnostic(double gamma, const Measure& tau, int N);
bool even_moment_tail_check(const Measure& tau, int n);

}  // namespace monoconv
