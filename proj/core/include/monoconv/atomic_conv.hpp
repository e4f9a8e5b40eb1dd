#pragma once

#include <vector>

#include "monoconv/measures.hpp"

namespace monoconv {

enum class ShiftPattern { LeftShift, RightShift };

struct InterlacingReport {
    std::vector<double> a_positions;
    std::vector<double> b_positions;
    ShiftPattern pattern = ShiftPattern::RightShift;
    bool valid = false;
    /// First index where the expected order breaks, -1 when valid.
    long first_violation = -1;
};

struct PartialFractions {
    double alpha = 0.0;
    std::vector<Atom> poles;  // (b_k, beta_k)
};

/// delta_b |> nu, exact up to root-finding precision.
AtomicMeasure point_convolve(double b, const AtomicMeasure& nu);

/// mu |> nu for atomic mu and nu; exactly size(mu)*size(nu) atoms.
AtomicMeasure monotone_convolve_atomic(const AtomicMeasure& mu, const AtomicMeasure& nu);

InterlacingReport interlacing_check(const std::vector<double>& nu_atoms,
                                    const std::vector<double>& result_atoms, double b);

/// H = alpha + z + sum beta_k / (b_k - z)
PartialFractions atomic_H_partial_fractions(const AtomicMeasure& nu);

/// Real zeros of x -> alpha + x + sum beta_k/(b_k - x) (one per gap between
/// poles and one on each side) with weights 1/H'(x).
AtomicMeasure zeros_of_partial_fractions(const PartialFractions& pf);

}  // namespace monoconv
