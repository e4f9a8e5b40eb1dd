#pragma once

#include <optional>
#include <vector>

#include "monoconv/measures.hpp"
#include "monoconv/semigroup.hpp"

namespace monoconv {

using StableParams = Stable;

/// w^s with arg w taken in [0, 2 pi). The only place complex powers are formed.
cplx upper_pow(cplx w, double s);

bool stable_valid(double alpha, cplx b, cplx c);

/// c + ((z-c)^alpha + b t)^{1/alpha}
cplx stable_H(const StableParams& p, cplx z);

/// (b/alpha) (z-c)^{1-alpha}
VectorField stable_field(double alpha, cplx b, cplx c);

struct SupportCase {
    int case_id = 0;
    Bounds ac{};
    bool ac_empty = false;
    std::optional<Atom> atom;
};

SupportCase stable_support_case(const StableParams& p);

struct StableDensity {
    GridMeasure measure;
    bool closed_form = false;
};

StableDensity stable_density(const StableParams& p, const std::vector<double>& xs);

}  // namespace monoconv
