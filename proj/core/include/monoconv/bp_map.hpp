#pragma once

#include "monoconv/measures.hpp"
#include "monoconv/semigroup.hpp"

namespace monoconv {

/// Classical Levy-Khintchine pair.
struct ClassicalTriple {
    double gamma = 0.0;
    Measure tau = AtomicMeasure{};
};

VectorField lambda_M(const ClassicalTriple& c);
ClassicalTriple lambda_M_inverse(const VectorField& V);

/// exp(i gamma u + int (e^{ixu} - 1 - ixu/(1+x^2)) (1+x^2)/x^2 d tau)
cplx classical_cf(const ClassicalTriple& c, double u);

/// Pair of z -> lambda A(z/lambda).
VectorField dilation_conjugate(const VectorField& V, double lambda);

struct StablePairOptions {
    double window = 1e4;
    std::size_t points = 100000;
};

/// Pair of the strictly stable field b z^{1-alpha} (0 < alpha < 2) with the
/// power-law Levy measure truncated to [-window, window].
VectorField stable_pair(double alpha, cplx b, const StablePairOptions& opt = {});

}  // namespace monoconv
