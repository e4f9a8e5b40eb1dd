#pragma once

#include <stdexcept>
#include <string>

namespace monoconv {

/// Base of every library error. `numeric()` separates bad input from
/// numerical breakdown so front ends can map them to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what, bool numeric);
    const std::string& kind() const noexcept { return kind_; }
    bool numeric() const noexcept { return numeric_; }

private:
    std::string kind_;
    bool numeric_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("ValidationError", what, false) {}
};

// Input-side failures.
class InfiniteVariance : public Error {
public:
    explicit InfiniteVariance(const std::string& what) : Error("InfiniteVariance", what, false) {}
};
class ZeroVariance : public Error {
public:
    explicit ZeroVariance(const std::string& what) : Error("ZeroVariance", what, false) {}
};
class DivergentMoment : public Error {
public:
    explicit DivergentMoment(const std::string& what) : Error("DivergentMoment", what, false) {}
};
class CaseMismatch : public Error {
public:
    explicit CaseMismatch(const std::string& what) : Error("CaseMismatch", what, false) {}
};
class UnboundedBelowTau : public Error {
public:
    explicit UnboundedBelowTau(const std::string& what) : Error("UnboundedBelowTau", what, false) {}
};
class UnnormalizedB : public Error {
public:
    explicit UnnormalizedB(const std::string& what) : Error("UnnormalizedB", what, false) {}
};

// Numerical failures.
class PoleAt : public Error {
public:
    explicit PoleAt(double x);
    double position() const noexcept { return x_; }

private:
    double x_;
};
class ZeroG : public Error {
public:
    explicit ZeroG(const std::string& what) : Error("ZeroG", what, true) {}
};
class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(const std::string& what) : Error("GridTooCoarse", what, true) {}
};
class AtomCollision : public Error {
public:
    explicit AtomCollision(const std::string& what) : Error("AtomCollision", what, true) {}
};
class StepUnderflow : public Error {
public:
    explicit StepUnderflow(const std::string& what) : Error("StepUnderflow", what, true) {}
};
class BranchCutHit : public Error {
public:
    explicit BranchCutHit(const std::string& what) : Error("BranchCutHit", what, true) {}
};

}  // namespace monoconv
