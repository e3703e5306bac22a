// englert.hpp
// Which-way-detector quantities: trace-distance distinguishability,
// detector-modified visibility, and the V^2 + D^2 <= 1 pair.

#pragma once

#include <utility>

#include "quanton/state.hpp"

namespace quanton {

struct OperatorError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 2x2 Hermitian, unit-trace, positive-semidefinite operator.
struct DensityMatrix2 {
    std::array<std::array<Complex, 2>, 2> m{};

    void validate(double tol = kTolNorm) const;
    // Eigenvalues in descending order, closed-form; values in [-tol, 0)
    // are clipped to 0.
    std::array<double, 2> eigenvalues(double tol = kTolNorm) const;
    static DensityMatrix2 from_ket(const std::array<Complex, 2>& ket);
};

struct Unitary2 {
    std::array<std::array<Complex, 2>, 2> m{};

    void validate(double tol = kTolNorm) const;
    static Unitary2 identity();
    // U^dagger rho U (the conjugation order used throughout).
    DensityMatrix2 conjugate(const DensityMatrix2& rho) const;
};

// (1/2) Tr|rho0 - rho1|, via the closed-form eigenvalues of the
// traceless Hermitian difference.
double trace_distance(const DensityMatrix2& rho0, const DensityMatrix2& rho1,
                      double tol = kTolNorm);

// |Tr(u0^dagger rho_i u1)|.
double englert_visibility(const Unitary2& u0, const Unitary2& u1, const DensityMatrix2& rho_i,
                          double tol = kTolNorm);

// (V, D) with V the detector-modified visibility and D the trace
// distance between the two conjugated detector states. V^2 + D^2 <= 1,
// with equality for pure rho_i.
std::pair<double, double> wwd_duality_pair(const Unitary2& u0, const Unitary2& u1,
                                           const DensityMatrix2& rho_i, double tol = kTolNorm);

}  // namespace quanton
