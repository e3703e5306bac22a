// state.hpp
// Pure path x polarization quanton states: construction from the
// (D, V, C, alpha, beta) parametrization and parameter extraction.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>

namespace quanton {

using Complex = std::complex<double>;

// Default tolerances, overridable per call-site.
inline constexpr double kTolNorm = 1e-12;
inline constexpr double kTolTriality = 1e-10;

struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NormalizationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Normalized pure state of one photon over path (x) polarization.
// Basis order: [path0 pol0, path0 pol1, path1 pol0, path1 pol1].
struct StateVector4 {
    std::array<Complex, 4> amp{};

    double norm_sq() const;
    void check_normalized(double tol = kTolNorm) const;
    // Probability on path k (k = 0 or 1).
    double path_prob(int k) const;
};

// Inner product <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector4& a, const StateVector4& b);

// Orthonormal polarization reference basis {phi0, phi0perp}.
struct PolarizationBasis {
    std::array<Complex, 2> phi0{};
    std::array<Complex, 2> phi0perp{};

    void check_orthonormal(double tol = kTolNorm) const;
    static PolarizationBasis standard();
};

// The quintuple (D, V, C, alpha, beta). D is the path population
// imbalance, V the fringe visibility, C the concurrence; the three
// satisfy D^2 + V^2 + C^2 = 1 for every pure state.
struct QuantonParams {
    double d = 0.0;
    double v = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    double triality_residual() const;
    void validate(double tol = kTolTriality) const;
};

struct ExtractionResult {
    QuantonParams params;
    PolarizationBasis basis;
    double predictability = 0.0;
    // True when paths were relabeled so that path 0 is dominant.
    bool path_swapped = false;
};

// sqrt((1+D)/2)|0>|phi0> + sqrt((1-D)/2)e^{i alpha}|1>|phi1>,
// phi1 = (V phi0 + C e^{i beta} phi0perp)/sqrt(1-D^2).
// The D = 1 branch sets the path-1 amplitudes to exactly zero.
StateVector4 build_state(const QuantonParams& params, const PolarizationBasis& basis,
                         double tol_triality = kTolTriality, double tol_norm = kTolNorm);

// Inverse of build_state. Paths are relabeled so path 0 is dominant
// (ties keep input order); the global phase is fixed by making the
// largest-magnitude amplitude real positive before phase extraction.
// For D = 1 the unobservable V, C, alpha, beta are returned as 0.
ExtractionResult extract_params(const StateVector4& state, double tol_norm = kTolNorm);

// Swap the path labels of a state (|0>|p> <-> |1>|p>).
StateVector4 swap_paths(const StateVector4& state);

// Basis whose phi0 is the normalized polarization conditional on the
// given path (no dominant-path relabeling). Errors if that path is
// unpopulated.
PolarizationBasis path_conditional_basis(const StateVector4& state, int path,
                                         double tol_norm = kTolNorm);

// 2|a00 a11 - a01 a10|, invariant under local basis changes.
double concurrence(const StateVector4& state, double tol_norm = kTolNorm);

// |D^2 + V^2 + C^2 - 1| via extract_params; identically 0 for pure states.
double triality_residual(const StateVector4& state, double tol_norm = kTolNorm);

}  // namespace quanton
