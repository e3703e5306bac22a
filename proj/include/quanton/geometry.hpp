// geometry.hpp
// Fidelity and Bures distance between quanton states: brute force,
// closed form in the (D, V, C, alpha, beta; gamma, xi, mu) parameters,
// the particle specialization, and minimization over the particle set.

#pragma once

#include <utility>

#include "quanton/state.hpp"

namespace quanton {

// Overlap parameters relating two polarization reference bases:
// <phibar0|phi0> = gamma, <phibar0perp|phi0perp> = gamma e^{-i xi};
// mu is the free phase of the cross overlap, fixed to 0 by default.
struct OverlapParams {
    double gamma = 1.0;
    double xi = 0.0;
    double mu = 0.0;

    void validate() const;
};

// Phase bookkeeping of the closed-form overlap.
struct DerivedPhases {
    double lambda1, lambda2, lambda3, lambda4;
};

DerivedPhases derive_phases(const QuantonParams& p, const QuantonParams& pbar,
                            const OverlapParams& ov);

// The particle |0> (x) |polarization| minimizing the Bures distance,
// with the distance it achieves.
struct ParticleWitness {
    std::array<Complex, 2> polarization{};
    double distance = 0.0;
};

// |<s1|s2>| from the four amplitudes.
double overlap_bruteforce(const StateVector4& s1, const StateVector4& s2,
                          double tol_norm = kTolNorm);

// sqrt(2) sqrt(1 - |<s1|s2>|).
double bures_distance(const StateVector4& s1, const StateVector4& s2, double tol_norm = kTolNorm);

// Build an explicit pair of states realizing (p1, p2, ov): state 1 on
// the standard polarization basis, state 2 on the basis
//   phibar0 = (gamma, sqrt(1-gamma^2) e^{i mu}),
//   phibar0perp = e^{i xi} (-sqrt(1-gamma^2) e^{-i mu}, gamma).
std::pair<StateVector4, StateVector4> realize_pair(const QuantonParams& p1,
                                                   const QuantonParams& p2,
                                                   const OverlapParams& ov);

// Recover (gamma, xi, mu) from two bases; b1 holds phi0, b2 holds
// phibar0. Phases undefined at gamma in {0, 1} are returned as 0.
OverlapParams relative_overlap_params(const PolarizationBasis& b1, const PolarizationBasis& b2,
                                      double tol_norm = kTolNorm);

// |<psibar|psi>| from parameters only; agrees with
// overlap_bruteforce on realize_pair(p1, p2, ov) and reduces to
// gamma sqrt((1 + Dbar)/2) when p1.D = 1.
double overlap_closed_form(const QuantonParams& p1, const QuantonParams& p2,
                           const OverlapParams& ov);

// sqrt(2) sqrt(1 - gamma sqrt((1 + dbar)/2)): the distance from a
// particle to any state of distinguishability dbar at basis overlap gamma.
double particle_distance(double gamma, double dbar);

// Nearest particle state |0> (x) |chi| after dominant-path
// canonicalization; chi is the path-0 conditional polarization.
ParticleWitness min_particle_distance(const StateVector4& state, double tol_norm = kTolNorm);

}  // namespace quanton
