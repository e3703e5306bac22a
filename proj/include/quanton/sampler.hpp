// sampler.hpp
// Deterministic, seeded generation of test inputs. The generator is a
// splitmix64 stream keyed by (seed, stream): identical keys reproduce
// identical output on any platform and any parallel schedule. Gaussians
// come from a fixed Box-Muller transform, not the standard library's
// unspecified normal_distribution.

#pragma once

#include <cstdint>
#include <tuple>

#include "quanton/englert.hpp"
#include "quanton/state.hpp"

namespace quanton {

struct SampleSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// Stateful view of one (seed, stream) substream.
class SplitMix64 {
  public:
    explicit SplitMix64(SampleSeed key);

    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53 bits.
    double next_double();
    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi);
    // Standard normal, Box-Muller.
    double next_gaussian();
    Complex next_complex_gaussian();

  private:
    std::uint64_t state_;
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

// 4 independent standard complex Gaussian amplitudes, normalized.
StateVector4 haar_random_state(SampleSeed key);

// Haar-random orthonormal polarization basis.
PolarizationBasis haar_random_basis(SplitMix64& rng);

// Random state of exact distinguishability dbar: theta uniform on the
// (V, C) quarter-circle, phases uniform, basis Haar-random.
StateVector4 random_state_fixed_d(double dbar, SampleSeed key);

// Two Haar-random unitaries and a detector state, pure (rank-1) when
// `pure` is set, otherwise a random full-rank mixture.
std::tuple<Unitary2, Unitary2, DensityMatrix2> random_wwd_instance(SampleSeed key, bool pure);

Unitary2 haar_random_unitary(SplitMix64& rng);

}  // namespace quanton
