#include "quanton/sampler.hpp"

#include <cmath>
#include <numbers>

namespace quanton {

namespace {

std::uint64_t splitmix64_step(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64::SplitMix64(SampleSeed key) {
    // Mix seed and stream so distinct streams of one seed and distinct
    // seeds of one stream both decorrelate.
    std::uint64_t a = key.seed;
    std::uint64_t b = key.stream;
    state_ = splitmix64_step(a) ^ (splitmix64_step(b) * 0xda942042e4dd58b5ULL);
}

std::uint64_t SplitMix64::next_u64() { return splitmix64_step(state_); }

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
}

double SplitMix64::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_gaussian_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    cached_gaussian_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

Complex SplitMix64::next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return {re, im};
}

StateVector4 haar_random_state(SampleSeed key) {
    SplitMix64 rng(key);
    StateVector4 s;
    for (auto& a : s.amp) a = rng.next_complex_gaussian();
    const double n = std::sqrt(s.norm_sq());
    for (auto& a : s.amp) a /= n;
    return s;
}

PolarizationBasis haar_random_basis(SplitMix64& rng) {
    std::array<Complex, 2> v{rng.next_complex_gaussian(), rng.next_complex_gaussian()};
    const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    v[0] /= n;
    v[1] /= n;
    const Complex phase = std::polar(1.0, rng.next_uniform(0.0, 2.0 * std::numbers::pi));
    PolarizationBasis b;
    b.phi0 = v;
    b.phi0perp = {phase * -std::conj(v[1]), phase * std::conj(v[0])};
    return b;
}

StateVector4 random_state_fixed_d(double dbar, SampleSeed key) {
    if (!(dbar >= 0.0 && dbar <= 1.0))
        throw ConstraintError("random_state_fixed_d: dbar must lie in [0, 1]");
    SplitMix64 rng(key);
    const double theta = rng.next_uniform(0.0, std::numbers::pi / 2.0);
    const double root = std::sqrt(std::max(0.0, 1.0 - dbar * dbar));
    QuantonParams p;
    p.d = dbar;
    p.v = root * std::cos(theta);
    p.c = root * std::sin(theta);
    p.alpha = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
    p.beta = rng.next_uniform(0.0, 2.0 * std::numbers::pi);
    const PolarizationBasis basis = haar_random_basis(rng);
    // cos^2 + sin^2 keeps the triality residual at machine precision.
    return build_state(p, basis);
}

Unitary2 haar_random_unitary(SplitMix64& rng) {
    const PolarizationBasis b = haar_random_basis(rng);
    const Complex det_phase = std::polar(1.0, rng.next_uniform(0.0, 2.0 * std::numbers::pi));
    Unitary2 u;
    u.m[0][0] = b.phi0[0];
    u.m[1][0] = b.phi0[1];
    u.m[0][1] = det_phase * b.phi0perp[0];
    u.m[1][1] = det_phase * b.phi0perp[1];
    return u;
}

std::tuple<Unitary2, Unitary2, DensityMatrix2> random_wwd_instance(SampleSeed key, bool pure) {
    SplitMix64 rng(key);
    Unitary2 u0 = haar_random_unitary(rng);
    Unitary2 u1 = haar_random_unitary(rng);

    DensityMatrix2 rho;
    if (pure) {
        const PolarizationBasis b = haar_random_basis(rng);
        rho = DensityMatrix2::from_ket(b.phi0);
    } else {
        const PolarizationBasis b = haar_random_basis(rng);
        const double p = rng.next_uniform(0.1, 0.9);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                rho.m[i][j] = p * b.phi0[i] * std::conj(b.phi0[j]) +
                              (1.0 - p) * b.phi0perp[i] * std::conj(b.phi0perp[j]);
    }
    return {u0, u1, rho};
}

}  // namespace quanton
