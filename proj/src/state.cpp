#include "quanton/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace quanton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

void check_finite(const Complex& z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw ConstraintError(std::string(what) + ": non-finite amplitude");
}

}  // namespace

double StateVector4::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s;
}

void StateVector4::check_normalized(double tol) const {
    for (const auto& a : amp) check_finite(a, "StateVector4");
    if (std::abs(norm_sq() - 1.0) > tol)
        throw NormalizationError("StateVector4: squared norm deviates from 1 beyond tolerance");
}

double StateVector4::path_prob(int k) const {
    return std::norm(amp[2 * k]) + std::norm(amp[2 * k + 1]);
}

Complex inner(const StateVector4& a, const StateVector4& b) {
    Complex s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

void PolarizationBasis::check_orthonormal(double tol) const {
    for (const auto& z : phi0) check_finite(z, "PolarizationBasis");
    for (const auto& z : phi0perp) check_finite(z, "PolarizationBasis");
    const double n0 = std::norm(phi0[0]) + std::norm(phi0[1]);
    const double n1 = std::norm(phi0perp[0]) + std::norm(phi0perp[1]);
    const Complex ov = std::conj(phi0[0]) * phi0perp[0] + std::conj(phi0[1]) * phi0perp[1];
    if (std::abs(n0 - 1.0) > tol || std::abs(n1 - 1.0) > tol || std::abs(ov) > tol)
        throw ConstraintError("PolarizationBasis: not orthonormal within tolerance");
}

PolarizationBasis PolarizationBasis::standard() {
    return {{Complex{1.0, 0.0}, Complex{0.0, 0.0}}, {Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
}

double QuantonParams::triality_residual() const {
    return std::abs(d * d + v * v + c * c - 1.0);
}

void QuantonParams::validate(double tol) const {
    for (double x : {d, v, c, alpha, beta})
        if (!std::isfinite(x)) throw ConstraintError("QuantonParams: non-finite field");
    if (d < 0.0 || d > 1.0 || v < 0.0 || v > 1.0 || c < 0.0 || c > 1.0)
        throw ConstraintError("QuantonParams: D, V, C must lie in [0, 1]");
    if (triality_residual() > tol)
        throw ConstraintError("QuantonParams: D^2 + V^2 + C^2 deviates from 1 beyond tolerance");
}

StateVector4 build_state(const QuantonParams& p, const PolarizationBasis& basis,
                         double tol_triality, double tol_norm) {
    p.validate(tol_triality);
    basis.check_orthonormal(tol_norm);

    const double a0 = std::sqrt((1.0 + p.d) / 2.0);
    StateVector4 s;
    s.amp[0] = a0 * basis.phi0[0];
    s.amp[1] = a0 * basis.phi0[1];

    if (p.d < 1.0) {
        const double inv = 1.0 / std::sqrt(1.0 - p.d * p.d);
        const Complex cb = p.c * std::polar(1.0, p.beta);
        const std::array<Complex, 2> phi1{
            inv * (p.v * basis.phi0[0] + cb * basis.phi0perp[0]),
            inv * (p.v * basis.phi0[1] + cb * basis.phi0perp[1])};
        const Complex a1 = std::sqrt((1.0 - p.d) / 2.0) * std::polar(1.0, p.alpha);
        s.amp[2] = a1 * phi1[0];
        s.amp[3] = a1 * phi1[1];
    }
    // D = 1: the path-1 branch is exactly zero, never 0/0.
    return s;
}

StateVector4 swap_paths(const StateVector4& state) {
    return {{state.amp[2], state.amp[3], state.amp[0], state.amp[1]}};
}

PolarizationBasis path_conditional_basis(const StateVector4& state, int path, double tol_norm) {
    state.check_normalized(tol_norm);
    if (path != 0 && path != 1) throw ConstraintError("path_conditional_basis: path must be 0 or 1");
    const double p = state.path_prob(path);
    if (p < kTolNorm)
        throw ConstraintError("path_conditional_basis: path has no population");
    const double n = std::sqrt(p);
    PolarizationBasis b;
    b.phi0 = {state.amp[2 * path] / n, state.amp[2 * path + 1] / n};
    b.phi0perp = {-std::conj(b.phi0[1]), std::conj(b.phi0[0])};
    return b;
}

ExtractionResult extract_params(const StateVector4& state, double tol_norm) {
    state.check_normalized(tol_norm);

    StateVector4 s = state;
    const bool swapped = s.path_prob(1) > s.path_prob(0);
    if (swapped) s = swap_paths(s);

    // Global phase gauge: largest-magnitude amplitude real positive.
    int imax = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(s.amp[i]) > std::abs(s.amp[imax])) imax = i;
    const Complex phase = s.amp[imax] / std::abs(s.amp[imax]);
    for (auto& a : s.amp) a /= phase;

    const double p0 = s.path_prob(0);
    const double p1 = s.path_prob(1);
    const double d = std::clamp(p0 - p1, 0.0, 1.0);

    ExtractionResult r;
    r.path_swapped = swapped;
    r.params.d = d;
    r.predictability = d;

    if (p0 < kTolNorm) {
        // Fully degenerate input cannot occur for a normalized state
        // after canonicalization (p0 >= 1/2).
        throw NormalizationError("extract_params: vanishing dominant-path population");
    }

    const double n0 = std::sqrt(p0);
    r.basis.phi0 = {s.amp[0] / n0, s.amp[1] / n0};
    r.basis.phi0perp = {-std::conj(r.basis.phi0[1]), std::conj(r.basis.phi0[0])};

    if (1.0 - d < kTolNorm) {
        // D = 1: V, C, alpha, beta unobservable, returned as zero.
        r.params.d = 1.0;
        r.predictability = 1.0;
        return r;
    }

    // Components of the path-1 polarization along phi0 / phi0perp:
    //   u = b e^{i alpha} V / sqrt(1-D^2),  w = b e^{i(alpha+beta)} C / sqrt(1-D^2)
    const Complex u = std::conj(r.basis.phi0[0]) * s.amp[2] + std::conj(r.basis.phi0[1]) * s.amp[3];
    const Complex w =
        std::conj(r.basis.phi0perp[0]) * s.amp[2] + std::conj(r.basis.phi0perp[1]) * s.amp[3];

    // |u| = sqrt((1-D)/2) V / sqrt(1-D^2), so V = |u| sqrt(2(1+D)); same for C.
    // Equivalent to 2|rho01| of the reduced path operator and 2|a00 a11 - a01 a10|.
    const double scale = std::sqrt(2.0 * (1.0 + d));
    r.params.v = std::min(1.0, std::abs(u) * scale);
    r.params.c = std::min(1.0, std::abs(w) * scale);

    constexpr double kPhaseTol = 1e-14;
    if (std::abs(u) > kPhaseTol) {
        r.params.alpha = wrap_phase(std::arg(u));
        r.params.beta = std::abs(w) > kPhaseTol ? wrap_phase(std::arg(w) - std::arg(u)) : 0.0;
    } else if (std::abs(w) > kPhaseTol) {
        // V = 0: only alpha + beta is observable; beta fixed to 0.
        r.params.alpha = wrap_phase(std::arg(w));
        r.params.beta = 0.0;
    }
    return r;
}

double concurrence(const StateVector4& state, double tol_norm) {
    state.check_normalized(tol_norm);
    const auto& a = state.amp;
    return std::min(1.0, 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]));
}

double triality_residual(const StateVector4& state, double tol_norm) {
    const ExtractionResult r = extract_params(state, tol_norm);
    const double c = concurrence(state, tol_norm);
    const auto& p = r.params;
    return std::abs(p.d * p.d + p.v * p.v + c * c - 1.0);
}

}  // namespace quanton
