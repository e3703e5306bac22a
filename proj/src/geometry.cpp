#include "quanton/geometry.hpp"

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

}  // namespace

void OverlapParams::validate() const {
    if (!(gamma >= 0.0 && gamma <= 1.0) || !std::isfinite(xi) || !std::isfinite(mu))
        throw ConstraintError("OverlapParams: gamma must lie in [0, 1], phases finite");
}

DerivedPhases derive_phases(const QuantonParams& p, const QuantonParams& pbar,
                            const OverlapParams& ov) {
    const double l1 = p.alpha - pbar.alpha;
    return {wrap_phase(l1), wrap_phase(l1 + p.beta - pbar.beta - ov.xi),
            wrap_phase(l1 + p.beta - ov.xi), wrap_phase(l1 - pbar.beta)};
}

double overlap_bruteforce(const StateVector4& s1, const StateVector4& s2, double tol_norm) {
    s1.check_normalized(tol_norm);
    s2.check_normalized(tol_norm);
    return std::min(1.0, std::abs(inner(s1, s2)));
}

double bures_distance(const StateVector4& s1, const StateVector4& s2, double tol_norm) {
    return std::sqrt(2.0) * std::sqrt(1.0 - overlap_bruteforce(s1, s2, tol_norm));
}

std::pair<StateVector4, StateVector4> realize_pair(const QuantonParams& p1,
                                                   const QuantonParams& p2,
                                                   const OverlapParams& ov) {
    ov.validate();
    const double root = std::sqrt(1.0 - ov.gamma * ov.gamma);
    const Complex em = std::polar(1.0, ov.mu);
    const Complex ex = std::polar(1.0, ov.xi);

    PolarizationBasis barred;
    barred.phi0 = {Complex{ov.gamma, 0.0}, root * em};
    barred.phi0perp = {ex * (-root * std::conj(em)), ex * ov.gamma};

    return {build_state(p1, PolarizationBasis::standard()), build_state(p2, barred)};
}

OverlapParams relative_overlap_params(const PolarizationBasis& b1, const PolarizationBasis& b2,
                                      double tol_norm) {
    b1.check_orthonormal(tol_norm);
    b2.check_orthonormal(tol_norm);

    const auto ip = [](const std::array<Complex, 2>& a, const std::array<Complex, 2>& b) {
        return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    };
    const Complex g = ip(b2.phi0, b1.phi0);            // <phibar0|phi0>
    const Complex diag = ip(b2.phi0perp, b1.phi0perp); // <phibar0perp|phi0perp>
    const Complex cross = ip(b2.phi0, b1.phi0perp);    // sqrt(1-gamma^2) e^{-i mu}

    OverlapParams ov;
    ov.gamma = std::min(1.0, std::abs(g));
    constexpr double kDegenerate = 1e-14;
    if (ov.gamma > kDegenerate && std::abs(diag) > kDegenerate)
        ov.xi = wrap_phase(-std::arg(diag / g));
    if (std::abs(cross) > kDegenerate) ov.mu = wrap_phase(-std::arg(cross));
    return ov;
}

double overlap_closed_form(const QuantonParams& p1, const QuantonParams& p2,
                           const OverlapParams& ov) {
    p1.validate();
    p2.validate();
    ov.validate();

    // Either quanton a particle: the polarization branch collapses and
    // the overlap is gamma sqrt((1 + D_other)/2).
    if (p1.d == 1.0) return ov.gamma * std::sqrt((1.0 + p2.d) / 2.0);
    if (p2.d == 1.0) return ov.gamma * std::sqrt((1.0 + p1.d) / 2.0);

    const DerivedPhases ph = derive_phases(p1, p2, ov);
    const double root = std::sqrt(1.0 - ov.gamma * ov.gamma);

    // <psibar|psi> * 2 sqrt((1+D)(1+Dbar)); the 1/sqrt(1-D^2) factors of
    // the phi1 expansions cancel against the sqrt((1-D)/2) amplitudes.
    const Complex diag = ov.gamma * ((1.0 + p1.d) * (1.0 + p2.d) +
                                     std::polar(1.0, ph.lambda1) *
                                         (p1.v * p2.v + p1.c * p2.c * std::polar(1.0, ph.lambda2 - ph.lambda1)));
    const Complex cross = root * (p2.v * p1.c * std::polar(1.0, ph.lambda1 + p1.beta - ov.mu) -
                                  p1.v * p2.c * std::polar(1.0, ph.lambda1 - p2.beta - ov.xi + ov.mu));
    const double denom = 2.0 * std::sqrt((1.0 + p1.d) * (1.0 + p2.d));
    return std::min(1.0, std::abs(diag + cross) / denom);
}

double particle_distance(double gamma, double dbar) {
    if (!(gamma >= 0.0 && gamma <= 1.0) || !(dbar >= 0.0 && dbar <= 1.0))
        throw ConstraintError("particle_distance: gamma and dbar must lie in [0, 1]");
    return std::sqrt(2.0) * std::sqrt(1.0 - gamma * std::sqrt((1.0 + dbar) / 2.0));
}

ParticleWitness min_particle_distance(const StateVector4& state, double tol_norm) {
    const ExtractionResult r = extract_params(state, tol_norm);
    ParticleWitness w;
    w.polarization = r.basis.phi0;
    w.distance = particle_distance(1.0, r.params.d);
    return w;
}

}  // namespace quanton
