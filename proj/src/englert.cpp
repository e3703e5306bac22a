#include "quanton/englert.hpp"

#include <cmath>

namespace quanton {

namespace {

void check_finite2x2(const std::array<std::array<Complex, 2>, 2>& m, const char* what) {
    for (const auto& row : m)
        for (const auto& z : row)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw OperatorError(std::string(what) + ": non-finite entry");
}

}  // namespace

void DensityMatrix2::validate(double tol) const {
    check_finite2x2(m, "DensityMatrix2");
    if (std::abs(m[0][0].imag()) > tol || std::abs(m[1][1].imag()) > tol ||
        std::abs(m[0][1] - std::conj(m[1][0])) > tol)
        throw OperatorError("DensityMatrix2: not Hermitian within tolerance");
    if (std::abs(m[0][0].real() + m[1][1].real() - 1.0) > tol)
        throw OperatorError("DensityMatrix2: trace deviates from 1");
    const auto ev = eigenvalues(tol);  // throws on eigenvalue < -tol
    (void)ev;
}

std::array<double, 2> DensityMatrix2::eigenvalues(double tol) const {
    // mean +/- sqrt(deviation^2 + |off-diag|^2), exact for 2x2 Hermitian.
    const double mean = 0.5 * (m[0][0].real() + m[1][1].real());
    const double dev = 0.5 * (m[0][0].real() - m[1][1].real());
    const double rad = std::sqrt(dev * dev + std::norm(m[0][1]));
    double lo = mean - rad;
    if (lo < -tol) throw OperatorError("DensityMatrix2: negative eigenvalue beyond tolerance");
    if (lo < 0.0) lo = 0.0;
    return {mean + rad, lo};
}

DensityMatrix2 DensityMatrix2::from_ket(const std::array<Complex, 2>& ket) {
    DensityMatrix2 rho;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rho.m[i][j] = ket[i] * std::conj(ket[j]);
    return rho;
}

void Unitary2::validate(double tol) const {
    check_finite2x2(m, "Unitary2");
    // U^dagger U = I, entrywise.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k) s += std::conj(m[k][i]) * m[k][j];
            if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol)
                throw OperatorError("Unitary2: U^dagger U deviates from identity");
        }
    }
}

Unitary2 Unitary2::identity() {
    Unitary2 u;
    u.m[0][0] = u.m[1][1] = 1.0;
    return u;
}

DensityMatrix2 Unitary2::conjugate(const DensityMatrix2& rho) const {
    // U^dagger rho U
    DensityMatrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Complex s = 0.0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s += std::conj(m[k][i]) * rho.m[k][l] * m[l][j];
            out.m[i][j] = s;
        }
    return out;
}

double trace_distance(const DensityMatrix2& rho0, const DensityMatrix2& rho1, double tol) {
    rho0.validate(tol);
    rho1.validate(tol);
    // rho0 - rho1 is traceless Hermitian; eigenvalues +/- t with
    // t = sqrt(d00^2 + |d01|^2), so (1/2) sum |lambda| = t.
    const double d00 = rho0.m[0][0].real() - rho1.m[0][0].real();
    const Complex d01 = rho0.m[0][1] - rho1.m[0][1];
    return std::min(1.0, std::sqrt(d00 * d00 + std::norm(d01)));
}

double englert_visibility(const Unitary2& u0, const Unitary2& u1, const DensityMatrix2& rho_i,
                          double tol) {
    u0.validate(tol);
    u1.validate(tol);
    rho_i.validate(tol);
    // Tr(u0^dagger rho u1)
    Complex tr = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j) tr += std::conj(u0.m[k][i]) * rho_i.m[k][j] * u1.m[j][i];
    return std::min(1.0, std::abs(tr));
}

std::pair<double, double> wwd_duality_pair(const Unitary2& u0, const Unitary2& u1,
                                           const DensityMatrix2& rho_i, double tol) {
    const double v = englert_visibility(u0, u1, rho_i, tol);
    const double d = trace_distance(u0.conjugate(rho_i), u1.conjugate(rho_i), tol);
    return {v, d};
}

}  // namespace quanton
