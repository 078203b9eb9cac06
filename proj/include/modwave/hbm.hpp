#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "modwave/types.hpp"

namespace modwave {

using cplx = std::complex<double>;

/// Dimensionless interface parameters for the homogeneous-medium harmonic balance:
/// Ccal = rho c C0, Qcal_C = rho c QC0, Mcal = M0/(rho c), Qcal_M = QM0/(rho c).
struct ReducedParams {
    double Ccal = 0.0, Qcal_C = 0.0, Mcal = 0.0, Qcal_M = 0.0;

    static ReducedParams from(const InterfaceLaw& law, const MaterialHalfSpaces& material) {
        if (!material.homogeneous())
            throw ConfigError("harmonic balance requires a homogeneous bulk medium");
        const double Z = material.Z_minus();
        return {Z * law.C0, Z * law.QC0, law.M0 / Z, law.QM0 / Z};
    }

    void validate() const {
        if (Ccal < 0.0 || Qcal_C < 0.0 || Mcal < 0.0 || Qcal_M < 0.0)
            throw ConfigError("reduced interface parameters must be non-negative");
    }
};

/// Tridiagonal system rows k = -N..N stored at index k + N.
struct TridiagonalSystem {
    Eigen::VectorXcd sub, diag, super, rhs;  // sub(0) and super(2N) unused
    int N = 0;
};

/// System for Psi_k = T_k - R_k from the compliance jump condition:
/// row k: [(Ccal eps_C w_k - i Qcal_C eps_QC)/4] Psi_{k-1}
///        + [1 + Qcal_C/2 + i (Ccal/2) w_k] Psi_k
///        - [(Ccal eps_C w_k - i Qcal_C eps_QC)/4] Psi_{k+1} = V_k,
/// V nonzero only at k = -1, 0, +1.
TridiagonalSystem assemble_psi_system(const ReducedParams& rp, double eps_C, double eps_QC,
                                      double omega, double Omega, int N);

/// Same structure for Phi_k = T_k + R_k with (Mcal, eps_M, Qcal_M, eps_QM).
TridiagonalSystem assemble_phi_system(const ReducedParams& rp, double eps_M, double eps_QM,
                                      double omega, double Omega, int N);

/// Thomas elimination; falls back to dense partial-pivot LU when a pivot underflows.
Eigen::VectorXcd solve_tridiagonal(const TridiagonalSystem& sys);

/// Floquet reflection/transmission coefficients R_k, T_k for k = -N..N.
struct ScatteringSpectrum {
    double omega = 0.0, Omega = 0.0;
    int N = 0;
    std::vector<cplx> R, T;  // index k + N

    double omega_k(int k) const { return omega + k * Omega; }
    const cplx& Rk(int k) const { return R[k + N]; }
    const cplx& Tk(int k) const { return T[k + N]; }
};

/// Solves both systems for a sinusoidally modulated law in a homogeneous medium;
/// R_k = (Phi_k - Psi_k)/2, T_k = (Psi_k + Phi_k)/2.
ScatteringSpectrum solve_scattering(const InterfaceLaw& law, const MaterialHalfSpaces& material,
                                    double f_c, int N);

/// Static scattering coefficients at frequency omega for the velocity-convention
/// incident wave v = e^{i w (t - x/c)}, sigma = -Z0 v.
struct StaticRT {
    cplx R, T;
};

StaticRT static_rt(const MaterialHalfSpaces& material, const InterfaceLaw& law, double omega);

}  // namespace modwave
