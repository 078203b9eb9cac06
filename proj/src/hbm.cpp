#include "modwave/hbm.hpp"

#include <cmath>

namespace modwave {

namespace {

const cplx I{0.0, 1.0};

TridiagonalSystem assemble_channel(double X, double Q, double eps_X, double eps_Q, double omega,
                                   double Omega, int N) {
    if (N < 1) throw ConfigError("harmonic balance: truncation N must be >= 1");
    const int n = 2 * N + 1;
    TridiagonalSystem sys;
    sys.N = N;
    sys.sub = Eigen::VectorXcd::Zero(n);
    sys.diag = Eigen::VectorXcd::Zero(n);
    sys.super = Eigen::VectorXcd::Zero(n);
    sys.rhs = Eigen::VectorXcd::Zero(n);
    for (int k = -N; k <= N; ++k) {
        const int i = k + N;
        const double wk = omega + k * Omega;
        const cplx off = (X * eps_X * wk - I * Q * eps_Q) / 4.0;
        sys.sub(i) = off;
        sys.diag(i) = 1.0 + Q / 2.0 + I * (X / 2.0) * wk;
        sys.super(i) = -off;
    }
    sys.rhs(N - 1) = (X * eps_X / 4.0) * (omega - Omega) - I * Q * eps_Q / 4.0;
    sys.rhs(N) = 1.0 - Q / 2.0 - I * (X / 2.0) * omega;
    sys.rhs(N + 1) = -(X * eps_X / 4.0) * (omega + Omega) + I * Q * eps_Q / 4.0;
    return sys;
}

}  // namespace

TridiagonalSystem assemble_psi_system(const ReducedParams& rp, double eps_C, double eps_QC,
                                      double omega, double Omega, int N) {
    rp.validate();
    return assemble_channel(rp.Ccal, rp.Qcal_C, eps_C, eps_QC, omega, Omega, N);
}

TridiagonalSystem assemble_phi_system(const ReducedParams& rp, double eps_M, double eps_QM,
                                      double omega, double Omega, int N) {
    rp.validate();
    return assemble_channel(rp.Mcal, rp.Qcal_M, eps_M, eps_QM, omega, Omega, N);
}

Eigen::VectorXcd solve_tridiagonal(const TridiagonalSystem& sys) {
    const int n = sys.diag.size();
    Eigen::VectorXcd c(n), d(n), x(n);

    // Thomas elimination; the assembled systems are diagonally dominant for
    // |eps| < 1, so pivots stay away from zero in the intended regime.
    bool ok = true;
    cplx denom = sys.diag(0);
    const double scale = sys.diag.cwiseAbs().maxCoeff();
    if (std::abs(denom) < 1e-14 * scale) ok = false;
    if (ok) {
        c(0) = sys.super(0) / denom;
        d(0) = sys.rhs(0) / denom;
        for (int i = 1; i < n && ok; ++i) {
            denom = sys.diag(i) - sys.sub(i) * c(i - 1);
            if (std::abs(denom) < 1e-14 * scale) {
                ok = false;
                break;
            }
            c(i) = sys.super(i) / denom;
            d(i) = (sys.rhs(i) - sys.sub(i) * d(i - 1)) / denom;
        }
    }
    if (ok) {
        x(n - 1) = d(n - 1);
        for (int i = n - 2; i >= 0; --i) x(i) = d(i) - c(i) * x(i + 1);
        return x;
    }

    // Dense fallback with partial pivoting.
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        A(i, i) = sys.diag(i);
        if (i > 0) A(i, i - 1) = sys.sub(i);
        if (i < n - 1) A(i, i + 1) = sys.super(i);
    }
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    x = lu.solve(sys.rhs);
    if (!x.allFinite()) throw NumericalError("solve_tridiagonal: singular harmonic-balance system");
    return x;
}

ScatteringSpectrum solve_scattering(const InterfaceLaw& law, const MaterialHalfSpaces& material,
                                    double f_c, int N) {
    if (law.kind.shape != ModulationKind::Sinusoidal)
        throw ConfigError("solve_scattering: harmonic balance is set up for sinusoidal modulation");
    const ReducedParams rp = ReducedParams::from(law, material);
    const double omega = 2.0 * pi * f_c;
    const double Omega = law.Omega();

    const auto psi = solve_tridiagonal(assemble_psi_system(rp, law.eps_C, law.eps_QC, omega, Omega, N));
    const auto phi = solve_tridiagonal(assemble_phi_system(rp, law.eps_M, law.eps_QM, omega, Omega, N));

    ScatteringSpectrum sp;
    sp.omega = omega;
    sp.Omega = Omega;
    sp.N = N;
    sp.R.resize(2 * N + 1);
    sp.T.resize(2 * N + 1);
    for (int i = 0; i <= 2 * N; ++i) {
        sp.R[i] = 0.5 * (phi(i) - psi(i));
        sp.T[i] = 0.5 * (psi(i) + phi(i));
    }
    return sp;
}

StaticRT static_rt(const MaterialHalfSpaces& material, const InterfaceLaw& law, double omega) {
    material.validate();
    const double Z0 = material.Z_minus();
    const double Z1 = material.Z_plus();

    // a = (i w C0 + QC0)/2, b = (i w M0 + QM0)/2. Continuity of the velocity
    // ansatz across the jump conditions gives
    //   T ( 1 + a Z1 ) - R ( 1 + a Z0 ) = 1 - a Z0
    //   T ( Z1 + b )  + R ( Z0 + b )   = Z0 - b,
    // i.e. in the Appendix-A groupings (with (w/w#)^2 = w^2 C0 M0 / 4):
    //   den = (Z0+Z1)(1 - (w/w#)^2 + QC0 QM0/4) + QC0 Z0 Z1 + QM0
    //         + i w (Y1 + (QC0 M0 + QM0 C0)(Z0+Z1)/4)
    //   T   = 2 Z0 (1 + (w/w#)^2 - QC0 QM0/4 - i w (QC0 M0 + QM0 C0)/4) / den
    //   R   = [(Z0-Z1)(1 - (w/w#)^2 + QC0 QM0/4) + QC0 Z0 Z1 - QM0
    //         + i w (Y0 + (QC0 M0 + QM0 C0)(Z0-Z1)/4)] / den,  Y0 = C0 Z0 Z1 - M0.
    const cplx a = (I * omega * law.C0 + law.QC0) / 2.0;
    const cplx b = (I * omega * law.M0 + law.QM0) / 2.0;
    const cplx ab = a * b;

    const cplx den = (Z0 + Z1) * (1.0 + ab) + 2.0 * b + 2.0 * a * Z0 * Z1;
    StaticRT rt;
    rt.T = 2.0 * Z0 * (1.0 - ab) / den;
    rt.R = ((Z0 - Z1) * (1.0 + ab) - 2.0 * b + 2.0 * a * Z0 * Z1) / den;
    return rt;
}

}  // namespace modwave
