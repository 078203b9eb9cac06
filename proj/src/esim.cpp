#include "modwave/esim.hpp"

#include <cmath>
#include <vector>

#include "modwave/modulation.hpp"

namespace modwave {

namespace {

using Mat2 = Eigen::Matrix2d;

double binom(int n, int r) {
    double b = 1.0;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

JumpMatrices build_jump_matrices(const InterfaceLaw& law, const MaterialHalfSpaces& material,
                                 double t, int k, bool frozen_derivatives) {
    if (k < 0 || k + 1 > max_modulation_order)
        throw ConfigError("build_jump_matrices: k must satisfy 0 <= k <= 5");

    const int n = 2 * (k + 1);
    JumpMatrices jm;
    jm.t = t;
    jm.k = k;
    jm.Cplus = Eigen::MatrixXd::Zero(n, n);
    jm.Cminus = Eigen::MatrixXd::Zero(n, n);

    // B^(n), E^(n) for n = 0..k+1 from the modulated law.
    std::vector<Mat2> B(k + 2), E(k + 2);
    for (int d = 0; d <= k + 1; ++d) {
        InterfaceParams p{0.0, 0.0, 0.0, 0.0};
        if (d == 0 || !frozen_derivatives) p = interface_params(law, t, d);
        B[d] << 0.0, p.C, p.M, 0.0;
        E[d] << 0.0, p.QC, p.QM, 0.0;
    }

    // Powers of (-A^±).
    Mat2 Aminus, Aplus;
    Aminus << 0.0, -1.0 / material.rho_minus, -material.E_minus(), 0.0;
    Aplus << 0.0, -1.0 / material.rho_plus, -material.E_plus(), 0.0;
    std::vector<Mat2> mAm(k + 2), mAp(k + 2);
    mAm[0] = Mat2::Identity();
    mAp[0] = Mat2::Identity();
    for (int i = 1; i <= k + 1; ++i) {
        mAm[i] = mAm[i - 1] * (-Aminus);
        mAp[i] = mAp[i - 1] * (-Aplus);
    }

    const Mat2 I = Mat2::Identity();
    auto assemble = [&](Eigen::MatrixXd& C, double sign, const std::vector<Mat2>& mA) {
        for (int j = 0; j <= k; ++j) {
            for (int i = 0; i <= j; ++i) {
                const double b = binom(j, i);
                Mat2 blk = -0.5 * sign * (B[j - i + 1] + E[j - i]);
                if (i == j) blk += I;
                C.block<2, 2>(2 * j, 2 * i) += b * (blk * mA[i]);
                // dt^{i+1} term: -(sign/2) B^{(j-i)} (-A)^{i+1}; the i = j = k
                // block would be Gamma_{k+1}, which the method neglects.
                if (i + 1 <= k)
                    C.block<2, 2>(2 * j, 2 * (i + 1)) += -0.5 * sign * b * (B[j - i] * mA[i + 1]);
            }
        }
    };
    assemble(jm.Cplus, +1.0, mAp);
    assemble(jm.Cminus, -1.0, mAm);
    return jm;
}

Eigen::MatrixXd transfer_matrix(const JumpMatrices& jm) {
    const int n = jm.Cplus.rows();

    // Row scaling (cancels exactly in D_k) then column equilibration of C+
    // before the solve; the raw matrices mix scales like c^k across blocks.
    Eigen::VectorXd rs(n);
    for (int i = 0; i < n; ++i) {
        const double m = std::max(jm.Cplus.row(i).cwiseAbs().maxCoeff(),
                                  jm.Cminus.row(i).cwiseAbs().maxCoeff());
        rs(i) = m > 0.0 ? 1.0 / m : 1.0;
    }
    Eigen::MatrixXd Ap = rs.asDiagonal() * jm.Cplus;
    Eigen::MatrixXd Am = rs.asDiagonal() * jm.Cminus;

    Eigen::VectorXd cs(n);
    for (int j = 0; j < n; ++j) {
        const double m = Ap.col(j).cwiseAbs().maxCoeff();
        if (!(m > 0.0)) throw NumericalError("transfer_matrix: C_k^+ has a zero column");
        cs(j) = 1.0 / m;
    }
    Eigen::MatrixXd ApW = Ap * cs.asDiagonal();

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(ApW);
    const Eigen::MatrixXd inv = lu.inverse();
    const double cond = ApW.cwiseAbs().rowwise().sum().maxCoeff() *
                        inv.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(cond < 1e12))
        throw NumericalError("transfer_matrix: ill-conditioned interface system, cond ~ " +
                             std::to_string(cond));

    // D_k = W (ApW)^{-1} Am
    return cs.asDiagonal() * lu.solve(Am);
}

BoundaryDerivatives fit_boundary_derivatives(const FieldState& state, const Eigen::MatrixXd& Dk,
                                             const Grid& grid, double x0, int k, int q) {
    const int n = 2 * (k + 1);
    if (Dk.rows() != n || Dk.cols() != n)
        throw ConsistencyError("fit_boundary_derivatives: D_k size does not match k");
    if (2 * q < k + 1)
        throw ConfigError("fit_boundary_derivatives: need q >= (k+1)/2 nodes per side");

    const int jL = grid.last_node_left_of(x0);
    if (jL - (q - 1) < 0 || jL + q >= grid.Nx)
        throw ConfigError("fit_boundary_derivatives: not enough nodes around the interface");

    // Unknowns w_m = dx^m dx^m-derivative blocks of U^-, kept O(field) by the
    // dx^m scaling; distances are in units of dx.
    Eigen::VectorXd wscale(n);
    for (int m = 0; m <= k; ++m) {
        const double s = std::pow(grid.dx, m);
        wscale(2 * m) = s;
        wscale(2 * m + 1) = s;
    }
    const Eigen::MatrixXd Dk_scaled =
        wscale.cwiseInverse().asDiagonal() * Dk * wscale.asDiagonal();

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(4 * q, n);
    Eigen::VectorXd rhs(4 * q);
    int row = 0;
    for (int i = 0; i < 2 * q; ++i) {
        const int j = (i < q) ? jL - (q - 1) + i : jL + 1 + (i - q);
        const bool left = i < q;
        const double r = (grid.x(j) - x0) / grid.dx;
        // Taylor row: sum_m (r^m / m!) w_m = U_j, through D_k on the plus side.
        Eigen::RowVectorXd taylor = Eigen::RowVectorXd::Zero(k + 1);
        double p = 1.0, fact = 1.0;
        for (int m = 0; m <= k; ++m) {
            taylor(m) = p / fact;
            p *= r;
            fact *= (m + 1);
        }
        for (int comp = 0; comp < 2; ++comp) {
            if (left) {
                for (int m = 0; m <= k; ++m) M(row, 2 * m + comp) = taylor(m);
            } else {
                for (int m = 0; m <= k; ++m) M.row(row) += taylor(m) * Dk_scaled.row(2 * m + comp);
            }
            rhs(row) = comp == 0 ? state.v[j] : state.sigma[j];
            ++row;
        }
    }

    // Equilibrate before factorizing: sigma-like columns carry the impedance
    // scale (~Z) relative to velocity columns, which would defeat the rank test.
    Eigen::VectorXd cscale(n), rscale(4 * q);
    for (int c = 0; c < n; ++c) {
        const double m = M.col(c).cwiseAbs().maxCoeff();
        if (!(m > 0.0)) throw NumericalError("fit_boundary_derivatives: zero column in fit");
        cscale(c) = 1.0 / m;
    }
    Eigen::MatrixXd Ms = M * cscale.asDiagonal();
    for (int r = 0; r < 4 * q; ++r) {
        const double m = Ms.row(r).cwiseAbs().maxCoeff();
        rscale(r) = m > 0.0 ? 1.0 / m : 1.0;
    }
    Ms = rscale.asDiagonal() * Ms;

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Ms);
    if (qr.rank() < n)
        throw NumericalError("fit_boundary_derivatives: rank-deficient fit (rank " +
                             std::to_string(qr.rank()) + " of " + std::to_string(n) + ")");
    const Eigen::VectorXd w = cscale.asDiagonal() * qr.solve(rscale.asDiagonal() * rhs);

    BoundaryDerivatives bd;
    bd.k = k;
    bd.Uk_minus = w.cwiseQuotient(wscale);
    bd.Uk_plus = Dk * bd.Uk_minus;
    return bd;
}

OverrideValues modified_values(const BoundaryDerivatives& bd, const Grid& grid, double x0) {
    const int k = bd.k;
    const int jL = grid.last_node_left_of(x0);
    OverrideValues ov;
    ov.jL = jL;
    for (int i = 0; i < 4; ++i) {
        const int j = jL - 1 + i;
        const double d = grid.x(j) - x0;
        const bool right_of_x0 = j > jL;
        const Eigen::VectorXd& U = right_of_x0 ? bd.Uk_minus : bd.Uk_plus;
        double v = 0.0, s = 0.0, p = 1.0, fact = 1.0;
        for (int m = 0; m <= k; ++m) {
            v += p / fact * U(2 * m);
            s += p / fact * U(2 * m + 1);
            p *= d;
            fact *= (m + 1);
        }
        ov.values[i] = std::make_pair(v, s);
    }
    return ov;
}

InterfaceTraces interface_traces(const BoundaryDerivatives& bd) {
    InterfaceTraces tr;
    tr.mean_v = 0.5 * (bd.Uk_plus(0) + bd.Uk_minus(0));
    tr.mean_sigma = 0.5 * (bd.Uk_plus(1) + bd.Uk_minus(1));
    tr.jump_v = bd.Uk_plus(0) - bd.Uk_minus(0);
    tr.jump_sigma = bd.Uk_plus(1) - bd.Uk_minus(1);
    return tr;
}

}  // namespace modwave
