#pragma once

#include <Eigen/Dense>

#include "modwave/fdtd.hpp"
#include "modwave/grid.hpp"
#include "modwave/types.hpp"

namespace modwave {

/// Matrices C_k^± of the differentiated jump relation
///   C_k^+(t) U_k^+ = C_k^-(t) U_k^-,  U_k^± = (U^±, dx U^±, ..., dx^k U^±).
/// Block lower-Hessenberg: block row j has nonzero 2x2 blocks in columns 0..min(j+1,k).
struct JumpMatrices {
    Eigen::MatrixXd Cplus, Cminus;  // 2(k+1) x 2(k+1)
    double t = 0.0;
    int k = 5;
};

/// Assembles C_k^± at time t by Leibniz expansion of the time-differentiated
/// jump conditions, substituting dt^i U = (-A)^i dx^i U and dropping the
/// (k+1)-th spatial derivative term (Gamma_{k+1}).
/// With frozen_derivatives, all time derivatives of the interface parameters
/// are zeroed (the "frozen jump conditions" simplification; degrades accuracy).
JumpMatrices build_jump_matrices(const InterfaceLaw& law, const MaterialHalfSpaces& material,
                                 double t, int k, bool frozen_derivatives = false);

/// D_k = (C_k^+)^{-1} C_k^-. Throws NumericalError when the column-equilibrated
/// C_k^+ has condition estimate above 1e12.
Eigen::MatrixXd transfer_matrix(const JumpMatrices& jm);

/// One-sided limit values of (v, sigma) and spatial derivatives up to order k.
struct BoundaryDerivatives {
    Eigen::VectorXd Uk_minus, Uk_plus;  // 2(k+1), layout (v, sigma, dx v, dx sigma, ...)
    int k = 5;
};

struct EsimOptions {
    int k = 5;  // derivative order, odd; k = max(r, 2s-1) = 5 for ADER-4
    int q = 3;  // fit nodes per side; q = (k+1)/2 gives a square system
    bool frozen_derivatives = false;
};

/// Fits U_k^- from q grid nodes on each side of x0: Taylor constraints on the
/// minus side, Taylor-through-D_k constraints on the plus side. Square solve at
/// q = (k+1)/2, least squares for larger q. U_k^+ = D_k U_k^-.
BoundaryDerivatives fit_boundary_derivatives(const FieldState& state, const Eigen::MatrixXd& Dk,
                                             const Grid& grid, double x0, int k, int q = 3);

/// Evaluates the smooth one-sided extensions at the two nodes adjacent to x0 on
/// each side: right-of-x0 nodes get the minus extension (for left-side stencil
/// reads), left-of-x0 nodes the plus extension.
OverrideValues modified_values(const BoundaryDerivatives& bd, const Grid& grid, double x0);

struct InterfaceTraces {
    double mean_v = 0.0, mean_sigma = 0.0, jump_v = 0.0, jump_sigma = 0.0;
};

InterfaceTraces interface_traces(const BoundaryDerivatives& bd);

}  // namespace modwave
