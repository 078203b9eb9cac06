#pragma once

#include <array>
#include <optional>
#include <utility>

#include "modwave/grid.hpp"
#include "modwave/types.hpp"

namespace modwave {

enum class BoundaryPolicy { Absorbing, ReflectingZero };

/// Ghost values at the two phantom nodes beyond each end of the grid.
/// left[0] is node -1, left[1] node -2; right[0] is node Nx, right[1] node Nx+1.
struct GhostValues {
    std::array<std::pair<double, double>, 2> left{};   // (v, sigma)
    std::array<std::pair<double, double>, 2> right{};
};

GhostValues apply_boundary(const FieldState& state, BoundaryPolicy policy,
                           const MaterialHalfSpaces& material);

/// Modified values replacing cross-interface stencil reads, at the two nodes
/// adjacent to x0 on each side: node(i) = jL - 1 + i for i = 0..3.
struct OverrideValues {
    int jL = -1;  // last node left of x0
    std::array<std::optional<std::pair<double, double>>, 4> values{};

    int node(int i) const { return jL - 1 + i; }
    bool covers(int j) const { return j >= jL - 1 && j <= jL + 2 && values[j - jL + 1].has_value(); }
    const std::pair<double, double>& at(int j) const {
        const auto& o = values[j - jL + 1];
        if (!o) throw ConsistencyError("ader4_step: missing modified value for a cross-interface read");
        return *o;
    }
};

/// One ADER-4 step: U^{n+1} = U + sum_{m=1..4} (dt^m/m!) (-A)^m D_m U with the
/// 5-point stencils D1,D2 (order 4) and D3,D4 (order 2). Stencil reads that
/// cross the interface take values from `overrides` when present.
FieldState ader4_step(const FieldState& state, const Grid& grid, const MaterialHalfSpaces& material,
                      const std::optional<OverrideValues>& overrides, const GhostValues& ghosts,
                      double dt);

/// Discrete Dirac forcing: adds dt * S_value / (rho dx) to v at the node nearest x_s.
/// x0 (when finite) guards against sources overlapping the interface stencil band.
void inject_point_source(FieldState& state, double x_s, double S_value, double rho,
                         const Grid& grid, double dt,
                         double x0 = std::numeric_limits<double>::quiet_NaN());

/// Cauchy data: v = amplitude * S(t0 - x/c_minus), sigma = -rho_minus c_minus v
/// (right-going). Dirac forcing starts from zero fields.
FieldState initial_state(const Grid& grid, const MaterialHalfSpaces& material,
                         const SourceSpec& source);

}  // namespace modwave
