#include "modwave/fdtd.hpp"

#include <cmath>
#include <limits>

#include "modwave/source.hpp"

namespace modwave {

double cfl_timestep(double dx, const MaterialHalfSpaces& material, double zeta) {
    if (!(zeta > 0.0) || zeta > 1.0)
        throw ConfigError("cfl_timestep: CFL number zeta must satisfy 0 < zeta <= 1");
    material.validate();
    return zeta * dx / material.c_max();
}

GhostValues apply_boundary(const FieldState& state, BoundaryPolicy policy,
                           const MaterialHalfSpaces& material) {
    GhostValues g{};
    const int n = state.size();
    if (policy == BoundaryPolicy::ReflectingZero) {
        // Rigid wall (v = 0 on the boundary face): mirror with odd velocity and
        // even stress, so the incoming wave reflects and the energy returns.
        for (int i = 0; i < 2; ++i) {
            g.left[i] = {-state.v[i], state.sigma[i]};
            g.right[i] = {-state.v[n - 1 - i], state.sigma[n - 1 - i]};
        }
        return g;
    }

    // Absorbing: extend the outgoing Riemann invariant, zero the incoming one.
    // Left end: outgoing J^L = (v + sigma/(rho c))/2, incoming J^R = 0, so the
    // ghost state is v = J^L, sigma = +rho c J^L. Mirror logic on the right.
    const double Zl = material.Z_minus();
    const double Zr = material.Z_plus();
    const double jl = 0.5 * (state.v[0] + state.sigma[0] / Zl);
    for (auto& gv : g.left) gv = {jl, Zl * jl};
    const double jr = 0.5 * (state.v[n - 1] - state.sigma[n - 1] / Zr);
    for (auto& gv : g.right) gv = {jr, -Zr * jr};
    return g;
}

namespace {

struct SideConsts {
    double rho, E, c2, c4;
};

inline SideConsts side_consts(const MaterialHalfSpaces& m, bool minus) {
    const double rho = minus ? m.rho_minus : m.rho_plus;
    const double E = minus ? m.E_minus() : m.E_plus();
    const double c2 = E / rho;
    return {rho, E, c2, c2 * c2};
}

}  // namespace

FieldState ader4_step(const FieldState& state, const Grid& grid, const MaterialHalfSpaces& material,
                      const std::optional<OverrideValues>& overrides, const GhostValues& ghosts,
                      double dt) {
    const int n = state.size();
    FieldState out(n);
    out.t = state.t + dt;

    const double dx = grid.dx;
    const double t1 = dt, t2 = dt * dt / 2.0, t3 = dt * dt * dt / 6.0, t4 = dt * dt * dt * dt / 24.0;
    const double i12dx = 1.0 / (12.0 * dx);
    const double i12dx2 = 1.0 / (12.0 * dx * dx);
    const double i2dx3 = 1.0 / (2.0 * dx * dx * dx);
    const double idx4 = 1.0 / (dx * dx * dx * dx);

    const int jL = overrides ? overrides->jL : grid.last_node_left_of(material.x0);

    auto read = [&](int m, bool reader_minus) -> std::pair<double, double> {
        if (m < 0) return ghosts.left[-m - 1];
        if (m >= n) return ghosts.right[m - n];
        if (overrides) {
            const bool m_minus = m <= jL;
            if (m_minus != reader_minus) return overrides->at(m);
        }
        return {state.v[m], state.sigma[m]};
    };

    auto update_node = [&](int j) {
        const bool minus = j <= jL;
        const SideConsts sc = side_consts(material, minus);
        double vv[5], ss[5];
        for (int m = -2; m <= 2; ++m) {
            const auto [pv, ps] = read(j + m, minus);
            vv[m + 2] = pv;
            ss[m + 2] = ps;
        }
        const double d1v = (vv[0] - 8 * vv[1] + 8 * vv[3] - vv[4]) * i12dx;
        const double d1s = (ss[0] - 8 * ss[1] + 8 * ss[3] - ss[4]) * i12dx;
        const double d2v = (-vv[0] + 16 * vv[1] - 30 * vv[2] + 16 * vv[3] - vv[4]) * i12dx2;
        const double d2s = (-ss[0] + 16 * ss[1] - 30 * ss[2] + 16 * ss[3] - ss[4]) * i12dx2;
        const double d3v = (-vv[0] + 2 * vv[1] - 2 * vv[3] + vv[4]) * i2dx3;
        const double d3s = (-ss[0] + 2 * ss[1] - 2 * ss[3] + ss[4]) * i2dx3;
        const double d4v = (vv[0] - 4 * vv[1] + 6 * vv[2] - 4 * vv[3] + vv[4]) * idx4;
        const double d4s = (ss[0] - 4 * ss[1] + 6 * ss[2] - 4 * ss[3] + ss[4]) * idx4;
        out.v[j] = vv[2] + t1 * d1s / sc.rho + t2 * sc.c2 * d2v + t3 * sc.c2 * d3s / sc.rho +
                   t4 * sc.c4 * d4v;
        out.sigma[j] = ss[2] + t1 * sc.E * d1v + t2 * sc.c2 * d2s + t3 * sc.c2 * sc.E * d3v +
                       t4 * sc.c4 * d4s;
    };

    // Nodes whose stencil touches a ghost or a modified value.
    const int band_lo = overrides ? jL - 1 : n;
    const int band_hi = overrides ? jL + 2 : -1;

    auto fast_range = [&](int lo, int hi, bool minus) {
        const SideConsts sc = side_consts(material, minus);
        const double a1 = t1 / sc.rho, a3 = t3 * sc.c2 / sc.rho;
        const double b1 = t1 * sc.E, b3 = t3 * sc.c2 * sc.E;
        const double e2 = t2 * sc.c2, e4 = t4 * sc.c4;
        const double* v = state.v.data();
        const double* s = state.sigma.data();
        for (int j = lo; j <= hi; ++j) {
            const double d1v = (v[j - 2] - 8 * v[j - 1] + 8 * v[j + 1] - v[j + 2]) * i12dx;
            const double d1s = (s[j - 2] - 8 * s[j - 1] + 8 * s[j + 1] - s[j + 2]) * i12dx;
            const double d2v =
                (-v[j - 2] + 16 * v[j - 1] - 30 * v[j] + 16 * v[j + 1] - v[j + 2]) * i12dx2;
            const double d2s =
                (-s[j - 2] + 16 * s[j - 1] - 30 * s[j] + 16 * s[j + 1] - s[j + 2]) * i12dx2;
            const double d3v = (-v[j - 2] + 2 * v[j - 1] - 2 * v[j + 1] + v[j + 2]) * i2dx3;
            const double d3s = (-s[j - 2] + 2 * s[j - 1] - 2 * s[j + 1] + s[j + 2]) * i2dx3;
            const double d4v = (v[j - 2] - 4 * v[j - 1] + 6 * v[j] - 4 * v[j + 1] + v[j + 2]) * idx4;
            const double d4s = (s[j - 2] - 4 * s[j - 1] + 6 * s[j] - 4 * s[j + 1] + s[j + 2]) * idx4;
            out.v[j] = v[j] + a1 * d1s + e2 * d2v + a3 * d3s + e4 * d4v;
            out.sigma[j] = s[j] + b1 * d1v + e2 * d2s + b3 * d3v + e4 * d4s;
        }
    };

    if (overrides) {
        fast_range(2, std::min(band_lo - 1, n - 3), true);
        fast_range(std::max(band_hi + 1, 2), n - 3, false);
        for (int j = std::max(band_lo, 2); j <= std::min(band_hi, n - 3); ++j) update_node(j);
    } else {
        // Side constants may still differ across jL for heterogeneous media.
        fast_range(2, std::min(jL, n - 3), true);
        fast_range(std::max(jL + 1, 2), n - 3, false);
    }
    for (int j = 0; j <= 1 && j < n; ++j) update_node(j);
    for (int j = std::max(n - 2, 2); j < n; ++j) update_node(j);
    return out;
}

void inject_point_source(FieldState& state, double x_s, double S_value, double rho,
                         const Grid& grid, double dt, double x0) {
    if (std::isfinite(x0) && std::abs(x_s - x0) <= 2.0 * grid.dx)
        throw ConfigError("inject_point_source: source must be more than 2 cells from the interface");
    if (S_value == 0.0) return;
    state.v[grid.nearest_node(x_s)] += dt * S_value / (rho * grid.dx);
}

FieldState initial_state(const Grid& grid, const MaterialHalfSpaces& material,
                         const SourceSpec& source) {
    source.validate();
    FieldState state(grid.Nx);
    state.t = 0.0;
    if (!source.is_cauchy()) return state;

    const double c = material.c_minus;
    const double Z = material.Z_minus();
    const double t0 = source.cauchy().t0;
    const double support_lo = c * (t0 - 1.0 / source.f_c);
    const double support_hi = c * t0;
    if (!(support_lo > 0.0) || !(support_hi < material.x0))
        throw ConfigError("initial_state: Cauchy pulse support must lie strictly inside (0, x0)");

    for (int j = 0; j < grid.Nx; ++j) {
        const double v = source.amplitude * source_signal(source.f_c, t0 - grid.x(j) / c);
        state.v[j] = v;
        state.sigma[j] = -Z * v;
    }
    return state;
}

}  // namespace modwave
