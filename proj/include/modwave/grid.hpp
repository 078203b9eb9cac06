#pragma once

#include <cmath>
#include <vector>

#include "modwave/types.hpp"

namespace modwave {

/// dt = zeta * dx / max(c), the usual CFL bound with zeta <= 1.
double cfl_timestep(double dx, const MaterialHalfSpaces& material, double zeta);

/// Uniform cell-centered grid: x_j = (j + 1/2) dx, j = 0..Nx-1.
/// With x0/dx integer the interface falls exactly mid-way between two nodes.
struct Grid {
    double L = 400.0;
    int Nx = 400;
    double dx = 1.0;
    double dt = 0.0;
    double zeta = 0.95;

    double x(int j) const { return (j + 0.5) * dx; }

    int nearest_node(double xpos) const {
        int j = static_cast<int>(std::lround(xpos / dx - 0.5));
        if (j < 0) j = 0;
        if (j >= Nx) j = Nx - 1;
        return j;
    }

    /// Index of the last node strictly left of xpos.
    int last_node_left_of(double xpos) const {
        return static_cast<int>(std::ceil(xpos / dx - 0.5)) - 1;
    }

    static Grid make(double L, int Nx, const MaterialHalfSpaces& material, double zeta) {
        if (Nx < 8) throw ConfigError("grid: Nx must be at least 8");
        if (!(L > 0.0)) throw ConfigError("grid: L must be positive");
        Grid g;
        g.L = L;
        g.Nx = Nx;
        g.dx = L / Nx;
        g.zeta = zeta;
        g.dt = cfl_timestep(g.dx, material, zeta);
        return g;
    }
};

/// Velocity and stress on the grid at one time level.
struct FieldState {
    double t = 0.0;
    std::vector<double> v;      // m/s
    std::vector<double> sigma;  // Pa

    explicit FieldState(int Nx = 0) : v(Nx, 0.0), sigma(Nx, 0.0) {}

    int size() const { return static_cast<int>(v.size()); }

    bool all_finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        for (double x : sigma)
            if (!std::isfinite(x)) return false;
        return true;
    }
};

}  // namespace modwave
