#pragma once

#include <string>
#include <vector>

#include "modwave/fdtd.hpp"
#include "modwave/grid.hpp"
#include "modwave/simulation.hpp"
#include "modwave/types.hpp"

namespace modwave {

/// Everything a run needs, with defaults matching the standard setup:
/// L = 400 m, Nx = 400, zeta = 0.95, Plexiglass bulk (rho 1200, c 2800),
/// interface at x0 = 200 m, k = 5, absorbing boundaries.
struct ExperimentConfig {
    MaterialHalfSpaces material{};
    InterfaceLaw law{};
    SourceSpec source{};
    double L = 400.0;
    int Nx = 400;
    double zeta = 0.95;
    double t_end = 0.045;
    BoundaryPolicy boundary = BoundaryPolicy::Absorbing;
    EsimOptions esim{};
    std::vector<double> receivers;
    std::string out_dir = ".";
    std::string scenario;

    Grid make_grid() const { return Grid::make(L, Nx, material, zeta); }

    Simulation make_simulation(SimulationOptions extra = {}) const;

    void validate() const;
};

/// Parses sectioned key=value text; unknown keys, bad values and invariant
/// violations raise ConfigError with the offending line number.
ExperimentConfig parse_config(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

/// t0 placing the Cauchy support right edge `gap` metres left of the interface.
double auto_cauchy_t0(const MaterialHalfSpaces& material, double gap = 10.0);

}  // namespace modwave
