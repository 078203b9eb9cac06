#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "modwave/diagnostics.hpp"
#include "modwave/esim.hpp"
#include "modwave/fdtd.hpp"
#include "modwave/grid.hpp"
#include "modwave/types.hpp"

namespace modwave {

struct SimulationOptions {
    BoundaryPolicy boundary = BoundaryPolicy::Absorbing;
    EsimOptions esim{};
    bool record_energy = false;
    std::vector<double> receivers;  // positions, m

    /// Replaces the wavelet S(t) for Dirac forcing when set (e.g. a steady tone).
    std::function<double(double)> forcing_signal;
};

/// Owns one FieldState and advances it: ESIM transfer matrices and modified
/// values are rebuilt at every step from the law at the current time, then the
/// ADER-4 update runs with those overrides.
class Simulation {
public:
    Simulation(MaterialHalfSpaces material, InterfaceLaw law, SourceSpec source, Grid grid,
               SimulationOptions options = {});

    void step() { advance(grid_.dt); }

    /// Integrates to exactly t_end (a trailing partial step lands on it).
    void run_until(double t_end);

    const FieldState& state() const { return state_; }
    const Grid& grid() const { return grid_; }
    const MaterialHalfSpaces& material() const { return material_; }
    const InterfaceLaw& law() const { return law_; }

    bool uses_esim() const { return use_esim_; }

    /// Interface traces for the current state (zero when no interface is active).
    InterfaceTraces current_traces();

    const std::vector<EnergyRecord>& energy_series() const { return energy_series_; }
    const std::vector<InterfaceTraces>& trace_series() const { return trace_series_; }
    const std::vector<std::vector<double>>& receiver_series() const { return receiver_series_; }
    const std::vector<double>& receiver_positions() const { return options_.receivers; }
    const std::vector<double>& sample_times() const { return sample_times_; }

    /// Steps on which an instantaneous interface parameter was <= 0 (possible
    /// only with allow_unstable laws).
    long nonpositive_parameter_steps() const { return nonpositive_steps_; }

    double forcing_value(double t) const;

private:
    struct InterfaceData {
        Eigen::MatrixXd Dk;
        BoundaryDerivatives bd;
        OverrideValues overrides;
    };

    void advance(double dt);
    const InterfaceData* prepare_interface();
    void record_sample();

    MaterialHalfSpaces material_;
    InterfaceLaw law_;
    SourceSpec source_;
    Grid grid_;
    SimulationOptions options_;
    FieldState state_;
    bool use_esim_ = false;
    int source_node_ = -1;
    long steps_ = 0;
    long nonpositive_steps_ = 0;

    std::optional<InterfaceData> iface_;  // for the current time level

    std::vector<double> sample_times_;
    std::vector<EnergyRecord> energy_series_;
    std::vector<InterfaceTraces> trace_series_;
    std::vector<std::vector<double>> receiver_series_;
    std::vector<int> receiver_nodes_;
    double last_injected_F_ = 0.0;
};

}  // namespace modwave
