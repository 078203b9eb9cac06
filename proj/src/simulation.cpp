#include "modwave/simulation.hpp"

#include <cmath>

#include "modwave/modulation.hpp"
#include "modwave/source.hpp"

namespace modwave {

Simulation::Simulation(MaterialHalfSpaces material, InterfaceLaw law, SourceSpec source, Grid grid,
                       SimulationOptions options)
    : material_(material),
      law_(law),
      source_(source),
      grid_(grid),
      options_(std::move(options)),
      state_(grid.Nx) {
    material_.validate();
    law_.validate();
    source_.validate();
    if (options_.esim.k < 1 || options_.esim.k % 2 == 0 || options_.esim.k > 5)
        throw ConfigError("simulation: ESIM order k must be odd and within [1, 5]");

    use_esim_ = !law_.is_zero() || !material_.homogeneous();
    if (use_esim_) {
        const double r = material_.x0 / grid_.dx;
        if (std::abs(r - std::lround(r)) > 1e-9)
            throw ConfigError("simulation: x0 must fall on a cell boundary (x0/dx integer)");
    }

    state_ = initial_state(grid_, material_, source_);
    if (!source_.is_cauchy()) {
        const double xs = source_.dirac().x_s;
        if (!(xs > 0.0) || !(xs < grid_.L))
            throw ConfigError("simulation: Dirac source position outside the domain");
        if (use_esim_ && std::abs(xs - material_.x0) <= 2.0 * grid_.dx)
            throw ConfigError("simulation: Dirac source too close to the interface");
        source_node_ = grid_.nearest_node(xs);
    }

    for (double xr : options_.receivers) {
        if (!(xr >= 0.0) || !(xr > 0.0) || !(xr < grid_.L))
            throw ConfigError("simulation: receiver position outside the domain");
        receiver_nodes_.push_back(grid_.nearest_node(xr));
    }
    receiver_series_.resize(receiver_nodes_.size());
    record_sample();
}

double Simulation::forcing_value(double t) const {
    if (source_.is_cauchy()) return 0.0;
    if (options_.forcing_signal) return source_.amplitude * options_.forcing_signal(t);
    return source_.amplitude * source_signal(source_.f_c, t);
}

const Simulation::InterfaceData* Simulation::prepare_interface() {
    if (!use_esim_) return nullptr;
    if (!iface_) {
        const auto& eo = options_.esim;
        InterfaceData data;
        const JumpMatrices jm =
            build_jump_matrices(law_, material_, state_.t, eo.k, eo.frozen_derivatives);
        data.Dk = transfer_matrix(jm);
        data.bd = fit_boundary_derivatives(state_, data.Dk, grid_, material_.x0, eo.k, eo.q);
        data.overrides = modified_values(data.bd, grid_, material_.x0);
        iface_ = std::move(data);

        if (law_.allow_unstable) {
            const InterfaceParams p = interface_params(law_, state_.t, 0);
            if ((law_.C0 > 0.0 && p.C <= 0.0) || (law_.M0 > 0.0 && p.M <= 0.0) ||
                (law_.QC0 > 0.0 && p.QC < 0.0) || (law_.QM0 > 0.0 && p.QM < 0.0))
                ++nonpositive_steps_;
        }
    }
    return &*iface_;
}

InterfaceTraces Simulation::current_traces() {
    const InterfaceData* data = prepare_interface();
    return data ? interface_traces(data->bd) : InterfaceTraces{};
}

void Simulation::record_sample() {
    sample_times_.push_back(state_.t);
    for (size_t r = 0; r < receiver_nodes_.size(); ++r)
        receiver_series_[r].push_back(state_.v[receiver_nodes_[r]]);
    if (options_.record_energy) {
        const InterfaceTraces tr = current_traces();
        trace_series_.push_back(tr);
        energy_series_.push_back(
            energies(state_, tr, law_, grid_, material_, source_node_, last_injected_F_));
    }
}

void Simulation::advance(double dt) {
    const InterfaceData* data = prepare_interface();
    const GhostValues ghosts = apply_boundary(state_, options_.boundary, material_);
    std::optional<OverrideValues> ov;
    if (data) ov = data->overrides;

    state_ = ader4_step(state_, grid_, material_, ov, ghosts, dt);
    iface_.reset();

    if (source_node_ >= 0) {
        const double S_mid = forcing_value(state_.t - dt / 2.0);
        inject_point_source(state_, source_.dirac().x_s, S_mid,
                            material_.rho(source_.dirac().x_s), grid_, dt,
                            use_esim_ ? material_.x0 : std::numeric_limits<double>::quiet_NaN());
        // F at the node carries the 1/dx of the discrete delta (for the power P).
        last_injected_F_ = S_mid / grid_.dx;
    }

    ++steps_;
    if (steps_ % 64 == 0 && !state_.all_finite())
        throw NumericalError("simulation: non-finite field values (unstable run)");
    record_sample();
}

void Simulation::run_until(double t_end) {
    const double eps = 1e-12 * std::max(1.0, std::abs(t_end));
    while (state_.t + grid_.dt <= t_end + eps) {
        step();
        if (std::abs(state_.t - t_end) < eps) return;
    }
    const double rem = t_end - state_.t;
    if (rem > eps) advance(rem);
    if (!state_.all_finite())
        throw NumericalError("simulation: non-finite field values (unstable run)");
}

}  // namespace modwave
