#include "modwave/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "modwave/modulation.hpp"

namespace modwave {

EnergyRecord energies(const FieldState& state, const InterfaceTraces& traces,
                      const InterfaceLaw& law, const Grid& grid,
                      const MaterialHalfSpaces& material, int source_node, double F_value) {
    EnergyRecord rec;
    rec.t = state.t;
    double eb = 0.0;
    for (int j = 0; j < grid.Nx; ++j) {
        const double x = grid.x(j);
        eb += material.rho(x) * state.v[j] * state.v[j] +
              state.sigma[j] * state.sigma[j] / material.E(x);
    }
    rec.E_b = 0.5 * eb * grid.dx;
    const InterfaceParams p = interface_params(law, state.t, 0);
    rec.E_i = 0.5 * p.M * traces.mean_v * traces.mean_v +
              0.5 * p.C * traces.mean_sigma * traces.mean_sigma;
    rec.E_m = rec.E_b + rec.E_i;
    if (source_node >= 0 && source_node < grid.Nx) rec.P = F_value * state.v[source_node];
    return rec;
}

std::vector<double> energy_balance_residual(const std::vector<EnergyRecord>& records,
                                            const std::vector<InterfaceTraces>& traces,
                                            const InterfaceLaw& law, double dt) {
    const int n = static_cast<int>(records.size());
    if (static_cast<int>(traces.size()) != n)
        throw ConsistencyError("energy_balance_residual: records and traces differ in length");
    std::vector<double> res(n, 0.0);
    for (int i = 2; i + 2 < n; ++i) {
        const double dEdt = (-records[i + 2].E_m + 8.0 * records[i + 1].E_m -
                             8.0 * records[i - 1].E_m + records[i - 2].E_m) /
                            (12.0 * dt);
        const InterfaceParams p = interface_params(law, records[i].t, 0);
        const InterfaceParams dp = interface_params(law, records[i].t, 1);
        const double mv = traces[i].mean_v, ms = traces[i].mean_sigma;
        res[i] = dEdt - records[i].P + 0.5 * (dp.M * mv * mv + dp.C * ms * ms) + p.QC * ms * ms +
                 p.QM * mv * mv;
    }
    return res;
}

double error_norm(const FieldState& state, const std::function<double(double)>& v_exact,
                  const Grid& grid) {
    double s = 0.0;
    for (int j = 0; j < grid.Nx; ++j) {
        const double d = v_exact(grid.x(j)) - state.v[j];
        s += d * d;
    }
    return std::sqrt(grid.dx * s);
}

double convergence_order(const std::vector<std::pair<double, double>>& dx_eps, bool drop_coarsest) {
    std::vector<std::pair<double, double>> pts = dx_eps;
    if (drop_coarsest && pts.size() > 2) {
        auto coarsest = std::max_element(pts.begin(), pts.end());
        pts.erase(coarsest);
    }
    if (pts.size() < 2) throw ConfigError("convergence_order: need at least two (dx, eps) points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [dx, eps] : pts) {
        if (!(dx > 0.0) || !(eps > 0.0))
            throw ConfigError("convergence_order: dx and eps must be positive");
        const double lx = std::log(dx), ly = std::log(eps);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Spectrum dft_spectrum(const std::vector<double>& series, double dt) {
    const int n = static_cast<int>(series.size());
    if (n == 0) throw ConfigError("dft_spectrum: empty series");
    Spectrum sp;
    sp.df = 1.0 / (n * dt);
    sp.freq.resize(n);
    sp.amp.resize(n);
    const double w0 = -2.0 * pi / n;
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            const double ph = w0 * static_cast<double>(j) * static_cast<double>(k);
            acc += series[j] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        sp.freq[k] = k * sp.df;
        sp.amp[k] = acc;
    }
    return sp;
}

double Spectrum::abs_at(double f) const {
    if (freq.empty()) throw ConfigError("Spectrum::abs_at: empty spectrum");
    const int n = static_cast<int>(freq.size());
    int k = static_cast<int>(std::lround(f / df));
    k = std::clamp(k, 0, n - 1);
    return std::abs(amp[k]);
}

std::map<int, double> harmonic_peak_ratios(const Spectrum& transmitted, const Spectrum& incident,
                                           double f_c, double f_m, int K) {
    const double inc = incident.abs_at(f_c);
    if (!(inc > 0.0)) throw NumericalError("harmonic_peak_ratios: incident spectrum vanishes at f_c");
    std::map<int, double> ratios;
    for (int k = -K; k <= K; ++k) {
        const double f = std::abs(f_c + k * f_m);
        ratios[k] = transmitted.abs_at(f) / inc;
    }
    return ratios;
}

double nonreciprocity_measure(const std::vector<double>& v_s, const std::vector<double>& v_r,
                              double f_c) {
    if (v_s.size() != v_r.size())
        throw ConfigError("nonreciprocity_measure: series must have the same length");
    double s = 0.0;
    for (size_t i = 0; i < v_s.size(); ++i) {
        const double d = v_s[i] - v_r[i];
        s += d * d;
    }
    return f_c * std::sqrt(s);
}

double delta_energy(const std::vector<EnergyRecord>& records, double t_end) {
    if (records.empty()) throw ConfigError("delta_energy: empty record series");
    const EnergyRecord* best = &records.front();
    for (const auto& r : records)
        if (std::abs(r.t - t_end) < std::abs(best->t - t_end)) best = &r;
    return best->E_m - records.front().E_m;
}

}  // namespace modwave
