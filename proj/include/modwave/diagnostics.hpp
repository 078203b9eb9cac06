#pragma once

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "modwave/esim.hpp"
#include "modwave/grid.hpp"
#include "modwave/types.hpp"

namespace modwave {

struct EnergyRecord {
    double t = 0.0;
    double E_b = 0.0;  // bulk energy per unit area, J/m^2
    double E_i = 0.0;  // interface energy
    double E_m = 0.0;  // total
    double P = 0.0;    // forcing power
};

/// E_b = (1/2) sum (rho v^2 + sigma^2/E) dx (midpoint rule),
/// E_i = (1/2) M(t) <v>^2 + (1/2) C(t) <sigma>^2,
/// P   = F * v at the source node (F already includes the 1/dx of the discrete delta).
EnergyRecord energies(const FieldState& state, const InterfaceTraces& traces,
                      const InterfaceLaw& law, const Grid& grid,
                      const MaterialHalfSpaces& material, int source_node = -1,
                      double F_value = 0.0);

/// residual(t) = dE_m/dt - P + (1/2)(M' <v>^2 + C' <sigma>^2) + QC <sigma>^2 + QM <v>^2,
/// with dE_m/dt by 4th-order central differences; endpoints (2 on each side) are zero.
std::vector<double> energy_balance_residual(const std::vector<EnergyRecord>& records,
                                            const std::vector<InterfaceTraces>& traces,
                                            const InterfaceLaw& law, double dt);

/// eps_v = sqrt(dx sum_j (v_exact(x_j) - v_j)^2).
double error_norm(const FieldState& state, const std::function<double(double)>& v_exact,
                  const Grid& grid);

/// Least-squares slope of log(eps) vs log(dx).
double convergence_order(const std::vector<std::pair<double, double>>& dx_eps,
                         bool drop_coarsest = false);

/// Plain DFT, all N bins; freq[n] = n/(N dt), amp[n] = sum_j x_j e^{-2 pi i j n / N}.
struct Spectrum {
    std::vector<double> freq;
    std::vector<std::complex<double>> amp;
    double df = 0.0;

    double abs_at(double f) const;  // |amp| at the bin nearest f
};
Spectrum dft_spectrum(const std::vector<double>& series, double dt);

/// Narrowband Floquet-coefficient estimates: |spectrum(f_c + k f_m)| / |incident(f_c)|
/// for |k| <= K; negative target frequencies are read at |f| (real-signal fold).
std::map<int, double> harmonic_peak_ratios(const Spectrum& transmitted, const Spectrum& incident,
                                           double f_c, double f_m, int K);

/// theta_v = f_c sqrt(sum_i (v_s_i - v_r_i)^2) for swapped source/receiver records.
double nonreciprocity_measure(const std::vector<double>& v_s, const std::vector<double>& v_r,
                              double f_c);

/// E_m(t_end) - E_m(0), with t_end snapped to the nearest record.
double delta_energy(const std::vector<EnergyRecord>& records, double t_end);

}  // namespace modwave
