#include "modwave/modulation.hpp"

#include <cmath>

namespace modwave {

double modulation_phi(const ModulationKind& kind, double Omega, double t, int order) {
    if (order < 0 || order > max_modulation_order)
        throw ConfigError("modulation_phi: derivative order must be in [0, 6]");

    switch (kind.shape) {
        case ModulationKind::Sinusoidal:
            return std::pow(Omega, order) * std::sin(Omega * t + order * pi / 2.0);
        case ModulationKind::QuasiPeriodic: {
            const double w2 = std::sqrt(2.0) * Omega;
            return std::pow(Omega, order) * std::sin(Omega * t + order * pi / 2.0) +
                   std::pow(w2, order) * std::sin(w2 * t + order * pi / 2.0);
        }
        case ModulationKind::Rectangular: {
            if (order >= 1) return 0.0;  // switching signal: derivatives taken as zero
            double frac = std::fmod(Omega * t / (2.0 * pi), 1.0);
            if (frac < 0.0) frac += 1.0;
            const double n = std::floor(frac - kind.nu);
            // n is -1 or 0 for nu in (0,1); (-1)^n
            return (static_cast<long long>(n) % 2 == 0) ? 1.0 : -1.0;
        }
    }
    throw ConsistencyError("modulation_phi: unknown modulation kind");
}

InterfaceParams interface_params(const InterfaceLaw& law, double t, int order) {
    const double phi = modulation_phi(law.kind, law.Omega(), t, order);
    if (order == 0) {
        return {law.C0 * (1.0 + law.eps_C * phi), law.M0 * (1.0 + law.eps_M * phi),
                law.QC0 * (1.0 + law.eps_QC * phi), law.QM0 * (1.0 + law.eps_QM * phi)};
    }
    return {law.C0 * law.eps_C * phi, law.M0 * law.eps_M * phi,
            law.QC0 * law.eps_QC * phi, law.QM0 * law.eps_QM * phi};
}

}  // namespace modwave
