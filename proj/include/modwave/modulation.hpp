#pragma once

#include "modwave/types.hpp"

namespace modwave {

/// Highest modulation derivative ever needed (ESIM at k = 5 uses orders up to k+1).
inline constexpr int max_modulation_order = 6;

/// d^order/dt^order of the modulation function phi(t).
/// order 0 evaluates phi itself; rectangular kinds have all derivatives zero.
double modulation_phi(const ModulationKind& kind, double Omega, double t, int order);

struct InterfaceParams {
    double C, M, QC, QM;
};

/// order 0: instantaneous (C, M, QC, QM); order n >= 1: their n-th time derivatives.
InterfaceParams interface_params(const InterfaceLaw& law, double t, int order);

}  // namespace modwave
