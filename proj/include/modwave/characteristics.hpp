#pragma once

#include <vector>

#include "modwave/types.hpp"

namespace modwave {

struct FieldSample {
    double v = 0.0, sigma = 0.0;
};

/// Semi-analytic solution of the Cauchy problem via Riemann invariants.
/// Valid when only one of the C-channel (C0 > 0, any QC0) or M-channel
/// (M0 > 0, any QM0) or a single pure dissipation channel is active.
/// The interface trace solves a scalar non-autonomous ODE (RK4, dense output
/// by cubic Hermite interpolation); dissipation-only laws use closed forms.
class CharacteristicOracle {
public:
    enum class Mode { CompliantC, InertialM, DissipativeQC, DissipativeQM, Perfect };

    /// Integrates the interface trace up to t_max with RK4 step h.
    CharacteristicOracle(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                         const SourceSpec& source, double t_max, double h);

    /// Field at (x, t), t <= t_max.
    FieldSample operator()(double x, double t) const;

    /// Trace v^+(t) at the interface (from sigma^+ for the M-channel modes).
    double v_plus(double t) const;

    Mode mode() const { return mode_; }

private:
    double trace(double t) const;        // y(t): v^+ or sigma^+ depending on mode
    double incident_jr(double t) const;  // J_0^R(x0 - c0 t, 0)

    MaterialHalfSpaces mat_;
    InterfaceLaw law_;
    SourceSpec src_;
    Mode mode_;
    double t_max_ = 0.0, h_ = 0.0;
    std::vector<double> y_, yp_;  // dense ODE output at t_i = i h
};

/// Spec-level wrappers; each evaluates one point with a freshly built oracle.
FieldSample analytic_solution_C(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                const SourceSpec& source, double x, double t);
FieldSample analytic_solution_M(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                const SourceSpec& source, double x, double t);
FieldSample analytic_solution_Qonly(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                    const SourceSpec& source, double x, double t);

/// Static extreme-value solutions for a Q-only law, ordered so that
/// lower.v <= v <= upper.v pointwise (same for sigma component-wise).
struct EnvelopePair {
    FieldSample lower, upper;
};
EnvelopePair envelope_bounds(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                             const SourceSpec& source, double x, double t);

/// g(a, b) = 1 + (a/b)(sqrt(1 - b^2) - 1) with the b -> 0 limit 1.
double g_func(double a, double b);

/// Period mean of the ODE coefficient a(t) for a sinusoidally modulated
/// C-channel: abar = -(2 + Z QC0 g(eps_QC, eps_C)) / (Z C0 sqrt(1 - eps_C^2)).
/// Negative for all admissible parameters, which bounds the scattered fields.
double mean_alpha(double Z, double C0, double QC0, double eps_C, double eps_QC);

}  // namespace modwave
