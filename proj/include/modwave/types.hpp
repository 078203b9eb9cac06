#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace modwave {

inline constexpr double pi = 3.14159265358979323846;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: parameters out of range, malformed config, invalid geometry.
struct ConfigError : Error {
    using Error::Error;
};

/// Runtime numerical failure: singular systems, non-finite fields.
struct NumericalError : Error {
    using Error::Error;
};

/// Internal invariant violated (a bug, not a user error).
struct ConsistencyError : Error {
    using Error::Error;
};

/// Piecewise-constant bulk medium around the interface at x0.
struct MaterialHalfSpaces {
    double rho_minus = 1200.0;  // kg/m^3, x < x0
    double rho_plus = 1200.0;   // kg/m^3, x > x0
    double c_minus = 2800.0;    // m/s
    double c_plus = 2800.0;     // m/s
    double x0 = 200.0;          // interface position, m

    double E_minus() const { return rho_minus * c_minus * c_minus; }
    double E_plus() const { return rho_plus * c_plus * c_plus; }
    double Z_minus() const { return rho_minus * c_minus; }
    double Z_plus() const { return rho_plus * c_plus; }
    double c_max() const { return std::max(c_minus, c_plus); }
    bool homogeneous() const { return rho_minus == rho_plus && c_minus == c_plus; }

    double rho(double x) const { return x < x0 ? rho_minus : rho_plus; }
    double c(double x) const { return x < x0 ? c_minus : c_plus; }
    double E(double x) const { return x < x0 ? E_minus() : E_plus(); }

    void validate() const {
        if (!(rho_minus > 0.0) || !(rho_plus > 0.0))
            throw ConfigError("material: densities must be strictly positive");
        if (!(c_minus > 0.0) || !(c_plus > 0.0))
            throw ConfigError("material: sound speeds must be strictly positive");
    }

    static MaterialHalfSpaces homogeneous_medium(double rho, double c, double x0) {
        return MaterialHalfSpaces{rho, rho, c, c, x0};
    }
};

/// Shape of the interface modulation phi_X(t).
struct ModulationKind {
    enum Shape { Sinusoidal, QuasiPeriodic, Rectangular };

    Shape shape = Sinusoidal;
    double nu = 0.65;  // rectangular duty offset, 0 < nu < 1

    static ModulationKind sinusoidal() { return {Sinusoidal, 0.0}; }
    static ModulationKind quasi_periodic() { return {QuasiPeriodic, 0.0}; }
    static ModulationKind rectangular(double nu) { return {Rectangular, nu}; }

    /// sup_t |phi(t)|: 1 for sinusoidal and rectangular, 2 for quasi-periodic.
    double max_abs_phi() const { return shape == QuasiPeriodic ? 2.0 : 1.0; }

    bool smooth() const { return shape != Rectangular; }

    void validate() const {
        if (shape == Rectangular && !(nu > 0.0 && nu < 1.0))
            throw ConfigError("modulation: rectangular duty offset nu must satisfy 0 < nu < 1");
    }

    std::string name() const {
        switch (shape) {
            case Sinusoidal: return "sinusoidal";
            case QuasiPeriodic: return "quasi-periodic";
            case Rectangular: return "rectangular";
        }
        return "?";
    }
};

/// Time-modulated interface parameters:
///   C(t)  = C0  (1 + eps_C  phi(t))   compliance, m/Pa
///   M(t)  = M0  (1 + eps_M  phi(t))   inertia, kg/m^2
///   QC(t) = QC0 (1 + eps_QC phi(t))   compliance dissipation, m^2 s/kg
///   QM(t) = QM0 (1 + eps_QM phi(t))   inertia dissipation, kg/(m^2 s)
struct InterfaceLaw {
    double C0 = 0.0;
    double M0 = 0.0;
    double QC0 = 0.0;
    double QM0 = 0.0;
    double eps_C = 0.0;
    double eps_M = 0.0;
    double eps_QC = 0.0;
    double eps_QM = 0.0;
    ModulationKind kind = ModulationKind::sinusoidal();
    double f_m = 0.0;  // modulation frequency, Hz

    /// Permit eps * max|phi| >= 1 (instantaneously non-positive parameters).
    /// Needed to reproduce the quasi-periodic runs with eps = 0.75; violations
    /// are counted and reported by the simulation instead of rejected here.
    bool allow_unstable = false;

    double Omega() const { return 2.0 * pi * f_m; }

    bool is_zero() const { return C0 == 0.0 && M0 == 0.0 && QC0 == 0.0 && QM0 == 0.0; }

    bool modulated() const {
        return f_m > 0.0 && (eps_C != 0.0 || eps_M != 0.0 || eps_QC != 0.0 || eps_QM != 0.0);
    }

    void validate() const {
        kind.validate();
        if (C0 < 0.0 || M0 < 0.0 || QC0 < 0.0 || QM0 < 0.0)
            throw ConfigError("interface: base parameters C0, M0, QC0, QM0 must be >= 0");
        if (f_m < 0.0) throw ConfigError("interface: modulation frequency f_m must be >= 0");
        if (allow_unstable) return;
        const double m = kind.max_abs_phi();
        auto check = [&](double base, double eps, const char* name) {
            if (base > 0.0 && !(std::abs(eps) * m < 1.0))
                throw ConfigError(std::string("interface: |") + name + "| * max|phi| must be < 1 "
                                  "(set allow_unstable to override)");
        };
        check(C0, eps_C, "eps_C");
        check(M0, eps_M, "eps_M");
        check(QC0, eps_QC, "eps_QC");
        check(QM0, eps_QM, "eps_QM");
    }

    static InterfaceLaw static_law(double C0, double M0, double QC0 = 0.0, double QM0 = 0.0) {
        InterfaceLaw law;
        law.C0 = C0;
        law.M0 = M0;
        law.QC0 = QC0;
        law.QM0 = QM0;
        return law;
    }
};

/// Right-going initial pulse v(x,0) = S(t0 - x/c), sigma = -rho c v.
struct CauchyPulse {
    double t0 = 0.0;  // s, positions the pulse left of the interface
};

/// Zero initial data, body force F = S(t) delta(x - x_s).
struct DiracPoint {
    double x_s = 0.0;  // m
};

struct SourceSpec {
    double f_c = 45.0;  // central frequency, Hz
    std::variant<CauchyPulse, DiracPoint> forcing = CauchyPulse{};
    double amplitude = 1.0;

    bool is_cauchy() const { return std::holds_alternative<CauchyPulse>(forcing); }
    const CauchyPulse& cauchy() const { return std::get<CauchyPulse>(forcing); }
    const DiracPoint& dirac() const { return std::get<DiracPoint>(forcing); }

    void validate() const {
        if (!(f_c > 0.0)) throw ConfigError("source: f_c must be strictly positive");
    }
};

}  // namespace modwave
