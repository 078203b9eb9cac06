#include "modwave/characteristics.hpp"

#include <algorithm>
#include <cmath>

#include "modwave/modulation.hpp"
#include "modwave/source.hpp"

namespace modwave {

namespace {

CharacteristicOracle::Mode detect_mode(const InterfaceLaw& law) {
    using Mode = CharacteristicOracle::Mode;
    if (law.is_zero()) return Mode::Perfect;
    if (law.M0 == 0.0 && law.QM0 == 0.0) {
        if (law.C0 > 0.0) return Mode::CompliantC;
        return Mode::DissipativeQC;
    }
    if (law.C0 == 0.0 && law.QC0 == 0.0) {
        if (law.M0 > 0.0) return Mode::InertialM;
        return Mode::DissipativeQM;
    }
    throw ConfigError(
        "characteristics: no semi-analytic solution when both C- and M-channels are active");
}

}  // namespace

CharacteristicOracle::CharacteristicOracle(const MaterialHalfSpaces& material,
                                           const InterfaceLaw& law, const SourceSpec& source,
                                           double t_max, double h)
    : mat_(material), law_(law), src_(source), mode_(detect_mode(law)), t_max_(t_max), h_(h) {
    material.validate();
    if (!source.is_cauchy())
        throw ConfigError("characteristics: oracle is defined for the Cauchy-pulse problem");
    if (mode_ != Mode::CompliantC && mode_ != Mode::InertialM) return;  // closed forms, no ODE

    if (!(h > 0.0) || !(t_max >= 0.0))
        throw ConfigError("characteristics: need h > 0 and t_max >= 0");

    const double Z0 = mat_.Z_minus(), Z1 = mat_.Z_plus();
    auto rhs = [&](double t, double y) {
        if (mode_ == Mode::CompliantC) {
            const double C = interface_params(law_, t, 0).C;
            if (!(C > 0.0))
                throw NumericalError("characteristics: compliance C(t) <= 0 along the trace");
            const double Cp = interface_params(law_, t, 1).C;
            const double QC = interface_params(law_, t, 0).QC;
            return (2.0 * incident_jr(t) - (1.0 + Z1 / Z0 + Z1 * (Cp + QC)) * y) / (Z1 * C);
        }
        const double M = interface_params(law_, t, 0).M;
        if (!(M > 0.0)) throw NumericalError("characteristics: inertia M(t) <= 0 along the trace");
        const double Mp = interface_params(law_, t, 1).M;
        const double QM = interface_params(law_, t, 0).QM;
        return -(Z1 / M) *
               (2.0 * Z0 * incident_jr(t) + (1.0 + Z0 / Z1 + (Mp + QM) / Z1) * y);
    };

    const int n = static_cast<int>(std::ceil(t_max / h)) + 1;
    y_.resize(n + 1);
    yp_.resize(n + 1);
    double y = 0.0;
    y_[0] = y;
    yp_[0] = rhs(0.0, y);
    for (int i = 0; i < n; ++i) {
        const double t = i * h;
        const double k1 = rhs(t, y);
        const double k2 = rhs(t + h / 2.0, y + h / 2.0 * k1);
        const double k3 = rhs(t + h / 2.0, y + h / 2.0 * k2);
        const double k4 = rhs(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        y_[i + 1] = y;
        yp_[i + 1] = rhs((i + 1) * h, y);
    }
}

double CharacteristicOracle::incident_jr(double t) const {
    // J_0^R(x0 - c0 t, 0) for the right-going Cauchy data.
    return src_.amplitude *
           source_signal(src_.f_c, src_.cauchy().t0 - mat_.x0 / mat_.c_minus + t);
}

double CharacteristicOracle::trace(double t) const {
    if (t <= 0.0) return 0.0;
    const double Z0 = mat_.Z_minus(), Z1 = mat_.Z_plus();
    switch (mode_) {
        case Mode::Perfect:
            return 2.0 * incident_jr(t) / (1.0 + Z1 / Z0);
        case Mode::DissipativeQC: {
            const double QC = interface_params(law_, t, 0).QC;
            return 2.0 * incident_jr(t) / (1.0 + Z1 / Z0 + Z1 * QC);
        }
        case Mode::DissipativeQM: {
            const double QM = interface_params(law_, t, 0).QM;
            return -2.0 * Z0 * incident_jr(t) / (1.0 + Z0 / Z1 + QM / Z1);
        }
        default:
            break;
    }
    // Dense cubic Hermite interpolation of the RK4 trajectory.
    const int last = static_cast<int>(y_.size()) - 1;
    double s = t / h_;
    if (s > last && s < last + 1e-9) s = last;
    if (s > last) throw ConsistencyError("characteristics: trace queried beyond t_max");
    int i = static_cast<int>(s);
    if (i >= last) i = last - 1;
    const double u = s - i;
    const double u2 = u * u, u3 = u2 * u;
    const double h00 = 2 * u3 - 3 * u2 + 1, h10 = u3 - 2 * u2 + u;
    const double h01 = -2 * u3 + 3 * u2, h11 = u3 - u2;
    return h00 * y_[i] + h10 * h_ * yp_[i] + h01 * y_[i + 1] + h11 * h_ * yp_[i + 1];
}

double CharacteristicOracle::v_plus(double t) const {
    const bool m_channel = mode_ == Mode::InertialM || mode_ == Mode::DissipativeQM;
    return m_channel ? -trace(t) / mat_.Z_plus() : trace(t);
}

FieldSample CharacteristicOracle::operator()(double x, double t) const {
    const double Z0 = mat_.Z_minus(), Z1 = mat_.Z_plus();
    const bool m_channel = mode_ == Mode::InertialM || mode_ == Mode::DissipativeQM;

    if (x > mat_.x0) {
        const double tB = t - (x - mat_.x0) / mat_.c_plus;
        const double vb = tB >= 0.0 ? v_plus(tB) : 0.0;
        return {vb, -Z1 * vb};
    }

    const double jr = src_.amplitude *
                      source_signal(src_.f_c, src_.cauchy().t0 - x / mat_.c_minus + t);
    const double tA = t - (mat_.x0 - x) / mat_.c_minus;
    double dA = 0.0;  // the left-going invariant J^L(x, t); zero before first reflection
    if (tA >= 0.0) {
        if (m_channel)
            dA = v_plus(tA) - incident_jr(tA);
        else
            dA = -(Z1 / Z0) * trace(tA) + incident_jr(tA);
    }
    return {jr + dA, Z0 * (dA - jr)};
}

namespace {

double default_substep(const InterfaceLaw& law, const SourceSpec& src) {
    double h = 1.0 / (2048.0 * src.f_c);
    if (law.f_m > 0.0) h = std::min(h, 1.0 / (2048.0 * law.f_m));
    return h;
}

}  // namespace

FieldSample analytic_solution_C(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                const SourceSpec& source, double x, double t) {
    if (law.M0 != 0.0 || law.QM0 != 0.0)
        throw ConfigError("analytic_solution_C: M-channel must be identically zero");
    if (!(law.C0 > 0.0))
        throw ConfigError("analytic_solution_C: C0 must be positive (use analytic_solution_Qonly)");
    CharacteristicOracle oracle(material, law, source, t, default_substep(law, source));
    return oracle(x, t);
}

FieldSample analytic_solution_M(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                const SourceSpec& source, double x, double t) {
    if (law.C0 != 0.0 || law.QC0 != 0.0)
        throw ConfigError("analytic_solution_M: C-channel must be identically zero");
    if (!(law.M0 > 0.0))
        throw ConfigError("analytic_solution_M: M0 must be positive (use analytic_solution_Qonly)");
    CharacteristicOracle oracle(material, law, source, t, default_substep(law, source));
    return oracle(x, t);
}

FieldSample analytic_solution_Qonly(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                                    const SourceSpec& source, double x, double t) {
    const bool qc = law.QC0 > 0.0, qm = law.QM0 > 0.0;
    if (law.C0 != 0.0 || law.M0 != 0.0 || qc == qm)
        throw ConfigError("analytic_solution_Qonly: exactly one dissipation channel must be active");
    CharacteristicOracle oracle(material, law, source, t, 1.0);  // closed form, no ODE
    return oracle(x, t);
}

EnvelopePair envelope_bounds(const MaterialHalfSpaces& material, const InterfaceLaw& law,
                             const SourceSpec& source, double x, double t) {
    const bool qc = law.QC0 > 0.0, qm = law.QM0 > 0.0;
    if (law.C0 != 0.0 || law.M0 != 0.0 || qc == qm)
        throw ConfigError("envelope_bounds: Q-only law required");

    const double m = law.kind.max_abs_phi();
    const double eps = qc ? law.eps_QC : law.eps_QM;
    const double base = qc ? law.QC0 : law.QM0;
    const double qlo = base * (1.0 - std::abs(eps) * m);
    const double qhi = base * (1.0 + std::abs(eps) * m);

    auto sample_static = [&](double q) {
        InterfaceLaw st;
        if (qc)
            st.QC0 = q;
        else
            st.QM0 = q;
        CharacteristicOracle oracle(material, st, source, t, 1.0);
        return oracle(x, t);
    };
    const FieldSample a = sample_static(qlo), b = sample_static(qhi);
    EnvelopePair env;
    env.lower = {std::min(a.v, b.v), std::min(a.sigma, b.sigma)};
    env.upper = {std::max(a.v, b.v), std::max(a.sigma, b.sigma)};
    return env;
}

double g_func(double a, double b) {
    if (std::abs(b) < 1e-8) return 1.0 - a * b / 2.0;
    return 1.0 + (a / b) * (std::sqrt(1.0 - b * b) - 1.0);
}

double mean_alpha(double Z, double C0, double QC0, double eps_C, double eps_QC) {
    if (!(std::abs(eps_C) < 1.0) || !(std::abs(eps_QC) < 1.0))
        throw ConfigError("mean_alpha: modulation amplitudes must satisfy |eps| < 1");
    if (!(Z > 0.0) || !(C0 > 0.0)) throw ConfigError("mean_alpha: Z and C0 must be positive");
    return -(2.0 + Z * QC0 * g_func(eps_QC, eps_C)) / (Z * C0 * std::sqrt(1.0 - eps_C * eps_C));
}

}  // namespace modwave
