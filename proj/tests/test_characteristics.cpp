#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "modwave/characteristics.hpp"
#include "modwave/diagnostics.hpp"
#include "modwave/hbm.hpp"
#include "modwave/modulation.hpp"
#include "modwave/source.hpp"

using namespace modwave;

namespace {

MaterialHalfSpaces hetero() {
    MaterialHalfSpaces m;
    m.rho_minus = 1200.0;
    m.c_minus = 2800.0;
    m.rho_plus = 2100.0;
    m.c_plus = 3500.0;
    m.x0 = 200.0;
    return m;
}

SourceSpec pulse30() {
    SourceSpec s;
    s.f_c = 30.0;
    s.forcing = CauchyPulse{(200.0 - 10.0) / 2800.0};
    return s;
}

}  // namespace

TEST_CASE("g_func: values, limit, positivity on a 200x200 grid") {
    CHECK(g_func(0.0, 0.5) == doctest::Approx(1.0));
    CHECK(g_func(0.5, 0.5) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-9));
    // b -> 0 limit is 1 and the series branch joins smoothly
    CHECK(g_func(0.7, 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(g_func(0.7, 2e-8) == doctest::Approx(g_func(0.7, 1.0001e-8)).epsilon(1e-6));

    double gmin = 1e300;
    for (int i = 0; i < 200; ++i) {
        for (int j = 0; j < 200; ++j) {
            const double a = -0.995 + 1.99 * i / 199.0;
            const double b = -0.995 + 1.99 * j / 199.0;
            const double g = g_func(a, b);
            gmin = std::min(gmin, g);
            CHECK(g > 0.0);
        }
    }
    CHECK(gmin > 0.0);
    CHECK(gmin < 0.15);  // the bound is approached near |a| = |b| -> 1
}

TEST_CASE("mean_alpha matches direct quadrature of a(t) and is negative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double Z = 1e5 + 5e6 * u(rng);
        const double C0 = (0.1 + 2.0 * u(rng)) / (Z * 300.0);
        const double QC0 = 2.0 * u(rng) / Z;
        const double eps_C = -0.95 + 1.9 * u(rng);
        const double eps_QC = -0.95 + 1.9 * u(rng);
        const double f_m = 100.0;

        InterfaceLaw law;
        law.C0 = C0;
        law.QC0 = QC0;
        law.eps_C = eps_C;
        law.eps_QC = eps_QC;
        law.f_m = f_m;
        law.allow_unstable = true;  // |eps_C| may approach 1

        // a(t) = -(1/Z) (2 + Z (C'(t) + QC(t))) / C(t); trapezoid over one period
        // is spectrally accurate for this smooth periodic integrand.
        const double T = 1.0 / f_m;
        const int n = 1 << 14;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = T * i / n;
            const auto p = interface_params(law, t, 0);
            const auto dp = interface_params(law, t, 1);
            acc += -(2.0 + Z * (dp.C + p.QC)) / (Z * p.C);
        }
        const double quad = acc / n;

        const double abar = mean_alpha(Z, C0, QC0, eps_C, eps_QC);
        CHECK(abar < 0.0);
        CHECK(std::abs(abar - quad) < 1e-10 * std::abs(quad) + 1e-14);
    }
}

TEST_CASE("perfect interface: free translation before and through x0") {
    const auto mat = MaterialHalfSpaces::homogeneous_medium(1200.0, 2800.0, 200.0);
    const auto src = pulse30();
    InterfaceLaw law;  // all zero
    CharacteristicOracle oracle(mat, law, src, 0.05, 1e-5);

    // Before the pulse reaches x0 the solution is the translated initial data.
    for (double t : {0.0, 0.001, 0.002}) {
        for (double x : {120.0, 150.0, 185.0}) {
            const auto s = oracle(x, t);
            const double v_exact = source_signal(src.f_c, src.cauchy().t0 - x / 2800.0 + t);
            CHECK(s.v == doctest::Approx(v_exact).epsilon(1e-12));
            CHECK(s.sigma == doctest::Approx(-mat.Z_minus() * v_exact).epsilon(1e-12));
        }
    }
    // Long after crossing: transmitted pulse keeps the incident shape.
    const double t = 0.04;
    for (double x : {230.0, 260.0, 290.0}) {
        const auto s = oracle(x, t);
        const double v_exact = source_signal(src.f_c, src.cauchy().t0 - x / 2800.0 + t);
        CHECK(s.v == doctest::Approx(v_exact).epsilon(1e-9));
    }
}

TEST_CASE("static C-only law: trace spectrum reproduces the closed-form T(omega)") {
    // Independent route check: the characteristics ODE solution vs static_rt,
    // in a heterogeneous medium. V_trans(f)/V_inc(f) = T(f) bin by bin.
    const auto mat = hetero();
    const auto src = pulse30();
    InterfaceLaw law;
    law.C0 = 1.0 / 2.45e9;
    law.QC0 = 1e-7;

    const double t_max = 0.12;
    const double h = 2e-6;
    CharacteristicOracle oracle(mat, law, src, t_max, h);

    const double dt = 1e-4;
    const int n = static_cast<int>(t_max / dt);
    std::vector<double> vtr(n), vin(n);
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        vtr[i] = oracle.v_plus(t);
        vin[i] = source_signal(src.f_c, src.cauchy().t0 - mat.x0 / mat.c_minus + t);
    }
    const auto str = dft_spectrum(vtr, dt);
    const auto sin_ = dft_spectrum(vin, dt);

    const double peak = sin_.abs_at(src.f_c);
    int checked = 0;
    for (int b = 1; b < n / 2; ++b) {
        if (std::abs(sin_.amp[b]) < 0.3 * peak) continue;
        const std::complex<double> ratio = str.amp[b] / sin_.amp[b];
        const auto rt = static_rt(mat, law, 2.0 * pi * str.freq[b]);
        CHECK(std::abs(ratio - rt.T) < 2e-6);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("static M-only law: trace spectrum reproduces the closed-form T(omega)") {
    const auto mat = hetero();
    const auto src = pulse30();
    InterfaceLaw law;
    law.M0 = 2.0e4;
    law.QM0 = 1e3;

    const double t_max = 0.12, h = 2e-6, dt = 1e-4;
    CharacteristicOracle oracle(mat, law, src, t_max, h);
    const int n = static_cast<int>(t_max / dt);
    std::vector<double> vtr(n), vin(n);
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        vtr[i] = oracle.v_plus(t);
        vin[i] = source_signal(src.f_c, src.cauchy().t0 - mat.x0 / mat.c_minus + t);
    }
    const auto str = dft_spectrum(vtr, dt);
    const auto sin_ = dft_spectrum(vin, dt);
    const double peak = sin_.abs_at(src.f_c);
    int checked = 0;
    for (int b = 1; b < n / 2; ++b) {
        if (std::abs(sin_.amp[b]) < 0.3 * peak) continue;
        const std::complex<double> ratio = str.amp[b] / sin_.amp[b];
        const auto rt = static_rt(mat, law, 2.0 * pi * str.freq[b]);
        CHECK(std::abs(ratio - rt.T) < 2e-6);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("RK4 trace: step halving improves the solution at 4th order") {
    const auto mat = MaterialHalfSpaces::homogeneous_medium(1200.0, 2800.0, 200.0);
    const auto src = pulse30();
    InterfaceLaw law;
    law.C0 = 1.0 / 2.45e9;
    law.eps_C = 0.9;
    law.f_m = 500.0;

    const double t_probe = 0.08;
    auto trace_at = [&](double h) {
        CharacteristicOracle oracle(mat, law, src, t_probe, h);
        return oracle.v_plus(t_probe * 0.9);
    };
    const double y1 = trace_at(4e-6);
    const double y2 = trace_at(2e-6);
    const double y3 = trace_at(1e-6);
    const double d12 = std::abs(y1 - y2), d23 = std::abs(y2 - y3);
    CHECK(d23 < d12 / 8.0);  // O(h^4) contraction (16x nominal)
}

TEST_CASE("Q_C-only: closed form stays within the static extreme envelopes") {
    const auto mat = MaterialHalfSpaces::homogeneous_medium(1200.0, 2800.0, 200.0);
    const auto src = pulse30();
    InterfaceLaw law;
    law.QC0 = 2e-7;
    law.eps_QC = 0.9;
    law.f_m = 500.0;

    CharacteristicOracle oracle(mat, law, src, 0.06, 1.0);
    for (double t : {0.02, 0.03, 0.045}) {
        for (int i = 0; i < 100; ++i) {
            const double x = 4.0 * i + 2.0;
            const auto s = oracle(x, t);
            const auto env = envelope_bounds(mat, law, src, x, t);
            const double scale =
                std::max({std::abs(env.lower.v), std::abs(env.upper.v), 1e-30});
            CHECK(s.v >= env.lower.v - 1e-12 * scale);
            CHECK(s.v <= env.upper.v + 1e-12 * scale);
        }
    }

    SUBCASE("zero dissipation collapses to perfect transmission") {
        InterfaceLaw none;
        none.QC0 = 0.0;
        // Q_C == 0 is the perfect-interface mode
        CharacteristicOracle perfect(mat, none, src, 0.05, 1.0);
        const double v = perfect.v_plus(0.04);
        const double inc = source_signal(src.f_c, src.cauchy().t0 - mat.x0 / 2800.0 + 0.04);
        CHECK(v == doctest::Approx(inc).epsilon(1e-12));
    }
}

TEST_CASE("mode detection rejects joint C and M modulation") {
    const auto mat = MaterialHalfSpaces::homogeneous_medium(1200.0, 2800.0, 200.0);
    InterfaceLaw law;
    law.C0 = 1e-10;
    law.M0 = 1e4;
    CHECK_THROWS_AS(CharacteristicOracle(mat, law, pulse30(), 0.01, 1e-5), ConfigError);
    CHECK_THROWS_AS(analytic_solution_C(mat, law, pulse30(), 100.0, 0.01), ConfigError);
    CHECK_THROWS_AS(analytic_solution_M(mat, law, pulse30(), 100.0, 0.01), ConfigError);
    CHECK_THROWS_AS(analytic_solution_Qonly(mat, law, pulse30(), 100.0, 0.01), ConfigError);
}
