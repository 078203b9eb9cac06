#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "modwave/diagnostics.hpp"

using namespace modwave;

namespace {
const MaterialHalfSpaces plexi = MaterialHalfSpaces::homogeneous_medium(1200.0, 2800.0, 200.0);
}

TEST_CASE("energies: zero fields, analytic bulk value, interface term") {
    const Grid g = Grid::make(400.0, 400, plexi, 0.95);
    FieldState st(g.Nx);
    InterfaceLaw law;

    SUBCASE("zero everything") {
        const auto rec = energies(st, InterfaceTraces{}, law, g, plexi);
        CHECK(rec.E_b == 0.0);
        CHECK(rec.E_i == 0.0);
        CHECK(rec.E_m == 0.0);
        CHECK(rec.P == 0.0);
    }

    SUBCASE("uniform right-going field splits kinetic/potential evenly") {
        for (int j = 100; j < 200; ++j) {
            st.v[j] = 2.0;
            st.sigma[j] = -plexi.Z_minus() * 2.0;
        }
        const auto rec = energies(st, InterfaceTraces{}, law, g, plexi);
        // rho v^2 per node contributes half, sigma^2/E the other half
        const double expected = 100.0 * g.dx * plexi.rho_minus * 4.0;
        CHECK(rec.E_b == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("interface energy uses the instantaneous parameters") {
        law.C0 = 2e-10;
        law.M0 = 3e4;
        law.eps_C = 0.5;
        law.f_m = 100.0;
        InterfaceTraces tr;
        tr.mean_v = 1.5;
        tr.mean_sigma = 4e5;
        st.t = 1.0 / 400.0;  // quarter period: sin = 1
        const auto rec = energies(st, tr, law, g, plexi);
        const double C_t = law.C0 * 1.5, M_t = law.M0;
        CHECK(rec.E_i ==
              doctest::Approx(0.5 * M_t * 1.5 * 1.5 + 0.5 * C_t * 4e5 * 4e5).epsilon(1e-12));
        CHECK(rec.E_i >= 0.0);
    }
}

TEST_CASE("energy_balance_residual: static conservative series has zero residual") {
    // Synthetic constant-energy series with no forcing and a static law.
    InterfaceLaw law;
    const int n = 20;
    std::vector<EnergyRecord> recs(n);
    std::vector<InterfaceTraces> traces(n);
    for (int i = 0; i < n; ++i) {
        recs[i].t = i * 0.001;
        recs[i].E_m = 5.0;
    }
    const auto res = energy_balance_residual(recs, traces, law, 0.001);
    for (double r : res) CHECK(r == doctest::Approx(0.0));

    SUBCASE("dissipative term enters with the documented sign") {
        law.QC0 = 3e-7;
        for (int i = 0; i < n; ++i) traces[i].mean_sigma = 2.0;
        // residual = dE/dt - P + QC <sigma>^2 = 0 + QC * 4
        const auto r2 = energy_balance_residual(recs, traces, law, 0.001);
        CHECK(r2[5] == doctest::Approx(law.QC0 * 4.0).epsilon(1e-12));
    }
}

TEST_CASE("error_norm: exactness and homogeneity") {
    const Grid g = Grid::make(100.0, 50, plexi, 0.95);
    FieldState st(g.Nx);
    for (int j = 0; j < g.Nx; ++j) st.v[j] = std::sin(0.1 * g.x(j));
    CHECK(error_norm(st, [&](double x) { return std::sin(0.1 * x); }, g) ==
          doctest::Approx(0.0));
    const double e1 = error_norm(st, [&](double x) { return std::sin(0.1 * x) + 0.5; }, g);
    const double e2 = error_norm(st, [&](double x) { return std::sin(0.1 * x) + 1.0; }, g);
    CHECK(e2 == doctest::Approx(2.0 * e1).epsilon(1e-12));
    CHECK(e1 == doctest::Approx(0.5 * std::sqrt(g.dx * g.Nx)).epsilon(1e-12));
}

TEST_CASE("convergence_order: synthetic slopes") {
    std::vector<std::pair<double, double>> pts4, pts2;
    for (double dx : {1.0, 0.5, 0.25, 0.125}) {
        pts4.emplace_back(dx, 3.0 * dx * dx * dx * dx);
        pts2.emplace_back(dx, 7.0 * dx * dx);
    }
    CHECK(convergence_order(pts4) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(convergence_order(pts2) == doctest::Approx(2.0).epsilon(1e-12));

    SUBCASE("drop_coarsest removes a polluted coarse point") {
        auto pts = pts4;
        pts[0].second *= 10.0;  // slope break on the coarsest grid
        const double all = convergence_order(pts);
        const double trimmed = convergence_order(pts, true);
        CHECK(std::abs(trimmed - 4.0) < 1e-12);
        CHECK(std::abs(all - 4.0) > 0.1);
    }
}

TEST_CASE("dft_spectrum: bin sinusoid, Parseval, resolution") {
    const int n = 256;
    const double dt = 1e-3;
    const double fbin = 10.0 / (n * dt);
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = std::cos(2.0 * pi * fbin * j * dt);
    const auto sp = dft_spectrum(x, dt);
    CHECK(sp.df == doctest::Approx(1.0 / (n * dt)));

    // single dominant line in the first half (plus its conjugate image)
    for (int k = 0; k <= n / 2; ++k) {
        if (k == 10) {
            CHECK(std::abs(sp.amp[k]) == doctest::Approx(n / 2.0).epsilon(1e-12));
        } else {
            CHECK(std::abs(sp.amp[k]) < 1e-9);
        }
    }

    double time_sum = 0.0, freq_sum = 0.0;
    for (int j = 0; j < n; ++j) time_sum += x[j] * x[j];
    for (int k = 0; k < n; ++k) freq_sum += std::norm(sp.amp[k]);
    CHECK(time_sum == doctest::Approx(freq_sum / n).epsilon(1e-12));
}

TEST_CASE("harmonic_peak_ratios: no modulation leaves only k = 0") {
    const int n = 500;
    const double dt = 1e-3, fc = 20.0, T0 = 0.6;
    std::vector<double> inc(n), tr(n);
    for (int j = 0; j < n; ++j) {
        inc[j] = std::cos(2.0 * pi * fc * j * dt);
        tr[j] = T0 * std::cos(2.0 * pi * fc * j * dt + 0.3);
    }
    const auto ratios = harmonic_peak_ratios(dft_spectrum(tr, dt), dft_spectrum(inc, dt), fc,
                                             8.0, 2);
    CHECK(ratios.at(0) == doctest::Approx(T0).epsilon(1e-6));
    CHECK(ratios.at(1) < 1e-6);
    CHECK(ratios.at(-1) < 1e-6);
}

TEST_CASE("nonreciprocity_measure and delta_energy basics") {
    std::vector<double> a{0.1, -0.2, 0.3}, b{0.1, -0.2, 0.3};
    CHECK(nonreciprocity_measure(a, b, 30.0) == 0.0);
    b[2] += 0.4;
    CHECK(nonreciprocity_measure(a, b, 30.0) == doctest::Approx(30.0 * 0.4).epsilon(1e-12));
    CHECK_THROWS_AS(nonreciprocity_measure(a, std::vector<double>{1.0}, 30.0), ConfigError);

    std::vector<EnergyRecord> recs(5);
    for (int i = 0; i < 5; ++i) {
        recs[i].t = 0.01 * i;
        recs[i].E_m = 1.0 + 0.1 * i;
    }
    CHECK(delta_energy(recs, 0.04) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(delta_energy(recs, 0.0) == 0.0);
}
