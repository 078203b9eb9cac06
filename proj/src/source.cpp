#include "modwave/source.hpp"

#include <cmath>

#include "modwave/types.hpp"

namespace modwave {

double source_signal(double f_c, double xi) {
    if (xi <= 0.0 || xi >= 1.0 / f_c) return 0.0;
    const double wc = 2.0 * pi * f_c;
    double s = 0.0;
    for (int m = 0; m < 4; ++m) s += source_a[m] * std::sin(source_b[m] * wc * xi);
    return s;
}

double source_peak_offset(double f_c) {
    // Dense scan over the support followed by golden-section refinement.
    const double T = 1.0 / f_c;
    const int n = 4096;
    double best_xi = 0.0, best = -1.0;
    for (int i = 1; i < n; ++i) {
        const double xi = T * i / n;
        const double s = source_signal(f_c, xi);
        if (s > best) {
            best = s;
            best_xi = xi;
        }
    }
    double lo = best_xi - T / n, hi = best_xi + T / n;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    for (int it = 0; it < 80; ++it) {
        if (source_signal(f_c, x1) < source_signal(f_c, x2)) {
            lo = x1;
            x1 = x2;
            x2 = lo + gr * (hi - lo);
        } else {
            hi = x2;
            x2 = x1;
            x1 = hi - gr * (hi - lo);
        }
    }
    return 0.5 * (lo + hi);
}

double source_energy_integral(double f_c) {
    double s = 0.0;
    for (double a : source_a) s += a * a;
    return s / (2.0 * f_c);
}

}  // namespace modwave
