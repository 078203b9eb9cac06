#pragma once

#include <array>

namespace modwave {

/// Amplitudes of the four truncated sinusoids making up the source wavelet.
inline constexpr std::array<double, 4> source_a = {1.0, -21.0 / 32.0, 63.0 / 768.0, -1.0 / 512.0};
inline constexpr std::array<double, 4> source_b = {1.0, 2.0, 4.0, 8.0};

/// S(xi) = sum_m a_m sin(b_m w_c xi) on 0 < xi < 1/f_c, 0 elsewhere. C^6 smooth.
double source_signal(double f_c, double xi);

/// Offset xi* in (0, 1/f_c) at which S attains its global maximum.
double source_peak_offset(double f_c);

/// Exact integral of S(xi)^2 over the support, sum a_m^2 / (2 f_c).
double source_energy_integral(double f_c);

}  // namespace modwave
