// SPDX-License-Identifier: Apache-2.0

#include "pinris/channel.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace pinris {

double free_space_gain(double carrier_frequency_hz) {
  if (!(carrier_frequency_hz > 0.0) || !std::isfinite(carrier_frequency_hz)) {
    throw std::invalid_argument("free_space_gain: carrier frequency must be positive");
  }
  const double k = kSpeedOfLight / (4.0 * std::numbers::pi * carrier_frequency_hz);
  return k * k;
}

double sv_path_loss_db(double distance_m, double a_db, double b, double shadow_db) {
  if (!(distance_m > 0.0)) {
    throw std::invalid_argument("sv_path_loss: distance must be positive");
  }
  return a_db + 10.0 * b * std::log10(distance_m) + shadow_db;
}

double sv_path_loss_linear(double distance_m, double a_db, double b, double shadow_db) {
  return std::pow(10.0, sv_path_loss_db(distance_m, a_db, b, shadow_db) / 10.0);
}

RicianParams RicianParams::from_factor(double k) {
  if (!(k >= 0.0)) throw std::invalid_argument("rician factor must be >= 0");
  if (std::isinf(k)) return {1.0, 0.0};
  return {std::sqrt(k / (k + 1.0)), std::sqrt(0.5 / (k + 1.0))};
}

double sample_rician_amplitude(double rician_factor, rng::Substream& stream) {
  const auto p = RicianParams::from_factor(rician_factor);
  const double u_radius = stream.uniform();
  const double u_angle = stream.uniform();
  return rician_envelope(u_radius, u_angle, p);
}

double scaled_bessel_i(int order, double z) {
  if (order != 0 && order != 1) throw std::invalid_argument("scaled_bessel_i: order must be 0 or 1");
  if (z < 0.0) throw std::invalid_argument("scaled_bessel_i: z must be >= 0");
  if (z < 500.0) return std::exp(-z) * std::cyl_bessel_i(static_cast<double>(order), z);

  // Hankel asymptotic series; at z >= 500 eight terms are far below 1 ulp.
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 8; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * z);
    sum += term;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

double laguerre_half(double x) {
  if (!(x <= 0.0)) {
    throw std::domain_error("laguerre_half: only x <= 0 is supported, got " + std::to_string(x));
  }
  const double z = -0.5 * x;
  // e^{x/2} I_nu(-x/2) = e^{-z} I_nu(z)
  return (1.0 - x) * scaled_bessel_i(0, z) - x * scaled_bessel_i(1, z);
}

double rician_mean_amplitude(double rician_factor) {
  if (!(rician_factor >= 0.0)) throw std::invalid_argument("rician factor must be >= 0");
  if (std::isinf(rician_factor)) return 1.0;
  return std::sqrt(std::numbers::pi / (4.0 * (rician_factor + 1.0))) * laguerre_half(-rician_factor);
}

}  // namespace pinris
