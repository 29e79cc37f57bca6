// SPDX-License-Identifier: Apache-2.0

#include "pinris/kernels/kernels.hpp"

namespace pinris::kernels {

namespace {

void rician_amplitudes_scalar(const ElementRange& range, rng::Stream stream, RicianParams params,
                              std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto block = rng::philox4x32_10(
        rng::make_counter(range.first_element + static_cast<std::uint32_t>(i), range.trial, stream),
        range.key);
    out[i] = rician_envelope(block, params);
  }
}

double dot_scalar(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

std::complex<double> phase_noise_sum_scalar(const ElementRange& range, double severity,
                                            std::span<const double> weights) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto block = rng::philox4x32_10(
        rng::make_counter(range.first_element + static_cast<std::uint32_t>(i), range.trial,
                          rng::Stream::PhaseNoise),
        range.key);
    const double theta = phase_error(block, severity);
    re += weights[i] * std::cos(theta);
    im += weights[i] * std::sin(theta);
  }
  return {re, im};
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::Scalar, "scalar", &rician_amplitudes_scalar, &dot_scalar,
                                 &phase_noise_sum_scalar};
  return table;
}

}  // namespace pinris::kernels
