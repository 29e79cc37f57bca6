// SPDX-License-Identifier: Apache-2.0
//
// Inner loops of the RIS element sum, in a scalar reference form and in
// SIMD variants picked at runtime. All variants consume identical Philox
// words; they differ only in the rounding of log/sin/cos and in summation
// order, which the equivalence tests bound.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

#include "pinris/channel.hpp"
#include "pinris/rng.hpp"

namespace pinris::kernels {

enum class Isa { Scalar, Avx2 };

/// Addresses elements [first_element, first_element + n) of one trial.
struct ElementRange {
  rng::PhiloxKey key;
  std::uint64_t trial = 0;
  std::uint32_t first_element = 0;
};

struct KernelTable {
  Isa isa;
  std::string_view name;

  /// out[i] = Rician envelope of element first_element + i in `stream`.
  void (*rician_amplitudes)(const ElementRange& range, rng::Stream stream, RicianParams params,
                            std::span<double> out);

  /// sum_i a[i] * b[i]
  double (*dot)(std::span<const double> a, std::span<const double> b);

  /// sum_i w[i] * exp(j theta_i), theta_i = severity * pi * (2u_i - 1) where
  /// u_i comes from the PhaseNoise stream at element first_element + i.
  std::complex<double> (*phase_noise_sum)(const ElementRange& range, double severity,
                                          std::span<const double> weights);
};

const KernelTable& scalar_kernels();

/// nullptr when the build has no AVX2 variant.
const KernelTable* avx2_kernels();

bool isa_supported(Isa isa);

/// Throws std::runtime_error if the CPU or build lacks the ISA.
const KernelTable& kernels_for(Isa isa);

/// Widest supported variant.
const KernelTable& best_kernels();

std::string_view to_string(Isa isa);

/// "scalar", "avx2" or "auto".
const KernelTable& kernels_by_name(std::string_view name);

/// Phase error of one element from its PhaseNoise block.
inline double phase_error(const rng::PhiloxCounter& block, double severity) {
  return severity * std::numbers::pi * (2.0 * rng::to_unit(block[0], block[1]) - 1.0);
}

}  // namespace pinris::kernels
