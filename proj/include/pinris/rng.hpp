// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random numbers (Philox4x32-10).
//
// Every draw is addressed by (seed, trial, stream, block), so any trial can be
// regenerated without touching the others. This is what lets Monte-Carlo
// workers split trials arbitrarily and still produce identical results, and
// what lets the SIMD kernels reproduce the scalar draws bit for bit.

#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace pinris::rng {

using PhiloxCounter = std::array<std::uint32_t, 4>;

struct PhiloxKey {
  std::uint32_t k0 = 0;
  std::uint32_t k1 = 0;

  static constexpr PhiloxKey from_seed(std::uint64_t seed) noexcept {
    return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  }
};

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
inline constexpr int kPhiloxRounds = 10;

constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
  for (int round = 0; round < kPhiloxRounds; ++round) {
    if (round > 0) {
      key.k0 += kPhiloxW0;
      key.k1 += kPhiloxW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key.k0, lo1, hi0 ^ ctr[3] ^ key.k1, lo0};
  }
  return ctr;
}

/// 52 random mantissa bits from two words, mapped to [0, 1).
inline double to_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 20) | (lo >> 12);
  return std::bit_cast<double>(bits | 0x3FF0000000000000ull) - 1.0;
}

/// Independent stream tags. Values are part of the reproducibility contract.
enum class Stream : std::uint32_t {
  Geometry = 1,
  Incident = 2,
  Reflected = 3,
  PhaseNoise = 4,
  Generic = 5,
};

/// Counter for block `block` of substream (trial, stream).
constexpr PhiloxCounter make_counter(std::uint32_t block, std::uint64_t trial, Stream stream) noexcept {
  return {block, static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
          static_cast<std::uint32_t>(stream)};
}

/// Sequential view over one (seed, trial, stream) substream.
/// Each Philox block yields two uniforms; uniform() consumes them in order.
class Substream {
 public:
  Substream(PhiloxKey key, std::uint64_t trial, Stream stream) noexcept
      : key_(key), trial_(trial), stream_(stream) {}

  PhiloxCounter block(std::uint32_t index) const noexcept {
    return philox4x32_10(make_counter(index, trial_, stream_), key_);
  }

  double uniform() noexcept {
    if (!has_spare_) {
      const auto w = block(next_block_++);
      spare_ = to_unit(w[2], w[3]);
      has_spare_ = true;
      return to_unit(w[0], w[1]);
    }
    has_spare_ = false;
    return spare_;
  }

  PhiloxKey key() const noexcept { return key_; }
  std::uint64_t trial() const noexcept { return trial_; }
  Stream stream() const noexcept { return stream_; }

 private:
  PhiloxKey key_;
  std::uint64_t trial_;
  Stream stream_;
  std::uint32_t next_block_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace pinris::rng
