// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo estimation over counter-addressed trials.
//
// Trials are grouped into fixed-size chunks; each chunk is reduced with
// Welford's update and chunks are merged in index order. The chunking never
// depends on the worker count, so the result is bit-identical for any number
// of workers.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pinris/rng.hpp"

namespace pinris::mc {

struct McEstimate {
  double mean = 0.0;
  double ci_half_width_95 = 0.0;
  double std_dev = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;  // 0 = hardware concurrency
};

/// Streaming mean/variance with pairwise merge (Chan et al.).
class RunningStats {
 public:
  void push(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void merge(const RunningStats& other) noexcept;

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const noexcept {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

McEstimate to_estimate(const RunningStats& stats, std::uint64_t seed);

/// Per-trial handle: the key and trial index address every substream.
class TrialContext {
 public:
  TrialContext(rng::PhiloxKey key, std::uint64_t trial) noexcept : key_(key), trial_(trial) {}

  rng::Substream stream(rng::Stream tag) const noexcept { return {key_, trial_, tag}; }
  rng::PhiloxKey key() const noexcept { return key_; }
  std::uint64_t trial() const noexcept { return trial_; }

 private:
  rng::PhiloxKey key_;
  std::uint64_t trial_;
};

inline constexpr std::uint64_t kChunkTrials = 64;

using ScalarSampler = std::function<double(const TrialContext&)>;
/// Writes one value per output slot; `out` has the size given to estimate_many.
using VectorSampler = std::function<void(const TrialContext&, std::span<double> out)>;

/// Requires trials >= 2; throws std::invalid_argument otherwise.
McEstimate estimate(const ScalarSampler& sample, const McOptions& options);

std::vector<McEstimate> estimate_many(std::size_t outputs, const VectorSampler& sample,
                                      const McOptions& options);

unsigned resolve_workers(unsigned requested);

}  // namespace pinris::mc
