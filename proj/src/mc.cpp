// SPDX-License-Identifier: Apache-2.0

#include "pinris/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pinris::mc {

void RunningStats::merge(const RunningStats& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double n_a = static_cast<double>(count_);
  const double n_b = static_cast<double>(other.count_);
  const double n = n_a + n_b;
  const double delta = other.mean_ - mean_;
  mean_ += delta * (n_b / n);
  m2_ += other.m2_ + delta * delta * (n_a * n_b / n);
  count_ += other.count_;
}

McEstimate to_estimate(const RunningStats& stats, std::uint64_t seed) {
  McEstimate e;
  e.mean = stats.mean();
  e.std_dev = std::sqrt(stats.variance());
  e.trials = stats.count();
  e.seed = seed;
  e.ci_half_width_95 = stats.count() > 0 ? 1.96 * e.std_dev / std::sqrt(static_cast<double>(stats.count())) : 0.0;
  return e;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<McEstimate> estimate_many(std::size_t outputs, const VectorSampler& sample,
                                      const McOptions& options) {
  if (options.trials < 2) throw std::invalid_argument("estimate: trials must be >= 2");
  if (outputs == 0) return {};

  const auto key = rng::PhiloxKey::from_seed(options.seed);
  const std::uint64_t chunks = (options.trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<RunningStats> chunk_stats(chunks * outputs);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    std::vector<double> values(outputs);
    try {
      for (;;) {
        const std::uint64_t chunk = next.fetch_add(1);
        if (chunk >= chunks) break;
        RunningStats* stats = chunk_stats.data() + chunk * outputs;
        const std::uint64_t begin = chunk * kChunkTrials;
        const std::uint64_t end = std::min(options.trials, begin + kChunkTrials);
        for (std::uint64_t t = begin; t < end; ++t) {
          sample(TrialContext{key, t}, values);
          for (std::size_t k = 0; k < outputs; ++k) stats[k].push(values[k]);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_workers(options.workers), chunks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<McEstimate> result(outputs);
  for (std::size_t k = 0; k < outputs; ++k) {
    RunningStats total;
    for (std::uint64_t c = 0; c < chunks; ++c) total.merge(chunk_stats[c * outputs + k]);
    result[k] = to_estimate(total, options.seed);
  }
  return result;
}

McEstimate estimate(const ScalarSampler& sample, const McOptions& options) {
  return estimate_many(
      1, [&sample](const TrialContext& ctx, std::span<double> out) { out[0] = sample(ctx); },
      options)[0];
}

}  // namespace pinris::mc
