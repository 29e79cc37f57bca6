#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "pinris/channel.hpp"
#include "pinris/ris.hpp"

using namespace pinris;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double mean_gain(std::uint32_t m, double k, double eps, std::uint64_t trials) {
  const std::uint32_t cp[1] = {m};
  return mc::estimate(
             [&](const mc::TrialContext& ctx) {
               RisGainSample g[1];
               sample_ris_gains(ctx, k, eps, cp, g);
               return g[0].impaired;
             },
             {trials, 1, 0})
      .mean;
}

}  // namespace

TEST_CASE("effective gain basics") {
  const mc::TrialContext ctx(rng::PhiloxKey::from_seed(1), 0);
  const std::vector<double> one{1.0};
  CHECK(ris_effective_gain(one, one, 0.0, ctx) == 1.0);
  // a single element: phase noise does not change |.|^2
  CHECK(ris_effective_gain(one, one, 0.7, ctx) == doctest::Approx(1.0).epsilon(1e-14));
  const std::vector<double> a{0.5, 1.0, 2.0}, b{1.0, 0.25, 0.5};
  CHECK(ris_effective_gain(a, b, 0.0, ctx) == doctest::Approx(1.75 * 1.75));
  CHECK(ris_effective_gain(a, b, 0.5, ctx) < 1.75 * 1.75);
  CHECK_THROWS(ris_effective_gain(a, one, 0.0, ctx));
  CHECK_THROWS(ris_effective_gain(a, b, 1.5, ctx));
}

TEST_CASE("scalar realization matches the prefix sampler") {
  const mc::TrialContext ctx(rng::PhiloxKey::from_seed(3), 8);
  const auto r = draw_ris_realization(1500, 10.0, 0.5, ctx);
  const std::uint32_t cp[2] = {700, 1500};
  RisGainSample g[2];
  sample_ris_gains(ctx, 10.0, 0.5, cp, g, kernels::scalar_kernels());
  CHECK(g[1].impaired == doctest::Approx(r.effective_gain).epsilon(1e-12));
  CHECK(ris_effective_gain(r.incident, r.reflected, 0.5, ctx, kernels::scalar_kernels()) ==
        doctest::Approx(r.effective_gain).epsilon(1e-12));
  double coherent = 0.0;
  for (std::size_t m = 0; m < r.incident.size(); ++m) coherent += r.incident[m] * r.reflected[m];
  CHECK(g[1].coherent == doctest::Approx(coherent * coherent).epsilon(1e-12));

  RisGainSample alone[1];
  const std::uint32_t only[1] = {700};
  sample_ris_gains(ctx, 10.0, 0.5, only, alone, kernels::scalar_kernels());
  CHECK(alone[0].impaired == g[0].impaired);

  const std::uint32_t bad[2] = {10, 10};
  CHECK_THROWS(sample_ris_gains(ctx, 10.0, 0.5, bad, g));
}

TEST_CASE("phase noise factor") {
  CHECK(phase_noise_factor(0.0) == 1.0);
  CHECK(phase_noise_factor(0.5) == doctest::Approx(2.0 / std::numbers::pi));
  CHECK(std::abs(phase_noise_factor(1.0)) < 1e-15);
  CHECK_THROWS(phase_noise_factor(-0.1));
}

TEST_CASE("second moment bracket") {
  const double ed = rician_mean_amplitude(10.0);
  CHECK(ris_gain_second_moment(1, 10.0) == doctest::Approx(1.0));
  CHECK(ris_gain_second_moment(64, 10.0) == doctest::Approx(3747.0586666820245).epsilon(1e-12));
  CHECK(ris_gain_second_moment(8, 10.0) == doctest::Approx(8 + 56 * std::pow(ed, 4)));
  // K -> inf: amplitudes are exactly 1
  CHECK(ris_gain_second_moment(100, kInf) == doctest::Approx(10000.0));
  CHECK(ris_mean_gain(256, kInf, 0.5) == doctest::Approx(256 + 255.0 * 256.0 * 4.0 / (std::numbers::pi * std::numbers::pi)));
}

TEST_CASE("second moment against simulation") {
  for (std::uint32_t m : {1u, 64u}) {
    const double mc = mean_gain(m, 10.0, 0.0, 100000);
    CHECK(mc == doctest::Approx(ris_gain_second_moment(m, 10.0)).epsilon(0.01));
  }
  CHECK(mean_gain(256, kInf, 0.5, 20000) == doctest::Approx(ris_mean_gain(256, kInf, 0.5)).epsilon(0.01));
}

TEST_CASE("link geometry") {
  const Scenario s = default_table1();
  const auto centers = place_users(s.geometry, UserPlacement::Center, {0, 0, 0, 0});
  const double r = std::sqrt(30.0 * 30.0 + 9.0);
  CHECK(r == doctest::Approx(30.15).epsilon(1e-3));
  CHECK(sv_path_loss_db(r, 61.4, 2.0) == doctest::Approx(90.98563883221968).epsilon(1e-12));
  const double loss = sv_path_loss_linear(r, 61.4, 2.0);
  CHECK(ris_snr(1.0, 1.0, 1.0, s.geometry, s.ris, centers) == doctest::Approx(1.0 / (loss * loss)));
}

TEST_CASE("rates: Jensen gap, phase noise and array size") {
  Scenario s = default_table1();
  s.ris.phase_noise_severity = 0.0;
  const auto centered = ris_rate_mc(s, {2000, 1, 0}, UserPlacement::Center);
  const double bound = ris_rate_closed_form(s);
  CHECK(centered.mean <= bound + 2.0 * centered.ci_half_width_95);
  CHECK((bound - centered.mean) / bound < 0.05);
  CHECK(ris_rate_closed_form(s, RisPreLog::Printed) == doctest::Approx(2.0 * bound));
  CHECK(ris_jensen_bound(s) == doctest::Approx(bound));

  Scenario noisy = s;
  noisy.ris.phase_noise_severity = 0.5;
  CHECK(ris_rate_mc(noisy, {2000, 1, 0}).mean < ris_rate_mc(s, {2000, 1, 0}).mean);
  CHECK(ris_jensen_bound(noisy) < bound);

  double prev = 0.0;
  for (std::uint32_t m : {1000u, 4000u, 16000u}) {
    s.ris.num_elements = m;
    const double r = ris_rate_closed_form(s);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("prelog names") {
  CHECK(parse_prelog("half") == RisPreLog::Half);
  CHECK(parse_prelog("printed") == RisPreLog::Printed);
  CHECK(to_string(RisPreLog::Printed) == "printed");
  CHECK_THROWS(parse_prelog("full"));
}
