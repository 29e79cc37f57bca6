#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "pinris/channel.hpp"
#include "pinris/ris.hpp"

using namespace pinris;

namespace {

// 1F1(-1/2; 1; x) by direct summation; equals L_{1/2}(x).
double laguerre_half_series(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 400; ++k) {
    term *= (-0.5 + k) / ((1.0 + k) * (1.0 + k)) * x;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("free-space gain") {
  CHECK(free_space_gain(28e9) == doctest::Approx(7.259481705540116e-7).epsilon(1e-12));
  CHECK(free_space_gain(56e9) == doctest::Approx(free_space_gain(28e9) / 4.0).epsilon(1e-14));
  CHECK_THROWS(free_space_gain(0.0));
  CHECK_THROWS(free_space_gain(-1.0));
}

TEST_CASE("Saleh-Valenzuela path loss") {
  CHECK(sv_path_loss_db(1.0, 61.4, 2.0) == doctest::Approx(61.4));
  CHECK(sv_path_loss_linear(1.0, 61.4, 2.0) == doctest::Approx(std::pow(10.0, 6.14)).epsilon(1e-12));
  CHECK(sv_path_loss_linear(10.0, 61.4, 2.0) == doctest::Approx(std::pow(10.0, 8.14)).epsilon(1e-12));
  CHECK(sv_path_loss_db(10.0, 61.4, 2.0, 5.8) == doctest::Approx(87.2));
  CHECK_THROWS(sv_path_loss_linear(0.0, 61.4, 2.0));
}

TEST_CASE("Laguerre L_1/2") {
  CHECK(laguerre_half(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(laguerre_half(-1.0) == doctest::Approx(1.4464913440831721).epsilon(1e-12));
  for (double x : {-0.1, -0.5, -2.0, -5.0, -10.0}) {
    CHECK(laguerre_half(x) == doctest::Approx(laguerre_half_series(x)).epsilon(1e-10));
  }
  // the alternating series cancels badly further out; arbitrary-precision values
  CHECK(laguerre_half(-25.0) == doctest::Approx(5.69860594078578).epsilon(1e-12));
  CHECK(laguerre_half(-40.0) == doctest::Approx(7.18124167460941).epsilon(1e-12));
  CHECK(laguerre_half(-10.0) == doctest::Approx(3.658671608148036).epsilon(1e-12));
  // Large-|x| behaviour: L_1/2(-x) ~ 2 sqrt(x/pi)
  CHECK(laguerre_half(-1e6) / (2.0 * std::sqrt(1e6 / std::numbers::pi)) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(laguerre_half(0.5), std::domain_error);
}

TEST_CASE("Rician mean amplitude") {
  CHECK(rician_mean_amplitude(0.0) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-13));
  CHECK(rician_mean_amplitude(10.0) == doctest::Approx(0.9776243909046113).epsilon(1e-12));
  CHECK(rician_mean_amplitude(std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(rician_mean_amplitude(1e7) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("scaled Bessel functions") {
  CHECK(scaled_bessel_i(0, 0.0) == 1.0);
  CHECK(scaled_bessel_i(1, 0.0) == 0.0);
  for (double z : {499.0, 501.0}) {
    CHECK(scaled_bessel_i(0, z) * std::sqrt(2.0 * std::numbers::pi * z) == doctest::Approx(1.0 + 1.0 / (8 * z)).epsilon(1e-6));
  }
  CHECK(scaled_bessel_i(0, 499.999) == doctest::Approx(scaled_bessel_i(0, 500.0)).epsilon(1e-5));
  CHECK_THROWS(scaled_bessel_i(2, 1.0));
  CHECK_THROWS(scaled_bessel_i(0, -1.0));
}

TEST_CASE("Rician sampler moments") {
  constexpr int n = 1000000;
  rng::Substream stream(rng::PhiloxKey::from_seed(7), 0, rng::Stream::Generic);
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = sample_rician_amplitude(10.0, stream);
    s += a;
    s2 += a * a;
  }
  CHECK(s / n == doctest::Approx(rician_mean_amplitude(10.0)).epsilon(0.002));
  CHECK(std::abs(s2 / n - 1.0) < 0.01);

  rng::Substream rayleigh(rng::PhiloxKey::from_seed(8), 0, rng::Stream::Generic);
  double r = 0.0;
  for (int i = 0; i < n; ++i) r += sample_rician_amplitude(0.0, rayleigh);
  CHECK(r / n == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(0.002));

  rng::Substream los(rng::PhiloxKey::from_seed(9), 0, rng::Stream::Generic);
  for (int i = 0; i < 100; ++i) CHECK(sample_rician_amplitude(std::numeric_limits<double>::infinity(), los) == 1.0);
}

TEST_CASE("product moment of independent envelopes") {
  // E[delta zeta] = E[delta]^2 for independent draws
  constexpr int n = 400000;
  rng::Substream a(rng::PhiloxKey::from_seed(11), 0, rng::Stream::Incident);
  rng::Substream b(rng::PhiloxKey::from_seed(11), 0, rng::Stream::Reflected);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += sample_rician_amplitude(10.0, a) * sample_rician_amplitude(10.0, b);
  const double ed = rician_mean_amplitude(10.0);
  CHECK(s / n == doctest::Approx(ed * ed).epsilon(0.01));
}

TEST_CASE("Rician parameters") {
  const auto p = RicianParams::from_factor(10.0);
  CHECK(p.los * p.los + 2.0 * p.scatter * p.scatter == doctest::Approx(1.0));
  CHECK(p.los == doctest::Approx(std::sqrt(10.0 / 11.0)));
  const auto inf = RicianParams::from_factor(std::numeric_limits<double>::infinity());
  CHECK(inf.los == 1.0);
  CHECK(inf.scatter == 0.0);
  CHECK_THROWS(RicianParams::from_factor(-1.0));
}
