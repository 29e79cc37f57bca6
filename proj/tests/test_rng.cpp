#include <doctest.h>

#include <cmath>

#include "pinris/rng.hpp"

using namespace pinris::rng;

TEST_CASE("philox4x32-10 known-answer vectors") {
  // Reference vectors from the Random123 distribution.
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
  static_assert(philox4x32_10({0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5);
}

TEST_CASE("to_unit covers [0, 1)") {
  CHECK(to_unit(0, 0) == 0.0);
  const double top = to_unit(0xffffffff, 0xffffffff);
  CHECK(top < 1.0);
  CHECK(top == 1.0 - std::ldexp(1.0, -52));
}

TEST_CASE("counters separate trial and stream") {
  const auto a = make_counter(7, 0x100000002ull, Stream::Incident);
  CHECK(a[0] == 7u);
  CHECK(a[1] == 2u);
  CHECK(a[2] == 1u);
  CHECK(a[3] == static_cast<std::uint32_t>(Stream::Incident));
}

TEST_CASE("substreams are reproducible and uncorrelated") {
  const auto key = PhiloxKey::from_seed(42);
  Substream s1(key, 3, Stream::Incident);
  Substream s1_again(key, 3, Stream::Incident);
  Substream s2(key, 3, Stream::Reflected);
  Substream s3(key, 4, Stream::Incident);
  constexpr int n = 200000;
  double sx = 0, sy = 0, sz = 0, sxx = 0, syy = 0, szz = 0, sxy = 0, sxz = 0;
  for (int i = 0; i < n; ++i) {
    const double x = s1.uniform();
    CHECK_EQ(x, s1_again.uniform());
    const double y = s2.uniform();
    const double z = s3.uniform();
    sx += x; sy += y; sz += z;
    sxx += x * x; syy += y * y; szz += z * z;
    sxy += x * y; sxz += x * z;
  }
  auto corr = [n](double a, double b, double aa, double bb, double ab) {
    const double ma = a / n, mb = b / n;
    return (ab / n - ma * mb) / std::sqrt((aa / n - ma * ma) * (bb / n - mb * mb));
  };
  CHECK(std::abs(corr(sx, sy, sxx, syy, sxy)) < 0.01);
  CHECK(std::abs(corr(sx, sz, sxx, szz, sxz)) < 0.01);
  CHECK(sx / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sxx / n - (sx / n) * (sx / n) == doctest::Approx(1.0 / 12.0).epsilon(0.01));
}

TEST_CASE("seed splits into both key words") {
  const auto k = PhiloxKey::from_seed(0x0123456789abcdefull);
  CHECK(k.k0 == 0x89abcdefu);
  CHECK(k.k1 == 0x01234567u);
}
