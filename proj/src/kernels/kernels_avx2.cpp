// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants. Functions carry a target attribute instead of the whole
// translation unit being built with -mavx2, so nothing here can leak AVX2
// instructions into code that runs before the CPU check.

#include "pinris/kernels/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))

#include <immintrin.h>

#include <array>

#define PINRIS_AVX2 __attribute__((target("avx2")))

namespace pinris::kernels {

namespace {

struct Words {
  __m256i w0, w1, w2, w3;
};

PINRIS_AVX2 inline __m256i bcast64(std::uint64_t v) {
  return _mm256_set1_epi64x(static_cast<long long>(v));
}

/// Philox4x32-10 for four consecutive blocks; each 32-bit word lives in the
/// low half of a 64-bit lane so _mm256_mul_epu32 gives the full product.
PINRIS_AVX2 inline Words philox_x4(std::uint32_t first_block, std::uint64_t trial, rng::Stream stream,
                                   rng::PhiloxKey key) {
  const __m256i mask32 = bcast64(0xFFFFFFFFull);
  const __m256i m0 = bcast64(rng::kPhiloxM0);
  const __m256i m1 = bcast64(rng::kPhiloxM1);

  __m256i x0 = _mm256_set_epi64x(static_cast<std::uint32_t>(first_block + 3),
                                 static_cast<std::uint32_t>(first_block + 2),
                                 static_cast<std::uint32_t>(first_block + 1), first_block);
  __m256i x1 = bcast64(static_cast<std::uint32_t>(trial));
  __m256i x2 = bcast64(static_cast<std::uint32_t>(trial >> 32));
  __m256i x3 = bcast64(static_cast<std::uint32_t>(stream));

  std::uint32_t k0 = key.k0;
  std::uint32_t k1 = key.k1;
  for (int round = 0; round < rng::kPhiloxRounds; ++round) {
    if (round > 0) {
      k0 += rng::kPhiloxW0;
      k1 += rng::kPhiloxW1;
    }
    const __m256i p0 = _mm256_mul_epu32(x0, m0);
    const __m256i p1 = _mm256_mul_epu32(x2, m1);
    const __m256i hi0 = _mm256_srli_epi64(p0, 32);
    const __m256i lo0 = _mm256_and_si256(p0, mask32);
    const __m256i hi1 = _mm256_srli_epi64(p1, 32);
    const __m256i lo1 = _mm256_and_si256(p1, mask32);
    x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), bcast64(k0));
    x1 = lo1;
    x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), bcast64(k1));
    x3 = lo0;
  }
  return {x0, x1, x2, x3};
}

PINRIS_AVX2 inline __m256d to_unit_x4(__m256i hi, __m256i lo) {
  const __m256i bits = _mm256_or_si256(_mm256_slli_epi64(hi, 20), _mm256_srli_epi64(lo, 12));
  const __m256i one_bits = bcast64(0x3FF0000000000000ull);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(bits, one_bits)), _mm256_set1_pd(1.0));
}

/// Natural log for positive normal inputs, atanh series on [sqrt(1/2), sqrt(2)).
PINRIS_AVX2 inline __m256d log_x4(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i biased = _mm256_srli_epi64(bits, 52);
  const __m256i mant_bits = _mm256_or_si256(_mm256_and_si256(bits, bcast64(0x000FFFFFFFFFFFFFull)),
                                            bcast64(0x3FF0000000000000ull));
  __m256d m = _mm256_castsi256_pd(mant_bits);

  const __m256d two52 = _mm256_castsi256_pd(bcast64(0x4330000000000000ull));
  __m256d e = _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(biased, bcast64(0x4330000000000000ull))),
                            two52);
  e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));

  const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(std::numbers::sqrt2), _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d z = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d w = _mm256_mul_pd(z, z);

  __m256d poly = _mm256_set1_pd(1.0 / 21.0);
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 19.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 17.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 15.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 13.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 11.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 9.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 7.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 5.0));
  poly = _mm256_add_pd(_mm256_mul_pd(poly, w), _mm256_set1_pd(1.0 / 3.0));
  // log(m) = 2z + 2z * w * poly
  const __m256d two_z = _mm256_add_pd(z, z);
  const __m256d log_m = _mm256_add_pd(two_z, _mm256_mul_pd(_mm256_mul_pd(two_z, w), poly));

  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  return _mm256_add_pd(_mm256_mul_pd(e, ln2_hi), _mm256_add_pd(log_m, _mm256_mul_pd(e, ln2_lo)));
}

struct SinCos {
  __m256d sin, cos;
};

/// sin/cos for |x| <= pi (a few ulp beyond is fine), quadrant reduction by pi/2.
PINRIS_AVX2 inline SinCos sincos_x4(__m256d x) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(2.0 / std::numbers::pi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, _mm256_set1_pd(1.57079632673412561417e+00)));
  r = _mm256_sub_pd(r, _mm256_mul_pd(q, _mm256_set1_pd(6.07710050650619224932e-11)));
  const __m256d z = _mm256_mul_pd(r, r);

  __m256d sp = _mm256_set1_pd(1.58969099521155010221e-10);
  sp = _mm256_add_pd(_mm256_mul_pd(sp, z), _mm256_set1_pd(-2.50507602534068634195e-08));
  sp = _mm256_add_pd(_mm256_mul_pd(sp, z), _mm256_set1_pd(2.75573137070700676789e-06));
  sp = _mm256_add_pd(_mm256_mul_pd(sp, z), _mm256_set1_pd(-1.98412698298579493134e-04));
  sp = _mm256_add_pd(_mm256_mul_pd(sp, z), _mm256_set1_pd(8.33333333332248946124e-03));
  sp = _mm256_add_pd(_mm256_mul_pd(sp, z), _mm256_set1_pd(-1.66666666666666324348e-01));
  const __m256d s = _mm256_add_pd(r, _mm256_mul_pd(_mm256_mul_pd(r, z), sp));

  __m256d cp = _mm256_set1_pd(-1.13596475577881948265e-11);
  cp = _mm256_add_pd(_mm256_mul_pd(cp, z), _mm256_set1_pd(2.08757232129817482790e-09));
  cp = _mm256_add_pd(_mm256_mul_pd(cp, z), _mm256_set1_pd(-2.75573143513906633035e-07));
  cp = _mm256_add_pd(_mm256_mul_pd(cp, z), _mm256_set1_pd(2.48015872894767294178e-05));
  cp = _mm256_add_pd(_mm256_mul_pd(cp, z), _mm256_set1_pd(-1.38888888888741095749e-03));
  cp = _mm256_add_pd(_mm256_mul_pd(cp, z), _mm256_set1_pd(4.16666666666666019037e-02));
  const __m256d c = _mm256_add_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(0.5), z)),
                                  _mm256_mul_pd(_mm256_mul_pd(z, z), cp));

  const __m256i n = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i one = bcast64(1);
  const __m256i two = bcast64(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(n, one), one));
  const __m256i sin_sign = _mm256_slli_epi64(_mm256_and_si256(n, two), 62);
  const __m256i cos_sign = _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(n, one), two), 62);

  const __m256d sin_v = _mm256_blendv_pd(s, c, swap);
  const __m256d cos_v = _mm256_blendv_pd(c, s, swap);
  return {_mm256_xor_pd(sin_v, _mm256_castsi256_pd(sin_sign)),
          _mm256_xor_pd(cos_v, _mm256_castsi256_pd(cos_sign))};
}

PINRIS_AVX2 inline double hsum(__m256d v) {
  alignas(32) std::array<double, 4> lanes;
  _mm256_store_pd(lanes.data(), v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

PINRIS_AVX2 void rician_amplitudes_avx2(const ElementRange& range, rng::Stream stream, RicianParams params,
                                        std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d los = _mm256_set1_pd(params.los);
  const __m256d scatter = _mm256_set1_pd(params.scatter);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d minus_two = _mm256_set1_pd(-2.0);
  const __m256d pi = _mm256_set1_pd(std::numbers::pi);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const auto w = philox_x4(range.first_element + static_cast<std::uint32_t>(i), range.trial, stream,
                             range.key);
    const __m256d u_radius = to_unit_x4(w.w0, w.w1);
    const __m256d u_angle = to_unit_x4(w.w2, w.w3);
    const __m256d radius = _mm256_sqrt_pd(_mm256_mul_pd(minus_two, log_x4(_mm256_sub_pd(one, u_radius))));
    const __m256d theta = _mm256_mul_pd(pi, _mm256_sub_pd(_mm256_mul_pd(two, u_angle), one));
    const auto sc = sincos_x4(theta);
    const __m256d re = _mm256_add_pd(los, _mm256_mul_pd(scatter, _mm256_mul_pd(radius, sc.cos)));
    const __m256d im = _mm256_mul_pd(scatter, _mm256_mul_pd(radius, sc.sin));
    _mm256_storeu_pd(out.data() + i, _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im))));
  }
  if (i < n) {
    ElementRange tail = range;
    tail.first_element += static_cast<std::uint32_t>(i);
    scalar_kernels().rician_amplitudes(tail, stream, params, out.subspan(i));
  }
}

PINRIS_AVX2 double dot_avx2(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += a[i] * b[i];
  return sum;
}

PINRIS_AVX2 std::complex<double> phase_noise_sum_avx2(const ElementRange& range, double severity,
                                                      std::span<const double> weights) {
  const std::size_t n = weights.size();
  const __m256d scale = _mm256_set1_pd(severity * std::numbers::pi);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const auto w = philox_x4(range.first_element + static_cast<std::uint32_t>(i), range.trial,
                             rng::Stream::PhaseNoise, range.key);
    const __m256d u = to_unit_x4(w.w0, w.w1);
    const __m256d theta = _mm256_mul_pd(scale, _mm256_sub_pd(_mm256_mul_pd(two, u), one));
    const auto sc = sincos_x4(theta);
    const __m256d weight = _mm256_loadu_pd(weights.data() + i);
    re = _mm256_add_pd(re, _mm256_mul_pd(weight, sc.cos));
    im = _mm256_add_pd(im, _mm256_mul_pd(weight, sc.sin));
  }
  std::complex<double> sum{hsum(re), hsum(im)};
  if (i < n) {
    ElementRange tail = range;
    tail.first_element += static_cast<std::uint32_t>(i);
    sum += scalar_kernels().phase_noise_sum(tail, severity, weights.subspan(i));
  }
  return sum;
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::Avx2, "avx2", &rician_amplitudes_avx2, &dot_avx2,
                                 &phase_noise_sum_avx2};
  return &table;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace pinris::kernels

#else

namespace pinris::kernels {

const KernelTable* avx2_kernels() { return nullptr; }
bool cpu_has_avx2() { return false; }

}  // namespace pinris::kernels

#endif
