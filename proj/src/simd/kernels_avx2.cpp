// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <cstring>

#include "latfree/simd/kernels.hpp"

namespace latfree::simd {

namespace {

inline __m256i cross8(__m256i dx, __m256i dy, __m256i px, __m256i py) {
  return _mm256_sub_epi32(_mm256_mullo_epi32(dx, py), _mm256_mullo_epi32(dy, px));
}

void left_turn_mask_avx2(const std::int32_t* xs, const std::int32_t* ys, std::size_t n, std::int32_t ox,
                         std::int32_t oy, std::int32_t dx, std::int32_t dy, std::uint64_t* out) {
  std::memset(out, 0, ((n + 63) / 64) * sizeof(std::uint64_t));
  const __m256i vox = _mm256_set1_epi32(ox), voy = _mm256_set1_epi32(oy);
  const __m256i vdx = _mm256_set1_epi32(dx), vdy = _mm256_set1_epi32(dy);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i px = _mm256_sub_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i)), vox);
    __m256i py = _mm256_sub_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys + i)), voy);
    __m256i gt = _mm256_cmpgt_epi32(cross8(vdx, vdy, px, py), zero);
    auto bits = static_cast<std::uint64_t>(_mm256_movemask_ps(_mm256_castsi256_ps(gt)));
    out[i / 64] |= bits << (i % 64);
  }
  for (; i < n; ++i) {
    std::int32_t c = dx * (ys[i] - oy) - dy * (xs[i] - ox);
    if (c > 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool any_in_closed_triangle_avx2(const std::int32_t* xs, const std::int32_t* ys, std::size_t n,
                                 const std::int32_t* tri) {
  const std::int32_t ax = tri[0], ay = tri[1], bx = tri[2], by = tri[3], cx = tri[4], cy = tri[5];
  const __m256i vax = _mm256_set1_epi32(ax), vay = _mm256_set1_epi32(ay);
  const __m256i vbx = _mm256_set1_epi32(bx), vby = _mm256_set1_epi32(by);
  const __m256i vcx = _mm256_set1_epi32(cx), vcy = _mm256_set1_epi32(cy);
  const __m256i e1x = _mm256_set1_epi32(bx - ax), e1y = _mm256_set1_epi32(by - ay);
  const __m256i e2x = _mm256_set1_epi32(cx - bx), e2y = _mm256_set1_epi32(cy - by);
  const __m256i e3x = _mm256_set1_epi32(ax - cx), e3y = _mm256_set1_epi32(ay - cy);
  const __m256i neg = _mm256_set1_epi32(-1);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys + i));
    __m256i c1 = cross8(e1x, e1y, _mm256_sub_epi32(x, vax), _mm256_sub_epi32(y, vay));
    __m256i c2 = cross8(e2x, e2y, _mm256_sub_epi32(x, vbx), _mm256_sub_epi32(y, vby));
    __m256i c3 = cross8(e3x, e3y, _mm256_sub_epi32(x, vcx), _mm256_sub_epi32(y, vcy));
    // c >= 0  <=>  c > -1
    __m256i in = _mm256_and_si256(_mm256_and_si256(_mm256_cmpgt_epi32(c1, neg), _mm256_cmpgt_epi32(c2, neg)),
                                  _mm256_cmpgt_epi32(c3, neg));
    if (!_mm256_testz_si256(in, in)) return true;
  }
  for (; i < n; ++i) {
    std::int32_t x = xs[i], y = ys[i];
    if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0 && (cx - bx) * (y - by) - (cy - by) * (x - bx) >= 0 &&
        (ax - cx) * (y - cy) - (ay - cy) * (x - cx) >= 0)
      return true;
  }
  return false;
}

}  // namespace

const Kernels& avx2_kernel_table() {
  static const Kernels k{"avx2", left_turn_mask_avx2, any_in_closed_triangle_avx2};
  return k;
}

}  // namespace latfree::simd
