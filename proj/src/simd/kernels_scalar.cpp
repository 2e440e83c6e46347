#include "latfree/simd/kernels.hpp"

#include <cstring>

namespace latfree::simd {

namespace {

void left_turn_mask_scalar(const std::int32_t* xs, const std::int32_t* ys, std::size_t n, std::int32_t ox,
                           std::int32_t oy, std::int32_t dx, std::int32_t dy, std::uint64_t* out) {
  std::memset(out, 0, ((n + 63) / 64) * sizeof(std::uint64_t));
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t c = dx * (ys[i] - oy) - dy * (xs[i] - ox);
    if (c > 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool any_in_closed_triangle_scalar(const std::int32_t* xs, const std::int32_t* ys, std::size_t n,
                                   const std::int32_t* tri) {
  const std::int32_t ax = tri[0], ay = tri[1], bx = tri[2], by = tri[3], cx = tri[4], cy = tri[5];
  for (std::size_t i = 0; i < n; ++i) {
    std::int32_t x = xs[i], y = ys[i];
    if ((bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0 && (cx - bx) * (y - by) - (cy - by) * (x - bx) >= 0 &&
        (ax - cx) * (y - cy) - (ay - cy) * (x - cx) >= 0)
      return true;
  }
  return false;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", left_turn_mask_scalar, any_in_closed_triangle_scalar};
  return k;
}

}  // namespace latfree::simd
