#pragma once

#include <cstddef>
#include <cstdint>

namespace latfree::simd {

// Points are given as parallel int32 coordinate arrays. Callers keep all
// coordinates, offsets and directions below 2^14 in magnitude so that every
// cross product fits in 32 bits.

/// Bit i of `out` (ceil(n/64) words) is set iff cross(d, p_i - o) > 0.
using LeftTurnMaskFn = void (*)(const std::int32_t* xs, const std::int32_t* ys, std::size_t n, std::int32_t ox,
                                std::int32_t oy, std::int32_t dx, std::int32_t dy, std::uint64_t* out);

/// True iff some point lies in the closed triangle tri = {ax, ay, bx, by, cx, cy},
/// which must be counter-clockwise.
using AnyInTriangleFn = bool (*)(const std::int32_t* xs, const std::int32_t* ys, std::size_t n,
                                 const std::int32_t* tri);

struct Kernels {
  const char* name;
  LeftTurnMaskFn left_turn_mask;
  AnyInTriangleFn any_in_closed_triangle;
};

const Kernels& scalar_kernels();
/// nullptr when the CPU lacks AVX2.
const Kernels* avx2_kernels();
/// The best kernels for this CPU; LATFREE_SIMD=scalar forces the reference set.
const Kernels& active_kernels();

}  // namespace latfree::simd
