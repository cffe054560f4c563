// AArch64 Advanced SIMD variant; NEON is baseline there, so no runtime check.
#include <arm_neon.h>

#include "transit_arb/swap_kernel.h"

namespace transit_arb::kernels {

void swap_row_neon(SwapRow const& row, std::size_t begin, std::size_t end,
                   std::int32_t* gain, std::int32_t* code) {
  int32x4_t const hops_ab = vdupq_n_s32(row.hops_ab);
  int32x4_t const hops_ac = vdupq_n_s32(row.hops_ac);
  int32x4_t const hops_bc = vdupq_n_s32(row.hops_bc);
  int32x4_t const fare_ab = vdupq_n_s32(row.fare_ab);
  int32x4_t const fare_ac = vdupq_n_s32(row.fare_ac);
  int32x4_t const fare_bc = vdupq_n_s32(row.fare_bc);
  uint32x4_t const one = vdupq_n_u32(kSwapAdBc);
  uint32x4_t const two = vdupq_n_u32(kSwapAcBd);

  std::size_t d = begin;
  for (; d + 4 <= end; d += 4) {
    int32x4_t const keep = vaddq_s32(hops_ab, vld1q_s32(row.hops_c + d));
    int32x4_t const ac_bd = vaddq_s32(hops_ac, vld1q_s32(row.hops_b + d));
    int32x4_t const ad_bc = vaddq_s32(vld1q_s32(row.hops_a + d), hops_bc);

    uint32x4_t const m1 = vandq_u32(vceqq_s32(keep, ad_bc), vcgtq_s32(keep, ac_bd));
    uint32x4_t const m2 = vandq_u32(vceqq_s32(keep, ac_bd), vcgtq_s32(keep, ad_bc));

    int32x4_t const paid = vaddq_s32(fare_ab, vld1q_s32(row.fare_c + d));
    int32x4_t const g1 = vsubq_s32(vsubq_s32(paid, vld1q_s32(row.fare_a + d)), fare_bc);
    int32x4_t const g2 = vsubq_s32(vsubq_s32(paid, fare_ac), vld1q_s32(row.fare_b + d));

    uint32x4_t const g = vorrq_u32(vandq_u32(m1, vreinterpretq_u32_s32(g1)),
                                   vandq_u32(m2, vreinterpretq_u32_s32(g2)));
    uint32x4_t const k = vorrq_u32(vandq_u32(m1, one), vandq_u32(m2, two));
    vst1q_s32(gain + (d - begin), vreinterpretq_s32_u32(g));
    vst1q_s32(code + (d - begin), vreinterpretq_s32_u32(k));
  }
  if (d < end) {
    swap_row_scalar(row, d, end, gain + (d - begin), code + (d - begin));
  }
}

}  // namespace transit_arb::kernels
