#include "transit_arb/swap_kernel.h"

namespace transit_arb::kernels {

void swap_row_scalar(SwapRow const& row, std::size_t begin, std::size_t end,
                     std::int32_t* gain, std::int32_t* code) {
  for (std::size_t d = begin; d < end; ++d) {
    auto const keep = row.hops_ab + row.hops_c[d];  // {ab, cd}
    auto const ac_bd = row.hops_ac + row.hops_b[d];
    auto const ad_bc = row.hops_a[d] + row.hops_bc;
    auto const paid = row.fare_ab + row.fare_c[d];

    std::int32_t g = 0;
    std::int32_t k = kNoOverlap;
    if (keep == ad_bc && keep > ac_bd) {
      g = paid - row.fare_a[d] - row.fare_bc;
      k = kSwapAdBc;
    } else if (keep == ac_bd && keep > ad_bc) {
      g = paid - row.fare_ac - row.fare_b[d];
      k = kSwapAcBd;
    }
    gain[d - begin] = g;
    code[d - begin] = k;
  }
}

}  // namespace transit_arb::kernels
