// Built with -mavx2; only called after a runtime CPU check.
#include <immintrin.h>

#include "transit_arb/swap_kernel.h"

namespace transit_arb::kernels {

namespace {

inline __m256i load(std::int32_t const* p) {
  return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
}

inline void store(std::int32_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

}  // namespace

void swap_row_avx2(SwapRow const& row, std::size_t begin, std::size_t end,
                   std::int32_t* gain, std::int32_t* code) {
  __m256i const hops_ab = _mm256_set1_epi32(row.hops_ab);
  __m256i const hops_ac = _mm256_set1_epi32(row.hops_ac);
  __m256i const hops_bc = _mm256_set1_epi32(row.hops_bc);
  __m256i const fare_ab = _mm256_set1_epi32(row.fare_ab);
  __m256i const fare_ac = _mm256_set1_epi32(row.fare_ac);
  __m256i const fare_bc = _mm256_set1_epi32(row.fare_bc);
  __m256i const one = _mm256_set1_epi32(kSwapAdBc);
  __m256i const two = _mm256_set1_epi32(kSwapAcBd);

  std::size_t d = begin;
  for (; d + 8 <= end; d += 8) {
    __m256i const keep = _mm256_add_epi32(hops_ab, load(row.hops_c + d));
    __m256i const ac_bd = _mm256_add_epi32(hops_ac, load(row.hops_b + d));
    __m256i const ad_bc = _mm256_add_epi32(load(row.hops_a + d), hops_bc);

    // The two masks are mutually exclusive.
    __m256i const m1 = _mm256_and_si256(_mm256_cmpeq_epi32(keep, ad_bc),
                                        _mm256_cmpgt_epi32(keep, ac_bd));
    __m256i const m2 = _mm256_and_si256(_mm256_cmpeq_epi32(keep, ac_bd),
                                        _mm256_cmpgt_epi32(keep, ad_bc));

    __m256i const paid = _mm256_add_epi32(fare_ab, load(row.fare_c + d));
    __m256i const g1 = _mm256_sub_epi32(
        _mm256_sub_epi32(paid, load(row.fare_a + d)), fare_bc);
    __m256i const g2 = _mm256_sub_epi32(
        _mm256_sub_epi32(paid, fare_ac), load(row.fare_b + d));

    __m256i const g = _mm256_or_si256(_mm256_and_si256(m1, g1),
                                      _mm256_and_si256(m2, g2));
    __m256i const k = _mm256_or_si256(_mm256_and_si256(m1, one),
                                      _mm256_and_si256(m2, two));
    store(gain + (d - begin), g);
    store(code + (d - begin), k);
  }
  if (d < end) {
    swap_row_scalar(row, d, end, gain + (d - begin), code + (d - begin));
  }
}

}  // namespace transit_arb::kernels
