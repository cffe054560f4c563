#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace transit_arb {

// Row-wise swap evaluation for a fixed trip {a, b} and a fixed station c,
// against every station d in [begin, end).
//
// In a tree, for the pairings P1 = {ab, cd}, P2 = {ac, bd}, P3 = {ad, bc} of
// four endpoints, the two largest hop sums are equal. Paths a-b and c-d share
// at least one edge exactly when P1 is among the largest and strictly beats
// the smallest; the ticket swap is then the other largest pairing.
struct SwapRow {
  std::int32_t const* hops_a;  // hops(a, d) indexed by d
  std::int32_t const* hops_b;
  std::int32_t const* hops_c;
  std::int32_t const* fare_a;  // fare(a, d) indexed by d
  std::int32_t const* fare_b;
  std::int32_t const* fare_c;
  std::int32_t hops_ab;
  std::int32_t hops_ac;
  std::int32_t hops_bc;
  std::int32_t fare_ab;
  std::int32_t fare_ac;
  std::int32_t fare_bc;
};

// Per-lane result codes.
inline constexpr std::int32_t kNoOverlap = 0;
inline constexpr std::int32_t kSwapAdBc = 1;  // a, c on the same side
inline constexpr std::int32_t kSwapAcBd = 2;  // a, d on the same side

// Writes gain[d - begin] and code[d - begin]. gain is
// fare(ab) + fare(cd) - fare(swapped pair), and 0 where code is kNoOverlap.
using SwapRowKernel = void (*)(SwapRow const& row, std::size_t begin,
                               std::size_t end, std::int32_t* gain,
                               std::int32_t* code);

enum class KernelKind { kAuto, kScalar, kAvx2, kNeon };

std::string_view to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel_kind(std::string_view text);

// Whether the variant was compiled in and the CPU supports it.
bool kernel_available(KernelKind kind);
std::vector<KernelKind> available_kernels();

// kAuto resolves to the widest available variant.
KernelKind resolve_kernel(KernelKind kind);

// Throws std::invalid_argument for an unavailable variant.
SwapRowKernel swap_row_kernel(KernelKind kind);

namespace kernels {

void swap_row_scalar(SwapRow const& row, std::size_t begin, std::size_t end,
                     std::int32_t* gain, std::int32_t* code);
#if defined(TRANSIT_ARB_HAVE_AVX2)
void swap_row_avx2(SwapRow const& row, std::size_t begin, std::size_t end,
                   std::int32_t* gain, std::int32_t* code);
#endif
#if defined(TRANSIT_ARB_HAVE_NEON)
void swap_row_neon(SwapRow const& row, std::size_t begin, std::size_t end,
                   std::int32_t* gain, std::int32_t* code);
#endif

}  // namespace kernels

}  // namespace transit_arb
