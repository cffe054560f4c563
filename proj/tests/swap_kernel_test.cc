#include "transit_arb/swap_kernel.h"

#include <gtest/gtest.h>

#include <random>

#include "support/random_tree.h"
#include "transit_arb/engine.h"

namespace transit_arb {
namespace {

TEST(SwapKernelTest, DispatchResolvesToAvailableVariant) {
  EXPECT_TRUE(kernel_available(KernelKind::kScalar));
  EXPECT_TRUE(kernel_available(resolve_kernel(KernelKind::kAuto)));
  EXPECT_NE(resolve_kernel(KernelKind::kAuto), KernelKind::kAuto);
  EXPECT_EQ(parse_kernel_kind("avx2"), KernelKind::kAvx2);
  EXPECT_FALSE(parse_kernel_kind("sse9"));
  for (auto k : {KernelKind::kAvx2, KernelKind::kNeon}) {
    if (!kernel_available(k)) EXPECT_THROW(swap_row_kernel(k), std::invalid_argument);
  }
}

// Random rows, including values that are not valid tree distances, so every
// branch and tail length of the vector paths is exercised.
TEST(SwapKernelTest, VariantsMatchScalarOnRandomRows) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int32_t> small{0, 6};
  std::uniform_int_distribution<std::int32_t> money{0, 100'000'000};
  for (int iter = 0; iter < 2000; ++iter) {
    std::size_t const len = iter % 37;
    std::vector<std::int32_t> cols[6];
    for (auto& c : cols) c.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      for (int c = 0; c < 3; ++c) cols[c][i] = small(rng);
      for (int c = 3; c < 6; ++c) cols[c][i] = money(rng);
    }
    SwapRow const row{cols[0].data(), cols[1].data(), cols[2].data(),
                      cols[3].data(), cols[4].data(), cols[5].data(),
                      small(rng),     small(rng),     small(rng),
                      money(rng),     money(rng),     money(rng)};
    std::size_t const begin = len == 0 ? 0 : iter % (len + 1);

    std::vector<std::int32_t> g_ref(len + 1), k_ref(len + 1);
    kernels::swap_row_scalar(row, begin, len, g_ref.data(), k_ref.data());
    for (auto kind : available_kernels()) {
      std::vector<std::int32_t> g(len + 1), k(len + 1);
      swap_row_kernel(kind)(row, begin, len, g.data(), k.data());
      EXPECT_EQ(g, g_ref) << to_string(kind) << " len " << len;
      EXPECT_EQ(k, k_ref) << to_string(kind) << " len " << len;
    }
  }
}

// The four-point test agrees with explicit path overlap on real trees.
TEST(SwapKernelTest, AgreesWithPathOverlap) {
  std::mt19937_64 rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    auto const net = testing::random_tree_network(rng, 3 + iter % 14);
    auto const fares = testing::random_fares(net, rng, 100, 999);
    auto const n = net.size();
    std::vector<std::int32_t> gain(n), code(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          SwapRow const row{net.hop_row(a).data(), net.hop_row(b).data(),
                            net.hop_row(c).data(), fares.fare_row(a).data(),
                            fares.fare_row(b).data(), fares.fare_row(c).data(),
                            net.hops(a, b), net.hops(a, c), net.hops(b, c),
                            fares.fare(a, b), fares.fare(a, c), fares.fare(b, c)};
          kernels::swap_row_scalar(row, 0, n, gain.data(), code.data());
          for (std::size_t d = 0; d < n; ++d) {
            if (c == d) continue;
            TripKey const t1{net.id(a), net.id(b)};
            TripKey const t2{net.id(c), net.id(d)};
            if (t1 == t2) continue;
            auto const outcome = swap_gain(net, fares, t1, t2);
            ASSERT_EQ(outcome.has_value(), code[d] != kNoOverlap);
            if (outcome) EXPECT_EQ(outcome->gain, gain[d]);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace transit_arb
