#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "transit_arb/fare_table.h"
#include "transit_arb/money.h"
#include "transit_arb/network.h"
#include "transit_arb/swap_kernel.h"

namespace transit_arb {

// A trip pair whose riders save `gain` by swapping tickets on their shared
// segment. trip1 < trip2 and swapped1 < swapped2.
struct ArbitrageRecord {
  TripKey trip1;
  TripKey trip2;
  TripKey swapped1;
  TripKey swapped2;
  Money gain;
  Money original_total;  // fare(trip1) + fare(trip2)

  // gain / original_total * 100, rounded half-up.
  std::int64_t percent() const {
    return round_percent(gain.cents, original_total.cents);
  }

  friend bool operator==(ArbitrageRecord const&,
                         ArbitrageRecord const&) = default;
};

// Gain descending, then (trip1, trip2) ascending.
bool report_order(ArbitrageRecord const& x, ArbitrageRecord const& y);

struct SwapOutcome {
  OverlapSegment overlap;
  TripKey swapped1;  // u-side of t1 with v-side of t2
  TripKey swapped2;
  std::int64_t gain;  // signed: negative when swapping costs more
  Money original_total;
  Money swapped_total;
};

// nullopt when the two paths share no edge. Throws kUnknownStation, and
// kInvalidTrip when t1 == t2.
std::optional<SwapOutcome> swap_gain(TransitNetwork const& net,
                                     FareTable const& fares, TripKey const& t1,
                                     TripKey const& t2);

struct EnumerateOptions {
  KernelKind kernel = KernelKind::kAuto;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// One record per unordered trip pair whose paths share an edge and whose swap
// saves at least max(min_gain, 1 cent), sorted by report_order. Output does
// not depend on options.
std::vector<ArbitrageRecord> enumerate_arbitrage(
    TransitNetwork const& net, FareTable const& fares, Money min_gain,
    EnumerateOptions const& options = {});

inline constexpr std::size_t kOracleMaxStations = 12;

// Literal reference for enumerate_arbitrage: materializes every trip path and
// compares segments directly. Throws kInstanceTooLarge above
// kOracleMaxStations.
std::vector<ArbitrageRecord> brute_force_oracle(TransitNetwork const& net,
                                                FareTable const& fares,
                                                Money min_gain);

struct ArbitrageSummary {
  std::size_t station_count = 0;
  std::uint64_t trip_count = 0;
  std::uint64_t pair_count = 0;
  std::vector<std::pair<Money, std::uint64_t>> pairs_ge_threshold;
};

ArbitrageSummary summarize(TransitNetwork const& net, FareTable const& fares,
                           std::span<Money const> thresholds,
                           EnumerateOptions const& options = {});

// Counts derived from an already enumerated record list.
ArbitrageSummary summarize_records(TransitNetwork const& net,
                                   std::span<ArbitrageRecord const> records,
                                   std::span<Money const> thresholds);

// nullopt when no swap saves money; otherwise the largest-gain record.
std::optional<ArbitrageRecord> check_arbitrage_free(
    TransitNetwork const& net, FareTable const& fares,
    EnumerateOptions const& options = {});

}  // namespace transit_arb
