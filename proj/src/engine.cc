#include "transit_arb/engine.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "transit_arb/error.h"

namespace transit_arb {

namespace {

struct IndexTrip {
  std::uint32_t a;
  std::uint32_t b;

  friend auto operator<=>(IndexTrip, IndexTrip) = default;
};

IndexTrip index_trip(std::size_t x, std::size_t y) {
  if (y < x) std::swap(x, y);
  return {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)};
}

struct IndexRecord {
  IndexTrip trip1;
  IndexTrip trip2;
  IndexTrip swapped1;
  IndexTrip swapped2;
  std::int32_t gain;
  std::int32_t total;
};

bool index_order(IndexRecord const& x, IndexRecord const& y) {
  if (x.gain != y.gain) return x.gain > y.gain;
  if (x.trip1 != y.trip1) return x.trip1 < y.trip1;
  return x.trip2 < y.trip2;
}

void check_inputs(TransitNetwork const& net, FareTable const& fares) {
  if (!fares.matches(net)) {
    throw Error(ErrorKind::kMissingPair,
                "fare table does not cover the network's stations");
  }
}

// All pairs {a,b} < {c,d} with a fixed first endpoint a.
void scan_origin(TransitNetwork const& net, FareTable const& fares,
                 SwapRowKernel kernel, std::size_t a, std::int32_t min_gain,
                 std::vector<IndexRecord>& out) {
  auto const n = net.size();
  std::vector<std::int32_t> gain(n);
  std::vector<std::int32_t> code(n);
  auto const hops_a = net.hop_row(a);
  auto const fare_a = fares.fare_row(a);

  for (std::size_t b = a + 1; b < n; ++b) {
    auto const hops_b = net.hop_row(b);
    auto const fare_b = fares.fare_row(b);
    for (std::size_t c = a; c < n; ++c) {
      auto const begin = c == a ? b + 1 : c + 1;
      if (begin >= n) continue;
      auto const hops_c = net.hop_row(c);
      auto const fare_c = fares.fare_row(c);
      SwapRow const row{
          .hops_a = hops_a.data(),
          .hops_b = hops_b.data(),
          .hops_c = hops_c.data(),
          .fare_a = fare_a.data(),
          .fare_b = fare_b.data(),
          .fare_c = fare_c.data(),
          .hops_ab = hops_a[b],
          .hops_ac = hops_a[c],
          .hops_bc = hops_b[c],
          .fare_ab = fare_a[b],
          .fare_ac = fare_a[c],
          .fare_bc = fare_b[c],
      };
      kernel(row, begin, n, gain.data(), code.data());
      for (std::size_t d = begin; d < n; ++d) {
        auto const g = gain[d - begin];
        if (g < min_gain || code[d - begin] == kNoOverlap) continue;
        auto const swapped =
            code[d - begin] == kSwapAdBc
                ? std::pair{index_trip(a, d), index_trip(b, c)}
                : std::pair{index_trip(a, c), index_trip(b, d)};
        out.push_back(IndexRecord{
            .trip1 = index_trip(a, b),
            .trip2 = index_trip(c, d),
            .swapped1 = std::min(swapped.first, swapped.second),
            .swapped2 = std::max(swapped.first, swapped.second),
            .gain = g,
            .total = row.fare_ab + fare_c[d],
        });
      }
    }
  }
}

TripKey to_trip(TransitNetwork const& net, IndexTrip t) {
  return TripKey{net.id(t.a), net.id(t.b)};
}

}  // namespace

bool report_order(ArbitrageRecord const& x, ArbitrageRecord const& y) {
  if (x.gain != y.gain) return x.gain > y.gain;
  if (x.trip1 != y.trip1) return x.trip1 < y.trip1;
  return x.trip2 < y.trip2;
}

std::optional<SwapOutcome> swap_gain(TransitNetwork const& net,
                                     FareTable const& fares, TripKey const& t1,
                                     TripKey const& t2) {
  check_inputs(net, fares);
  if (t1 == t2) {
    throw Error(ErrorKind::kInvalidTrip, "both trips are " + t1.to_string());
  }
  auto ov = path_overlap(tree_path(net, t1), tree_path(net, t2));
  if (!ov) return std::nullopt;
  auto [s1, s2] = swap_partition(t1, t2, *ov);
  if (s1.a() != t1.a() && s1.b() != t1.a()) std::swap(s1, s2);
  auto const paid = fares.fare(t1).cents + fares.fare(t2).cents;
  auto const swapped = fares.fare(s1).cents + fares.fare(s2).cents;
  return SwapOutcome{
      .overlap = std::move(*ov),
      .swapped1 = std::move(s1),
      .swapped2 = std::move(s2),
      .gain = paid - swapped,
      .original_total = Money{paid},
      .swapped_total = Money{swapped},
  };
}

std::vector<ArbitrageRecord> enumerate_arbitrage(TransitNetwork const& net,
                                                 FareTable const& fares,
                                                 Money min_gain,
                                                 EnumerateOptions const& options) {
  check_inputs(net, fares);
  auto const kernel = swap_row_kernel(options.kernel);
  auto const threshold = static_cast<std::int32_t>(
      std::clamp<std::int64_t>(min_gain.cents, 1, kMaxFareCents * 2 + 1));
  auto const n = net.size();

  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency()
                                          : options.threads;
  workers = std::clamp<unsigned>(workers, 1, std::max<std::size_t>(n, 1));

  std::vector<std::vector<IndexRecord>> partial(workers);
  if (workers == 1) {
    for (std::size_t a = 0; a < n; ++a) {
      scan_origin(net, fares, kernel, a, threshold, partial[0]);
    }
  } else {
    // Work per origin shrinks with a, so hand out origins dynamically.
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (auto a = next++; a < n; a = next++) {
          scan_origin(net, fares, kernel, a, threshold, partial[w]);
        }
      });
    }
  }

  std::vector<IndexRecord> merged;
  for (auto& p : partial) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end(), index_order);

  std::vector<ArbitrageRecord> out;
  out.reserve(merged.size());
  for (auto const& r : merged) {
    out.push_back(ArbitrageRecord{
        .trip1 = to_trip(net, r.trip1),
        .trip2 = to_trip(net, r.trip2),
        .swapped1 = to_trip(net, r.swapped1),
        .swapped2 = to_trip(net, r.swapped2),
        .gain = Money{r.gain},
        .original_total = Money{r.total},
    });
  }
  return out;
}

ArbitrageSummary summarize_records(TransitNetwork const& net,
                                   std::span<ArbitrageRecord const> records,
                                   std::span<Money const> thresholds) {
  ArbitrageSummary s;
  s.station_count = net.size();
  auto const n = static_cast<std::uint64_t>(net.size());
  s.trip_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  s.pair_count = s.trip_count * (s.trip_count - (s.trip_count > 0 ? 1 : 0)) / 2;
  for (auto const t : thresholds) {
    auto const floor = std::max<std::int64_t>(t.cents, 1);
    auto const count = std::count_if(
        records.begin(), records.end(),
        [&](ArbitrageRecord const& r) { return r.gain.cents >= floor; });
    s.pairs_ge_threshold.emplace_back(t, static_cast<std::uint64_t>(count));
  }
  return s;
}

ArbitrageSummary summarize(TransitNetwork const& net, FareTable const& fares,
                           std::span<Money const> thresholds,
                           EnumerateOptions const& options) {
  Money lowest{kMaxFareCents};
  for (auto const t : thresholds) lowest = std::min(lowest, t);
  auto const records = thresholds.empty()
                           ? std::vector<ArbitrageRecord>{}
                           : enumerate_arbitrage(net, fares, lowest, options);
  return summarize_records(net, records, thresholds);
}

std::optional<ArbitrageRecord> check_arbitrage_free(
    TransitNetwork const& net, FareTable const& fares,
    EnumerateOptions const& options) {
  auto records = enumerate_arbitrage(net, fares, Money{1}, options);
  if (records.empty()) return std::nullopt;
  return std::move(records.front());
}

}  // namespace transit_arb
