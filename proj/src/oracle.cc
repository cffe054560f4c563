#include <algorithm>
#include <set>
#include <stdexcept>

#include "transit_arb/engine.h"
#include "transit_arb/error.h"

namespace transit_arb {

namespace {

using Path = std::vector<std::size_t>;

// Depth-first search for the station sequence from `from` to `to`.
bool walk(std::vector<std::vector<std::size_t>> const& adj, std::size_t at,
          std::size_t to, std::vector<bool>& visited, Path& path) {
  path.push_back(at);
  if (at == to) return true;
  visited[at] = true;
  for (auto const next : adj[at]) {
    if (!visited[next] && walk(adj, next, to, visited, path)) return true;
  }
  path.pop_back();
  return false;
}

std::size_t position(Path const& p, std::size_t station) {
  return static_cast<std::size_t>(std::find(p.begin(), p.end(), station) -
                                  p.begin());
}

}  // namespace

std::vector<ArbitrageRecord> brute_force_oracle(TransitNetwork const& net,
                                                FareTable const& fares,
                                                Money min_gain) {
  auto const n = net.size();
  if (n > kOracleMaxStations) {
    throw Error(ErrorKind::kInstanceTooLarge,
                std::to_string(n) + " stations (oracle limit " +
                    std::to_string(kOracleMaxStations) + ")");
  }

  std::vector<std::vector<std::size_t>> adj(n);
  for (auto const& e : net.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }

  struct Trip {
    std::size_t from;
    std::size_t to;
    Path path;
  };
  std::vector<Trip> trips;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<bool> visited(n, false);
      Path path;
      walk(adj, i, j, visited, path);
      trips.push_back(Trip{i, j, std::move(path)});
    }
  }

  auto const fare = [&](std::size_t x, std::size_t y) {
    return static_cast<std::int64_t>(fares.fare(x, y));
  };
  auto const key = [&](std::size_t x, std::size_t y) {
    return TripKey{net.id(x), net.id(y)};
  };

  std::vector<ArbitrageRecord> out;
  for (std::size_t p = 0; p < trips.size(); ++p) {
    for (std::size_t q = p + 1; q < trips.size(); ++q) {
      auto const& t1 = trips[p];
      auto const& t2 = trips[q];

      std::set<std::pair<std::size_t, std::size_t>> edges2;
      for (std::size_t k = 0; k + 1 < t2.path.size(); ++k) {
        edges2.emplace(t2.path[k], t2.path[k + 1]);
        edges2.emplace(t2.path[k + 1], t2.path[k]);
      }
      // Shared edges in t1's travel order.
      std::vector<std::size_t> segment;
      for (std::size_t k = 0; k + 1 < t1.path.size(); ++k) {
        if (!edges2.contains({t1.path[k], t1.path[k + 1]})) continue;
        if (segment.empty()) segment.push_back(t1.path[k]);
        if (segment.back() != t1.path[k]) {
          throw std::logic_error("shared edges are not contiguous");
        }
        segment.push_back(t1.path[k + 1]);
      }
      if (segment.empty()) continue;

      // t1 travels segment.front() -> segment.back(); find t2's direction.
      auto const first = segment.front();
      auto const last = segment.back();
      bool const forward = position(t2.path, first) < position(t2.path, last);
      auto const t2_first_side = forward ? t2.from : t2.to;
      auto const t2_last_side = forward ? t2.to : t2.from;

      auto s1 = key(t1.from, t2_last_side);
      auto s2 = key(t2_first_side, t1.to);
      auto const paid = fare(t1.from, t1.to) + fare(t2.from, t2.to);
      auto const gain = paid - fares.fare(s1).cents - fares.fare(s2).cents;
      if (gain < std::max<std::int64_t>(min_gain.cents, 1)) continue;

      if (s2 < s1) std::swap(s1, s2);
      out.push_back(ArbitrageRecord{
          .trip1 = key(t1.from, t1.to),
          .trip2 = key(t2.from, t2.to),
          .swapped1 = std::move(s1),
          .swapped2 = std::move(s2),
          .gain = Money{gain},
          .original_total = Money{paid},
      });
    }
  }
  std::sort(out.begin(), out.end(), report_order);
  return out;
}

}  // namespace transit_arb
