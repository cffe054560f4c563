#include "transit_arb/network.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "transit_arb/error.h"

namespace transit_arb {

bool is_valid_station_token(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
  });
}

StationId::StationId(std::string token) : token_(std::move(token)) {
  if (!is_valid_station_token(token_)) {
    throw Error(ErrorKind::kInvalidStationId, "'" + token_ + "'");
  }
}

TripKey::TripKey(StationId x, StationId y) : a_(std::move(x)), b_(std::move(y)) {
  if (a_ == b_) {
    throw Error(ErrorKind::kInvalidTrip,
                "trip starts and ends at " + a_.str());
  }
  if (b_ < a_) std::swap(a_, b_);
}

std::string TripKey::to_string() const { return a_.str() + "->" + b_.str(); }

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }

  std::size_t root(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool unite(std::size_t x, std::size_t y) {
    x = root(x);
    y = root(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

TransitNetwork build_network(std::vector<StationRecord> stations,
                             std::vector<RouteDef> routes) {
  TransitNetwork net;
  std::sort(stations.begin(), stations.end(),
            [](auto const& x, auto const& y) { return x.id < y.id; });
  auto const dup = std::adjacent_find(
      stations.begin(), stations.end(),
      [](auto const& x, auto const& y) { return x.id == y.id; });
  if (dup != stations.end()) {
    throw Error(ErrorKind::kDuplicateStation, dup->id.str());
  }
  net.stations_ = std::move(stations);
  auto const n = net.size();

  std::set<Edge> edges;
  for (auto const& route : routes) {
    if (route.stations.size() < 2) {
      throw Error(ErrorKind::kInvalidRoute,
                  "route '" + route.name + "' has fewer than 2 stations");
    }
    std::set<StationId> seen;
    std::optional<std::size_t> prev;
    for (auto const& s : route.stations) {
      if (!seen.insert(s).second) {
        throw Error(ErrorKind::kInvalidRoute,
                    "route '" + route.name + "' repeats " + s.str());
      }
      auto const idx = net.find(s.str());
      if (!idx) {
        throw Error(ErrorKind::kUnknownStationInRoute,
                    "route '" + route.name + "' references " + s.str());
      }
      if (prev) edges.insert(Edge{std::min(*prev, *idx), std::max(*prev, *idx)});
      prev = idx;
    }
  }

  DisjointSets sets{n};
  for (auto const& e : edges) {
    if (!sets.unite(e.a, e.b)) {
      throw Error(ErrorKind::kGraphNotTree,
                  "cycle through " + net.id(e.a).str() + "-" + net.id(e.b).str());
    }
  }
  if (n == 0 || edges.size() != n - 1) {
    throw Error(ErrorKind::kGraphNotTree,
                "network is disconnected (" + std::to_string(n) +
                    " stations, " + std::to_string(edges.size()) + " edges)");
  }

  net.edges_.assign(edges.begin(), edges.end());
  net.routes_ = std::move(routes);
  net.adjacency_.resize(n);
  for (auto const& e : net.edges_) {
    net.adjacency_[e.a].push_back(e.b);
    net.adjacency_[e.b].push_back(e.a);
  }
  for (auto& adj : net.adjacency_) std::sort(adj.begin(), adj.end());

  net.parent_.assign(n, 0);
  net.depth_.assign(n, 0);
  net.hops_.assign(n * n, 0);
  std::vector<std::size_t> order;
  for (std::size_t src = 0; src < n; ++src) {
    auto row = net.hops_.begin() + static_cast<std::ptrdiff_t>(src * n);
    std::vector<bool> visited(n, false);
    std::deque<std::size_t> queue{src};
    visited[src] = true;
    while (!queue.empty()) {
      auto const x = queue.front();
      queue.pop_front();
      for (auto const y : net.adjacency_[x]) {
        if (visited[y]) continue;
        visited[y] = true;
        row[static_cast<std::ptrdiff_t>(y)] = row[static_cast<std::ptrdiff_t>(x)] + 1;
        if (src == 0) {
          net.parent_[y] = x;
          net.depth_[y] = net.depth_[x] + 1;
        }
        queue.push_back(y);
      }
    }
  }
  return net;
}

std::optional<std::size_t> TransitNetwork::find(std::string_view token) const {
  auto const it = std::lower_bound(
      stations_.begin(), stations_.end(), token,
      [](StationRecord const& s, std::string_view t) { return s.id.str() < t; });
  if (it == stations_.end() || it->id.str() != token) return std::nullopt;
  return static_cast<std::size_t>(it - stations_.begin());
}

std::size_t TransitNetwork::index_of(StationId const& id) const {
  auto const idx = find(id.str());
  if (!idx) throw Error(ErrorKind::kUnknownStation, id.str());
  return *idx;
}

std::vector<std::size_t> TransitNetwork::path_indices(std::size_t from,
                                                      std::size_t to) const {
  std::vector<std::size_t> head{from};
  std::vector<std::size_t> tail{to};
  while (from != to) {
    if (depth_[from] >= depth_[to]) {
      from = parent_[from];
      head.push_back(from);
    } else {
      to = parent_[to];
      tail.push_back(to);
    }
  }
  // `from` == `to` is the meeting point and sits at the end of both halves.
  head.insert(head.end(), tail.rbegin() + 1, tail.rend());
  return head;
}

TreePath tree_path(TransitNetwork const& net, TripKey const& trip) {
  auto const from = net.index_of(trip.a());
  auto const to = net.index_of(trip.b());
  TreePath path;
  for (auto const idx : net.path_indices(from, to)) {
    path.stations.push_back(net.id(idx));
  }
  return path;
}

std::optional<OverlapSegment> path_overlap(TreePath const& p1,
                                           TreePath const& p2) {
  std::map<StationId, std::size_t> pos2;
  for (std::size_t i = 0; i < p2.stations.size(); ++i) {
    pos2.emplace(p2.stations[i], i);
  }

  // In a tree the shared stations are one contiguous run of p1.
  std::vector<StationId> shared;
  for (auto const& s : p1.stations) {
    if (pos2.contains(s)) shared.push_back(s);
  }
  if (shared.size() < 2) return std::nullopt;

  auto const& first = shared.front();
  auto const& last = shared.back();
  bool const p2_same_dir = pos2.at(first) < pos2.at(last);

  // Orient so u is the lexicographically smaller end.
  bool const flip = last < first;
  auto const& p1_first_end = p1.stations.front();
  auto const& p1_last_end = p1.stations.back();
  auto const& p2_first_end = p2_same_dir ? p2.stations.front() : p2.stations.back();
  auto const& p2_last_end = p2_same_dir ? p2.stations.back() : p2.stations.front();

  if (flip) {
    std::reverse(shared.begin(), shared.end());
    return OverlapSegment{std::move(shared),
                          {TripSides{p1_last_end, p1_first_end},
                           TripSides{p2_last_end, p2_first_end}}};
  }
  return OverlapSegment{std::move(shared),
                        {TripSides{p1_first_end, p1_last_end},
                         TripSides{p2_first_end, p2_last_end}}};
}

std::pair<TripKey, TripKey> swap_partition(TripKey const& t1,
                                           TripKey const& t2,
                                           OverlapSegment const& ov) {
  auto const matches = [](TripKey const& t, TripSides const& s) {
    return TripKey{s.u_side, s.v_side} == t;
  };
  if (!matches(t1, ov.sides[0]) || !matches(t2, ov.sides[1])) {
    throw Error(ErrorKind::kInvalidTrip,
                "overlap does not belong to " + t1.to_string() + " and " +
                    t2.to_string());
  }
  return {TripKey{ov.sides[0].u_side, ov.sides[1].v_side},
          TripKey{ov.sides[1].u_side, ov.sides[0].v_side}};
}

}  // namespace transit_arb
