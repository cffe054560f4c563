#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transit_arb {

// Lowercase slug, pattern [a-z0-9-]+, e.g. "glen-park".
class StationId {
 public:
  explicit StationId(std::string token);

  std::string const& str() const noexcept { return token_; }

  friend auto operator<=>(StationId const&, StationId const&) = default;

 private:
  std::string token_;
};

bool is_valid_station_token(std::string_view token);

// Unordered station pair, stored with a < b.
class TripKey {
 public:
  // Throws kInvalidTrip when both ends are the same station.
  TripKey(StationId x, StationId y);

  StationId const& a() const noexcept { return a_; }
  StationId const& b() const noexcept { return b_; }

  // "a->b"
  std::string to_string() const;

  friend auto operator<=>(TripKey const&, TripKey const&) = default;

 private:
  StationId a_;
  StationId b_;
};

struct StationRecord {
  StationId id;
  std::string name;
};

struct RouteDef {
  std::string name;
  std::vector<StationId> stations;
};

struct TreePath {
  std::vector<StationId> stations;

  std::size_t hops() const noexcept {
    return stations.empty() ? 0 : stations.size() - 1;
  }
};

// Which endpoint of one trip attaches on each side of an overlap.
struct TripSides {
  StationId u_side;
  StationId v_side;
};

// Shared stretch of two tree paths. u is the lexicographically smaller
// segment end; sides[i] describes the i-th path passed to path_overlap.
struct OverlapSegment {
  std::vector<StationId> segment;  // u ... v
  std::array<TripSides, 2> sides;

  StationId const& u() const { return segment.front(); }
  StationId const& v() const { return segment.back(); }
  std::size_t shared_hops() const noexcept { return segment.size() - 1; }
};

struct Edge {
  std::size_t a;  // a < b
  std::size_t b;

  friend auto operator<=>(Edge, Edge) = default;
};

// Immutable tree-shaped transit network. Stations are indexed in
// lexicographic id order, so index order and StationId order agree.
class TransitNetwork {
 public:
  std::size_t size() const noexcept { return stations_.size(); }

  std::span<StationRecord const> stations() const noexcept { return stations_; }
  StationId const& id(std::size_t index) const { return stations_[index].id; }
  std::span<Edge const> edges() const noexcept { return edges_; }
  std::span<RouteDef const> routes() const noexcept { return routes_; }

  std::optional<std::size_t> find(std::string_view token) const;
  // Throws kUnknownStation.
  std::size_t index_of(StationId const& id) const;

  std::span<std::size_t const> neighbors(std::size_t index) const {
    return adjacency_[index];
  }

  // Hop count of the tree path between two stations.
  std::int32_t hops(std::size_t i, std::size_t j) const {
    return hops_[i * size() + j];
  }
  std::span<std::int32_t const> hop_row(std::size_t i) const {
    return {hops_.data() + i * size(), size()};
  }

  // Station indices along the unique path from `from` to `to`.
  std::vector<std::size_t> path_indices(std::size_t from, std::size_t to) const;

 private:
  friend TransitNetwork build_network(std::vector<StationRecord>,
                                      std::vector<RouteDef>);

  std::vector<StationRecord> stations_;
  std::vector<Edge> edges_;
  std::vector<RouteDef> routes_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> parent_;  // rooted at index 0; root is its own parent
  std::vector<std::size_t> depth_;
  std::vector<std::int32_t> hops_;   // size() x size()
};

// Validates and builds the network. The edge set is the deduplicated union of
// consecutive route stations. Throws kDuplicateStation, kInvalidRoute,
// kUnknownStationInRoute, or kGraphNotTree for cyclic or disconnected input.
TransitNetwork build_network(std::vector<StationRecord> stations,
                             std::vector<RouteDef> routes);

// Path from trip.a() to trip.b(). Throws kUnknownStation.
TreePath tree_path(TransitNetwork const& net, TripKey const& trip);

// Shared segment of two paths of the same network, or nullopt when they share
// no edge.
std::optional<OverlapSegment> path_overlap(TreePath const& p1,
                                           TreePath const& p2);

// Ticket swap: (u-side of t1 + v-side of t2, u-side of t2 + v-side of t1).
// `ov` must be path_overlap(tree_path(t1), tree_path(t2)).
std::pair<TripKey, TripKey> swap_partition(TripKey const& t1,
                                           TripKey const& t2,
                                           OverlapSegment const& ov);

}  // namespace transit_arb
