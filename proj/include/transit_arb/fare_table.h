#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transit_arb/money.h"
#include "transit_arb/network.h"

namespace transit_arb {

// Symmetric station-pair fare mapping over the stations of one network,
// indexed like the network. Diagonal (same-station) fares are kept apart as
// optional excursion fares.
class FareTable {
 public:
  using FareFn = std::function<Money(std::size_t, std::size_t)>;

  // fn(i, j) is called once per unordered pair with i < j.
  static FareTable build(TransitNetwork const& net, FareFn const& fn);

  std::size_t size() const noexcept { return stations_.size(); }
  std::span<StationId const> stations() const noexcept { return stations_; }

  // Throws kUnknownStation.
  Money fare(TripKey const& trip) const;
  std::int32_t fare(std::size_t i, std::size_t j) const {
    return fares_[i * size() + j];
  }
  // Row i of the fare matrix; the diagonal entry is 0.
  std::span<std::int32_t const> fare_row(std::size_t i) const {
    return {fares_.data() + i * size(), size()};
  }

  std::optional<Money> excursion(std::size_t i) const { return excursion_[i]; }
  void set_excursion(std::size_t i, std::optional<Money> fare) {
    excursion_[i] = fare;
  }

  // Same station ids in the same order as the network.
  bool matches(TransitNetwork const& net) const;

  friend bool operator==(FareTable const&, FareTable const&) = default;

 private:
  std::size_t index_of(StationId const& id) const;

  std::vector<StationId> stations_;
  std::vector<std::int32_t> fares_;
  std::vector<std::optional<Money>> excursion_;
};

// fares.csv matrix: header `,id1,id2,...`, then one row per station with
// decimal-dollar cells. Diagonal cells may be blank; every off-diagonal cell
// must be present and equal to its mirror. Throws kMalformedCsv,
// kMalformedMoney, kUnknownStation, kMissingPair, kAsymmetricFare.
FareTable parse_fare_table(std::string_view csv, TransitNetwork const& net);

std::string serialize_fare_table(FareTable const& table);

}  // namespace transit_arb
