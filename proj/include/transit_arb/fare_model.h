#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "transit_arb/fare_table.h"
#include "transit_arb/network.h"

namespace transit_arb {

// Same fare for every trip.
struct FlatModel {
  std::int64_t c = 0;
};

// c + k * hops.
struct AffineModel {
  std::int64_t c = 0;
  std::int64_t k = 0;
};

// a * hops^p, rounded half-up to the cent. p < 1 is concave, p > 1 convex.
struct PowerModel {
  std::int64_t a = 0;
  double p = 1.0;
};

// Stations lo..hi (inclusive positions along the single line route) form a
// dense region. A trip pays the surcharge once when its path has stations both
// inside and outside the zone.
struct DensityZone {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::int64_t surcharge = 0;
};

// c0 + k * hops + surcharges of the zones the trip enters.
struct DensityZoneModel {
  std::int64_t c0 = 0;
  std::int64_t k = 0;
  std::vector<DensityZone> zones;
};

using FareCurveModel =
    std::variant<FlatModel, AffineModel, PowerModel, DensityZoneModel>;

std::string_view model_name(FareCurveModel const& model);

// Throws kInvalidModel on negative money parameters, p <= 0, or lo > hi.
void validate(FareCurveModel const& model);

// Fare of the trip between line positions `from` and `to`. For the hop-only
// models this depends on |to - from| alone.
Money evaluate(FareCurveModel const& model, std::size_t from, std::size_t to);

// Fare as a function of distance: the trip from position 0 to position hops.
inline Money evaluate(FareCurveModel const& model, std::size_t hops) {
  return evaluate(model, 0, hops);
}

// Fare table for `net` with fare(trip) = model at hops(trip). Density-zone
// models need a network that is one line route visiting every station and
// zones that fit on it; otherwise throws kZoneOnNonLineNetwork or
// kInvalidModel.
FareTable generate_fare_table(FareCurveModel const& model,
                              TransitNetwork const& net);

enum class CurveShape { kConcave, kConvex, kLinear, kMixed };

std::string_view to_string(CurveShape shape);

// Shape of f(0..max_hops) from the signs of its exact second differences.
// Requires max_hops >= 2.
CurveShape model_is_concave(FareCurveModel const& model, std::size_t max_hops);

// Two trips of lengths x <= y sharing o hops. After swapping tickets the
// recorded trips have lengths x + y - o and o, so the total is conserved.
struct SyntheticTripGeometry {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t o = 0;

  // Throws kInvalidModel unless 1 <= o <= x <= y.
  void validate() const;
  std::pair<std::size_t, std::size_t> swapped() const { return {x + y - o, o}; }
};

// f(x) + f(y) - f(x + y - o) - f(o) in cents: positive when the swap saves.
std::int64_t conserved_swap_gain(FareCurveModel const& model,
                                 SyntheticTripGeometry const& g);

}  // namespace transit_arb
