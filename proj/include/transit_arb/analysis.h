#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "transit_arb/fare_table.h"
#include "transit_arb/money.h"
#include "transit_arb/network.h"

namespace transit_arb {

inline constexpr std::int64_t kDefaultToleranceCents = 5;

struct ProfilePoint {
  std::size_t stop;  // stops from the origin, starting at 1
  Money fare;
};

// Fares from one origin to each later station of a route.
struct FareProfile {
  StationId origin;
  std::string route;
  std::vector<ProfilePoint> points;
};

// Walks the route away from `origin`: forward in route order, or backward
// when the origin is the route's last station. Throws kUnknownRoute,
// kOriginNotOnRoute.
FareProfile route_fare_profile(TransitNetwork const& net, FareTable const& fares,
                               StationId const& origin,
                               std::string_view route_name);

// fare(i+1) - 2 fare(i) + fare(i-1) over interior points. Throws
// kProfileTooShort below 3 points.
std::vector<std::int64_t> second_differences(FareProfile const& profile);

enum class CurvatureClass { kConcave, kConvex, kLinear };

std::string_view to_string(CurvatureClass c);

// Maximal run of interior points sharing a class; bounds are stop indices.
struct CurvatureSegment {
  std::size_t start;
  std::size_t end;
  CurvatureClass curvature;
  std::int64_t max_abs_second_difference;

  friend bool operator==(CurvatureSegment const&,
                         CurvatureSegment const&) = default;
};

// Labels each interior point concave (d2 < -tolerance), convex
// (d2 > tolerance) or linear, then merges runs.
std::vector<CurvatureSegment> classify_segments(
    FareProfile const& profile,
    std::int64_t tolerance_cents = kDefaultToleranceCents);

// `stops,fare_dollars` CSV.
std::string render_profile_csv(FareProfile const& profile);

}  // namespace transit_arb
