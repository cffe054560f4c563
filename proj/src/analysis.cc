#include "transit_arb/analysis.h"

#include <algorithm>
#include <cstdlib>

#include "transit_arb/error.h"

namespace transit_arb {

FareProfile route_fare_profile(TransitNetwork const& net, FareTable const& fares,
                               StationId const& origin,
                               std::string_view route_name) {
  if (!fares.matches(net)) {
    throw Error(ErrorKind::kMissingPair,
                "fare table does not cover the network's stations");
  }
  auto const routes = net.routes();
  auto const route = std::find_if(routes.begin(), routes.end(),
                                  [&](auto const& r) { return r.name == route_name; });
  if (route == routes.end()) {
    throw Error(ErrorKind::kUnknownRoute, std::string{route_name});
  }
  auto stations = route->stations;
  auto at = std::find(stations.begin(), stations.end(), origin);
  if (at == stations.end()) {
    throw Error(ErrorKind::kOriginNotOnRoute,
                origin.str() + " is not on " + std::string{route_name});
  }
  if (std::next(at) == stations.end()) {
    std::reverse(stations.begin(), stations.end());
    at = stations.begin();
  }

  FareProfile profile{origin, std::string{route_name}, {}};
  std::size_t stop = 0;
  for (auto it = std::next(at); it != stations.end(); ++it) {
    profile.points.push_back(ProfilePoint{++stop, fares.fare(TripKey{origin, *it})});
  }
  return profile;
}

std::vector<std::int64_t> second_differences(FareProfile const& profile) {
  auto const& p = profile.points;
  if (p.size() < 3) {
    throw Error(ErrorKind::kProfileTooShort,
                std::to_string(p.size()) + " points, need at least 3");
  }
  std::vector<std::int64_t> d2;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    d2.push_back(p[i + 1].fare.cents - 2 * p[i].fare.cents + p[i - 1].fare.cents);
  }
  return d2;
}

std::string_view to_string(CurvatureClass c) {
  switch (c) {
    case CurvatureClass::kConcave: return "concave";
    case CurvatureClass::kConvex: return "convex";
    case CurvatureClass::kLinear: return "linear";
  }
  return "linear";
}

std::vector<CurvatureSegment> classify_segments(FareProfile const& profile,
                                                std::int64_t tolerance_cents) {
  auto const d2 = second_differences(profile);
  tolerance_cents = std::max<std::int64_t>(tolerance_cents, 0);

  std::vector<CurvatureSegment> segments;
  for (std::size_t i = 0; i < d2.size(); ++i) {
    auto const stop = profile.points[i + 1].stop;
    auto const cls = d2[i] < -tolerance_cents  ? CurvatureClass::kConcave
                     : d2[i] > tolerance_cents ? CurvatureClass::kConvex
                                               : CurvatureClass::kLinear;
    std::int64_t const mag = d2[i] < 0 ? -d2[i] : d2[i];
    if (!segments.empty() && segments.back().curvature == cls) {
      segments.back().end = stop;
      segments.back().max_abs_second_difference =
          std::max(segments.back().max_abs_second_difference, mag);
    } else {
      segments.push_back(CurvatureSegment{stop, stop, cls, mag});
    }
  }
  return segments;
}

std::string render_profile_csv(FareProfile const& profile) {
  std::string out = "stops,fare_dollars\n";
  for (auto const& p : profile.points) {
    out += std::to_string(p.stop) + "," + format_dollars(p.fare) + "\n";
  }
  return out;
}

}  // namespace transit_arb
