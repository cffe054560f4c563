#include "transit_arb/fare_model.h"

#include <algorithm>
#include <cmath>

#include "transit_arb/error.h"

namespace transit_arb {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void invalid(std::string const& what) {
  throw Error(ErrorKind::kInvalidModel, what);
}

}  // namespace

std::string_view model_name(FareCurveModel const& model) {
  return std::visit(overloaded{
                        [](FlatModel const&) { return "flat"; },
                        [](AffineModel const&) { return "affine"; },
                        [](PowerModel const&) { return "power"; },
                        [](DensityZoneModel const&) { return "density"; },
                    },
                    model);
}

void validate(FareCurveModel const& model) {
  std::visit(overloaded{
                 [](FlatModel const& m) {
                   if (m.c < 0) invalid("flat: c must be >= 0");
                 },
                 [](AffineModel const& m) {
                   if (m.c < 0 || m.k < 0) invalid("affine: c, k must be >= 0");
                 },
                 [](PowerModel const& m) {
                   if (m.a < 0) invalid("power: a must be >= 0");
                   if (!(m.p > 0.0) || !std::isfinite(m.p)) {
                     invalid("power: p must be > 0");
                   }
                 },
                 [](DensityZoneModel const& m) {
                   if (m.c0 < 0 || m.k < 0) {
                     invalid("density: c0, k must be >= 0");
                   }
                   for (auto const& z : m.zones) {
                     if (z.lo > z.hi) invalid("density: zone lo > hi");
                     if (z.surcharge < 0) {
                       invalid("density: surcharge must be >= 0");
                     }
                   }
                 },
             },
             model);
}

Money evaluate(FareCurveModel const& model, std::size_t from, std::size_t to) {
  if (from > to) std::swap(from, to);
  auto const hops = static_cast<std::int64_t>(to - from);
  return std::visit(
      overloaded{
          [](FlatModel const& m) { return Money{m.c}; },
          [&](AffineModel const& m) { return Money{m.c + m.k * hops}; },
          [&](PowerModel const& m) {
            auto const raw = static_cast<double>(m.a) *
                             std::pow(static_cast<double>(hops), m.p);
            return Money{static_cast<std::int64_t>(std::floor(raw + 0.5))};
          },
          [&](DensityZoneModel const& m) {
            auto cents = m.c0 + m.k * hops;
            for (auto const& z : m.zones) {
              bool const touches = from <= z.hi && to >= z.lo;
              bool const inside = from >= z.lo && to <= z.hi;
              if (touches && !inside) cents += z.surcharge;
            }
            return Money{cents};
          },
      },
      model);
}

FareTable generate_fare_table(FareCurveModel const& model,
                              TransitNetwork const& net) {
  validate(model);
  auto const n = net.size();

  // Position of every station along the line; identity for hop-only models,
  // which only ever use the difference through net.hops().
  std::vector<std::size_t> position(n, 0);
  if (auto const* dz = std::get_if<DensityZoneModel>(&model)) {
    auto const routes = net.routes();
    if (routes.size() != 1 || routes.front().stations.size() != n) {
      throw Error(ErrorKind::kZoneOnNonLineNetwork,
                  "density zones need a network made of one line route");
    }
    for (auto const& z : dz->zones) {
      if (z.hi >= n) {
        invalid("density: zone " + std::to_string(z.lo) + ":" +
                std::to_string(z.hi) + " exceeds " + std::to_string(n) +
                " stations");
      }
    }
    auto const& line = routes.front().stations;
    for (std::size_t p = 0; p < line.size(); ++p) {
      position[net.index_of(line[p])] = p;
    }
    return FareTable::build(net, [&](std::size_t i, std::size_t j) {
      return evaluate(model, position[i], position[j]);
    });
  }
  return FareTable::build(net, [&](std::size_t i, std::size_t j) {
    return evaluate(model, static_cast<std::size_t>(net.hops(i, j)));
  });
}

std::string_view to_string(CurveShape shape) {
  switch (shape) {
    case CurveShape::kConcave: return "concave";
    case CurveShape::kConvex: return "convex";
    case CurveShape::kLinear: return "linear";
    case CurveShape::kMixed: return "mixed";
  }
  return "mixed";
}

CurveShape model_is_concave(FareCurveModel const& model, std::size_t max_hops) {
  if (max_hops < 2) invalid("max_hops must be >= 2");
  validate(model);
  bool any_neg = false;
  bool any_pos = false;
  for (std::size_t h = 1; h < max_hops; ++h) {
    auto const d2 = evaluate(model, h + 1).cents - 2 * evaluate(model, h).cents +
                    evaluate(model, h - 1).cents;
    any_neg |= d2 < 0;
    any_pos |= d2 > 0;
  }
  if (any_neg && any_pos) return CurveShape::kMixed;
  if (any_neg) return CurveShape::kConcave;
  if (any_pos) return CurveShape::kConvex;
  return CurveShape::kLinear;
}

void SyntheticTripGeometry::validate() const {
  if (!(1 <= o && o <= x && x <= y)) {
    invalid("trip geometry needs 1 <= o <= x <= y");
  }
}

std::int64_t conserved_swap_gain(FareCurveModel const& model,
                                 SyntheticTripGeometry const& g) {
  g.validate();
  auto const [longer, shorter] = g.swapped();
  return evaluate(model, g.x).cents + evaluate(model, g.y).cents -
         evaluate(model, longer).cents - evaluate(model, shorter).cents;
}

}  // namespace transit_arb
