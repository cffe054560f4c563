#include "transit_arb/report.h"

#include "json.hpp"

namespace transit_arb {

namespace {

using nlohmann::ordered_json;

ordered_json trip_json(TripKey const& t) {
  return ordered_json{{"a", t.a().str()}, {"b", t.b().str()}};
}

ordered_json summary_json(ArbitrageSummary const& s) {
  auto thresholds = ordered_json::array();
  for (auto const& [t, count] : s.pairs_ge_threshold) {
    thresholds.push_back(ordered_json{
        {"threshold_cents", t.cents},
        {"threshold", format_dollars(t)},
        {"count", count},
        {"percent_of_pairs", format_percent_tenths(count, s.pair_count)},
    });
  }
  return ordered_json{
      {"station_count", s.station_count},
      {"trip_count", s.trip_count},
      {"pair_count", s.pair_count},
      {"pairs_ge_threshold", std::move(thresholds)},
  };
}

}  // namespace

std::string render_text(std::span<ArbitrageRecord const> records) {
  std::string out;
  for (auto const& r : records) {
    out += r.trip1.to_string() + "\t" + r.trip2.to_string() + "\t" +
           format_dollars(r.gain) + "\t" + std::to_string(r.percent()) + "\n";
  }
  return out;
}

std::string render_csv(std::span<ArbitrageRecord const> records) {
  std::string out =
      "trip1_a,trip1_b,trip2_a,trip2_b,swapped1_a,swapped1_b,swapped2_a,"
      "swapped2_b,gain_cents,original_total_cents,gain,percent\n";
  for (auto const& r : records) {
    for (auto const* t : {&r.trip1, &r.trip2, &r.swapped1, &r.swapped2}) {
      out += t->a().str() + "," + t->b().str() + ",";
    }
    out += std::to_string(r.gain.cents) + "," +
           std::to_string(r.original_total.cents) + "," +
           format_dollars(r.gain) + "," + std::to_string(r.percent()) + "\n";
  }
  return out;
}

std::string render_json(ArbitrageSummary const& summary,
                        std::span<ArbitrageRecord const> records) {
  auto recs = ordered_json::array();
  for (auto const& r : records) {
    recs.push_back(ordered_json{
        {"trip1", trip_json(r.trip1)},
        {"trip2", trip_json(r.trip2)},
        {"swapped1", trip_json(r.swapped1)},
        {"swapped2", trip_json(r.swapped2)},
        {"gain_cents", r.gain.cents},
        {"gain", format_dollars(r.gain)},
        {"original_total_cents", r.original_total.cents},
        {"percent", r.percent()},
        {"percent_exact",
         ordered_json{{"numerator", 100 * r.gain.cents},
                      {"denominator", r.original_total.cents}}},
    });
  }
  ordered_json doc{{"summary", summary_json(summary)},
                   {"records", std::move(recs)}};
  return doc.dump(2) + "\n";
}

std::string render_summary_text(ArbitrageSummary const& s) {
  std::string out = "stations: " + std::to_string(s.station_count) + "\n" +
                    "trips: " + std::to_string(s.trip_count) + "\n" +
                    "pairs: " + std::to_string(s.pair_count) + "\n";
  for (auto const& [t, count] : s.pairs_ge_threshold) {
    out += "pairs>=" + format_dollars(t) + ": " + std::to_string(count) + " (" +
           format_percent_tenths(count, s.pair_count) + "%)\n";
  }
  return out;
}

std::string render_summary_json(ArbitrageSummary const& s) {
  return ordered_json{{"summary", summary_json(s)}}.dump(2) + "\n";
}

}  // namespace transit_arb
