#include "transit_arb/report.h"

#include <gtest/gtest.h>

#include "json.hpp"

namespace transit_arb {
namespace {

TripKey trip(char const* x, char const* y) { return TripKey{StationId{x}, StationId{y}}; }

std::vector<ArbitrageRecord> sample() {
  return {ArbitrageRecord{trip("orinda", "pittsburg"), trip("concord", "walnut-creek"),
                          trip("orinda", "walnut-creek"), trip("concord", "pittsburg"),
                          Money{205}, Money{570}},
          ArbitrageRecord{trip("embarcadero", "millbrae"), trip("berkeley", "glen-park"),
                          trip("berkeley", "millbrae"), trip("embarcadero", "glen-park"),
                          Money{175}, Money{870}}};
}

TEST(ReportTest, TextLines) {
  EXPECT_EQ(render_text(sample()),
            "orinda->pittsburg\tconcord->walnut-creek\t2.05\t36\n"
            "embarcadero->millbrae\tberkeley->glen-park\t1.75\t20\n");
}

TEST(ReportTest, CsvCarriesSwapsAndCents) {
  auto const csv = render_csv(sample());
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "trip1_a,trip1_b,trip2_a,trip2_b,swapped1_a,swapped1_b,swapped2_a,"
            "swapped2_b,gain_cents,original_total_cents,gain,percent");
  EXPECT_NE(csv.find("orinda,pittsburg,concord,walnut-creek,orinda,walnut-creek,"
                     "concord,pittsburg,205,570,2.05,36\n"),
            std::string::npos);
}

TEST(ReportTest, JsonSchema) {
  ArbitrageSummary s{44, 946, 446985, {{Money{5}, 60334}, {Money{100}, 4666}}};
  auto const doc = nlohmann::json::parse(render_json(s, sample()));
  EXPECT_EQ(doc["summary"]["trip_count"], 946);
  EXPECT_EQ(doc["summary"]["pairs_ge_threshold"][0]["count"], 60334);
  EXPECT_EQ(doc["summary"]["pairs_ge_threshold"][0]["percent_of_pairs"], "13.5");
  ASSERT_EQ(doc["records"].size(), 2);
  auto const& r = doc["records"][1];
  EXPECT_EQ(r["trip1"]["a"], "embarcadero");
  EXPECT_EQ(r["swapped1"]["b"], "millbrae");
  EXPECT_EQ(r["gain_cents"], 175);
  EXPECT_EQ(r["gain"], "1.75");
  EXPECT_EQ(r["original_total_cents"], 870);
  EXPECT_EQ(r["percent"], 20);
}

TEST(ReportTest, SummaryText) {
  ArbitrageSummary s{44, 946, 446985, {{Money{5}, 60334}, {Money{100}, 4666}}};
  EXPECT_EQ(render_summary_text(s),
            "stations: 44\ntrips: 946\npairs: 446985\n"
            "pairs>=0.05: 60334 (13.5%)\npairs>=1.00: 4666 (1.0%)\n");
}

}  // namespace
}  // namespace transit_arb
