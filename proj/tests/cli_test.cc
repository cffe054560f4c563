#include "transit_arb/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "transit_arb/io.h"

namespace transit_arb::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "transit-arb");
  std::ostringstream out, err;
  auto const code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_flags(std::string const& dir) {
  return {"--stations", dir + "/stations.csv", "--routes", dir + "/routes.csv",
          "--fares", dir + "/fares.csv"};
}

std::vector<std::string> cat(std::vector<std::string> a, std::vector<std::string> const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string const kData = TRANSIT_ARB_TEST_DATA;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    tmp_ = fs::temp_directory_path() /
           ("transit_arb_cli_" + std::string{::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()});
    fs::remove_all(tmp_);
    fs::create_directories(tmp_);
  }
  void TearDown() override { fs::remove_all(tmp_); }

  std::string dir(std::string const& sub) const {
    return (tmp_ / sub).string();
  }

  fs::path tmp_;
};

TEST_F(CliTest, ValidateCounts) {
  auto const r = run(cat({"validate"}, data_flags(kData + "/sf_motivating")));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "4 stations, 3 edges, 6 fares\n");
}

TEST_F(CliTest, ValidateFailures) {
  auto const cyclic = run(cat({"validate"}, data_flags(kData + "/cyclic")));
  EXPECT_EQ(cyclic.code, kExitData);
  EXPECT_NE(cyclic.err.find("GraphNotTree"), std::string::npos);

  auto const missing = run(cat({"validate"}, data_flags(kData + "/missing_cell")));
  EXPECT_EQ(missing.code, kExitData);
  EXPECT_NE(missing.err.find("MissingPair"), std::string::npos);

  auto const absent = run(cat({"validate"}, data_flags(kData + "/does-not-exist")));
  EXPECT_EQ(absent.code, kExitData);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run(cat({"enumerate", "--format", "xml"}, data_flags(kData + "/sf_motivating"))).code,
            kExitUsage);
  EXPECT_EQ(run(cat({"enumerate", "--min-gain-cents", "-3"}, data_flags(kData + "/sf_motivating")))
                .code,
            kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, PairMotivatingExamples) {
  auto const sf = run(cat({"pair"}, cat(data_flags(kData + "/sf_motivating"),
                                        {"millbrae:embarcadero", "glen-park:berkeley"})));
  EXPECT_EQ(sf.code, kExitOk) << sf.err;
  EXPECT_EQ(sf.out,
            "trip1: embarcadero->millbrae 4.50\n"
            "trip2: berkeley->glen-park 4.20\n"
            "overlap: embarcadero..glen-park (1 hops)\n"
            "swapped1: embarcadero->glen-park 1.85\n"
            "swapped2: berkeley->millbrae 5.10\n"
            "original total: 8.70\n"
            "swapped total: 6.95\n"
            "gain: 1.75 (20%)\n");

  auto const dc = run(cat({"pair"}, cat(data_flags(kData + "/dc_motivating"),
                                        {"vienna:metro-center", "rosslyn:new-carrollton"})));
  EXPECT_EQ(dc.code, kExitOk) << dc.err;
  EXPECT_NE(dc.out.find("gain: 2.35 (23%)\n"), std::string::npos);
}

TEST_F(CliTest, PairNoOverlapAndBadStations) {
  auto const none = run(cat({"pair"}, cat(data_flags(kData + "/sf_motivating"),
                                          {"millbrae:glen-park", "embarcadero:berkeley"})));
  EXPECT_EQ(none.code, kExitOk);
  EXPECT_NE(none.out.find("no overlap\n"), std::string::npos);

  auto const unknown = run(cat({"pair"}, cat(data_flags(kData + "/sf_motivating"),
                                             {"millbrae:oakland", "glen-park:berkeley"})));
  EXPECT_EQ(unknown.code, kExitData);
  EXPECT_EQ(run(cat({"pair"}, cat(data_flags(kData + "/sf_motivating"),
                                  {"millbrae", "glen-park:berkeley"})))
                .code,
            kExitUsage);
}

TEST_F(CliTest, SynthRoundTripsThroughValidate) {
  auto const out = dir("power");
  auto const synth = run({"synth", "--model", "power", "--a", "3.00", "--p", "0.5", "--n", "10",
                          "--out-dir", out});
  ASSERT_EQ(synth.code, kExitOk) << synth.err;
  auto const v = run(cat({"validate"}, data_flags(out)));
  EXPECT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(v.out, "10 stations, 9 edges, 45 fares\n");
  EXPECT_TRUE(v.err.empty());

  auto const fares = read_file(out + "/fares.csv");
  EXPECT_EQ(fares.substr(0, fares.find('\n')), ",s01,s02,s03,s04,s05,s06,s07,s08,s09,s10");
  EXPECT_NE(fares.find("\ns01,,3.00,4.24,5.20,6.00,"), std::string::npos);
}

TEST_F(CliTest, SynthFlatGivesEmptyReport) {
  auto const out = dir("flat");
  ASSERT_EQ(run({"synth", "--model", "flat", "--c", "2.00", "--n", "5", "--out-dir", out}).code,
            kExitOk);
  auto const fares = read_file(out + "/fares.csv");
  EXPECT_EQ(fares, ",s01,s02,s03,s04,s05\n"
                   "s01,,2.00,2.00,2.00,2.00\n"
                   "s02,2.00,,2.00,2.00,2.00\n"
                   "s03,2.00,2.00,,2.00,2.00\n"
                   "s04,2.00,2.00,2.00,,2.00\n"
                   "s05,2.00,2.00,2.00,2.00,\n");
  auto const e = run(cat({"enumerate"}, data_flags(out)));
  EXPECT_EQ(e.code, kExitOk);
  EXPECT_EQ(e.out, "");
}

TEST_F(CliTest, SynthRejectsBadParameters) {
  EXPECT_EQ(run({"synth", "--model", "flat", "--n", "5", "--out-dir", dir("x")}).code, kExitUsage);
  EXPECT_EQ(run({"synth", "--model", "flat", "--c", "2.00", "--n", "1", "--out-dir", dir("x")}).code,
            kExitUsage);
  EXPECT_EQ(run({"synth", "--model", "power", "--a", "3", "--p", "-1", "--n", "5", "--out-dir",
                 dir("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"synth", "--model", "density", "--c0", "1", "--k", "0.25", "--zone", "3:30:1.50",
                 "--n", "20", "--out-dir", dir("x")})
                .code,
            kExitUsage);
  EXPECT_EQ(run({"synth", "--model", "cubic", "--n", "5"}).code, kExitUsage);
}

TEST_F(CliTest, DensityProfileShowsZoneBump) {
  auto const out = dir("density");
  ASSERT_EQ(run({"synth", "--model", "density", "--c0", "1.00", "--k", "0.25", "--zone",
                 "3:7:1.50", "--n", "20", "--out-dir", out})
                .code,
            kExitOk);
  auto const p = run(cat({"profile", "--origin", "s01", "--route", "line"}, data_flags(out)));
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NE(p.out.find("stops,fare_dollars\n1,1.25\n2,1.50\n3,3.25\n4,3.50\n"),
            std::string::npos);
  EXPECT_NE(p.out.find("start,end,class,max_abs_d2_cents\n"
                       "2,2,convex,150\n3,3,concave,150\n4,18,linear,0\n"),
            std::string::npos);

  auto const back = run(cat({"profile", "--origin", "s20", "--route", "line"}, data_flags(out)));
  ASSERT_EQ(back.code, kExitOk) << back.err;
  // Position 7 is 12 stops from s20, so the step sits between stops 11 and 12.
  EXPECT_NE(back.out.find("11,11,convex,150\n12,12,concave,150\n"), std::string::npos);

  EXPECT_EQ(run(cat({"profile", "--origin", "s01", "--route", "loop"}, data_flags(out))).code,
            kExitData);
}

TEST_F(CliTest, EnumerateFormatsAndDeterminism) {
  auto const out = dir("pow");
  ASSERT_EQ(run({"synth", "--model", "power", "--a", "3.00", "--p", "0.5", "--n", "6",
                 "--out-dir", out})
                .code,
            kExitOk);
  auto const text = run(cat({"enumerate", "--min-gain-cents", "1"}, data_flags(out)));
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "s01->s04\ts03->s06\t0.69\t7");
  EXPECT_EQ(std::count(text.out.begin(), text.out.end(), '\n'), 15);

  for (auto const* kernel : {"scalar", "auto"}) {
    auto const again = run(cat({"enumerate", "--min-gain-cents", "1", "--threads", "4",
                                "--kernel", kernel},
                               data_flags(out)));
    EXPECT_EQ(again.out, text.out);
  }

  auto const json = run(cat({"enumerate", "--min-gain-cents", "1", "--format", "json"}, data_flags(out)));
  auto const doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["records"].size(), 15);
  EXPECT_EQ(doc["summary"]["pair_count"], 105);
  EXPECT_EQ(doc["summary"]["pairs_ge_threshold"][0]["count"], 15);

  auto const file = dir("report.csv");
  auto const csv = run(cat({"enumerate", "--min-gain-cents", "1", "--format", "csv", "--out", file},
                           data_flags(out)));
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out, "");
  auto const written = read_file(file);
  EXPECT_EQ(std::count(written.begin(), written.end(), '\n'), 16);
}

TEST_F(CliTest, Summary) {
  auto const flat = run(cat({"summary"}, data_flags(kData + "/sf_motivating")));
  ASSERT_EQ(flat.code, kExitOk);
  EXPECT_EQ(flat.out,
            "stations: 4\ntrips: 6\npairs: 15\n"
            "pairs>=0.05: 1 (6.7%)\npairs>=1.00: 1 (6.7%)\n");

  auto const out = dir("two");
  ASSERT_EQ(run({"synth", "--model", "flat", "--c", "1", "--n", "2", "--out-dir", out}).code,
            kExitOk);
  auto const two = run(cat({"summary", "--thresholds", "5,100,250"}, data_flags(out)));
  EXPECT_EQ(two.out,
            "stations: 2\ntrips: 1\npairs: 0\n"
            "pairs>=0.05: 0 (0.0%)\npairs>=1.00: 0 (0.0%)\npairs>=2.50: 0 (0.0%)\n");
}

}  // namespace
}  // namespace transit_arb::cli
