#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transit_arb/fare_model.h"
#include "transit_arb/swap_kernel.h"

namespace transit_arb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

enum class OutputFormat { kText, kCsv, kJson };

struct RunConfig {
  std::string command;
  std::string stations_path;
  std::string routes_path;
  std::string fares_path;
  std::int64_t min_gain_cents = 5;
  std::vector<std::int64_t> thresholds{5, 100};
  OutputFormat format = OutputFormat::kText;
  std::string out_path;  // empty = standard output
  std::int64_t tolerance_cents = 5;
  unsigned threads = 1;
  KernelKind kernel = KernelKind::kAuto;

  // pair
  std::string trip1;
  std::string trip2;

  // profile
  std::string origin;
  std::string route;

  // synth
  std::string model;
  std::size_t station_count = 0;
  std::string c;
  std::string k;
  std::string a;
  double p = 0.0;
  std::string c0;
  std::vector<std::string> zones;  // lo:hi:dollars
  std::string out_dir = ".";
};

// Runs one command. args[0] is the program name. Returns 0 on success, 1 on
// usage errors and 2 on data or validation errors.
int run_cli(std::span<std::string const> args, std::ostream& out,
            std::ostream& err);

}  // namespace transit_arb::cli
