#include "transit_arb/cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "transit_arb/analysis.h"
#include "transit_arb/engine.h"
#include "transit_arb/error.h"
#include "transit_arb/io.h"
#include "transit_arb/report.h"

namespace transit_arb::cli {

namespace {

// Bad flag values that CLI11 cannot see on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  TransitNetwork net;
  FareTable fares;
};

Inputs load_inputs(RunConfig const& cfg) {
  auto net = load_network(cfg.stations_path, cfg.routes_path);
  auto fares = parse_fare_table(read_file(cfg.fares_path), net);
  return {std::move(net), std::move(fares)};
}

void emit(RunConfig const& cfg, std::ostream& out, std::string const& text) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file(cfg.out_path, text);
  }
}

EnumerateOptions engine_options(RunConfig const& cfg) {
  if (!kernel_available(cfg.kernel)) {
    throw UsageError("kernel '" + std::string{to_string(cfg.kernel)} +
                     "' is not available on this machine");
  }
  return EnumerateOptions{.kernel = cfg.kernel, .threads = cfg.threads};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto const [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("not an integer: '" + std::string{text} + "'");
  }
  return v;
}

Money dollars_flag(std::string const& name, std::string const& value) {
  if (value.empty()) throw UsageError("--" + name + " is required for this model");
  try {
    return parse_money(value);
  } catch (Error const&) {
    throw UsageError("--" + name + ": malformed amount '" + value + "'");
  }
}

TripKey parse_trip_token(TransitNetwork const& net, std::string const& token) {
  auto const colon = token.find(':');
  if (colon == std::string::npos) {
    throw UsageError("trip must look like origin:destination, got '" + token + "'");
  }
  TripKey trip{StationId{token.substr(0, colon)}, StationId{token.substr(colon + 1)}};
  net.index_of(trip.a());
  net.index_of(trip.b());
  return trip;
}

int cmd_validate(RunConfig const& cfg, std::ostream& out) {
  auto const in = load_inputs(cfg);
  auto const n = in.net.size();
  out << n << " stations, " << in.net.edges().size() << " edges, "
      << n * (n - 1) / 2 << " fares\n";
  return kExitOk;
}

int cmd_enumerate(RunConfig const& cfg, std::ostream& out) {
  auto const in = load_inputs(cfg);
  auto const min_gain = Money{cfg.min_gain_cents};
  auto const records =
      enumerate_arbitrage(in.net, in.fares, min_gain, engine_options(cfg));
  switch (cfg.format) {
    case OutputFormat::kText: emit(cfg, out, render_text(records)); break;
    case OutputFormat::kCsv: emit(cfg, out, render_csv(records)); break;
    case OutputFormat::kJson: {
      auto const thresholds = std::vector<Money>{min_gain};
      emit(cfg, out,
           render_json(summarize_records(in.net, records, thresholds), records));
      break;
    }
  }
  return kExitOk;
}

int cmd_summary(RunConfig const& cfg, std::ostream& out) {
  auto const in = load_inputs(cfg);
  std::vector<Money> thresholds;
  for (auto const t : cfg.thresholds) thresholds.push_back(Money{t});
  auto const s = summarize(in.net, in.fares, thresholds, engine_options(cfg));
  if (cfg.format == OutputFormat::kJson) {
    emit(cfg, out, render_summary_json(s));
  } else if (cfg.format == OutputFormat::kCsv) {
    std::string text = "threshold_cents,count,percent_of_pairs\n";
    for (auto const& [t, count] : s.pairs_ge_threshold) {
      text += std::to_string(t.cents) + "," + std::to_string(count) + "," +
              format_percent_tenths(count, s.pair_count) + "\n";
    }
    emit(cfg, out, text);
  } else {
    emit(cfg, out, render_summary_text(s));
  }
  return kExitOk;
}

int cmd_pair(RunConfig const& cfg, std::ostream& out) {
  auto const in = load_inputs(cfg);
  auto const t1 = parse_trip_token(in.net, cfg.trip1);
  auto const t2 = parse_trip_token(in.net, cfg.trip2);
  auto const line = [&](std::string_view label, TripKey const& t) {
    return std::string{label} + ": " + t.to_string() + " " +
           format_dollars(in.fares.fare(t)) + "\n";
  };

  std::string text = line("trip1", t1) + line("trip2", t2);
  auto const outcome = swap_gain(in.net, in.fares, t1, t2);
  if (!outcome) {
    emit(cfg, out, text + "no overlap\n");
    return kExitOk;
  }
  auto const pct = round_percent(outcome->gain, outcome->original_total.cents);
  text += "overlap: " + outcome->overlap.u().str() + ".." +
          outcome->overlap.v().str() + " (" +
          std::to_string(outcome->overlap.shared_hops()) + " hops)\n";
  text += line("swapped1", outcome->swapped1) + line("swapped2", outcome->swapped2);
  text += "original total: " + format_dollars(outcome->original_total) + "\n";
  text += "swapped total: " + format_dollars(outcome->swapped_total) + "\n";
  text += "gain: " + format_dollars(outcome->gain) + " (" + std::to_string(pct) + "%)\n";
  emit(cfg, out, text);
  return kExitOk;
}

int cmd_profile(RunConfig const& cfg, std::ostream& out) {
  auto const in = load_inputs(cfg);
  auto const profile =
      route_fare_profile(in.net, in.fares, StationId{cfg.origin}, cfg.route);
  auto const segments = classify_segments(profile, cfg.tolerance_cents);
  std::string text = render_profile_csv(profile);
  text += "\nstart,end,class,max_abs_d2_cents\n";
  for (auto const& s : segments) {
    text += std::to_string(s.start) + "," + std::to_string(s.end) + "," +
            std::string{to_string(s.curvature)} + "," +
            std::to_string(s.max_abs_second_difference) + "\n";
  }
  emit(cfg, out, text);
  return kExitOk;
}

FareCurveModel synth_model(RunConfig const& cfg) {
  if (cfg.model == "flat") return FlatModel{dollars_flag("c", cfg.c).cents};
  if (cfg.model == "affine") {
    return AffineModel{dollars_flag("c", cfg.c).cents,
                       dollars_flag("k", cfg.k).cents};
  }
  if (cfg.model == "power") {
    if (!(cfg.p > 0.0)) throw UsageError("--p must be > 0");
    return PowerModel{dollars_flag("a", cfg.a).cents, cfg.p};
  }
  DensityZoneModel m{dollars_flag("c0", cfg.c0).cents,
                     dollars_flag("k", cfg.k).cents, {}};
  for (auto const& z : cfg.zones) {
    auto const parts = split(z, ':');
    if (parts.size() != 3) throw UsageError("--zone must be lo:hi:dollars");
    auto const lo = parse_int(parts[0]);
    auto const hi = parse_int(parts[1]);
    if (lo < 0 || hi < lo || hi >= static_cast<std::int64_t>(cfg.station_count)) {
      throw UsageError("--zone " + z + " does not fit " +
                       std::to_string(cfg.station_count) + " stations");
    }
    m.zones.push_back(DensityZone{static_cast<std::size_t>(lo),
                                  static_cast<std::size_t>(hi),
                                  dollars_flag("zone", std::string{parts[2]}).cents});
  }
  return m;
}

int cmd_synth(RunConfig const& cfg, std::ostream& out) {
  if (cfg.station_count < 2) throw UsageError("--n must be >= 2");
  auto const model = synth_model(cfg);

  auto const width = std::max<std::size_t>(2, std::to_string(cfg.station_count).size());
  std::vector<StationRecord> stations;
  RouteDef line{"line", {}};
  for (std::size_t i = 1; i <= cfg.station_count; ++i) {
    auto digits = std::to_string(i);
    digits.insert(0, width - digits.size(), '0');
    StationId id{"s" + digits};
    stations.push_back(StationRecord{id, "Station " + std::to_string(i)});
    line.stations.push_back(id);
  }
  auto const net = build_network(stations, {line});
  auto const fares = generate_fare_table(model, net);

  std::filesystem::path const dir{cfg.out_dir};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  write_file(dir / "stations.csv", serialize_stations_csv(net.stations()));
  write_file(dir / "routes.csv", serialize_routes_csv(net.routes()));
  write_file(dir / "fares.csv", serialize_fare_table(fares));
  out << "wrote " << net.size() << " stations (" << model_name(model)
      << " model) to " << dir.string() << "\n";
  return kExitOk;
}

void add_data_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--stations", cfg.stations_path, "stations.csv")->required();
  sub->add_option("--routes", cfg.routes_path, "routes.csv")->required();
  sub->add_option("--fares", cfg.fares_path, "fares.csv matrix")->required();
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text, csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::kText},
                                              {"csv", OutputFormat::kCsv},
                                              {"json", OutputFormat::kJson}}))
      ->option_text("FORMAT");
  sub->add_option("--out", cfg.out_path, "output file (default: stdout)");
}

void add_engine_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores");
  sub->add_option_function<std::string>(
         "--kernel",
         [&cfg](std::string const& name) {
           auto const kind = parse_kernel_kind(name);
           if (!kind) throw CLI::ValidationError("--kernel", "unknown kernel '" + name + "'");
           cfg.kernel = *kind;
         },
         "auto, scalar, avx2 or neon");
}

}  // namespace

int run_cli(std::span<std::string const> args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Transit fare arbitrage: find ticket swaps that lower the total fare",
               "transit-arb"};
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "check network and fare files");
  add_data_options(validate, cfg);

  auto* enumerate = app.add_subcommand("enumerate", "list every beneficial swap");
  add_data_options(enumerate, cfg);
  add_output_options(enumerate, cfg);
  add_engine_options(enumerate, cfg);
  enumerate->add_option("--min-gain-cents", cfg.min_gain_cents,
                        "smallest gain to report")
      ->check(CLI::NonNegativeNumber);

  auto* summary = app.add_subcommand("summary", "count beneficial swaps per threshold");
  add_data_options(summary, cfg);
  add_output_options(summary, cfg);
  add_engine_options(summary, cfg);
  summary->add_option("--thresholds", cfg.thresholds, "comma list of cents")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);

  auto* pair = app.add_subcommand("pair", "evaluate one ticket swap");
  add_data_options(pair, cfg);
  pair->add_option("--out", cfg.out_path, "output file (default: stdout)");
  pair->add_option("trip1", cfg.trip1, "origin:destination")->required();
  pair->add_option("trip2", cfg.trip2, "origin:destination")->required();

  auto* profile = app.add_subcommand("profile", "fare-vs-stops profile of a route");
  add_data_options(profile, cfg);
  profile->add_option("--out", cfg.out_path, "output file (default: stdout)");
  profile->add_option("--origin", cfg.origin, "origin station")->required();
  profile->add_option("--route", cfg.route, "route name")->required();
  profile->add_option("--tolerance-cents", cfg.tolerance_cents,
                      "second differences within this are linear")
      ->check(CLI::NonNegativeNumber);

  auto* synth = app.add_subcommand("synth", "write a synthetic line network");
  synth->add_option("--model", cfg.model, "flat, affine, power or density")
      ->required()
      ->check(CLI::IsMember({"flat", "affine", "power", "density"}));
  synth->add_option("--n", cfg.station_count, "number of stations")->required();
  synth->add_option("--c", cfg.c, "flat or affine base fare, dollars");
  synth->add_option("--k", cfg.k, "per-hop fare, dollars");
  synth->add_option("--a", cfg.a, "power-model scale, dollars");
  synth->add_option("--p", cfg.p, "power-model exponent");
  synth->add_option("--c0", cfg.c0, "density-model base fare, dollars");
  synth->add_option("--zone", cfg.zones, "lo:hi:surcharge (0-based positions)");
  synth->add_option("--out-dir", cfg.out_dir, "output directory");

  try {
    std::vector<std::string> reversed;
    if (!args.empty()) reversed.assign(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out);
    if (summary->parsed()) return cmd_summary(cfg, out);
    if (pair->parsed()) return cmd_pair(cfg, out);
    if (profile->parsed()) return cmd_profile(cfg, out);
    if (synth->parsed()) return cmd_synth(cfg, out);
  } catch (UsageError const& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    return synth->parsed() && e.kind() == ErrorKind::kInvalidModel ? kExitUsage
                                                                   : kExitData;
  }
  return kExitUsage;
}

}  // namespace transit_arb::cli
