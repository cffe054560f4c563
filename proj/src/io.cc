#include "transit_arb/io.h"

#include <fstream>
#include <sstream>

#include "transit_arb/error.h"

namespace transit_arb {

namespace {

[[noreturn]] void malformed(std::string const& what) {
  throw Error(ErrorKind::kMalformedCsv, what);
}

void expect_header(std::vector<std::string_view> const& lines,
                   std::string_view header, std::string_view file) {
  if (lines.empty() || lines.front() != header) {
    malformed(std::string{file} + ": expected header '" + std::string{header} +
              "'");
  }
}

}  // namespace

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto const nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto const at = text.find(sep);
    parts.push_back(text.substr(0, at));
    if (at == std::string_view::npos) break;
    text.remove_prefix(at + 1);
  }
  return parts;
}

std::vector<StationRecord> parse_stations_csv(std::string_view text) {
  auto const lines = split_lines(text);
  expect_header(lines, "id,name", "stations.csv");
  std::vector<StationRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const comma = lines[i].find(',');
    if (comma == std::string_view::npos) {
      malformed("stations.csv line " + std::to_string(i + 1) +
                ": expected id,name");
    }
    out.push_back(StationRecord{StationId{std::string{lines[i].substr(0, comma)}},
                                std::string{lines[i].substr(comma + 1)}});
  }
  return out;
}

std::string serialize_stations_csv(std::span<StationRecord const> stations) {
  std::string out = "id,name\n";
  for (auto const& s : stations) out += s.id.str() + "," + s.name + "\n";
  return out;
}

std::vector<RouteDef> parse_routes_csv(std::string_view text) {
  auto const lines = split_lines(text);
  expect_header(lines, "name,stations", "routes.csv");
  std::vector<RouteDef> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const comma = lines[i].rfind(',');
    if (comma == std::string_view::npos) {
      malformed("routes.csv line " + std::to_string(i + 1) +
                ": expected name,stations");
    }
    RouteDef route{std::string{lines[i].substr(0, comma)}, {}};
    for (auto const token : split(lines[i].substr(comma + 1), '|')) {
      route.stations.emplace_back(std::string{token});
    }
    out.push_back(std::move(route));
  }
  return out;
}

std::string serialize_routes_csv(std::span<RouteDef const> routes) {
  std::string out = "name,stations\n";
  for (auto const& r : routes) {
    out += r.name + ",";
    for (std::size_t i = 0; i < r.stations.size(); ++i) {
      if (i != 0) out += "|";
      out += r.stations[i].str();
    }
    out += "\n";
  }
  return out;
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(std::filesystem::path const& path, std::string_view content) {
  std::ofstream out{path, std::ios::binary};
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

TransitNetwork load_network(std::filesystem::path const& stations_csv,
                            std::filesystem::path const& routes_csv) {
  return build_network(parse_stations_csv(read_file(stations_csv)),
                       parse_routes_csv(read_file(routes_csv)));
}

}  // namespace transit_arb
