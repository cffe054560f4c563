#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "transit_arb/network.h"

namespace transit_arb {

// Lines of a LF-terminated text file; a trailing CR is dropped from each line
// and blank lines are skipped.
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);

// stations.csv: header `id,name`.
std::vector<StationRecord> parse_stations_csv(std::string_view text);
std::string serialize_stations_csv(std::span<StationRecord const> stations);

// routes.csv: header `name,stations`, stations `|`-separated in line order.
std::vector<RouteDef> parse_routes_csv(std::string_view text);
std::string serialize_routes_csv(std::span<RouteDef const> routes);

std::string read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::string_view content);

TransitNetwork load_network(std::filesystem::path const& stations_csv,
                            std::filesystem::path const& routes_csv);

}  // namespace transit_arb
