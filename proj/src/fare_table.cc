#include "transit_arb/fare_table.h"

#include <algorithm>

#include "transit_arb/error.h"
#include "transit_arb/io.h"

namespace transit_arb {

FareTable FareTable::build(TransitNetwork const& net, FareFn const& fn) {
  FareTable t;
  auto const n = net.size();
  for (auto const& s : net.stations()) t.stations_.push_back(s.id);
  t.fares_.assign(n * n, 0);
  t.excursion_.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto const m = fn(i, j);
      if (m.cents < 0 || m.cents > kMaxFareCents) {
        throw Error(ErrorKind::kMalformedMoney,
                    "fare " + std::to_string(m.cents) + " cents out of range");
      }
      t.fares_[i * n + j] = t.fares_[j * n + i] =
          static_cast<std::int32_t>(m.cents);
    }
  }
  return t;
}

std::size_t FareTable::index_of(StationId const& id) const {
  auto const it = std::lower_bound(stations_.begin(), stations_.end(), id);
  if (it == stations_.end() || *it != id) {
    throw Error(ErrorKind::kUnknownStation, id.str());
  }
  return static_cast<std::size_t>(it - stations_.begin());
}

Money FareTable::fare(TripKey const& trip) const {
  return Money{fare(index_of(trip.a()), index_of(trip.b()))};
}

bool FareTable::matches(TransitNetwork const& net) const {
  if (net.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (net.id(i) != stations_[i]) return false;
  }
  return true;
}

FareTable parse_fare_table(std::string_view csv, TransitNetwork const& net) {
  auto const lines = split_lines(csv);
  if (lines.empty()) throw Error(ErrorKind::kMalformedCsv, "fares.csv is empty");

  auto const header = split(lines.front(), ',');
  if (header.front() != "") {
    throw Error(ErrorKind::kMalformedCsv,
                "fares.csv header must start with an empty cell");
  }

  auto const station_index = [&](std::string_view token) {
    auto const idx = net.find(token);
    if (!idx) throw Error(ErrorKind::kUnknownStation, std::string{token});
    return *idx;
  };

  std::vector<std::size_t> columns;
  for (std::size_t c = 1; c < header.size(); ++c) {
    columns.push_back(station_index(StationId{std::string{header[c]}}.str()));
  }
  {
    auto sorted = columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorKind::kMalformedCsv, "fares.csv repeats a column");
    }
  }

  auto const n = net.size();
  std::vector<std::optional<Money>> cells(n * n);
  std::vector<bool> seen_row(n, false);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto const row = split(lines[r], ',');
    if (row.size() != header.size()) {
      throw Error(ErrorKind::kMalformedCsv,
                  "fares.csv line " + std::to_string(r + 1) + " has " +
                      std::to_string(row.size()) + " cells, expected " +
                      std::to_string(header.size()));
    }
    auto const i = station_index(StationId{std::string{row.front()}}.str());
    if (seen_row[i]) {
      throw Error(ErrorKind::kMalformedCsv,
                  "fares.csv repeats row " + std::string{row.front()});
    }
    seen_row[i] = true;
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c].empty()) continue;
      cells[i * n + columns[c - 1]] = parse_money(row[c]);
    }
  }

  auto table = FareTable::build(net, [&](std::size_t i, std::size_t j) {
    auto const& fwd = cells[i * n + j];
    auto const& rev = cells[j * n + i];
    if (!fwd || !rev) {
      throw Error(ErrorKind::kMissingPair,
                  net.id(fwd ? j : i).str() + "," + net.id(fwd ? i : j).str());
    }
    if (*fwd != *rev) {
      throw Error(ErrorKind::kAsymmetricFare,
                  net.id(i).str() + "," + net.id(j).str() + " = " +
                      format_dollars(*fwd) + " but " + net.id(j).str() + "," +
                      net.id(i).str() + " = " + format_dollars(*rev));
    }
    return *fwd;
  });
  for (std::size_t i = 0; i < n; ++i) table.set_excursion(i, cells[i * n + i]);
  return table;
}

std::string serialize_fare_table(FareTable const& table) {
  std::string out;
  for (auto const& s : table.stations()) out += "," + s.str();
  out += "\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += table.stations()[i].str();
    for (std::size_t j = 0; j < table.size(); ++j) {
      out += ",";
      if (i != j) {
        out += format_dollars(table.fare(i, j));
      } else if (auto const e = table.excursion(i)) {
        out += format_dollars(*e);
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace transit_arb
