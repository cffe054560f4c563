#pragma once

#include <span>
#include <string>

#include "transit_arb/engine.h"

namespace transit_arb {

// One line per record: `a->b<TAB>c->d<TAB>D.CC<TAB>PP`.
std::string render_text(std::span<ArbitrageRecord const> records);

// Header plus one row per record, with swapped trips and raw cents.
std::string render_csv(std::span<ArbitrageRecord const> records);

// {"summary": {...}, "records": [...]}; money as integer cents plus a
// formatted dollar string.
std::string render_json(ArbitrageSummary const& summary,
                        std::span<ArbitrageRecord const> records);

// `pairs>=0.05: 60334 (13.5%)` style listing.
std::string render_summary_text(ArbitrageSummary const& summary);
std::string render_summary_json(ArbitrageSummary const& summary);

}  // namespace transit_arb
