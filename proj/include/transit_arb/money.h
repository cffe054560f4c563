#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace transit_arb {

// Non-negative amount of money in integer cents.
struct Money {
  std::int64_t cents = 0;

  friend auto operator<=>(Money, Money) = default;
};

// Largest accepted fare. Keeps every four-fare sum inside int32 for the
// vectorized swap kernels.
inline constexpr std::int64_t kMaxFareCents = 100'000'000;

// Accepts "4", "4.5", "4.50", "0.05". Rejects signs, currency symbols,
// more than two decimals and anything above kMaxFareCents.
Money parse_money(std::string_view text);

// Signed cents as dollars with exactly two decimals: 175 -> "1.75",
// -5 -> "-0.05".
std::string format_dollars(std::int64_t cents);
inline std::string format_dollars(Money m) { return format_dollars(m.cents); }

// round(100 * num / den) with halves rounded away from zero; den > 0.
std::int64_t round_percent(std::int64_t num, std::int64_t den);

// Percent with one decimal, e.g. 60334 / 446985 -> "13.5". den == 0 -> "0.0".
std::string format_percent_tenths(std::uint64_t num, std::uint64_t den);

}  // namespace transit_arb
