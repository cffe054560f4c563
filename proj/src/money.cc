#include "transit_arb/money.h"

#include <cstdlib>

#include "transit_arb/error.h"

namespace transit_arb {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::kMalformedMoney, "'" + std::string{text} + "'");
}

}  // namespace

Money parse_money(std::string_view text) {
  auto const dot = text.find('.');
  auto const whole = text.substr(0, dot);
  auto const frac =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);

  if (whole.empty() || whole.size() > 9) malformed(text);
  if (dot != std::string_view::npos && (frac.empty() || frac.size() > 2)) {
    malformed(text);
  }

  std::int64_t cents = 0;
  for (char c : whole) {
    if (!is_digit(c)) malformed(text);
    cents = cents * 10 + (c - '0');
  }
  cents *= 100;
  if (!frac.empty()) {
    for (char c : frac) {
      if (!is_digit(c)) malformed(text);
    }
    cents += (frac[0] - '0') * 10;
    if (frac.size() == 2) cents += frac[1] - '0';
  }
  if (cents > kMaxFareCents) malformed(text);
  return Money{cents};
}

std::string format_dollars(std::int64_t cents) {
  std::string out;
  if (cents < 0) {
    out.push_back('-');
    cents = -cents;
  }
  auto const frac = cents % 100;
  out += std::to_string(cents / 100);
  out.push_back('.');
  out.push_back(static_cast<char>('0' + frac / 10));
  out.push_back(static_cast<char>('0' + frac % 10));
  return out;
}

std::int64_t round_percent(std::int64_t num, std::int64_t den) {
  auto const mag = (200 * std::llabs(num) + den) / (2 * den);
  return num < 0 ? -mag : mag;
}

std::string format_percent_tenths(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "0.0";
  auto const tenths = (2000 * num + den) / (2 * den);
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

}  // namespace transit_arb
