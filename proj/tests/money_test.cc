#include "transit_arb/money.h"

#include <gtest/gtest.h>

#include "transit_arb/error.h"

namespace transit_arb {
namespace {

TEST(MoneyTest, ParsesDollarAmounts) {
  EXPECT_EQ(parse_money("4.50").cents, 450);
  EXPECT_EQ(parse_money("4.5").cents, 450);
  EXPECT_EQ(parse_money("4").cents, 400);
  EXPECT_EQ(parse_money("0.05").cents, 5);
  EXPECT_EQ(parse_money("0").cents, 0);
}

TEST(MoneyTest, RejectsMalformedAmounts) {
  for (auto const* bad : {"", "4.505", "-1.00", "$4.50", "4.", ".50", "4,50",
                          "abc", "1 00", "9999999999"}) {
    try {
      parse_money(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kMalformedMoney) << bad;
    }
  }
}

TEST(MoneyTest, FormatsTwoDecimals) {
  EXPECT_EQ(format_dollars(175), "1.75");
  EXPECT_EQ(format_dollars(5), "0.05");
  EXPECT_EQ(format_dollars(-205), "-2.05");
  EXPECT_EQ(format_dollars(1000), "10.00");
}

TEST(MoneyTest, PercentRoundsHalfUp) {
  EXPECT_EQ(round_percent(175, 870), 20);
  EXPECT_EQ(round_percent(235, 1020), 23);
  EXPECT_EQ(round_percent(1, 200), 1);   // 0.5 -> 1
  EXPECT_EQ(round_percent(-1, 200), -1);
  EXPECT_EQ(format_percent_tenths(60334, 446985), "13.5");
  EXPECT_EQ(format_percent_tenths(4666, 446985), "1.0");
  EXPECT_EQ(format_percent_tenths(3, 0), "0.0");
}

TEST(MoneyTest, FormatParseRoundTrip) {
  for (std::int64_t c = 0; c < 5000; c += 7) {
    EXPECT_EQ(parse_money(format_dollars(c)).cents, c);
  }
}

}  // namespace
}  // namespace transit_arb
