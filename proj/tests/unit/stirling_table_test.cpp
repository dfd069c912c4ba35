#include "stirling/stirling_table.hpp"

#include <gtest/gtest.h>

namespace stirling {
namespace {

TEST(StirlingTableTest, SecondKindBoundaries) {
  const StirlingTable t(Kind::second, 8);
  EXPECT_EQ(t.at(0, 0), 1);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(t.at(n, 0), 0);
    EXPECT_EQ(t.at(n, n), 1);
    EXPECT_EQ(t.at(n, 1), 1);
  }
}

TEST(StirlingTableTest, SecondKindKnownValues) {
  const StirlingTable t(Kind::second, 7);
  EXPECT_EQ(t.at(4, 2), 7);
  EXPECT_EQ(t.at(5, 3), 25);
  EXPECT_EQ(t.at(5, 2), 15);
  EXPECT_EQ(t.at(7, 7), 1);
  EXPECT_EQ(t.at(3, 0), 0);
  EXPECT_EQ(t.at(7, 2), 63);
}

TEST(StirlingTableTest, SecondKindInteriorPositive) {
  const StirlingTable t(Kind::second, 30);
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_GT(t.at(n, k), 0);
}

TEST(StirlingTableTest, FirstKindSigns) {
  const StirlingTable t(Kind::first_signed, 20);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_EQ(t.at(3, 2), -3);
  EXPECT_EQ(t.at(4, 2), 11);
  EXPECT_EQ(t.at(5, 5), 1);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k) {
      BigInt v = t.at(n, k);
      if ((n - k) % 2 != 0) v = -v;
      EXPECT_GT(v, 0) << "s(" << n << "," << k << ")";
    }
}

TEST(StirlingTableTest, FirstKindAlternatingRowSumVanishes) {
  const StirlingTable t(Kind::first_signed, 25);
  for (int n = 2; n <= 25; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += t.at(n, k);
    EXPECT_EQ(sum, 0) << "row " << n;
  }
}

TEST(StirlingTableTest, ValueIsTotalInK) {
  const StirlingTable t(Kind::second, 5);
  EXPECT_EQ(t.value(3, -1), 0);
  EXPECT_EQ(t.value(3, 4), 0);
  EXPECT_EQ(t.value(3, 2), 3);
  EXPECT_THROW(t.value(6, 0), std::out_of_range);
  EXPECT_THROW(t.at(6, 0), std::out_of_range);
  EXPECT_THROW(t.at(3, 4), std::out_of_range);
}

TEST(StirlingTableTest, AdoptedRowsValidated) {
  std::vector<std::vector<BigInt>> good{{1}, {0, 1}};
  EXPECT_NO_THROW(StirlingTable(Kind::second, std::move(good)));
  std::vector<std::vector<BigInt>> bad{{1}, {0, 1, 2}};
  EXPECT_THROW(StirlingTable(Kind::second, std::move(bad)), std::invalid_argument);
}

TEST(BellTest, RecurrenceValues) {
  const auto bells = bell_numbers(10);
  EXPECT_EQ(bells[0], 1);
  EXPECT_EQ(bells[3], 5);
  EXPECT_EQ(bells[5], 52);
  EXPECT_EQ(bells[10], 115975);
}

TEST(BellTest, RowSumsMatchRecurrence) {
  const StirlingTable t(Kind::second, 60);
  EXPECT_EQ(bell_row_sum(t, 0), 1);
  EXPECT_EQ(bell_row_sum(t, 3), 5);
  EXPECT_EQ(bell_row_sum(t, 5), 52);
  for (int n = 0; n <= 60; ++n) EXPECT_NO_THROW(bell_row_sum(t, n));
}

TEST(BellTest, RowSumDetectsCorruptTriangle) {
  std::vector<std::vector<BigInt>> rows{{1}, {0, 1}, {0, 1, 2}};  // S(2,2) wrong
  const StirlingTable bad(Kind::second, std::move(rows));
  EXPECT_THROW(bell_row_sum(bad, 2), consistency_error);
}

}  // namespace
}  // namespace stirling
