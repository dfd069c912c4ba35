#include "stirling/enumeration.hpp"

#include <gtest/gtest.h>

#include "stirling/engines.hpp"

namespace stirling {
namespace {

TEST(SetPartitionOracleTest, SmallRows) {
  EXPECT_EQ(s2_oracle(4, 2), 7);
  EXPECT_EQ(s2_oracle(3, 3), 1);
  EXPECT_EQ(s2_oracle(5, 0), 0);
  EXPECT_EQ(s2_oracle(0, 0), 1);
  const auto row4 = set_partition_counts(4);
  EXPECT_EQ(row4, (std::vector<BigInt>{0, 1, 7, 6, 1}));
}

TEST(SetPartitionOracleTest, TotalIsBellNumber) {
  // B(6) = 203, B(9) = 21147
  BigInt total6 = 0, total9 = 0;
  for (const auto& c : set_partition_counts(6)) total6 += c;
  for (const auto& c : set_partition_counts(9)) total9 += c;
  EXPECT_EQ(total6, 203);
  EXPECT_EQ(total9, 21147);
}

TEST(SetPartitionOracleTest, AgreesWithExplicitFormula) {
  for (int n = 0; n <= 9; ++n) {
    const auto counts = set_partition_counts(n);
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(counts[k], s2_explicit(n, k)) << n << "," << k;
  }
}

TEST(SetPartitionOracleTest, EnforcesBound) {
  EXPECT_THROW(set_partition_counts(13), std::out_of_range);
  EXPECT_THROW(s2_oracle(13, 2), std::out_of_range);
}

TEST(CycleOracleTest, SmallValues) {
  // 3 permutations of {1,2,3} have exactly 2 cycles.
  const auto row3 = permutation_cycle_counts(3);
  EXPECT_EQ(row3, (std::vector<BigInt>{0, 2, 3, 1}));
  EXPECT_EQ(s1_oracle(3, 2), -3);
  EXPECT_EQ(s1_oracle(4, 2), 11);
  EXPECT_EQ(s1_oracle(5, 5), 1);
  EXPECT_EQ(s1_oracle(0, 0), 1);
}

TEST(CycleOracleTest, RowTotalsAreFactorials) {
  for (int n = 0; n <= 7; ++n) {
    BigInt total = 0;
    for (const auto& c : permutation_cycle_counts(n)) total += c;
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(CycleOracleTest, EnforcesBound) {
  EXPECT_THROW(permutation_cycle_counts(9), std::out_of_range);
}

TEST(PartitionIterationTest, CountsMatchClassicValues) {
  // partitions of 8 into exactly 3 parts: 5
  int count = 0;
  for_each_partition_multiplicity(8, 3, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 5);
  // partitions of 0 into 0 parts: the empty partition
  count = 0;
  for_each_partition_multiplicity(0, 0, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 1);
  // no partitions of 3 into 0 or 4 parts
  count = 0;
  for_each_partition_multiplicity(3, 0, [&](const std::vector<int>&) { ++count; });
  for_each_partition_multiplicity(3, 4, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 0);
}

TEST(PartitionIterationTest, MultiplicitiesAreConsistent) {
  for_each_partition_multiplicity(10, 4, [&](const std::vector<int>& mult) {
    int sum = 0, parts = 0;
    for (int i = 1; i <= 10; ++i) {
      sum += i * mult[i];
      parts += mult[i];
    }
    EXPECT_EQ(sum, 10);
    EXPECT_EQ(parts, 4);
  });
}

}  // namespace
}  // namespace stirling
