#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/bigint.hpp"

namespace stirling {

// Exhaustive enumeration bounds. Past these the object counts stop being
// desk-scale (B(12) ~ 4.2M partitions, 8! = 40320 permutations).
inline constexpr int kMaxPartitionOracleN = 12;
inline constexpr int kMaxPermutationOracleN = 8;

// Block counts of every set partition of an n-set, found by walking all
// restricted-growth strings: a_0 = 0, a_i <= 1 + max(a_0..a_{i-1}).
// Returns counts indexed by k = 0..n.
inline std::vector<BigInt> set_partition_counts(int n) {
  if (n < 0) throw std::out_of_range("set_partition_counts: n < 0");
  if (n > kMaxPartitionOracleN)
    throw std::out_of_range("set_partition_counts: n = " + std::to_string(n) +
                            " beyond enumeration bound " +
                            std::to_string(kMaxPartitionOracleN));
  std::vector<unsigned long long> tally(n + 1, 0);
  if (n == 0) {
    tally[0] = 1;  // the empty partition
  } else {
    // Depth-first over (position, blocks used so far).
    std::vector<int> stack_pos{1}, stack_blocks{1};
    while (!stack_pos.empty()) {
      const int pos = stack_pos.back();
      const int blocks = stack_blocks.back();
      stack_pos.pop_back();
      stack_blocks.pop_back();
      if (pos == n) {
        ++tally[blocks];
        continue;
      }
      for (int v = 0; v <= blocks; ++v) {
        stack_pos.push_back(pos + 1);
        stack_blocks.push_back(v == blocks ? blocks + 1 : blocks);
      }
    }
  }
  return std::vector<BigInt>(tally.begin(), tally.end());
}

// Number of partitions of an n-set into exactly k nonempty blocks.
inline BigInt s2_oracle(int n, int k) {
  const auto row = set_partition_counts(n);
  if (k < 0 || k > n) return 0;
  return row[k];
}

// Cycle counts of every permutation of n elements (unsigned first-kind
// values), indexed by k = 0..n.
inline std::vector<BigInt> permutation_cycle_counts(int n) {
  if (n < 0) throw std::out_of_range("permutation_cycle_counts: n < 0");
  if (n > kMaxPermutationOracleN)
    throw std::out_of_range("permutation_cycle_counts: n = " + std::to_string(n) +
                            " beyond enumeration bound " +
                            std::to_string(kMaxPermutationOracleN));
  std::vector<unsigned long long> tally(n + 1, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    int cycles = 0;
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (int j = start; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    ++tally[cycles];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::vector<BigInt>(tally.begin(), tally.end());
}

// Signed first-kind value from the cycle-count enumeration.
inline BigInt s1_oracle(int n, int k) {
  const auto row = permutation_cycle_counts(n);
  if (k < 0 || k > n) return 0;
  BigInt value = row[k];
  if ((n - k) % 2 != 0) value = -value;
  return value;
}

// Visits every partition of n into exactly k parts as a multiplicity
// vector mult (mult[i] = number of parts equal to i, i = 1..n).
template <typename Visitor>
void for_each_partition_multiplicity(int n, int k, Visitor&& visit) {
  if (n < 0 || k < 0) throw std::invalid_argument("partition: negative input");
  std::vector<int> mult(n + 1, 0);
  const auto& mult_view = mult;
  // Parts chosen in non-increasing order.
  auto recurse = [&](auto&& self, int remaining, int parts_left, int max_part) -> void {
    if (parts_left == 0) {
      if (remaining == 0) visit(mult_view);
      return;
    }
    // Each remaining part is >= 1 and <= max_part.
    for (int part = std::min(max_part, remaining - (parts_left - 1)); part >= 1; --part) {
      if (static_cast<long long>(part) * parts_left < remaining) break;
      ++mult[part];
      self(self, remaining - part, parts_left - 1, part);
      --mult[part];
    }
  };
  if (k == 0) {
    if (n == 0) visit(mult_view);
    return;
  }
  recurse(recurse, n, k, n);
}

}  // namespace stirling
