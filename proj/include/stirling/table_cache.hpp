#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "stirling/bigint.hpp"
#include "stirling/stirling_table.hpp"

namespace stirling {

// Plain-text cache, one record per line: `kind n k value`, all decimal.
// Rows are written in (n,k) order so files are diffable and bit-exact
// across implementations.

inline void save_table(const StirlingTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("save_table: cannot open " + path.string());
  const int id = kind_id(table.kind());
  for (int n = 0; n <= table.max_n(); ++n)
    for (int k = 0; k <= n; ++k)
      out << id << ' ' << n << ' ' << k << ' ' << table.at(n, k) << '\n';
  if (!out) throw std::runtime_error("save_table: write failed for " + path.string());
}

inline StirlingTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_table: cannot open " + path.string());

  std::vector<std::vector<BigInt>> rows;
  int kind_seen = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int id = 0, n = 0, k = 0;
    std::string value;
    if (!(fields >> id >> n >> k >> value))
      throw std::runtime_error("load_table: malformed line " +
                               std::to_string(line_no) + " in " + path.string());
    if (kind_seen == -1) kind_seen = id;
    if (id != kind_seen)
      throw std::runtime_error("load_table: mixed kinds in " + path.string());
    if (n < 0 || k < 0 || k > n)
      throw std::runtime_error("load_table: invalid indices at line " +
                               std::to_string(line_no) + " in " + path.string());
    if (static_cast<std::size_t>(n) >= rows.size()) rows.resize(n + 1);
    auto& row = rows[n];
    if (row.size() != static_cast<std::size_t>(k))
      throw std::runtime_error("load_table: out-of-order record at line " +
                               std::to_string(line_no) + " in " + path.string());
    row.emplace_back(value);
  }
  if (kind_seen == -1)
    throw std::runtime_error("load_table: empty cache " + path.string());
  for (std::size_t n = 0; n < rows.size(); ++n)
    if (rows[n].size() != n + 1)
      throw std::runtime_error("load_table: incomplete row " + std::to_string(n) +
                               " in " + path.string());
  return StirlingTable(kind_from_id(kind_seen), std::move(rows));
}

}  // namespace stirling
