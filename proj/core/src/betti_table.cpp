#include "carry/betti_table.hpp"

#include <algorithm>
#include <vector>

#include "carry/error.hpp"

namespace carry {

void BettiTable::add(int i, Int j, Int count) {
  if (i < 0 || i > n_) throw ArgumentError("homological index " + std::to_string(i) + " out of range");
  if (count == 0) return;
  const auto key = std::make_pair(i, j);
  const Int value = checked_add(at(i, j), count);
  if (value == 0) {
    entries_.erase(key);
  } else {
    entries_[key] = value;
  }
}

Int BettiTable::at(int i, Int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

Int BettiTable::total(int i) const {
  Int sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum = checked_add(sum, value);
  }
  return sum;
}

int BettiTable::projective_dimension() const {
  int top = 0;
  for (const auto& [key, value] : entries_) top = std::max(top, key.first);
  return top;
}

Int BettiTable::regularity() const {
  Int reg = 0;
  for (const auto& [key, value] : entries_) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::string render(const BettiTable& table, BettiRenderOptions options) {
  const int columns = table.projective_dimension() + 1;
  const Int rows = table.regularity() + 1;

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> labels;
  std::vector<bool> empty_row;

  labels.emplace_back("");
  grid.emplace_back();
  for (int i = 0; i < columns; ++i) grid.back().push_back(std::to_string(i));
  empty_row.push_back(false);

  labels.emplace_back("total:");
  grid.emplace_back();
  for (int i = 0; i < columns; ++i) grid.back().push_back(std::to_string(table.total(i)));
  empty_row.push_back(false);

  for (Int r = 0; r < rows; ++r) {
    labels.push_back(std::to_string(r) + ":");
    grid.emplace_back();
    bool empty = true;
    for (int i = 0; i < columns; ++i) {
      const Int v = table.at(i, r + i);
      if (v != 0) empty = false;
      grid.back().push_back(v == 0 ? "." : std::to_string(v));
    }
    empty_row.push_back(empty);
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(columns), 1);
  for (const auto& row : grid) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }

  std::string out;
  bool in_gap = false;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    if (options.elide_empty_rows && empty_row[r]) {
      if (!in_gap) out += std::string(label_width, ' ') + " ...\n";
      in_gap = true;
      continue;
    }
    in_gap = false;
    std::string line = std::string(label_width - labels[r].size(), ' ') + labels[r];
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      line += ' ';
      line += std::string(widths[i] - grid[r][i].size(), ' ') + grid[r][i];
    }
    out += line + '\n';
  }
  return out;
}

} // namespace carry
