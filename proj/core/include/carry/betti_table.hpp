#pragma once

#include <map>
#include <string>
#include <utility>

#include "carry/base_p.hpp"

namespace carry {

/// Graded Betti numbers beta_{i,j} of S/I, stored sparsely (zero entries are
/// never kept).
class BettiTable {
public:
  explicit BettiTable(int n) : n_(n) {}

  int n() const noexcept { return n_; }

  /// Adds to beta_{i,j}; an entry that reaches zero is dropped.
  void add(int i, Int j, Int count);
  Int at(int i, Int j) const;
  const std::map<std::pair<int, Int>, Int>& entries() const noexcept { return entries_; }

  /// Sum over j of beta_{i,j}.
  Int total(int i) const;
  /// Largest i with a nonzero entry.
  int projective_dimension() const;
  /// max(j - i) over nonzero entries.
  Int regularity() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
  int n_;
  std::map<std::pair<int, Int>, Int> entries_;
};

struct BettiRenderOptions {
  /// Replace runs of all-zero rows by a single "..." line. Macaulay2 prints
  /// every row; that is the behaviour with this off.
  bool elide_empty_rows = false;
};

/// Macaulay2-style grid: columns i, rows j - i, "." for zero, with a
/// "total:" row.
std::string render(const BettiTable& table, BettiRenderOptions options = {});

} // namespace carry
