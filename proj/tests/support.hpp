#pragma once

// Random and exhaustive generators of test inputs shared by the unit tests
// and the acceptance runner.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "carry/invariant_ideal.hpp"

namespace carry::testing {

inline Int pick(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

inline CarryIdealLabel random_label(std::mt19937_64& rng, const Ring& ring, Int dmin, Int dmax) {
  const Context ctx(ring, pick(rng, dmin, dmax));
  const auto lattice = carry_lattice(ctx);
  return CarryIdealLabel(lattice[static_cast<std::size_t>(pick(rng, 0, static_cast<Int>(lattice.size()) - 1))]);
}

/// Sum of 1..max_labels random carry ideals with degrees in [1, dmax].
inline MonomialIdeal random_invariant_ideal(std::mt19937_64& rng, const Ring& ring, Int dmax, int max_labels,
                                            std::vector<CarryIdealLabel>* labels_out = nullptr) {
  std::vector<CarryIdealLabel> labels;
  const int count = static_cast<int>(pick(rng, 1, max_labels));
  for (int i = 0; i < count; ++i) labels.push_back(random_label(rng, ring, 1, dmax));
  if (labels_out) *labels_out = labels;
  return ideal_from_labels(labels);
}

/// Partitions of d into at most n parts, padded with zeros to length n.
inline std::vector<Exponents> partitions(int n, Int d) {
  std::vector<Exponents> out;
  Exponents cur;
  std::function<void(Int, Int)> rec = [&](Int left, Int cap) {
    if (static_cast<int>(cur.size()) == n) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (Int part = std::min(left, cap); part >= 0; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

/// Every permutation of a partition: its symmetric-group orbit.
inline std::vector<Exponents> orbit(Exponents partition) {
  std::vector<Exponents> out;
  std::sort(partition.begin(), partition.end());
  do {
    out.push_back(partition);
  } while (std::next_permutation(partition.begin(), partition.end()));
  return out;
}

/// Calls visit on every ideal generated by 1..max_orbits distinct generator
/// orbits of degrees 1..dmax in n variables.
inline void for_each_orbit_ideal(const Ring& ring, Int dmax, int max_orbits,
                                 const std::function<void(const MonomialIdeal&)>& visit) {
  std::vector<Exponents> parts;
  for (Int d = 1; d <= dmax; ++d) {
    for (auto& part : partitions(ring.n(), d)) parts.push_back(std::move(part));
  }
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!chosen.empty()) {
      std::vector<Exponents> gens;
      for (std::size_t k : chosen) {
        auto o = orbit(parts[k]);
        gens.insert(gens.end(), o.begin(), o.end());
      }
      visit(MonomialIdeal(ring, std::move(gens)));
    }
    if (static_cast<int>(chosen.size()) == max_orbits) return;
    for (std::size_t k = start; k < parts.size(); ++k) {
      chosen.push_back(k);
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

} // namespace carry::testing
