#pragma once

// How carry classes move when a monomial is multiplied by one variable, and
// the containment test between carry ideals that this yields by induction on
// the degree gap.
//
// Every operation here needs n >= 2: with one variable every digit position
// can be full and the first-non-full statistic is undefined.

#include <cstddef>
#include <optional>
#include <span>

#include "carry/carry_pattern.hpp"

namespace carry {

/// Carry pattern of x_i * x^b (variable index i is zero-based), from the
/// closed form (c,0) + (1^{fl(d)}) - (1^{fl(b_i)}) in degree d+1.
CarryPattern carry_after_multiply(const Ring& ring, std::span<const Int> b, std::size_t i);

/// Smallest j in [0, M] with d_j + p c_{j+1} - c_j < n(p-1): the least
/// floor statistic of any exponent in a monomial of carry class c.
std::size_t sharp(const CarryPattern& c);

/// c^1 in C(d+1,n,p): the maximal carry reachable by multiplying a monomial
/// of class c by a variable. S_1 * T_{c,d} = T_{c^1,d+1}.
CarryPattern successor(const CarryPattern& c);

struct ContainmentResult {
  bool contained = false;
  /// Degree at which the iterated successor reached the top of its lattice,
  /// if it did before (or at) the target degree.
  std::optional<Int> saturation_degree;
  /// Successor steps actually taken.
  Int steps = 0;
};

/// Largest allowed degree gap for the iterated successor.
inline constexpr Int kMaxContainmentGap = 1'000'000;

/// Whether I_{c2,d2} is contained in I_{c,d} (requires d2 >= d and the same
/// ring). Every monomial of degree n(d-1)+1 is divisible by a pure d-th
/// power, which I_{c,d} always contains, so gaps past that point are
/// answered without iterating.
ContainmentResult containment(const CarryPattern& c, const CarryPattern& c2);
bool contains(const CarryPattern& c, const CarryPattern& c2);

} // namespace carry
