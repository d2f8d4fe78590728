#pragma once

#include <optional>
#include <span>
#include <vector>

#include "carry/carry_pattern.hpp"
#include "carry/monomial.hpp"

namespace carry {

/// A nonzero proper monomial ideal, stored as its minimal generators.
///
/// Generators are pruned to an antichain under divisibility and kept in
/// canonical order (degree ascending, then lexicographically decreasing).
/// The zero ideal and the unit ideal are rejected with ArgumentError.
class MonomialIdeal {
public:
  MonomialIdeal(Ring ring, std::vector<Exponents> generators);

  const Ring& ring() const noexcept { return ring_; }
  int n() const noexcept { return ring_.n(); }
  Int p() const noexcept { return ring_.p(); }
  const std::vector<Exponents>& generators() const noexcept { return generators_; }

  Int min_generator_degree() const;
  Int max_generator_degree() const;
  bool generated_in_single_degree() const { return min_generator_degree() == max_generator_degree(); }

  /// Membership of the monomial x^b.
  bool contains(std::span<const Int> b) const;
  /// Contains every generator of other.
  bool contains(const MonomialIdeal& other) const;

  /// Monomial basis of I_d.
  std::vector<Exponents> graded_piece(Int d) const;
  /// Monomial basis of (S/I)_d.
  std::vector<Exponents> standard_monomials(Int d) const;

  /// Exponents a_i of the pure powers x_i^{a_i} among the generators, or
  /// nullopt when some variable has none (I is not primary to the maximal
  /// ideal and S/I is infinite-dimensional).
  std::optional<Exponents> pure_powers() const;

  /// Smallest e with I_e = S_e. At most sum (a_i - 1) + 1 over the pure
  /// powers, and at most n(d_1 - 1) + 1 for invariant ideals. Throws
  /// PreconditionError if some variable has no pure power.
  Int saturation_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  Ring ring_;
  std::vector<Exponents> generators_;
};

/// Removes generators divisible by another one and sorts canonically.
std::vector<Exponents> minimalize(std::vector<Exponents> generators);

/// The maximal ideal <x_1, ..., x_n>.
MonomialIdeal maximal_ideal(const Ring& ring);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^k for k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, Int k);
/// I^{[p^e]}: every generator raised to the p^e-th power. Requires e >= 1.
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, Int e);

} // namespace carry
