#pragma once

// Characters of GL_2 in characteristic p and the Grothendieck group they
// generate. Simple modules L(a,b) get their characters from the Steinberg
// tensor product formula, and arbitrary characters are split into simples
// by repeatedly peeling off the lexicographically largest weight.

#include <map>
#include <span>
#include <string>
#include <utility>

#include "carry/monomial_ideal.hpp"

namespace carry {

/// Torus weight (w_1, w_2).
using Weight = std::pair<Int, Int>;

/// Finite weight-multiplicity map. Multiplicities may be negative so that
/// alternating sums can be formed; zero entries are never stored.
class Character {
public:
  Character() = default;

  void add(Weight w, Int multiplicity);
  Int at(Weight w) const;
  const std::map<Weight, Int>& weights() const noexcept { return weights_; }
  bool empty() const noexcept { return weights_.empty(); }

  /// Sum of multiplicities.
  Int dimension() const;
  /// Invariant under (w_1, w_2) -> (w_2, w_1).
  bool is_swap_symmetric() const;

  Character& operator+=(const Character& other);
  Character& operator-=(const Character& other);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  /// Tensor product: convolution of the weight maps.
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character&, const Character&) = default;

private:
  std::map<Weight, Int> weights_;
};

/// Weights scaled by q (the Frobenius twist M^{[q]} when q is a power of p).
Character frobenius_twist(const Character& ch, Int q);
/// Tensor with det^k: every weight shifted by (k, k).
Character determinant_twist(const Character& ch, Int k);

/// One weight per monomial x^{b_1} y^{b_2}.
Character monomial_character(std::span<const Exponents> monomials);
/// S_d, weights (d - k, k) for k = 0..d.
Character symmetric_power_character(Int d);
/// The natural representation k^2.
Character standard_character();
/// (S/I)_e for a two-variable monomial ideal.
Character quotient_character(const MonomialIdeal& ideal, Int e);

/// L(lambda) for lambda_1 >= lambda_2: det^{lambda_2} tensored with the
/// Steinberg product of L(a_i, 0)^{[p^i]} over the base-p digits a_i of
/// lambda_1 - lambda_2. Throws ArgumentError for a non-dominant weight.
Character simple_character(Weight lambda, Int p);

/// Product of (a_i + 1) over the base-p digits of lambda_1 - lambda_2.
Int simple_dimension(Weight lambda, Int p);

/// Integer combination of simple modules [L(lambda)] in characteristic p.
class GrothendieckClass {
public:
  explicit GrothendieckClass(Int p);

  Int p() const noexcept { return p_; }
  void add(Weight lambda, Int multiplicity);
  Int at(Weight lambda) const;
  const std::map<Weight, Int>& simples() const noexcept { return simples_; }
  bool empty() const noexcept { return simples_.empty(); }

  /// Sum of multiplicity times dim L(lambda).
  Int dimension() const;
  /// The character this class stands for.
  Character character() const;

  friend bool operator==(const GrothendieckClass&, const GrothendieckClass&) = default;

private:
  Int p_;
  std::map<Weight, Int> simples_;
};

/// Terms "k*L(a,b)" joined by " + " or " - ", largest weight first in
/// lexicographic order (which refines dominance in each degree). The empty
/// class prints as "0".
std::string to_string(const GrothendieckClass& cls);

/// Peels simple characters off at the lexicographically largest remaining
/// weight until nothing is left. Throws MalformedCharacter if that weight is
/// ever non-dominant.
GrothendieckClass decompose_character(const Character& ch, Int p);

/// [Tor_i^S(S/I, k)_j] for i in {1, 2} and a two-variable ideal generated in
/// a single degree. Tor_2 comes from the Koszul strand
/// (S/I)_{j-2} (x) det -> (S/I)_{j-1} (x) k^2 -> (S/I)_j, whose Euler
/// characteristic also involves Tor_1 (only in the generating degree) and
/// Tor_0 (only in degree 0).
GrothendieckClass tor_class(const MonomialIdeal& ideal, int i, Int j);

/// True iff no weight of ch has max(w_1, w_2) equal to bound.
bool weight_screen(const Character& ch, Int bound);

} // namespace carry
