#pragma once

// GL_n-invariant monomial ideals as sums of carry ideals I_{c,d}, and the
// round trip between an ideal's generators and its carry-ideal labels.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carry/carry_pattern.hpp"
#include "carry/error.hpp"
#include "carry/monomial_ideal.hpp"

namespace carry {

/// A pair (c, d) with c in C(d,n,p), naming the carry ideal I_{c,d}.
class CarryIdealLabel {
public:
  /// Throws ArgumentError unless c is a member of its lattice.
  explicit CarryIdealLabel(CarryPattern c);
  CarryIdealLabel(const Ring& ring, Int d, std::vector<Int> c);

  const CarryPattern& pattern() const noexcept { return c_; }
  const Ring& ring() const noexcept { return c_.context().ring(); }
  Int degree() const noexcept { return c_.degree(); }

  friend bool operator==(const CarryIdealLabel&, const CarryIdealLabel&) = default;
  friend bool operator<(const CarryIdealLabel& a, const CarryIdealLabel& b) { return a.c_ < b.c_; }

private:
  CarryPattern c_;
};

/// "d=<d> c=(c1,...,cM)"
std::string to_string(const CarryIdealLabel& label);

/// A set of labels B, kept sorted by degree and then by pattern.
class Decomposition {
public:
  Decomposition(Ring ring, std::vector<CarryIdealLabel> labels);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<CarryIdealLabel>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  /// B_d, the labels of degree d.
  std::vector<CarryIdealLabel> in_degree(Int d) const;
  /// Degrees that carry at least one label, ascending.
  std::vector<Int> degrees() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

private:
  Ring ring_;
  std::vector<CarryIdealLabel> labels_;
};

/// Why an ideal fails to be invariant: a monomial of I and a monomial of the
/// same degree that the group action forces into I but which is absent.
struct InvarianceWitness {
  Int degree = 0;
  Exponents present;
  Exponents missing;
  /// True when both monomials share a carry class (the class is split by I);
  /// false when the missing class lies strictly below the present one.
  bool split_class = false;
};

std::string describe(const InvarianceWitness& w, const Ring& ring);

struct InvarianceReport {
  bool invariant = true;
  std::optional<InvarianceWitness> witness;
  explicit operator bool() const noexcept { return invariant; }
};

class NotInvariant : public Error {
public:
  NotInvariant(InvarianceWitness witness, const Ring& ring);
  const InvarianceWitness& witness() const noexcept { return witness_; }

private:
  InvarianceWitness witness_;
};

/// I_{c,d}: generated by the degree-d monomials whose carry pattern is <= c.
MonomialIdeal carry_ideal(const CarryIdealLabel& label);

/// I_B, the sum of the labelled carry ideals. Throws ArgumentError on an
/// empty set or labels from different rings.
MonomialIdeal ideal_from_labels(std::span<const CarryIdealLabel> labels);
MonomialIdeal ideal_from_labels(const Decomposition& b);

/// Checks, degree by degree up to the largest generator degree, that I_d is
/// a union of whole carry classes whose patterns form an order-closed set.
InvarianceReport is_invariant(const MonomialIdeal& ideal);

/// Independent check through the group action: applies every elementary
/// matrix x_j -> x_j + t x_i (t in F_p nonzero) to each generator and tests
/// that every monomial surviving mod p lies in I. Generators of degree above
/// generator_cap are skipped when a cap is given.
bool is_invariant_oracle(const MonomialIdeal& ideal, std::optional<Int> generator_cap = std::nullopt);

/// Labels B with I = I_B, computed as B_d = max(X_d \ Y_d). Throws
/// NotInvariant when I is not invariant. In one variable the answer is the
/// single label (0...0, d) for I = <x^d>.
Decomposition decompose(const MonomialIdeal& ideal);

/// (c^{p^e}, d p^e): e zeros prepended to c. Requires e >= 1.
CarryIdealLabel frobenius_label(const CarryIdealLabel& label, Int e);

} // namespace carry
