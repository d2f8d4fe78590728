#pragma once

// Carry patterns of monomials and the finite lattice C(d,n,p) they form.
//
// For a monomial x^b of degree d, entry c_l of its carry pattern is the amount
// carried into the p^l column when the exponents b_1, ..., b_n are added in
// base p. Patterns have fixed length M, the top digit index of d, so degrees
// below p carry the empty pattern.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "carry/base_p.hpp"
#include "carry/monomial.hpp"

namespace carry {

/// Polynomial ring k[x_1..x_n] over a field of characteristic p.
class Ring {
public:
  /// Throws InvalidCharacteristic for non-prime p, ArgumentError for n < 1.
  Ring(int n, Int p);

  int n() const noexcept { return n_; }
  Int p() const noexcept { return p_; }

  friend bool operator==(const Ring&, const Ring&) = default;
  friend auto operator<=>(const Ring&, const Ring&) = default;

private:
  int n_;
  Int p_;
};

/// A ring together with a degree d.
class Context {
public:
  Context(Ring ring, Int degree);
  Context(int n, Int p, Int degree) : Context(Ring(n, p), degree) {}

  const Ring& ring() const noexcept { return ring_; }
  int n() const noexcept { return ring_.n(); }
  Int p() const noexcept { return ring_.p(); }
  Int degree() const noexcept { return degree_; }
  const BasePExpansion& digits() const noexcept { return digits_; }
  Int digit(std::size_t j) const noexcept { return digits_.digit(j); }

  /// Number of entries of a carry pattern: the top digit index of d.
  std::size_t length() const noexcept { return digits_.top_index(); }

  /// floor(d / p^i): the upper bound on entry c_i.
  Int tail_value(std::size_t i) const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.ring_ == b.ring_ && a.degree_ == b.degree_;
  }

private:
  Ring ring_;
  Int degree_;
  BasePExpansion digits_;
};

/// A carry pattern (c_1, ..., c_M) attached to a degree context.
///
/// Construction checks shape only (length M, nonnegative entries); use
/// CarryPattern::checked or is_valid_carry for lattice membership.
class CarryPattern {
public:
  CarryPattern(Context ctx, std::vector<Int> entries);

  /// Throws ArgumentError unless entries form a member of C(d,n,p).
  static CarryPattern checked(Context ctx, std::vector<Int> entries);

  const Context& context() const noexcept { return ctx_; }
  Int degree() const noexcept { return ctx_.degree(); }
  const std::vector<Int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// c_i with the convention c_i = 0 outside 1..M (one-based).
  Int at(std::size_t i) const noexcept {
    return (i >= 1 && i <= entries_.size()) ? entries_[i - 1] : 0;
  }

  friend bool operator==(const CarryPattern& a, const CarryPattern& b) {
    return a.ctx_ == b.ctx_ && a.entries_ == b.entries_;
  }
  /// Total order used for canonical listings: (ring, degree, entries lex).
  friend bool operator<(const CarryPattern& a, const CarryPattern& b);

private:
  Context ctx_;
  std::vector<Int> entries_;
};

/// Canonical text form, e.g. "(1,0,1)"; the empty pattern is "()".
std::string to_string(const CarryPattern& c);
std::string format_entries(std::span<const Int> entries);
/// Parses "(1,0,1)" or "()" into raw entries.
std::vector<Int> parse_entries(const std::string& text);

/// Carry pattern of x^b, computed by digitwise addition with carries.
CarryPattern carry_pattern(const Ring& ring, std::span<const Int> b);
/// Same, with the degree fixed by ctx; throws ArgumentError on mismatch.
CarryPattern carry_pattern(const Context& ctx, std::span<const Int> b);

/// Membership in C(d,n,p) by the two inequality families
///   0 <= c_i <= floor(d / p^i)  and  0 <= d_i + p c_{i+1} - c_i <= n(p-1),
/// with c_0 = c_{M+1} = 0.
bool is_valid_carry(std::span<const Int> c, const Context& ctx);

/// Entrywise order c <= c2. Throws ArgumentError on context mismatch.
bool leq(const CarryPattern& c, const CarryPattern& c2);
CarryPattern lcm(const CarryPattern& c, const CarryPattern& c2);
CarryPattern gcd(const CarryPattern& c, const CarryPattern& c2);

/// Every member of C(d,n,p), in lexicographic order of entries.
std::vector<CarryPattern> carry_lattice(const Context& ctx);

CarryPattern min_carry(const Context& ctx);
CarryPattern max_carry(const Context& ctx);

/// Covering relations (lower, upper) of C(d,n,p), as indices into
/// carry_lattice(ctx).
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const Context& ctx);

/// Graphviz rendering of the Hasse diagram.
std::string hasse_dot(const Context& ctx);

/// {c' in C(d,n,p) : c' <= c for some c in patterns}, sorted.
std::vector<CarryPattern> down_closure(std::span<const CarryPattern> patterns, const Context& ctx);
bool is_order_closed(std::span<const CarryPattern> patterns, const Context& ctx);
/// The <=-maximal members of patterns, sorted and deduplicated.
std::vector<CarryPattern> maximal_elements(std::span<const CarryPattern> patterns);

/// Degree-d exponent vectors whose carry pattern is <= c: the monomial basis
/// of T_{c,d}. Lexicographically decreasing.
std::vector<Exponents> monomials_with_carry_leq(const CarryPattern& c);

} // namespace carry
