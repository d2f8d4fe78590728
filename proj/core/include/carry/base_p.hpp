#pragma once

// Exact base-p digit arithmetic. All values are 64-bit signed integers that
// are required to be nonnegative; anything that would overflow throws
// OverflowError instead of wrapping.

#include <cstdint>
#include <span>
#include <vector>

namespace carry {

using Int = std::int64_t;

bool is_prime(Int value);

/// Throws InvalidCharacteristic unless p is a prime.
void require_prime(Int p);

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
/// base^exp, checked.
Int checked_pow(Int base, Int exp);

/// Little-endian base-p digits of a nonnegative integer.
///
/// Zero is the empty digit sequence. Reads past the top digit return 0, so
/// callers can index freely.
class BasePExpansion {
public:
  BasePExpansion(Int value, Int p);

  Int prime() const noexcept { return p_; }
  Int value() const noexcept { return value_; }
  const std::vector<Int>& digits() const noexcept { return digits_; }

  /// Digit j, or 0 when j is past the top.
  Int digit(std::size_t j) const noexcept {
    return j < digits_.size() ? digits_[j] : 0;
  }

  /// Index of the top nonzero digit; 0 for values below p (including 0).
  std::size_t top_index() const noexcept {
    return digits_.empty() ? 0 : digits_.size() - 1;
  }

  bool is_zero() const noexcept { return digits_.empty(); }

  friend bool operator==(const BasePExpansion&, const BasePExpansion&) = default;

private:
  Int value_;
  Int p_;
  std::vector<Int> digits_;
};

BasePExpansion expand(Int value, Int p);

/// Inverse of expand; accepts unnormalized digit lists.
Int digits_value(std::span<const Int> digits, Int p);

/// min{ j : digit_j != p-1 }, treating digits past the top as 0.
std::size_t floor_stat(Int value, Int p);

/// Binomial coefficient C(top, k) mod p by Lucas' theorem.
Int binomial_mod_p(Int top, Int k, Int p);

/// top! / prod(parts_i!) mod p, evaluated digitwise: the coefficient is
/// nonzero mod p iff no carries occur when adding the parts in base p, and
/// then equals the product of the digitwise multinomials.
Int multinomial_mod_p(Int top, std::span<const Int> parts, Int p);

} // namespace carry
