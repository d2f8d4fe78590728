#include "carry/base_p.hpp"

#include <string>

#include "carry/error.hpp"

namespace carry {

namespace {

Int mul_mod(Int a, Int b, Int m) {
  return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

Int pow_mod(Int base, Int exp, Int m) {
  Int result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// C(n, k) mod p for 0 <= k <= n < p.
Int small_binomial(Int n, Int k, Int p) {
  if (k < 0 || k > n) return 0;
  Int num = 1;
  Int den = 1;
  for (Int i = 0; i < k; ++i) {
    num = mul_mod(num, n - i, p);
    den = mul_mod(den, i + 1, p);
  }
  return mul_mod(num, pow_mod(den, p - 2, p), p);
}

} // namespace

bool is_prime(Int value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (Int f = 3; f <= value / f; f += 2) {
    if (value % f == 0) return false;
  }
  return true;
}

void require_prime(Int p) {
  if (!is_prime(p)) {
    throw InvalidCharacteristic("characteristic must be a prime, got " + std::to_string(p));
  }
}

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Int checked_pow(Int base, Int exp) {
  if (exp < 0) throw ArgumentError("negative exponent");
  Int result = 1;
  for (Int i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

BasePExpansion::BasePExpansion(Int value, Int p) : value_(value), p_(p) {
  require_prime(p);
  if (value < 0) throw ArgumentError("cannot expand a negative value");
  for (Int v = value; v > 0; v /= p) digits_.push_back(v % p);
}

BasePExpansion expand(Int value, Int p) { return BasePExpansion(value, p); }

Int digits_value(std::span<const Int> digits, Int p) {
  Int value = 0;
  for (std::size_t j = digits.size(); j-- > 0;) {
    value = checked_add(checked_mul(value, p), digits[j]);
  }
  return value;
}

std::size_t floor_stat(Int value, Int p) {
  const BasePExpansion e(value, p);
  std::size_t j = 0;
  while (e.digit(j) == p - 1) ++j;
  return j;
}

Int binomial_mod_p(Int top, Int k, Int p) {
  require_prime(p);
  if (top < 0 || k < 0 || k > top) return 0;
  Int result = 1;
  while (top > 0 || k > 0) {
    const Int t = top % p;
    const Int s = k % p;
    if (s > t) return 0;
    result = mul_mod(result, small_binomial(t, s, p), p);
    top /= p;
    k /= p;
  }
  return result;
}

Int multinomial_mod_p(Int top, std::span<const Int> parts, Int p) {
  require_prime(p);
  Int sum = 0;
  for (Int part : parts) {
    if (part < 0) throw ArgumentError("multinomial parts must be nonnegative");
    sum = checked_add(sum, part);
  }
  if (sum != top) {
    throw ArgumentError("multinomial parts sum to " + std::to_string(sum) + ", expected " +
                        std::to_string(top));
  }

  std::vector<Int> rest(parts.begin(), parts.end());
  Int result = 1;
  while (top > 0) {
    const Int t = top % p;
    Int remaining = t;
    Int digit_sum = 0;
    for (Int& r : rest) {
      const Int s = r % p;
      digit_sum += s;
      if (digit_sum > t) return 0; // a carry happens in this column
      result = mul_mod(result, small_binomial(remaining, s, p), p);
      remaining -= s;
      r /= p;
    }
    if (digit_sum != t) return 0;
    top /= p;
  }
  return result;
}

} // namespace carry
