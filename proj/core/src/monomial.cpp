#include "carry/monomial.hpp"

#include <algorithm>
#include <functional>

#include "carry/error.hpp"

namespace carry {

Int total_degree(std::span<const Int> b) {
  Int sum = 0;
  for (Int e : b) sum = checked_add(sum, e);
  return sum;
}

bool divides(std::span<const Int> a, std::span<const Int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void for_each_monomial(int n, Int d, const std::function<void(const Exponents&)>& visit) {
  if (n < 1) throw ArgumentError("need at least one variable");
  if (d < 0) return;
  Exponents b(static_cast<std::size_t>(n), 0);
  // Recursive fill: position i takes values from `left` down to 0.
  std::function<void(std::size_t, Int)> fill = [&](std::size_t i, Int left) {
    if (i + 1 == b.size()) {
      b[i] = left;
      visit(b);
      return;
    }
    for (Int v = left; v >= 0; --v) {
      b[i] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, d);
}

std::vector<Exponents> monomials_of_degree(int n, Int d) {
  std::vector<Exponents> out;
  for_each_monomial(n, d, [&](const Exponents& b) { out.push_back(b); });
  return out;
}

Int monomial_count(int n, Int d) {
  // C(d + n - 1, n - 1) built incrementally; each partial product is itself a
  // binomial coefficient so the division is exact.
  Int result = 1;
  for (Int k = 1; k < n; ++k) {
    result = checked_mul(result, d + k) / k;
  }
  return result;
}

bool canonical_less(const Exponents& a, const Exponents& b) {
  const Int da = total_degree(a);
  const Int db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

Exponents sorted_partition(Exponents b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  return b;
}

} // namespace carry
