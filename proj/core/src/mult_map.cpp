#include "carry/mult_map.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "carry/error.hpp"

namespace carry {

namespace {

void require_two_variables(const Ring& ring) {
  if (ring.n() < 2) {
    throw DegenerateContext(
        "the multiplication map is only defined for n >= 2; in one variable every ideal is <x^d>");
  }
}

// (c_1..c_M, 0) + (1^{plus}) - (1^{minus}), re-normalized to the length of
// the degree d+1 context.
CarryPattern shifted(const CarryPattern& c, std::size_t plus, std::size_t minus) {
  const Context next(c.context().ring(), checked_add(c.degree(), 1));
  std::vector<Int> v(c.entries());
  v.push_back(0);
  for (std::size_t k = 0; k < plus && k < v.size(); ++k) v[k] += 1;
  for (std::size_t k = 0; k < minus && k < v.size(); ++k) v[k] -= 1;
  if (next.length() == c.size()) {
    if (v.back() != 0) {
      throw std::logic_error("successor spilled past the top digit of d+1 for " + to_string(c));
    }
    v.pop_back();
  }
  for (Int e : v) {
    if (e < 0) throw std::logic_error("negative carry produced from " + to_string(c));
  }
  return CarryPattern(next, std::move(v));
}

} // namespace

CarryPattern carry_after_multiply(const Ring& ring, std::span<const Int> b, std::size_t i) {
  require_two_variables(ring);
  if (i >= static_cast<std::size_t>(ring.n())) {
    throw ArgumentError("variable index " + std::to_string(i) + " out of range for n=" +
                        std::to_string(ring.n()));
  }
  const CarryPattern c = carry_pattern(ring, b);
  return shifted(c, floor_stat(c.degree(), ring.p()), floor_stat(b[i], ring.p()));
}

std::size_t sharp(const CarryPattern& c) {
  const Context& ctx = c.context();
  require_two_variables(ctx.ring());
  const Int p = ctx.p();
  const Int full = static_cast<Int>(ctx.n()) * (p - 1);
  for (std::size_t j = 0; j <= c.size(); ++j) {
    if (ctx.digit(j) + p * c.at(j + 1) - c.at(j) < full) return j;
  }
  throw DegenerateContext("every digit position of " + to_string(c) + " is full");
}

CarryPattern successor(const CarryPattern& c) {
  return shifted(c, floor_stat(c.degree(), c.context().p()), sharp(c));
}

ContainmentResult containment(const CarryPattern& c, const CarryPattern& c2) {
  const Ring& ring = c.context().ring();
  if (!(ring == c2.context().ring())) {
    throw ArgumentError("containment needs both carry ideals in the same ring");
  }
  const Int d = c.degree();
  const Int d2 = c2.degree();
  if (d2 < d) throw ArgumentError("containment needs d2 >= d");
  require_two_variables(ring);

  ContainmentResult result;
  if (d2 == d) {
    result.contained = leq(c2, c);
    return result;
  }
  // Saturation: every monomial of degree n(d-1)+1 is divisible by some x_i^d.
  const Int saturated_from = d == 0 ? 0 : checked_add(checked_mul(ring.n(), d - 1), 1);
  if (d2 >= saturated_from) {
    result.contained = true;
    result.saturation_degree = saturated_from;
    return result;
  }
  if (d2 - d > kMaxContainmentGap) {
    throw ArgumentError("degree gap " + std::to_string(d2 - d) + " exceeds the iteration cap");
  }

  CarryPattern current = c;
  while (current.degree() < d2) {
    current = successor(current);
    ++result.steps;
    if (current == max_carry(current.context())) {
      result.saturation_degree = current.degree();
      result.contained = true;
      return result;
    }
  }
  result.contained = leq(c2, current);
  return result;
}

bool contains(const CarryPattern& c, const CarryPattern& c2) { return containment(c, c2).contained; }

} // namespace carry
