#include "carry/gl2.hpp"

#include <algorithm>

#include "carry/error.hpp"

namespace carry {

void Character::add(Weight w, Int multiplicity) {
  if (multiplicity == 0) return;
  const Int value = checked_add(at(w), multiplicity);
  if (value == 0) {
    weights_.erase(w);
  } else {
    weights_[w] = value;
  }
}

Int Character::at(Weight w) const {
  const auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

Int Character::dimension() const {
  Int total = 0;
  for (const auto& [w, m] : weights_) total = checked_add(total, m);
  return total;
}

bool Character::is_swap_symmetric() const {
  for (const auto& [w, m] : weights_) {
    if (at({w.second, w.first}) != m) return false;
  }
  return true;
}

Character& Character::operator+=(const Character& other) {
  for (const auto& [w, m] : other.weights_) add(w, m);
  return *this;
}

Character& Character::operator-=(const Character& other) {
  for (const auto& [w, m] : other.weights_) add(w, -m);
  return *this;
}

Character operator*(const Character& a, const Character& b) {
  Character out;
  for (const auto& [u, m] : a.weights_) {
    for (const auto& [v, k] : b.weights_) {
      out.add({checked_add(u.first, v.first), checked_add(u.second, v.second)}, checked_mul(m, k));
    }
  }
  return out;
}

Character frobenius_twist(const Character& ch, Int q) {
  Character out;
  for (const auto& [w, m] : ch.weights()) out.add({checked_mul(w.first, q), checked_mul(w.second, q)}, m);
  return out;
}

Character determinant_twist(const Character& ch, Int k) {
  Character out;
  for (const auto& [w, m] : ch.weights()) out.add({checked_add(w.first, k), checked_add(w.second, k)}, m);
  return out;
}

Character monomial_character(std::span<const Exponents> monomials) {
  Character out;
  for (const auto& b : monomials) {
    if (b.size() != 2) throw ArgumentError("GL_2 characters need two-variable monomials");
    out.add({b[0], b[1]}, 1);
  }
  return out;
}

Character symmetric_power_character(Int d) {
  if (d < 0) throw ArgumentError("degree must be nonnegative");
  Character out;
  for (Int k = 0; k <= d; ++k) out.add({d - k, k}, 1);
  return out;
}

Character standard_character() {
  Character out;
  out.add({1, 0}, 1);
  out.add({0, 1}, 1);
  return out;
}

Character quotient_character(const MonomialIdeal& ideal, Int e) {
  if (ideal.n() != 2) throw ArgumentError("GL_2 characters need n = 2");
  if (e < 0) return {};
  const auto basis = ideal.standard_monomials(e);
  return monomial_character(basis);
}

Character simple_character(Weight lambda, Int p) {
  require_prime(p);
  if (lambda.first < lambda.second) {
    throw ArgumentError("L(" + std::to_string(lambda.first) + "," + std::to_string(lambda.second) +
                        ") is not dominant");
  }
  Character out;
  out.add({0, 0}, 1);
  Int rest = lambda.first - lambda.second;
  for (Int q = 1; rest > 0; rest /= p) {
    out = out * frobenius_twist(symmetric_power_character(rest % p), q);
    if (rest >= p) q = checked_mul(q, p);
  }
  return determinant_twist(out, lambda.second);
}

Int simple_dimension(Weight lambda, Int p) {
  require_prime(p);
  if (lambda.first < lambda.second) throw ArgumentError("weight is not dominant");
  Int dim = 1;
  for (Int rest = lambda.first - lambda.second; rest > 0; rest /= p) dim = checked_mul(dim, rest % p + 1);
  return dim;
}

GrothendieckClass::GrothendieckClass(Int p) : p_(p) { require_prime(p); }

void GrothendieckClass::add(Weight lambda, Int multiplicity) {
  if (lambda.first < lambda.second) throw ArgumentError("simple modules are indexed by dominant weights");
  if (multiplicity == 0) return;
  const Int value = checked_add(at(lambda), multiplicity);
  if (value == 0) {
    simples_.erase(lambda);
  } else {
    simples_[lambda] = value;
  }
}

Int GrothendieckClass::at(Weight lambda) const {
  const auto it = simples_.find(lambda);
  return it == simples_.end() ? 0 : it->second;
}

Int GrothendieckClass::dimension() const {
  Int total = 0;
  for (const auto& [lambda, m] : simples_) total = checked_add(total, checked_mul(m, simple_dimension(lambda, p_)));
  return total;
}

Character GrothendieckClass::character() const {
  Character out;
  for (const auto& [lambda, m] : simples_) {
    const Character simple = simple_character(lambda, p_);
    for (const auto& [w, k] : simple.weights()) out.add(w, checked_mul(m, k));
  }
  return out;
}

std::string to_string(const GrothendieckClass& cls) {
  if (cls.empty()) return "0";
  std::string out;
  for (auto it = cls.simples().rbegin(); it != cls.simples().rend(); ++it) {
    const auto& [lambda, m] = *it;
    const std::string term =
        std::to_string(m < 0 ? -m : m) + "*L(" + std::to_string(lambda.first) + "," + std::to_string(lambda.second) + ")";
    if (out.empty()) {
      out = (m < 0 ? "-" : "") + term;
    } else {
      out += (m < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

GrothendieckClass decompose_character(const Character& ch, Int p) {
  GrothendieckClass out(p);
  Character rest = ch;
  // Every simple character has its lexicographic maximum at lambda and
  // keeps w_1 + w_2 fixed, so each step lowers the top weight of one degree
  // and a dominant top weight in degree D has w_1 in [D/2, max w_1].
  std::map<Int, Int> top_first;
  for (const auto& [w, m] : ch.weights()) {
    auto& slot = top_first.try_emplace(w.first + w.second, w.first).first->second;
    slot = std::max(slot, w.first);
  }
  Int budget = 0;
  for (const auto& [degree, first] : top_first) {
    const Int floor_half = degree >= 0 ? (degree + 1) / 2 : -((-degree) / 2);
    budget = checked_add(budget, std::max<Int>(0, first - floor_half + 1));
  }
  for (Int steps = 0; !rest.empty(); ++steps) {
    if (steps > budget) throw MalformedCharacter("character peeling did not terminate");
    const auto [lambda, m] = *rest.weights().rbegin();
    if (lambda.first < lambda.second) {
      throw MalformedCharacter("top weight (" + std::to_string(lambda.first) + "," + std::to_string(lambda.second) +
                               ") is not dominant");
    }
    out.add(lambda, m);
    const Character simple = simple_character(lambda, p);
    for (const auto& [w, k] : simple.weights()) rest.add(w, -checked_mul(m, k));
  }
  return out;
}

GrothendieckClass tor_class(const MonomialIdeal& ideal, int i, Int j) {
  if (ideal.n() != 2) throw ArgumentError("tor_class is implemented for n = 2");
  if (i != 1 && i != 2) throw ArgumentError("tor_class handles i = 1 and i = 2");
  if (!ideal.generated_in_single_degree()) {
    throw PreconditionError("tor_class needs an ideal generated in a single degree");
  }
  const Int d = ideal.min_generator_degree();
  const Character generators = j == d ? monomial_character(ideal.generators()) : Character{};
  if (i == 1) return decompose_character(generators, ideal.p());

  Character ch = determinant_twist(quotient_character(ideal, j - 2), 1);
  ch -= quotient_character(ideal, j - 1) * standard_character();
  ch += quotient_character(ideal, j);
  ch += generators;
  if (j == 0) ch.add({0, 0}, -1);
  return decompose_character(ch, ideal.p());
}

bool weight_screen(const Character& ch, Int bound) {
  for (const auto& [w, m] : ch.weights()) {
    if (std::max(w.first, w.second) == bound) return false;
  }
  return true;
}

} // namespace carry
