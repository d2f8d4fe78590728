#include "carry/monomial_ideal.hpp"

#include <algorithm>
#include <string>

#include "carry/error.hpp"

namespace carry {

std::vector<Exponents> minimalize(std::vector<Exponents> generators) {
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // After sorting by degree a generator can only be divided by an earlier one.
  std::vector<Exponents> kept;
  for (auto& g : generators) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponents> generators) : ring_(ring) {
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(ring.n())) {
      throw ArgumentError("generator has " + std::to_string(g.size()) + " exponents, ring has " +
                          std::to_string(ring.n()) + " variables");
    }
    for (Int e : g) {
      if (e < 0) throw ArgumentError("exponents must be nonnegative");
    }
  }
  generators_ = minimalize(std::move(generators));
  if (generators_.empty()) throw ArgumentError("the zero ideal is not supported");
  if (total_degree(generators_.front()) == 0) throw ArgumentError("the unit ideal is not supported");
}

Int MonomialIdeal::min_generator_degree() const { return total_degree(generators_.front()); }

Int MonomialIdeal::max_generator_degree() const { return total_degree(generators_.back()); }

bool MonomialIdeal::contains(std::span<const Int> b) const {
  for (const auto& g : generators_) {
    if (divides(g, b)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (!(ring_ == other.ring_)) return false;
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::vector<Exponents> MonomialIdeal::graded_piece(Int d) const {
  std::vector<Exponents> out;
  for_each_monomial(n(), d, [&](const Exponents& b) {
    if (contains(b)) out.push_back(b);
  });
  return out;
}

std::vector<Exponents> MonomialIdeal::standard_monomials(Int d) const {
  std::vector<Exponents> out;
  for_each_monomial(n(), d, [&](const Exponents& b) {
    if (!contains(b)) out.push_back(b);
  });
  return out;
}

std::optional<Exponents> MonomialIdeal::pure_powers() const {
  Exponents powers(static_cast<std::size_t>(n()), 0);
  for (const auto& g : generators_) {
    std::size_t support = 0;
    std::size_t where = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) {
        ++support;
        where = i;
      }
    }
    if (support == 1) powers[where] = g[where];
  }
  for (Int a : powers) {
    if (a == 0) return std::nullopt;
  }
  return powers;
}

Int MonomialIdeal::saturation_degree() const {
  const auto powers = pure_powers();
  if (!powers) throw PreconditionError("ideal does not contain a power of every variable");
  Int bound = 1;
  for (Int a : *powers) bound = checked_add(bound, a - 1);
  for (Int e = min_generator_degree(); e < bound; ++e) {
    bool full = true;
    for_each_monomial(n(), e, [&](const Exponents& b) {
      if (full && !contains(b)) full = false;
    });
    if (full) return e;
  }
  return bound;
}

MonomialIdeal maximal_ideal(const Ring& ring) {
  std::vector<Exponents> gens;
  for (int i = 0; i < ring.n(); ++i) {
    Exponents e(static_cast<std::size_t>(ring.n()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw ArgumentError("ideals live in different rings");
}

} // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Exponents> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Exponents> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      Exponents e(g.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(g[i], h[i]);
      gens.push_back(std::move(e));
    }
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, Int k) {
  if (k < 1) throw ArgumentError("ideal powers need k >= 1");
  MonomialIdeal out = ideal;
  for (Int i = 1; i < k; ++i) out = product(out, ideal);
  return out;
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, Int e) {
  if (e < 1) throw ArgumentError("Frobenius powers need e >= 1");
  const Int q = checked_pow(ideal.p(), e);
  std::vector<Exponents> gens = ideal.generators();
  for (auto& g : gens) {
    for (Int& x : g) x = checked_mul(x, q);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

} // namespace carry
