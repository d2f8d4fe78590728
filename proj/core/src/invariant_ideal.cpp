#include "carry/invariant_ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "carry/base_p.hpp"

namespace carry {

CarryIdealLabel::CarryIdealLabel(CarryPattern c) : c_(std::move(c)) {
  if (!is_valid_carry(c_.entries(), c_.context())) {
    throw ArgumentError(to_string(c_) + " is not a carry pattern of degree " +
                        std::to_string(c_.degree()) + " for n=" + std::to_string(c_.context().n()) +
                        " p=" + std::to_string(c_.context().p()));
  }
}

CarryIdealLabel::CarryIdealLabel(const Ring& ring, Int d, std::vector<Int> c)
    : CarryIdealLabel(CarryPattern(Context(ring, d), std::move(c))) {}

std::string to_string(const CarryIdealLabel& label) {
  return "d=" + std::to_string(label.degree()) + " c=" + to_string(label.pattern());
}

Decomposition::Decomposition(Ring ring, std::vector<CarryIdealLabel> labels)
    : ring_(ring), labels_(std::move(labels)) {
  for (const auto& l : labels_) {
    if (!(l.ring() == ring_)) throw ArgumentError("label " + to_string(l) + " is from another ring");
  }
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

std::vector<CarryIdealLabel> Decomposition::in_degree(Int d) const {
  std::vector<CarryIdealLabel> out;
  for (const auto& l : labels_) {
    if (l.degree() == d) out.push_back(l);
  }
  return out;
}

std::vector<Int> Decomposition::degrees() const {
  std::vector<Int> out;
  for (const auto& l : labels_) {
    if (out.empty() || out.back() != l.degree()) out.push_back(l.degree());
  }
  return out;
}

namespace {

std::string monomial_text(const Exponents& b) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += b.size() <= 4 ? std::string(names[i]) : "x" + std::to_string(i + 1);
    if (b[i] > 1) out += "^" + std::to_string(b[i]);
  }
  return out.empty() ? "1" : out;
}

} // namespace

std::string describe(const InvarianceWitness& w, const Ring& ring) {
  std::ostringstream out;
  const CarryPattern cp = carry_pattern(ring, w.present);
  const CarryPattern cm = carry_pattern(ring, w.missing);
  out << "degree " << w.degree << ": " << monomial_text(w.present) << " (carry " << to_string(cp)
      << ") is in I but " << monomial_text(w.missing) << " (carry " << to_string(cm) << ") is not";
  if (w.split_class) out << "; the carry class is split";
  return out.str();
}

NotInvariant::NotInvariant(InvarianceWitness witness, const Ring& ring)
    : Error("ideal is not GL_n-invariant: " + describe(witness, ring)), witness_(std::move(witness)) {}

MonomialIdeal carry_ideal(const CarryIdealLabel& label) {
  return MonomialIdeal(label.ring(), monomials_with_carry_leq(label.pattern()));
}

MonomialIdeal ideal_from_labels(std::span<const CarryIdealLabel> labels) {
  if (labels.empty()) throw ArgumentError("an empty label set gives the zero ideal");
  const Ring ring = labels.front().ring();
  std::vector<Exponents> gens;
  for (const auto& l : labels) {
    if (!(l.ring() == ring)) throw ArgumentError("labels come from different rings");
    auto piece = monomials_with_carry_leq(l.pattern());
    gens.insert(gens.end(), std::make_move_iterator(piece.begin()), std::make_move_iterator(piece.end()));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal ideal_from_labels(const Decomposition& b) { return ideal_from_labels(b.labels()); }

namespace {

// Per carry class in one degree: how many of its monomials lie in I, and a
// sample from each side.
struct Fiber {
  std::size_t inside = 0;
  std::size_t outside = 0;
  Exponents sample_in;
  Exponents sample_out;
};

std::map<std::vector<Int>, Fiber> fibers_in_degree(const MonomialIdeal& ideal, Int d) {
  std::map<std::vector<Int>, Fiber> fibers;
  for_each_monomial(ideal.n(), d, [&](const Exponents& b) {
    Fiber& f = fibers[carry_pattern(ideal.ring(), b).entries()];
    if (ideal.contains(b)) {
      if (f.inside++ == 0) f.sample_in = b;
    } else {
      if (f.outside++ == 0) f.sample_out = b;
    }
  });
  return fibers;
}

bool entrywise_leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::optional<InvarianceWitness> degree_witness(const MonomialIdeal& ideal, Int d) {
  const auto fibers = fibers_in_degree(ideal, d);
  for (const auto& [c, f] : fibers) {
    if (f.inside > 0 && f.outside > 0) return InvarianceWitness{d, f.sample_in, f.sample_out, true};
  }
  // Every class realised in degree d is a key of fibers, so order-closure can
  // be checked among the keys alone.
  for (const auto& [c, f] : fibers) {
    if (f.inside == 0) continue;
    for (const auto& [lower, g] : fibers) {
      if (g.inside == 0 && entrywise_leq(lower, c)) {
        return InvarianceWitness{d, f.sample_in, g.sample_out, false};
      }
    }
  }
  return std::nullopt;
}

} // namespace

InvarianceReport is_invariant(const MonomialIdeal& ideal) {
  InvarianceReport report;
  if (ideal.n() == 1) return report;
  for (Int d = ideal.min_generator_degree(); d <= ideal.max_generator_degree(); ++d) {
    if (auto w = degree_witness(ideal, d)) {
      report.invariant = false;
      report.witness = std::move(w);
      return report;
    }
  }
  return report;
}

bool is_invariant_oracle(const MonomialIdeal& ideal, std::optional<Int> generator_cap) {
  const int n = ideal.n();
  const Int p = ideal.p();
  for (const auto& g : ideal.generators()) {
    if (generator_cap && total_degree(g) > *generator_cap) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto ui = static_cast<std::size_t>(i);
        const auto uj = static_cast<std::size_t>(j);
        const Int bj = g[uj];
        // x_j -> x_j + t x_i turns x^g into sum_k C(b_j,k) t^k x^{g + k e_i - k e_j}.
        // The coefficient C(b_j,k) t^k vanishes mod p iff C(b_j,k) does, for
        // any t in F_p^*, so the set of surviving monomials is independent of t.
        for (Int k = 1; k <= bj; ++k) {
          if (binomial_mod_p(bj, k, p) == 0) continue;
          Exponents image = g;
          image[ui] += k;
          image[uj] -= k;
          if (!ideal.contains(image)) return false;
        }
      }
    }
  }
  return true;
}

Decomposition decompose(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  if (ideal.n() == 1) {
    const Int d = ideal.min_generator_degree();
    const Context ctx(ring, d);
    return Decomposition(ring, {CarryIdealLabel(min_carry(ctx))});
  }
  if (auto report = is_invariant(ideal); !report) throw NotInvariant(*report.witness, ring);

  std::vector<CarryIdealLabel> labels;
  for (Int d = ideal.min_generator_degree(); d <= ideal.max_generator_degree(); ++d) {
    const Context ctx(ring, d);
    std::vector<CarryPattern> fresh;
    std::vector<std::vector<Int>> inherited;
    for_each_monomial(ideal.n(), d, [&](const Exponents& b) {
      if (!ideal.contains(b)) return;
      // b lies in S_1 I_{d-1} iff a generator of smaller degree divides it.
      bool from_below = false;
      for (const auto& g : ideal.generators()) {
        if (total_degree(g) < d && divides(g, b)) {
          from_below = true;
          break;
        }
      }
      auto c = carry_pattern(ring, b);
      if (from_below) {
        inherited.push_back(c.entries());
      } else {
        fresh.push_back(std::move(c));
      }
    });
    std::sort(inherited.begin(), inherited.end());
    std::vector<CarryPattern> candidates;
    for (auto& c : fresh) {
      if (!std::binary_search(inherited.begin(), inherited.end(), c.entries())) candidates.push_back(std::move(c));
    }
    for (auto& c : maximal_elements(candidates)) labels.emplace_back(std::move(c));
  }
  return Decomposition(ring, std::move(labels));
}

CarryIdealLabel frobenius_label(const CarryIdealLabel& label, Int e) {
  if (e < 1) throw ArgumentError("Frobenius labels need e >= 1");
  if (label.degree() == 0) throw ArgumentError("degree-0 labels name the unit ideal");
  const Int d = checked_mul(label.degree(), checked_pow(label.ring().p(), e));
  std::vector<Int> c(static_cast<std::size_t>(e), 0);
  c.insert(c.end(), label.pattern().entries().begin(), label.pattern().entries().end());
  return CarryIdealLabel(label.ring(), d, std::move(c));
}

} // namespace carry
