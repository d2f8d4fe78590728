#include "carry/two_variable.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "carry/error.hpp"
#include "carry/invariant_ideal.hpp"

namespace carry {

namespace {

void require_two(int n) {
  if (n != 2) throw ArgumentError("two-variable formulas need n = 2, got n = " + std::to_string(n));
}

void require_valid(const CarryPattern& c) {
  require_two(c.context().n());
  if (!is_valid_carry(c.entries(), c.context())) {
    throw ArgumentError(to_string(c) + " is not in C(" + std::to_string(c.degree()) + ",2," +
                        std::to_string(c.context().p()) + ")");
  }
}

Int content(const std::vector<Int>& slice, Int p) {
  Int v = 0;
  for (auto it = slice.rbegin(); it != slice.rend(); ++it) v = checked_add(checked_mul(v, p), *it);
  return v;
}

} // namespace

std::vector<CarryPattern> characterize_C2(Int d, Int p) {
  const Context ctx(2, p, d);
  const std::size_t m = ctx.length();
  std::vector<CarryPattern> out;
  std::vector<Int> c(m, 0);
  auto at = [&](std::size_t i) -> Int { return (i >= 1 && i <= m) ? c[i - 1] : 0; };
  // Entries only take values 0 and 1, so walk all 2^M candidates with pruning
  // from position 1 upward: the pair (c_i, c_{i+1}) is checked once both are set.
  auto pair_ok = [&](std::size_t i) {
    if (ctx.digit(i) == 0 && at(i + 1) < at(i)) return false;
    if (ctx.digit(i) == p - 1 && at(i) < at(i + 1)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i > m) {
      if (pair_ok(m)) out.emplace_back(ctx, c);
      return;
    }
    for (Int v = 0; v <= 1; ++v) {
      c[i - 1] = v;
      if (pair_ok(i - 1)) self(self, i + 1);
    }
    c[i - 1] = 0;
  };
  if (m == 0) {
    out.emplace_back(ctx, c);
  } else {
    rec(rec, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_Sd_irreducible(Int d, Int p) {
  require_prime(p);
  if (d < 0) throw ArgumentError("degree must be nonnegative");
  // C(d,2,p) is a single point iff fl(d) = M, i.e. every digit below the
  // top one is p - 1. This covers d <= p - 1 and d = r p^k - 1 with 1 <= r <= p - 1.
  const BasePExpansion digits(d, p);
  return floor_stat(d, p) >= digits.top_index();
}

Segmentation segment(const CarryPattern& c) {
  require_valid(c);
  const Context& ctx = c.context();
  const Int p = ctx.p();
  const std::size_t m = ctx.length();
  Segmentation s;
  s.p = p;
  s.degree = ctx.degree();
  s.sentinel = m + 1;
  for (std::size_t k = 0; k <= m; ++k) {
    if (c.at(k) != 0) continue;
    if (k >= 1 && c.at(k - 1) == 0 && ctx.digit(k - 1) == p - 1) continue;
    s.cut_points.push_back(k);
  }
  for (std::size_t r = 0; r < s.cut_points.size(); ++r) {
    const std::size_t lo = s.cut_points[r];
    const std::size_t hi = r + 1 < s.cut_points.size() ? s.cut_points[r + 1] : s.sentinel;
    std::vector<Int> slice;
    for (std::size_t k = lo; k < hi; ++k) slice.push_back(ctx.digit(k));
    s.contents.push_back(content(slice, p));
    s.segments.push_back(std::move(slice));
  }
  return s;
}

std::string format_factorization(const std::vector<std::pair<Int, Int>>& factors) {
  std::string out;
  for (const auto& [cont, q] : factors) {
    if (cont == 0) continue;
    if (!out.empty()) out += " * ";
    const std::string power = "m^" + std::to_string(cont);
    out += q == 1 ? power : "(" + power + ")^[" + std::to_string(q) + "]";
  }
  return out.empty() ? "(1)" : out;
}

std::vector<Int> generator_x_exponents(const Segmentation& s) {
  std::vector<Int> scales;
  for (std::size_t t : s.cut_points) scales.push_back(checked_pow(s.p, static_cast<Int>(t)));
  std::vector<Int> out{0};
  for (std::size_t r = 0; r < s.contents.size(); ++r) {
    std::vector<Int> next;
    next.reserve(out.size() * static_cast<std::size_t>(s.contents[r] + 1));
    for (Int base : out) {
      for (Int w = 0; w <= s.contents[r]; ++w) next.push_back(base + w * scales[r]);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

GeneratorFactorization generators_via_segmentation(const CarryPattern& c) {
  const Segmentation s = segment(c);
  if (s.degree == 0) throw ArgumentError("degree 0 gives the unit ideal");
  std::vector<std::pair<Int, Int>> factors;
  for (std::size_t r = 0; r < s.contents.size(); ++r) {
    factors.emplace_back(s.contents[r], checked_pow(s.p, static_cast<Int>(s.cut_points[r])));
  }
  std::vector<Exponents> gens;
  for (Int a : generator_x_exponents(s)) gens.push_back({a, s.degree - a});
  return GeneratorFactorization{std::move(factors), MonomialIdeal(c.context().ring(), std::move(gens))};
}

bool membership_Ac(Int a, const CarryPattern& c) {
  const Segmentation s = segment(c);
  if (a < 0 || a > s.degree) throw ArgumentError("need 0 <= a <= d");
  const BasePExpansion digits(a, s.p);
  for (std::size_t r = 0; r < s.cut_points.size(); ++r) {
    const std::size_t lo = s.cut_points[r];
    const std::size_t hi = r + 1 < s.cut_points.size() ? s.cut_points[r + 1] : s.sentinel;
    std::vector<Int> slice;
    for (std::size_t k = lo; k < hi; ++k) slice.push_back(digits.digit(k));
    if (content(slice, s.p) > s.contents[r]) return false;
  }
  return true;
}

SyzygyProfile syzygy_profile(const Segmentation& s) {
  SyzygyProfile out;
  Int below = 0;  // sum_{k<r} cont_k p^{t_k}, which is d mod p^{t_r}
  for (std::size_t r = 0; r < s.cut_points.size(); ++r) {
    const Int scale = checked_pow(s.p, static_cast<Int>(s.cut_points[r]));
    out.phis.push_back(scale - below);
    below = checked_add(below, checked_mul(s.contents[r], scale));
  }
  for (std::size_t r = 0; r < s.contents.size(); ++r) {
    Int mult = s.contents[r];
    for (std::size_t k = r + 1; k < s.contents.size(); ++k) mult = checked_mul(mult, s.contents[k] + 1);
    out.multiplicities.push_back(mult);
  }
  return out;
}

BettiTable betti_two_vars(const CarryPattern& c) {
  const Segmentation s = segment(c);
  if (s.degree == 0) throw ArgumentError("degree 0 gives the unit ideal");
  BettiTable table(2);
  table.add(0, 0, 1);
  Int generators = 1;
  for (Int cont : s.contents) generators = checked_mul(generators, cont + 1);
  table.add(1, s.degree, generators);
  const SyzygyProfile profile = syzygy_profile(s);
  for (std::size_t r = 0; r < profile.phis.size(); ++r) {
    table.add(2, checked_add(s.degree, profile.phis[r]), profile.multiplicities[r]);
  }
  return table;
}

Int regularity_two_vars(const CarryPattern& c) {
  const Segmentation s = segment(c);
  if (s.degree == 0) throw ArgumentError("degree 0 gives the unit ideal");
  return s.degree + syzygy_profile(s).phis.back() - 2;
}

HilbertBurch hilbert_burch(const MonomialIdeal& ideal) {
  require_two(ideal.n());
  HilbertBurch hb;
  hb.generators = ideal.generators();
  std::sort(hb.generators.begin(), hb.generators.end(), std::greater<>());
  if (hb.generators.front()[1] != 0 || hb.generators.back()[0] != 0) {
    throw PreconditionError("Hilbert-Burch needs pure powers of x and y among the generators (depth zero)");
  }
  for (std::size_t j = 0; j + 1 < hb.generators.size(); ++j) {
    const auto& g = hb.generators[j];
    const auto& h = hb.generators[j + 1];
    hb.syzygies.push_back({j, j, 1, 0, h[1] - g[1]});
    hb.syzygies.push_back({j + 1, j, -1, g[0] - h[0], 0});
    hb.column_degrees.push_back(g[0] + h[1]);
  }
  return hb;
}

bool composition_vanishes(const HilbertBurch& hb) {
  std::map<std::pair<std::size_t, Exponents>, Int> sums;
  for (const auto& e : hb.syzygies) {
    const auto& g = hb.generators[e.row];
    auto& v = sums[{e.column, Exponents{g[0] + e.x_power, g[1] + e.y_power}}];
    v += e.coefficient;
  }
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

u64 mod_mul(u64 a, u64 b) {
  const u128 prod = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(prod & kMersenne61);
  u64 hi = static_cast<u64>(prod >> 61);
  u64 s = lo + hi;
  if (s >= kMersenne61) s -= kMersenne61;
  return s;
}

u64 mod_add(u64 a, u64 b) {
  u64 s = a + b;
  if (s >= kMersenne61) s -= kMersenne61;
  return s;
}

u64 mod_neg(u64 a) { return a == 0 ? 0 : kMersenne61 - a; }

u64 mod_pow(u64 base, Int e) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, base);
    base = mod_mul(base, base);
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a) { return mod_pow(a, static_cast<Int>(kMersenne61 - 2)); }

u64 determinant(std::vector<std::vector<u64>> m) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = mod_neg(det);
    }
    det = mod_mul(det, m[col][col]);
    const u64 inv = mod_inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const u64 f = mod_mul(m[r][col], inv);
      for (std::size_t k = col; k < n; ++k) m[r][k] = mod_add(m[r][k], mod_neg(mod_mul(f, m[col][k])));
    }
  }
  return det;
}

} // namespace

bool minors_match_generators(const HilbertBurch& hb, std::uint64_t seed, int trials) {
  const std::size_t r = hb.rank();
  if (r < 2) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> point(2, kMersenne61 - 1);
  for (int t = 0; t < trials; ++t) {
    const u64 x = point(rng);
    const u64 y = point(rng);
    std::vector<std::vector<u64>> full(r, std::vector<u64>(r - 1, 0));
    for (const auto& e : hb.syzygies) {
      u64 v = mod_mul(mod_pow(x, e.x_power), mod_pow(y, e.y_power));
      if (e.coefficient < 0) v = mod_neg(v);
      full[e.row][e.column] = mod_add(full[e.row][e.column], v);
    }
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<std::vector<u64>> minor;
      for (std::size_t row = 0; row < r; ++row) {
        if (row != k) minor.push_back(full[row]);
      }
      const u64 det = determinant(std::move(minor));
      const u64 g = mod_mul(mod_pow(x, hb.generators[k][0]), mod_pow(y, hb.generators[k][1]));
      if (det != g && det != mod_neg(g)) return false;
    }
  }
  return true;
}

BettiTable betti_from_hilbert_burch(const HilbertBurch& hb) {
  BettiTable table(2);
  table.add(0, 0, 1);
  for (const auto& g : hb.generators) table.add(1, g[0] + g[1], 1);
  for (Int deg : hb.column_degrees) table.add(2, deg, 1);
  return table;
}

std::optional<PurityCertificate> is_pure_two_vars(const MonomialIdeal& ideal) {
  require_two(ideal.n());
  if (!is_invariant(ideal).invariant) throw PreconditionError("purity is only characterised for invariant ideals");
  if (!ideal.generated_in_single_degree()) return std::nullopt;
  std::vector<Int> xs;
  for (const auto& g : ideal.generators()) xs.push_back(g[0]);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  if (xs.size() < 2) return std::nullopt;
  const Int stride = xs[0] - xs[1];
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (xs[k] - xs[k + 1] != stride) return std::nullopt;
  }
  Int e = 0;
  Int q = 1;
  while (q < stride) {
    q = checked_mul(q, ideal.p());
    ++e;
  }
  if (q != stride) return std::nullopt;
  const Int d = ideal.min_generator_degree();
  const PurityCertificate cert{d / stride, e};
  MonomialIdeal expected = power(maximal_ideal(ideal.ring()), cert.m);
  if (e > 0) expected = frobenius_power(expected, e);
  if (!(expected == ideal)) return std::nullopt;
  return cert;
}

} // namespace carry
