#include "carry/koszul.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <thread>
#include <unordered_set>

#include "carry/error.hpp"

namespace carry {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& b) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int e : b) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using MonomialSet = std::unordered_set<Exponents, ExponentsHash>;

Int mul_mod(Int a, Int b, Int p) {
  return static_cast<Int>(static_cast<__int128>(a) * b % p);
}

Int inverse_mod(Int a, Int p) {
  Int result = 1;
  Int base = a;
  for (Int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
  }
  return result;
}

// Standard monomials of degree at most cap, found by growing one exponent
// at a time. Once prefix * x_i^e lies in I so does every extension, which
// bounds the search.
void for_each_standard(const MonomialIdeal& ideal, Int cap, const std::function<void(const Exponents&)>& visit) {
  const auto n = static_cast<std::size_t>(ideal.n());
  Exponents b(n, 0);
  auto rec = [&](auto&& self, std::size_t i, Int used) -> void {
    if (i == n) {
      visit(b);
      return;
    }
    for (Int e = 0; used + e <= cap; ++e) {
      b[i] = e;
      if (ideal.contains(b)) break;
      self(self, i + 1, used + e);
    }
    b[i] = 0;
  };
  rec(rec, 0, 0);
}

Int lcm_degree(const MonomialIdeal& ideal) {
  Exponents top(static_cast<std::size_t>(ideal.n()), 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) top[i] = std::max(top[i], g[i]);
  }
  return total_degree(top);
}

// Calls visit(prefix, b) for each exponent prefix on x_1..x_{n-1} that is
// not already in I, where b >= 1 is the least exponent of x_n putting
// prefix * x_n^b in I. Generators compatible with the prefix are carried
// down the recursion so each level only scans what can still divide.
// Requires a pure power of every variable, which guarantees termination.
void for_each_column(const MonomialIdeal& ideal,
                     const std::function<void(const Exponents&, Int)>& visit) {
  const auto n = static_cast<std::size_t>(ideal.n());
  const auto& gens = ideal.generators();
  std::vector<std::size_t> all(gens.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  Exponents prefix(n, 0);

  auto rec = [&](auto&& self, std::size_t level, std::vector<std::size_t> candidates) -> void {
    if (level + 1 == n) {
      Int b = std::numeric_limits<Int>::max();
      for (std::size_t k : candidates) b = std::min(b, gens[k][level]);
      if (b == std::numeric_limits<Int>::max()) {
        throw PreconditionError("ideal does not contain a power of every variable");
      }
      if (b >= 1) visit(prefix, b);
      return;
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t c) { return gens[a][level] < gens[c][level]; });
    std::vector<std::size_t> active;
    std::size_t next = 0;
    for (Int e = 0;; ++e) {
      bool closed = false;
      while (next < candidates.size() && gens[candidates[next]][level] <= e) {
        const auto& g = gens[candidates[next]];
        if (std::all_of(g.begin() + static_cast<std::ptrdiff_t>(level) + 1, g.end(), [](Int v) { return v == 0; })) {
          closed = true;
        }
        active.push_back(candidates[next]);
        ++next;
      }
      if (closed) break;
      prefix[level] = e;
      self(self, level + 1, active);
    }
    prefix[level] = 0;
  };
  rec(rec, 0, all);
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const char* env = std::getenv("CARRY_THREADS");
  if (env == nullptr) return 1;
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc() || value == 0) return 1;
  return value;
}

// Homology of the Z^n-graded block alpha. Wedge subsets are bitmasks.
void block_betti(const Exponents& alpha, const MonomialSet& standard, int n, Int p, std::vector<Int>& out) {
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(n) + 1);
  Exponents shifted(alpha);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool ok = true;
    for (int t = 0; t < n; ++t) {
      shifted[static_cast<std::size_t>(t)] = alpha[static_cast<std::size_t>(t)] - ((mask >> t) & 1U);
      if (shifted[static_cast<std::size_t>(t)] < 0) ok = false;
    }
    if (ok && standard.count(shifted)) basis[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  }
  std::vector<Int> rank(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) {
    const auto& cols = basis[static_cast<std::size_t>(i)];
    const auto& rows = basis[static_cast<std::size_t>(i) - 1];
    if (cols.empty() || rows.empty()) continue;
    std::vector<std::vector<Int>> matrix(rows.size(), std::vector<Int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint32_t mask = cols[c];
      int position = 0;
      for (int t = 0; t < n; ++t) {
        if (!((mask >> t) & 1U)) continue;
        const std::uint32_t face = mask & ~(1U << t);
        const auto it = std::lower_bound(rows.begin(), rows.end(), face);
        if (it != rows.end() && *it == face) {
          matrix[static_cast<std::size_t>(it - rows.begin())][c] = (position % 2 == 0) ? 1 : p - 1;
        }
        ++position;
      }
    }
    rank[static_cast<std::size_t>(i)] = rank_mod_p(std::move(matrix), p);
  }
  for (int i = 0; i <= n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    out[iu] = static_cast<Int>(basis[iu].size()) - rank[iu] - rank[iu + 1];
  }
}

BettiTable fine_graded(const MonomialIdeal& ideal, Int cap, unsigned threads) {
  const int n = ideal.n();
  MonomialSet standard;
  for_each_standard(ideal, cap, [&](const Exponents& b) { standard.insert(b); });

  // A block alpha has a nonzero term only if alpha - e_T is standard for some T.
  MonomialSet seen;
  std::vector<Exponents> blocks;
  const std::uint32_t full = (1U << n) - 1;
  for (const auto& m : standard) {
    const Int deg = total_degree(m);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      if (deg + std::popcount(mask) > cap) continue;
      Exponents alpha(m);
      for (int t = 0; t < n; ++t) alpha[static_cast<std::size_t>(t)] += (mask >> t) & 1U;
      if (seen.insert(alpha).second) blocks.push_back(std::move(alpha));
    }
  }
  std::sort(blocks.begin(), blocks.end());

  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(blocks.size())));
  std::vector<std::map<std::pair<int, Int>, Int>> partial(workers);
  auto work = [&](unsigned w) {
    std::vector<Int> betti(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = w; k < blocks.size(); k += workers) {
      block_betti(blocks[k], standard, n, ideal.p(), betti);
      const Int j = total_degree(blocks[k]);
      for (int i = 0; i <= n; ++i) {
        if (betti[static_cast<std::size_t>(i)] != 0) partial[w][{i, j}] += betti[static_cast<std::size_t>(i)];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BettiTable table(n);
  for (const auto& part : partial) {
    for (const auto& [key, value] : part) table.add(key.first, key.second, value);
  }
  return table;
}

std::vector<std::uint32_t> masks_of_size(int n, int i) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) == i) out.push_back(mask);
  }
  return out;
}

} // namespace

Int rank_mod_p(std::vector<std::vector<Int>> rows, Int p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    if (row.size() != cols) throw ArgumentError("ragged matrix");
    for (Int& v : row) v = ((v % p) + p) % p;
  }
  Int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][c] == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Int inv = inverse_mod(rows[pivot_row][c], p);
    for (std::size_t k = c; k < cols; ++k) rows[pivot_row][k] = mul_mod(rows[pivot_row][k], inv, p);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      const Int factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = (rows[r][k] - mul_mod(factor, rows[pivot_row][k], p) + p) % p;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

bool has_finite_colength(const MonomialIdeal& ideal) { return ideal.pure_powers().has_value(); }

std::vector<Exponents> all_standard_monomials(const MonomialIdeal& ideal) {
  const auto powers = ideal.pure_powers();
  if (!powers) throw PreconditionError("ideal does not contain a power of every variable");
  Int cap = 0;
  for (Int a : *powers) cap = checked_add(cap, a - 1);
  std::vector<Exponents> out;
  for_each_standard(ideal, cap, [&](const Exponents& b) { out.push_back(b); });
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

KoszulStrand koszul_strand(const MonomialIdeal& ideal, Int j) {
  const int n = ideal.n();
  const Int p = ideal.p();
  KoszulStrand strand;
  strand.degree = j;
  // basis[i] lists (standard monomial of degree j - i, wedge mask).
  std::vector<std::vector<std::pair<Exponents, std::uint32_t>>> basis(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n && i <= j; ++i) {
    const auto masks = masks_of_size(n, i);
    for (const auto& m : ideal.standard_monomials(j - i)) {
      for (std::uint32_t mask : masks) basis[static_cast<std::size_t>(i)].emplace_back(m, mask);
    }
  }
  strand.term_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  strand.rank_out.assign(static_cast<std::size_t>(n) + 1, 0);
  strand.homology.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) strand.term_dims[static_cast<std::size_t>(i)] = static_cast<Int>(basis[static_cast<std::size_t>(i)].size());

  for (int i = 1; i <= n; ++i) {
    const auto& cols = basis[static_cast<std::size_t>(i)];
    const auto& rows = basis[static_cast<std::size_t>(i) - 1];
    if (cols.empty() || rows.empty()) continue;
    std::map<std::pair<Exponents, std::uint32_t>, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    std::vector<std::vector<Int>> matrix(rows.size(), std::vector<Int>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& [m, mask] = cols[c];
      int position = 0;
      for (int t = 0; t < n; ++t) {
        if (!((mask >> t) & 1U)) continue;
        Exponents target(m);
        ++target[static_cast<std::size_t>(t)];
        // x_t m vanishes in S/I exactly when it is not a standard monomial.
        const auto it = row_index.find({target, mask & ~(1U << t)});
        if (it != row_index.end()) matrix[it->second][c] = position % 2 == 0 ? 1 : -1;
        ++position;
      }
    }
    strand.rank_out[static_cast<std::size_t>(i)] = rank_mod_p(std::move(matrix), p);
  }
  for (int i = 0; i <= n; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const Int in = iu + 1 <= static_cast<std::size_t>(n) ? strand.rank_out[iu + 1] : 0;
    strand.homology[iu] = strand.term_dims[iu] - strand.rank_out[iu] - in;
  }
  return strand;
}

BettiTable koszul_betti(const MonomialIdeal& ideal, const KoszulOptions& options) {
  Int cap = 0;
  if (options.max_degree) {
    cap = *options.max_degree;
    if (cap < 0) throw ArgumentError("max_degree must be nonnegative");
  } else if (has_finite_colength(ideal)) {
    cap = checked_add(regularity(ideal), ideal.n());
  } else {
    cap = lcm_degree(ideal);
  }
  if (options.mode == KoszulMode::FineGraded) return fine_graded(ideal, cap, resolve_threads(options.threads));

  BettiTable table(ideal.n());
  for (Int j = 0; j <= cap; ++j) {
    const KoszulStrand strand = koszul_strand(ideal, j);
    for (int i = 0; i <= ideal.n(); ++i) table.add(i, j, strand.homology[static_cast<std::size_t>(i)]);
  }
  return table;
}

int projective_dimension(const MonomialIdeal& ideal) { return koszul_betti(ideal).projective_dimension(); }

Int regularity(const MonomialIdeal& ideal) {
  if (!has_finite_colength(ideal)) throw PreconditionError("ideal does not contain a power of every variable");
  if (ideal.n() == 1) return ideal.generators().front()[0] - 1;
  Int best = 0;
  for_each_column(ideal, [&](const Exponents& prefix, Int b) { best = std::max(best, total_degree(prefix) + b - 1); });
  return best;
}

TopCornerTor top_corner_tor(const MonomialIdeal& ideal) {
  TopCornerTor out;
  out.regularity = regularity(ideal);
  const auto n = static_cast<std::size_t>(ideal.n());
  out.internal_degree = out.regularity + ideal.n();
  if (n == 1) {
    out.basis.push_back({out.regularity});
  } else {
    for_each_column(ideal, [&](const Exponents& prefix, Int b) {
      if (total_degree(prefix) + b - 1 != out.regularity) return;
      Exponents m(prefix);
      m[n - 1] = b - 1;
      out.basis.push_back(std::move(m));
    });
  }
  std::sort(out.basis.begin(), out.basis.end(), canonical_less);
  for (const auto& m : out.basis) {
    Exponents w(m);
    for (Int& e : w) ++e;
    out.weights.push_back(std::move(w));
  }
  return out;
}

} // namespace carry
