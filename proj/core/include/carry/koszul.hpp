#pragma once

// Graded Betti numbers of S/I over F_p for a monomial ideal I in any number
// of variables, read off the Koszul complex
//
//   0 -> (S/I)_{j-n} (x) L^n -> ... -> (S/I)_{j-1} (x) L^1 -> (S/I)_j -> 0,
//
// where L^i is the i-th exterior power of k^n. beta_{i,j} is the homology
// at (S/I)_{j-i} (x) L^i. The differential sends m (x) e_T to
// sum_{t in T} (-1)^{pos(t,T)} x_t m (x) e_{T \ t}.

#include <optional>
#include <vector>

#include "carry/betti_table.hpp"
#include "carry/monomial_ideal.hpp"

namespace carry {

enum class KoszulMode {
  /// Each strand splits into Z^n-graded blocks of size at most C(n,i); ranks
  /// are taken block by block. This is the default.
  FineGraded,
  /// One dense matrix per strand and homological index, indexed by
  /// (standard monomial, wedge subset) pairs. Slow; kept as a cross-check.
  FullStrand,
};

struct KoszulOptions {
  /// Largest internal degree j to compute. When unset: reg(S/I) + n if I
  /// contains a power of every variable, otherwise the degree of the lcm of
  /// the generators (past which the Taylor resolution has no terms).
  std::optional<Int> max_degree;
  KoszulMode mode = KoszulMode::FineGraded;
  /// Worker threads. 0 reads CARRY_THREADS from the environment and falls
  /// back to 1.
  unsigned threads = 0;
};

BettiTable koszul_betti(const MonomialIdeal& ideal, const KoszulOptions& options = {});

/// Dimensions along one strand j: term i is (S/I)_{j-i} (x) L^i and
/// rank_out[i] is the rank of the differential leaving it.
struct KoszulStrand {
  Int degree = 0;
  std::vector<Int> term_dims;
  std::vector<Int> rank_out;
  std::vector<Int> homology;
};

/// Strand j computed densely; homology[i] = beta_{i,j}.
KoszulStrand koszul_strand(const MonomialIdeal& ideal, Int j);

/// Rank over F_p of an integer matrix (entries reduced mod p first).
Int rank_mod_p(std::vector<std::vector<Int>> rows, Int p);

/// Whether each variable has a pure power in I, so that S/I has finite length.
bool has_finite_colength(const MonomialIdeal& ideal);

/// Every standard monomial of S/I, ordered by degree and then
/// lexicographically decreasing. Requires finite colength.
std::vector<Exponents> all_standard_monomials(const MonomialIdeal& ideal);

/// Top index of the Betti table. For a nonzero invariant ideal this is n.
int projective_dimension(const MonomialIdeal& ideal);

/// reg(S/I), the largest degree with a standard monomial, found by searching
/// the complement of I. Requires finite colength (true for every nonzero
/// invariant ideal).
Int regularity(const MonomialIdeal& ideal);

/// Tor_n(S/I, k)_{reg+n} = (S/I)_reg (x) L^n. Torus weights pick up the
/// determinant, so each weight is the basis exponent plus (1, ..., 1).
struct TopCornerTor {
  Int regularity = 0;
  /// reg + n.
  Int internal_degree = 0;
  std::vector<Exponents> basis;
  std::vector<Exponents> weights;
};

TopCornerTor top_corner_tor(const MonomialIdeal& ideal);

} // namespace carry
