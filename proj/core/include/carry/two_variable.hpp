#pragma once

// Closed-form theory of carry ideals in k[x,y]: the type-c segmentation of
// d, the generator factorization it gives, Hilbert-Burch resolutions, Betti
// numbers, regularity and purity.
//
// Everything here requires n = 2 and throws ArgumentError otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carry/betti_table.hpp"
#include "carry/carry_pattern.hpp"
#include "carry/monomial_ideal.hpp"

namespace carry {

/// C(d,2,p) listed straight from the two-variable description: 0/1 entries,
/// d_i = 0 forces c_{i+1} >= c_i, d_i = p-1 forces c_i >= c_{i+1}.
std::vector<CarryPattern> characterize_C2(Int d, Int p);

/// S_d is an irreducible GL_2 representation iff d <= p-1 or
/// d = r p^k - 1 with k >= 1 and 1 <= r <= p-1 (all digits below the top
/// equal p-1).
bool is_Sd_irreducible(Int d, Int p);

/// Cut of the base-p digits of d at Z(c,d) = {0 = t_0 < ... < t_l}.
struct Segmentation {
  Int p = 0;
  Int degree = 0;
  std::vector<std::size_t> cut_points;
  /// M + 1, where the last segment ends.
  std::size_t sentinel = 0;
  /// Digit slices d_{[t_r, t_{r+1})}, little-endian.
  std::vector<std::vector<Int>> segments;
  /// Each slice read as a base-p number.
  std::vector<Int> contents;

  std::size_t ell() const noexcept { return cut_points.size() - 1; }
};

/// Throws ArgumentError unless c is a valid two-variable carry pattern.
Segmentation segment(const CarryPattern& c);

/// I_{c,d} as the product of Frobenius powers (m^{cont_r})^{[p^{t_r}]}.
struct GeneratorFactorization {
  /// (cont(delta_{t_r}), p^{t_r}) for r = 0..l.
  std::vector<std::pair<Int, Int>> factors;
  MonomialIdeal ideal;
};

/// "m^102 * (m^21)^[125] * (m^19)^[3125]"; factors with zero content are
/// the unit ideal and are left out.
std::string format_factorization(const std::vector<std::pair<Int, Int>>& factors);

/// x-exponents a of the generators x^a y^{d-a}, largest first:
/// a = sum w_r p^{t_r} with 0 <= w_r <= cont_r.
std::vector<Int> generator_x_exponents(const Segmentation& s);

/// Requires d >= 1.
GeneratorFactorization generators_via_segmentation(const CarryPattern& c);

/// Whether every c-segment of a has content at most that of d, i.e. whether
/// x^a y^{d-a} lies in I_{c,d}. Requires 0 <= a <= d.
bool membership_Ac(Int a, const CarryPattern& c);

/// Syzygy degree offsets phi_r = p^{t_r} - sum_{k<r} cont_k p^{t_k} and
/// their multiplicities cont_r * prod_{s>r} (cont_s + 1).
struct SyzygyProfile {
  std::vector<Int> phis;
  std::vector<Int> multiplicities;
};

SyzygyProfile syzygy_profile(const Segmentation& s);

BettiTable betti_two_vars(const CarryPattern& c);
/// d + phi_l - 2.
Int regularity_two_vars(const CarryPattern& c);

/// A single nonzero entry of the syzygy matrix: coefficient times x^{x_power} y^{y_power}.
struct SyzygyEntry {
  std::size_t row = 0;
  std::size_t column = 0;
  Int coefficient = 0;
  Int x_power = 0;
  Int y_power = 0;
};

/// 0 <- S/I <- S <- S^r <- S^{r-1} <- 0 for a depth-zero monomial ideal in
/// two variables.
struct HilbertBurch {
  /// x^{a_j} y^{b_j}, ordered with a_j strictly decreasing.
  std::vector<Exponents> generators;
  /// The r x (r-1) bidiagonal matrix: column j holds y^{b_{j+1}-b_j} in row
  /// j and -x^{a_j-a_{j+1}} in row j+1.
  std::vector<SyzygyEntry> syzygies;
  /// Internal degree of each syzygy column, a_j + b_{j+1}.
  std::vector<Int> column_degrees;

  std::size_t rank() const noexcept { return generators.size(); }
};

/// Throws PreconditionError unless I contains a pure power of x and of y.
HilbertBurch hilbert_burch(const MonomialIdeal& ideal);

/// The generator row times the syzygy matrix is zero, checked by expanding
/// every product.
bool composition_vanishes(const HilbertBurch& hb);

/// Each maximal minor (delete row k) equals +-x^{a_k} y^{b_k}, checked by
/// evaluating both sides at random points modulo 2^61 - 1. Cost is O(r^4);
/// meant for moderate r.
bool minors_match_generators(const HilbertBurch& hb, std::uint64_t seed = 0x5eed, int trials = 2);

/// Betti numbers read off the resolution: beta_{1,deg g} per generator and
/// beta_{2,a_j+b_{j+1}} per column.
BettiTable betti_from_hilbert_burch(const HilbertBurch& hb);

struct PurityCertificate {
  Int m = 0;
  Int e = 0;
};

/// Some (m, e) with I = (m^m)^{[p^e]}, or nullopt. Throws PreconditionError
/// if I is not invariant.
std::optional<PurityCertificate> is_pure_two_vars(const MonomialIdeal& ideal);

} // namespace carry
