#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "carry/base_p.hpp"

namespace carry {

/// Exponent vector (b_1, ..., b_n) of the monomial x_1^{b_1} ... x_n^{b_n}.
using Exponents = std::vector<Int>;

Int total_degree(std::span<const Int> b);

/// a divides b, i.e. a_i <= b_i for all i.
bool divides(std::span<const Int> a, std::span<const Int> b);

/// Calls visit(b) for every exponent vector of length n and total degree d,
/// in lexicographically decreasing order (x_1^d first).
void for_each_monomial(int n, Int d, const std::function<void(const Exponents&)>& visit);

/// All degree-d exponent vectors in n variables, lexicographically decreasing.
std::vector<Exponents> monomials_of_degree(int n, Int d);

/// Number of degree-d monomials in n variables, C(d+n-1, n-1), checked.
Int monomial_count(int n, Int d);

/// Canonical generator order: total degree ascending, then lexicographically
/// decreasing.
bool canonical_less(const Exponents& a, const Exponents& b);

/// Sorted exponents, largest first (the partition labelling the orbit).
Exponents sorted_partition(Exponents b);

} // namespace carry
