#pragma once

#include <vector>

#include "stanleychar/exactpoly.hpp"
#include "stanleychar/numeric.hpp"
#include "stanleychar/perm.hpp"
#include "stanleychar/shapes.hpp"

namespace stanleychar {

/// A factorization sigma1*sigma2 = pi together with a coloring of the
/// cycles of sigma2. Colors are 1-based; entry i refers to cycle i of the
/// canonical decomposition.
struct ColoredFactorization {
  Permutation sigma1;
  Permutation sigma2;
  std::vector<int> f2;
  /// Each cycle c of sigma1 gets the largest color among the cycles of
  /// sigma2 that meet c.
  std::vector<int> f1;
};

/// f1 induced by f2 for the pair (sigma1, sigma2).
std::vector<int> induced_coloring(const Permutation& sigma1, const Permutation& sigma2, const std::vector<int>& f2);

/// Sum over colorings f2 of prod_c q_{f1(c)} * prod_d p_{f2(d)} evaluated at
/// concrete Stanley coordinates (the unsigned inner sum of the multirectangular
/// character formula).
Integer coloring_weight_sum(const Permutation& sigma1, const Permutation& sigma2, const MultirectangularShape& shape);

/// Ch_pi(p x q) on a single rectangle as a polynomial in p1, q1:
/// sum over sigma1*sigma2 = pi of sign(sigma1) q1^kappa(sigma1) p1^kappa(sigma2).
Polynomial stanley_rectangular(const Partition& pi);

/// Value of stanley_rectangular(pi) at p1 = p, q1 = q.
Integer stanley_rectangular_value(const Partition& pi, int p, int q);

/// Ch_pi(p x q) on `ell` rectangles as a polynomial in p1..p_ell, q1..q_ell,
/// summing sign(sigma1) prod q_{f1(c)} prod p_{f2(d)} over all factorizations
/// and all colorings f2. Memoized per (pi, ell). Throws
/// std::invalid_argument if ell < 1.
Polynomial stanley_polynomial(const Partition& pi, int ell, unsigned threads = 1);

/// Same sum for an explicit permutation (not memoized). Any permutation of
/// a given cycle type yields the same polynomial.
Polynomial stanley_polynomial_of(const Permutation& pi, int ell, unsigned threads = 1);

/// Ch_pi evaluated on a multirectangular diagram by substitution into the
/// Stanley polynomial with as many rectangles as the shape. Throws
/// std::invalid_argument unless shape.is_diagram().
Integer evaluate_character(const Partition& pi, const MultirectangularShape& shape, unsigned threads = 1);

/// Binds p_i, q_i to the entries of the shape.
std::map<Indeterminate, Rational> stanley_coordinates(const MultirectangularShape& shape);

/// Drops memoized Stanley polynomials.
void clear_stanley_cache();

}  // namespace stanleychar
