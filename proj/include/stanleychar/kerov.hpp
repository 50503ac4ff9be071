#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "stanleychar/exactpoly.hpp"
#include "stanleychar/numeric.hpp"
#include "stanleychar/shapes.hpp"

namespace stanleychar {

/// R_j on `ell` rectangles as a polynomial in Stanley coordinates,
/// homogeneous of degree j.
struct CumulantExpression {
  int j = 0;
  int ell = 0;
  Polynomial poly;
};

/// Top homogeneous component (degree j) of Ch_{j-1} on `ell` rectangles:
/// dilating p, q by s makes R_j the coefficient of s^j.
/// Throws std::invalid_argument if j < 2 or ell < 1.
CumulantExpression free_cumulant_poly(int j, int ell, unsigned threads = 1);

/// R_j(lambda), via the canonical Stanley coordinates of lambda.
Integer free_cumulant_value(int j, const Partition& lambda);

/// K_k: Ch_k as a polynomial in R_2, ..., R_{k+1} with integer coefficients.
struct KerovPolynomial {
  int k = 0;
  Polynomial expression;
  /// Number of rectangles of the matching system that determined K_k.
  int rectangles = 0;
};

/// R-monomials R_{a1} R_{a2} ... with every a_i >= 2 and total weight at
/// most `max_weight`, the constant monomial included.
std::vector<Monomial> cumulant_monomials(int max_weight);

/// Solves for K_k by matching Ch_k on k rectangles against every
/// R-monomial of weight <= k+1 expanded in Stanley coordinates. The rank is
/// asserted; on rank deficiency the number of rectangles grows (bounded).
/// Throws std::runtime_error on inconsistency, persistent rank deficiency
/// or a non-integer solution.
KerovPolynomial kerov_polynomial(int k, unsigned threads = 1);

/// Substitutes R_j -> R_j(lambda) into K_k.
Integer evaluate_kerov(const KerovPolynomial& kk, const Partition& lambda);

/// Structural checks: only R_2..R_{k+1}, integer coefficients, weights
/// <= k+1 with the parity of k+1.
bool is_well_formed(const KerovPolynomial& kk);

/// Pairs with sigma1*sigma2 = (1..k), kappa(sigma1) = i-1, kappa(sigma2) = 1.
/// Throws std::invalid_argument unless 2 <= i <= k+1.
Integer count_linear_pairs(int k, int i, unsigned threads = 1);

/// Triples (sigma1, sigma2, f) with sigma1*sigma2 = (1..k), sigma2 having
/// two cycles, sigma1 having j1+j2-2 cycles, f a bijective labeling of the
/// cycles of sigma2 by {1,2}, and each cycle c of sigma2 meeting at least
/// j_{f(c)} cycles of sigma1. Throws std::invalid_argument if j1 == j2 or
/// either is below 2.
Integer count_quadratic_triples(int k, int j1, int j2, unsigned threads = 1);

/// [p1 p2 q1^(j1-1) q2^(j2-1)] F - [p1 p2 q2^(j1+j2-2)] F for F given in
/// two-rectangle Stanley coordinates.
Rational quadratic_coefficient_by_formula(const Polynomial& f, int j1, int j2);

/// Counts behind the inclusion-exclusion for count_quadratic_triples:
/// triples meeting the first four conditions, those where the cycle labeled
/// 1 meets at most j1-1 cycles of sigma1, those where the cycle labeled 2
/// meets at most j2-1, and those with both restrictions.
struct InclusionExclusion {
  Integer unrestricted;
  Integer first_restricted;
  Integer second_restricted;
  Integer both_restricted;

  Integer signed_total() const {
    return unrestricted - first_restricted - second_restricted + both_restricted;
  }
  bool operator==(const InclusionExclusion&) const = default;
};

/// Direct enumeration of the four counts.
InclusionExclusion inclusion_exclusion_breakdown(int k, int j1, int j2, unsigned threads = 1);

/// The first three counts read off the two-rectangle Stanley polynomial of
/// Ch_k as signed sums of p1 p2 coefficients; both_restricted is not
/// recoverable this way and is left at 0.
InclusionExclusion breakdown_from_coefficients(const Polynomial& ch_k, int j1, int j2);

/// p1 p2 q1^a q2^b.
Monomial p1p2_monomial(int a, int b);

/// Disk cache of Kerov polynomials, one JSON file K<k>.json per k.
class KerovCache {
 public:
  static constexpr int kSchemaVersion = 1;

  explicit KerovCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// The cached K_k, or nothing when the entry is absent, unreadable,
  /// malformed, or fails a spot check against the character oracle.
  std::optional<KerovPolynomial> load(int k) const;
  /// Writes atomically (temporary file plus rename). Throws
  /// std::runtime_error on I/O failure.
  void store(const KerovPolynomial& kk) const;

  std::filesystem::path path_for(int k) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace stanleychar
