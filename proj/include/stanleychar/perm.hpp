#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanleychar/parallel.hpp"
#include "stanleychar/shapes.hpp"

namespace stanleychar {

/// A permutation of {1, ..., k} in one-line notation. Degree 0 is allowed
/// and denotes the unique permutation of the empty set.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);

  /// 1-based one-line notation; throws std::invalid_argument unless the
  /// images form a bijection of {1..k}.
  static Permutation from_one_line(const std::vector<int>& images);

  /// Builds from disjoint 1-based cycles; unlisted points are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation such as "(1,5,4,2)(3)". Fixed points may be
  /// omitted; "()" or "" is the identity.
  static Permutation parse(std::string_view text, int degree);

  /// Wraps 0-based images. Unchecked: the caller guarantees a bijection.
  static Permutation from_zero_based(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the 1-based point x.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }

  std::vector<int> one_line() const;
  std::span<const int> zero_based() const { return images_; }
  bool is_identity() const;

  /// Cycle notation with fixed points, e.g. "(1,5,4,2)(3)".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

/// The product a*b with the right factor acting first: x -> a(b(x)).
/// Throws std::invalid_argument on a degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// Cycles in canonical form: each starts at its minimal point and cycles
/// are sorted by that point. Points are 1-based.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<int>> cycles;

  std::size_t count() const { return cycles.size(); }
  Partition cycle_type() const;
  /// Index of the cycle containing the 1-based point x.
  std::size_t cycle_of(int x) const;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// kappa(p): the number of cycles, fixed points included.
int num_cycles(const Permutation& p);

Partition cycle_type(const Permutation& p);

/// (-1)^(k - kappa(p)).
int sign(const Permutation& p);

/// A permutation of degree n whose cycle type is mu padded with fixed
/// points; cycles occupy consecutive points starting from 1. Throws
/// std::invalid_argument when |mu| > n.
Permutation permutation_from_padded_partition(const Partition& mu, int n);

inline Permutation permutation_from_partition(const Partition& mu) {
  return permutation_from_padded_partition(mu, mu.size());
}

struct Factorization {
  Permutation sigma1;
  Permutation sigma2;
};

/// The factorizations of pi are split by the value sigma1(1), giving
/// max(k, 1) chunks that partition the lexicographic enumeration order.
inline std::size_t factorization_chunk_count(const Permutation& pi) {
  return static_cast<std::size_t>(std::max(pi.degree(), 1));
}

/// Visits the pairs (sigma1, sigma2) with sigma1*sigma2 = pi and
/// sigma1(1) = chunk + 1, sigma1 in lexicographic order of its one-line form.
template <class Visit>
void for_each_factorization_in_chunk(const Permutation& pi, std::size_t chunk, Visit&& visit) {
  const int k = pi.degree();
  if (k == 0) {
    visit(pi, pi);
    return;
  }
  const auto target = pi.zero_based();
  std::vector<int> s1(static_cast<std::size_t>(k));
  s1[0] = static_cast<int>(chunk);
  for (int i = 0, v = 0; i < k - 1; ++v) {
    if (v == static_cast<int>(chunk)) continue;
    s1[static_cast<std::size_t>(++i)] = v;
  }
  std::vector<int> s1_inv(s1.size());
  std::vector<int> s2(s1.size());
  do {
    for (std::size_t x = 0; x < s1.size(); ++x) s1_inv[static_cast<std::size_t>(s1[x])] = static_cast<int>(x);
    for (std::size_t x = 0; x < s1.size(); ++x) s2[x] = s1_inv[static_cast<std::size_t>(target[x])];
    visit(Permutation::from_zero_based(s1), Permutation::from_zero_based(s2));
  } while (std::next_permutation(s1.begin() + 1, s1.end()));
}

/// Visits all k! factorizations sigma1*sigma2 = pi, sigma1 in lexicographic
/// order.
template <class Visit>
void for_each_factorization(const Permutation& pi, Visit&& visit) {
  for (std::size_t c = 0; c < factorization_chunk_count(pi); ++c) for_each_factorization_in_chunk(pi, c, visit);
}

std::vector<Factorization> enumerate_factorizations(const Permutation& pi);

/// Parallel fold over the factorizations of pi. Each chunk starts from
/// `init`, is updated by visit(acc, sigma1, sigma2), and chunk results are
/// combined in enumeration order.
template <class T, class Visit, class Combine>
T reduce_factorizations(const Permutation& pi, unsigned threads, const T& init, Visit visit, Combine combine) {
  return chunked_reduce(
      factorization_chunk_count(pi), threads, init,
      [&](std::size_t chunk) {
        T acc = init;
        for_each_factorization_in_chunk(pi, chunk,
                                        [&](const Permutation& s1, const Permutation& s2) { visit(acc, s1, s2); });
        return acc;
      },
      combine);
}

}  // namespace stanleychar
