#include "stanleychar/stanley.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace stanleychar {
namespace {

// Cycle labels in canonical order (by minimal point) for a 0-based permutation.
std::vector<int> cycle_labels(std::span<const int> images, int& count) {
  std::vector<int> label(images.size(), -1);
  count = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (label[start] >= 0) continue;
    for (std::size_t x = start; label[x] < 0; x = static_cast<std::size_t>(images[x])) label[x] = count;
    ++count;
  }
  return label;
}

// Incidence between the cycles of sigma1 and those of sigma2.
struct Incidence {
  int sign = 1;
  int white = 0;  // kappa(sigma1)
  int black = 0;  // kappa(sigma2)
  // For each cycle of sigma1, the cycles of sigma2 it meets.
  std::vector<std::vector<int>> meets;
};

Incidence incidence(const Permutation& s1, const Permutation& s2) {
  Incidence inc;
  const std::vector<int> l1 = cycle_labels(s1.zero_based(), inc.white);
  const std::vector<int> l2 = cycle_labels(s2.zero_based(), inc.black);
  inc.sign = (s1.degree() - inc.white) % 2 == 0 ? 1 : -1;
  inc.meets.resize(static_cast<std::size_t>(inc.white));
  for (std::size_t x = 0; x < l1.size(); ++x) {
    auto& row = inc.meets[static_cast<std::size_t>(l1[x])];
    if (std::find(row.begin(), row.end(), l2[x]) == row.end()) row.push_back(l2[x]);
  }
  return inc;
}

// Calls visit(colors) for every coloring in [0, ell)^count.
template <class Visit>
void for_each_coloring(int count, int ell, Visit&& visit) {
  std::vector<int> colors(static_cast<std::size_t>(count), 0);
  while (true) {
    visit(colors);
    int i = 0;
    while (i < count && ++colors[static_cast<std::size_t>(i)] == ell) colors[static_cast<std::size_t>(i++)] = 0;
    if (i == count) return;
  }
}

using ExponentAccumulator = std::unordered_map<std::string, std::int64_t>;

Polynomial to_polynomial(const ExponentAccumulator& acc, int ell) {
  Polynomial f;
  for (const auto& [key, coeff] : acc) {
    if (coeff == 0) continue;
    std::vector<Monomial::Factor> factors;
    for (int i = 0; i < ell; ++i) {
      const int ep = static_cast<unsigned char>(key[static_cast<std::size_t>(i)]);
      const int eq = static_cast<unsigned char>(key[static_cast<std::size_t>(ell + i)]);
      if (ep) factors.emplace_back(var_p(i + 1), ep);
      if (eq) factors.emplace_back(var_q(i + 1), eq);
    }
    f.add_term(Monomial(std::move(factors)), Rational(Integer(static_cast<long>(coeff))));
  }
  return f;
}

void check_accumulator_bounds(int k, int ell) {
  // Total number of signed contributions is at most k! * ell^k.
  long double bound = 1;
  for (int i = 2; i <= k; ++i) bound *= i;
  bound *= std::pow(static_cast<long double>(ell), k);
  if (bound > 9.0e18L || k > 255)
    throw std::overflow_error("Stanley polynomial too large for exact accumulation (k=" + std::to_string(k) +
                              ", ell=" + std::to_string(ell) + ")");
}

struct StanleyMemo {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<int>, int>, Polynomial> table;
};

StanleyMemo& stanley_memo() {
  static StanleyMemo instance;
  return instance;
}

}  // namespace

std::vector<int> induced_coloring(const Permutation& sigma1, const Permutation& sigma2, const std::vector<int>& f2) {
  const Incidence inc = incidence(sigma1, sigma2);
  if (static_cast<int>(f2.size()) != inc.black) throw std::invalid_argument("f2 must color every cycle of sigma2");
  std::vector<int> f1(static_cast<std::size_t>(inc.white), 0);
  for (std::size_t c = 0; c < inc.meets.size(); ++c)
    for (int d : inc.meets[c]) f1[c] = std::max(f1[c], f2[static_cast<std::size_t>(d)]);
  return f1;
}

Integer coloring_weight_sum(const Permutation& sigma1, const Permutation& sigma2, const MultirectangularShape& shape) {
  if (!shape.well_formed()) throw std::invalid_argument("malformed Stanley coordinates: " + shape.to_string());
  const Incidence inc = incidence(sigma1, sigma2);
  const int ell = shape.rectangles();
  Integer total = 0;
  if (ell == 0) return inc.black == 0 ? 1 : 0;
  for_each_coloring(inc.black, ell, [&](const std::vector<int>& f2) {
    Integer term = 1;
    for (int d : f2) term *= shape.p[static_cast<std::size_t>(d)];
    for (const auto& row : inc.meets) {
      int color = 0;
      for (int d : row) color = std::max(color, f2[static_cast<std::size_t>(d)]);
      term *= shape.q[static_cast<std::size_t>(color)];
    }
    total += term;
  });
  return total;
}

Polynomial stanley_rectangular(const Partition& pi) {
  const Permutation perm = permutation_from_partition(pi);
  std::map<std::pair<int, int>, long> counts;
  for_each_factorization(perm, [&](const Permutation& s1, const Permutation& s2) {
    counts[{num_cycles(s1), num_cycles(s2)}] += sign(s1);
  });
  Polynomial f;
  for (const auto& [exps, c] : counts)
    f.add_term(Monomial{{var_q(1), exps.first}, {var_p(1), exps.second}}, Rational(Integer(c)));
  return f;
}

Integer stanley_rectangular_value(const Partition& pi, int p, int q) {
  const Rational v = evaluate(stanley_rectangular(pi), {{var_p(1), Rational(p)}, {var_q(1), Rational(q)}});
  return v.get_num();
}

Polynomial stanley_polynomial_of(const Permutation& pi, int ell, unsigned threads) {
  if (ell < 1) throw std::invalid_argument("the number of rectangles must be at least 1");
  const int k = pi.degree();
  check_accumulator_bounds(k, ell);

  auto visit = [ell](ExponentAccumulator& acc, const Permutation& s1, const Permutation& s2) {
    const Incidence inc = incidence(s1, s2);
    std::string key(static_cast<std::size_t>(2 * ell), '\0');
    for_each_coloring(inc.black, ell, [&](const std::vector<int>& f2) {
      std::fill(key.begin(), key.end(), '\0');
      for (int d : f2) ++key[static_cast<std::size_t>(d)];
      for (const auto& row : inc.meets) {
        int color = 0;
        for (int d : row) color = std::max(color, f2[static_cast<std::size_t>(d)]);
        ++key[static_cast<std::size_t>(ell + color)];
      }
      acc[key] += inc.sign;
    });
  };
  auto combine = [](ExponentAccumulator a, ExponentAccumulator b) {
    for (const auto& [key, c] : b) a[key] += c;
    return a;
  };
  return to_polynomial(reduce_factorizations(pi, threads, ExponentAccumulator{}, visit, combine), ell);
}

Polynomial stanley_polynomial(const Partition& pi, int ell, unsigned threads) {
  if (ell < 1) throw std::invalid_argument("the number of rectangles must be at least 1");
  auto key = std::make_pair(pi.parts(), ell);
  {
    std::shared_lock lock(stanley_memo().mutex);
    auto it = stanley_memo().table.find(key);
    if (it != stanley_memo().table.end()) return it->second;
  }
  Polynomial f = stanley_polynomial_of(permutation_from_partition(pi), ell, threads);
  std::unique_lock lock(stanley_memo().mutex);
  return stanley_memo().table.try_emplace(std::move(key), std::move(f)).first->second;
}

std::map<Indeterminate, Rational> stanley_coordinates(const MultirectangularShape& shape) {
  std::map<Indeterminate, Rational> values;
  for (int i = 0; i < shape.rectangles(); ++i) {
    values[var_p(i + 1)] = shape.p[static_cast<std::size_t>(i)];
    values[var_q(i + 1)] = shape.q[static_cast<std::size_t>(i)];
  }
  return values;
}

Integer evaluate_character(const Partition& pi, const MultirectangularShape& shape, unsigned threads) {
  if (!shape.is_diagram()) throw std::invalid_argument("invalid Stanley coordinates: " + shape.to_string());
  if (shape.rectangles() == 0) return pi.size() == 0 ? 1 : 0;
  const Rational value = evaluate(stanley_polynomial(pi, shape.rectangles(), threads), stanley_coordinates(shape));
  if (!is_integral(value)) throw std::logic_error("non-integer character value");
  return value.get_num();
}

void clear_stanley_cache() {
  std::unique_lock lock(stanley_memo().mutex);
  stanley_memo().table.clear();
}

}  // namespace stanleychar
