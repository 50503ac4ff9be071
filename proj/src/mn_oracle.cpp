#include "stanleychar/mn_oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stanleychar/perm.hpp"

namespace stanleychar {
namespace {

struct CharacterMemo {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> table;
};

CharacterMemo& memo() {
  static CharacterMemo instance;
  return instance;
}

// Beta-set (first-column hook lengths) of lambda with `length` beads,
// strictly decreasing.
std::vector<int> beta_set(const std::vector<int>& rows) {
  const int length = static_cast<int>(rows.size());
  std::vector<int> beta(rows.size());
  for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i)] + (length - 1 - i);
  return beta;
}

std::vector<int> rows_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> rows;
  for (int i = 0; i < length; ++i) {
    const int row = beta[static_cast<std::size_t>(i)] - (length - 1 - i);
    if (row > 0) rows.push_back(row);
  }
  return rows;
}

// mu is a non-increasing list; `first` indexes the next part to remove.
Integer character_rec(const std::vector<int>& rows, const std::vector<int>& mu, std::size_t first) {
  if (first == mu.size()) return rows.empty() ? 1 : 0;

  auto key = std::make_pair(rows, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(first), mu.end()));
  {
    std::shared_lock lock(memo().mutex);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }

  const int strip = mu[first];
  const std::vector<int> beta = beta_set(rows);
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - strip;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // The height of the strip is the number of beads jumped over.
    int height = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++height;
    std::vector<int> moved = beta;
    moved[i] = target;
    Integer sub = character_rec(rows_from_beta(std::move(moved)), mu, first + 1);
    if (height % 2 == 0)
      total += sub;
    else
      total -= sub;
  }

  std::unique_lock lock(memo().mutex);
  memo().table.try_emplace(std::move(key), total);
  return total;
}

}  // namespace

Integer irreducible_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("character query with |lambda| = " + std::to_string(lambda.size()) +
                                " but |mu| = " + std::to_string(mu.size()));
  return character_rec(lambda.parts(), mu.parts(), 0);
}

Integer character_degree(const Partition& lambda) {
  return irreducible_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

Integer normalized_character(const Partition& pi, const Partition& lambda) {
  const int k = pi.size();
  const int n = lambda.size();
  if (n < k) return 0;

  const Partition padded = cycle_type(permutation_from_padded_partition(pi, n));
  Integer falling = 1;
  for (int i = 0; i < k; ++i) falling *= n - i;
  const Integer numerator = falling * irreducible_character(lambda, padded);
  const Integer dimension = character_degree(lambda);
  if (numerator % dimension != 0)
    throw std::logic_error("normalized character is not an integer for pi=" + pi.to_string() +
                           " lambda=" + lambda.to_string());
  return numerator / dimension;
}

void clear_character_cache() {
  std::unique_lock lock(memo().mutex);
  memo().table.clear();
}

}  // namespace stanleychar
