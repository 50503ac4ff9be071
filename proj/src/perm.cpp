#include "stanleychar/perm.hpp"

#include <cctype>
#include <stdexcept>

namespace stanleychar {

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  std::vector<int> zero(images.size());
  std::vector<bool> seen(images.size(), false);
  const int k = static_cast<int>(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("one-line images do not form a bijection of {1..k}");
    seen[static_cast<std::size_t>(v - 1)] = true;
    zero[i] = v - 1;
  }
  return Permutation(std::move(zero));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int x = cycle[i];
      if (x < 1 || x > degree || used[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("cycles must be disjoint and lie in {1..k}");
      used[static_cast<std::size_t>(x - 1)] = true;
      p.images_[static_cast<std::size_t>(x - 1)] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (current) throw std::invalid_argument("nested '(' in cycle notation");
      current = &cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!current) throw std::invalid_argument("unbalanced ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (c == ',' || c == ' ') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current) throw std::invalid_argument("point outside of a cycle in cycle notation");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + (text[i++] - '0');
      current->push_back(value);
    } else {
      throw std::invalid_argument("unexpected character in cycle notation: " + std::string(text));
    }
  }
  if (current) throw std::invalid_argument("unterminated cycle in cycle notation");
  return from_cycles(degree, cycles);
}

Permutation Permutation::from_zero_based(std::vector<int> images) { return Permutation(std::move(images)); }

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (images_.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycle_decomposition(*this).cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("cannot compose permutations of different degrees");
  const auto ai = a.zero_based();
  const auto bi = b.zero_based();
  std::vector<int> images(bi.size());
  for (std::size_t x = 0; x < bi.size(); ++x) images[x] = ai[static_cast<std::size_t>(bi[x])];
  return Permutation::from_zero_based(std::move(images));
}

Permutation inverse(const Permutation& p) {
  const auto pi = p.zero_based();
  std::vector<int> images(pi.size());
  for (std::size_t x = 0; x < pi.size(); ++x) images[static_cast<std::size_t>(pi[x])] = static_cast<int>(x);
  return Permutation::from_zero_based(std::move(images));
}

Partition CycleDecomposition::cycle_type() const {
  std::vector<int> lengths;
  lengths.reserve(cycles.size());
  for (const auto& c : cycles) lengths.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(lengths));
}

std::size_t CycleDecomposition::cycle_of(int x) const {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (int y : cycles[i])
      if (y == x) return i;
  throw std::out_of_range("point not covered by the decomposition");
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  out.degree = p.degree();
  const auto images = p.zero_based();
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.cycles.emplace_back();
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images[x])) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x) + 1);
    }
  }
  return out;
}

int num_cycles(const Permutation& p) {
  const auto images = p.zero_based();
  std::vector<bool> seen(images.size(), false);
  int count = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images[x])) seen[x] = true;
  }
  return count;
}

Partition cycle_type(const Permutation& p) { return cycle_decomposition(p).cycle_type(); }

int sign(const Permutation& p) { return (p.degree() - num_cycles(p)) % 2 == 0 ? 1 : -1; }

Permutation permutation_from_padded_partition(const Partition& mu, int n) {
  if (mu.size() > n)
    throw std::invalid_argument("degree " + std::to_string(n) + " is too small for partition " + mu.to_string());
  std::vector<int> images(static_cast<std::size_t>(n));
  int start = 0;
  for (int part : mu.parts()) {
    for (int i = 0; i < part; ++i) images[static_cast<std::size_t>(start + i)] = start + (i + 1) % part;
    start += part;
  }
  for (int x = start; x < n; ++x) images[static_cast<std::size_t>(x)] = x;
  return Permutation::from_zero_based(std::move(images));
}

std::vector<Factorization> enumerate_factorizations(const Permutation& pi) {
  std::vector<Factorization> out;
  for_each_factorization(pi, [&](const Permutation& s1, const Permutation& s2) { out.push_back({s1, s2}); });
  return out;
}

}  // namespace stanleychar
