#include "stanleychar/maps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stanleychar {
namespace {

// Vertex incidence: for each edge (0-based), its white and black vertex.
struct EdgeEnds {
  std::vector<std::size_t> white;
  std::vector<std::size_t> black;
};

EdgeEnds edge_ends(const BipartiteMap& m) {
  EdgeEnds ends;
  ends.white.resize(static_cast<std::size_t>(m.edges()));
  ends.black.resize(static_cast<std::size_t>(m.edges()));
  for (std::size_t v = 0; v < m.white.cycles.size(); ++v)
    for (int e : m.white.cycles[v]) ends.white[static_cast<std::size_t>(e - 1)] = v;
  for (std::size_t v = 0; v < m.black.cycles.size(); ++v)
    for (int e : m.black.cycles[v]) ends.black[static_cast<std::size_t>(e - 1)] = v;
  return ends;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Visits each assignment of rows 1..rows to `count` black vertices.
template <class Visit>
void for_each_row_assignment(std::size_t count, int rows, Visit&& visit) {
  if (rows == 0 && count > 0) return;
  std::vector<int> assignment(count, 1);
  while (true) {
    visit(assignment);
    std::size_t i = 0;
    while (i < count && ++assignment[i] > rows) assignment[i++] = 1;
    if (i == count) return;
  }
}

// Column bound for each white vertex: the shortest row it touches.
std::vector<int> column_bounds(const BipartiteMap& m, const EdgeEnds& ends, const Partition& lambda,
                               const std::vector<int>& rows) {
  std::vector<int> bound(m.white.cycles.size(), lambda.empty() ? 0 : lambda[0]);
  for (std::size_t e = 0; e < ends.white.size(); ++e) {
    int& b = bound[ends.white[e]];
    b = std::min(b, lambda.row(rows[ends.black[e]]));
  }
  return bound;
}

}  // namespace

BipartiteMap build_map(const Permutation& sigma1, const Permutation& sigma2) {
  if (sigma1.degree() != sigma2.degree()) throw std::invalid_argument("map requires permutations of equal degree");
  return {sigma1, sigma2, cycle_decomposition(sigma1), cycle_decomposition(sigma2),
          cycle_decomposition(compose(sigma1, sigma2))};
}

std::vector<ComponentTopology> components(const BipartiteMap& m) {
  const std::size_t k = static_cast<std::size_t>(m.edges());
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const Permutation* p : {&m.sigma1, &m.sigma2}) {
    const auto images = p->zero_based();
    for (std::size_t x = 0; x < k; ++x)
      parent[find_root(parent, x)] = find_root(parent, static_cast<std::size_t>(images[x]));
  }

  std::vector<ComponentTopology> out;
  std::vector<std::size_t> index_of_root(k, k);
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t root = find_root(parent, x);
    if (index_of_root[root] == k) {
      index_of_root[root] = out.size();
      out.emplace_back();
    }
    out[index_of_root[root]].edges.push_back(static_cast<int>(x) + 1);
  }

  auto count_cycles_in = [&](const CycleDecomposition& d, std::size_t component) {
    int count = 0;
    for (const auto& c : d.cycles)
      if (index_of_root[find_root(parent, static_cast<std::size_t>(c.front() - 1))] == component) ++count;
    return count;
  };
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& comp = out[i];
    comp.euler_characteristic = count_cycles_in(m.white, i) + count_cycles_in(m.black, i) +
                                count_cycles_in(m.faces, i) - static_cast<int>(comp.edges.size());
    if (comp.euler_characteristic % 2 != 0 || comp.euler_characteristic > 2)
      throw std::logic_error("component with impossible Euler characteristic " +
                             std::to_string(comp.euler_characteristic));
    comp.genus = (2 - comp.euler_characteristic) / 2;
  }
  return out;
}

int euler_characteristic(const BipartiteMap& m) {
  int total = 0;
  for (const auto& c : components(m)) total += c.euler_characteristic;
  return total;
}

std::vector<int> genus_per_component(const BipartiteMap& m) {
  std::vector<int> out;
  for (const auto& c : components(m)) out.push_back(c.genus);
  return out;
}

bool is_embedding(const BipartiteMap& m, const Partition& lambda, const Embedding& e) {
  const EdgeEnds ends = edge_ends(m);
  if (e.white_columns.size() != m.white.count() || e.black_rows.size() != m.black.count() ||
      e.edge_boxes.size() != static_cast<std::size_t>(m.edges()))
    return false;
  for (std::size_t edge = 0; edge < e.edge_boxes.size(); ++edge) {
    const auto [row, col] = e.edge_boxes[edge];
    if (row < 1 || col < 1 || col > lambda.row(row)) return false;
    if (row != e.black_rows[ends.black[edge]] || col != e.white_columns[ends.white[edge]]) return false;
  }
  return true;
}

Integer count_embeddings(const BipartiteMap& m, const Partition& lambda) {
  const EdgeEnds ends = edge_ends(m);
  Integer total = 0;
  for_each_row_assignment(m.black.count(), lambda.length(), [&](const std::vector<int>& rows) {
    Integer product = 1;
    for (int b : column_bounds(m, ends, lambda, rows)) product *= b;
    total += product;
  });
  return total;
}

std::vector<Embedding> enumerate_embeddings(const BipartiteMap& m, const Partition& lambda) {
  const EdgeEnds ends = edge_ends(m);
  std::vector<Embedding> out;
  for_each_row_assignment(m.black.count(), lambda.length(), [&](const std::vector<int>& rows) {
    const std::vector<int> bound = column_bounds(m, ends, lambda, rows);
    if (std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; })) return;
    std::vector<int> cols(bound.size(), 1);
    while (true) {
      Embedding e{cols, rows, {}};
      for (std::size_t edge = 0; edge < ends.white.size(); ++edge)
        e.edge_boxes.emplace_back(rows[ends.black[edge]], cols[ends.white[edge]]);
      out.push_back(std::move(e));
      std::size_t i = 0;
      while (i < cols.size() && ++cols[i] > bound[i]) cols[i++] = 1;
      if (i == cols.size()) return;
    }
  });
  return out;
}

Integer signed_embedding_sum(const Partition& pi, const Partition& lambda, unsigned threads) {
  if (pi.size() > lambda.size()) return 0;
  return reduce_factorizations(
      permutation_from_partition(pi), threads, Integer(0),
      [&](Integer& acc, const Permutation& s1, const Permutation& s2) {
        const Integer count = count_embeddings(build_map(s1, s2), lambda);
        if (sign(s1) > 0)
          acc += count;
        else
          acc -= count;
      },
      [](Integer a, const Integer& b) { return Integer(a + b); });
}

std::string to_dot(const BipartiteMap& m) {
  const EdgeEnds ends = edge_ends(m);
  std::ostringstream out;
  out << "graph map {\n";
  for (std::size_t v = 0; v < m.white.count(); ++v)
    out << "  w" << v + 1 << " [shape=circle, style=solid, label=\"w" << v + 1 << "\"];\n";
  for (std::size_t v = 0; v < m.black.count(); ++v)
    out << "  b" << v + 1 << " [shape=circle, style=filled, fillcolor=black, fontcolor=white, label=\"b" << v + 1
        << "\"];\n";
  for (std::size_t e = 0; e < ends.white.size(); ++e)
    out << "  w" << ends.white[e] + 1 << " -- b" << ends.black[e] + 1 << " [label=\"" << e + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace stanleychar
