#pragma once

#include <string>
#include <vector>

#include "stanleychar/numeric.hpp"
#include "stanleychar/perm.hpp"
#include "stanleychar/shapes.hpp"

namespace stanleychar {

/// Oriented bipartite map with k labeled edges: white vertices are the
/// cycles of sigma1, black vertices the cycles of sigma2 and faces the
/// cycles of sigma1*sigma2. Vertex i is cycle i of the canonical
/// decomposition.
struct BipartiteMap {
  Permutation sigma1;
  Permutation sigma2;
  CycleDecomposition white;
  CycleDecomposition black;
  CycleDecomposition faces;

  int edges() const { return sigma1.degree(); }
};

/// Throws std::invalid_argument on a degree mismatch.
BipartiteMap build_map(const Permutation& sigma1, const Permutation& sigma2);

/// Euler characteristic and genus of one connected component.
struct ComponentTopology {
  std::vector<int> edges;  // 1-based edge labels in the component
  int euler_characteristic = 0;
  int genus = 0;
};

/// Connected components are the orbits of the group generated by sigma1 and
/// sigma2. Throws std::logic_error if a component has odd Euler
/// characteristic.
std::vector<ComponentTopology> components(const BipartiteMap& m);

/// V - E + F summed over components.
int euler_characteristic(const BipartiteMap& m);

std::vector<int> genus_per_component(const BipartiteMap& m);

/// Assignment of white vertices to columns, black vertices to rows and
/// edges to boxes (row, column) of a Young diagram; all indices 1-based,
/// rows longest first.
struct Embedding {
  std::vector<int> white_columns;
  std::vector<int> black_rows;
  std::vector<std::pair<int, int>> edge_boxes;

  bool operator==(const Embedding&) const = default;
};

/// True when every edge's box lies in its black vertex's row and its white
/// vertex's column, and inside lambda.
bool is_embedding(const BipartiteMap& m, const Partition& lambda, const Embedding& e);

/// Number of embeddings of m into lambda. Black vertices are assigned rows by
/// brute force; each white vertex may then take any column that exists in
/// every row it touches.
Integer count_embeddings(const BipartiteMap& m, const Partition& lambda);

/// Enumerates the embeddings explicitly (rows first, then columns).
std::vector<Embedding> enumerate_embeddings(const BipartiteMap& m, const Partition& lambda);

/// Sum over sigma1*sigma2 = pi of sign(sigma1) * count_embeddings.
Integer signed_embedding_sum(const Partition& pi, const Partition& lambda, unsigned threads = 1);

/// Graphviz rendering of the incidence structure.
std::string to_dot(const BipartiteMap& m);

}  // namespace stanleychar
