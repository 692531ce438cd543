#include "zerofree/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace zerofree {

bool all_finite(const CMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool is_real(const CMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

bool is_hermitian(const CMat& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      if (m(i, j) != std::conj(m(j, i))) return false;
  return true;
}

void SubgraphWithMultiplicities::validate(int n) const {
  if (edges.size() != mult.size())
    throw std::invalid_argument("subgraph: edges and multiplicities differ in length");
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u == v) throw std::invalid_argument("subgraph: self-loop edge");
    if (u > v) std::swap(u, v);
    if (u < 0 || (n >= 0 && v >= n)) throw std::invalid_argument("subgraph: vertex out of range");
    if (!seen.insert({u, v}).second) throw std::invalid_argument("subgraph: duplicate edge");
    if (mult[e] < 1 || mult[e] > 4)
      throw std::invalid_argument("subgraph: multiplicity outside {1,...,4}");
  }
}

int SubgraphWithMultiplicities::max_vertex() const {
  int m = -1;
  for (const auto& [u, v] : edges) m = std::max({m, u, v});
  return m;
}

int SubgraphWithMultiplicities::total_power() const {
  int s = 0;
  for (int m : mult) s += m;
  return s;
}

SubgraphWithMultiplicities SubgraphWithMultiplicities::single_edge(int u, int v, int m) {
  if (u > v) std::swap(u, v);
  return SubgraphWithMultiplicities{{{u, v}}, {m}};
}

bool SubgraphWithMultiplicities::is_vertex_disjoint() const {
  std::set<int> verts;
  for (const auto& [u, v] : edges) {
    if (!verts.insert(u).second || !verts.insert(v).second) return false;
  }
  return true;
}

}  // namespace zerofree
