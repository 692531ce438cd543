#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace zerofree {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline constexpr const char* kVersion = "0.1.0";

// Raised when a numeric routine (e.g. an eigensolver) fails to converge.
// Maps to CLI exit code 2, as opposed to argument errors (exit code 1).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool all_finite(const CMat& m);
bool is_real(const CMat& m);
// Exact test; the samplers in this library produce exactly Hermitian output.
bool is_hermitian(const CMat& m);

// A simple undirected graph with a per-edge power in {1,2,3,4}; the argument
// of mixed-moment checks E prod M_e^{m_e}.
struct SubgraphWithMultiplicities {
  // Unordered edges stored as (u, v) with u < v; no duplicates.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> mult;  // parallel to `edges`

  // `n` < 0 skips the vertex-range check.
  void validate(int n = -1) const;
  int max_vertex() const;
  int total_power() const;

  static SubgraphWithMultiplicities single_edge(int u, int v, int m);
  // Pairwise vertex-disjoint edges, i.e. S forms a matching.
  bool is_vertex_disjoint() const;
};

}  // namespace zerofree
