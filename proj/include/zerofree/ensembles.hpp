#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zerofree/types.hpp"

namespace zerofree::ensembles {

enum class Kind { girko, wigner, sparse_spike, centered_er, dreg_centered };
enum class EntryLaw { rademacher, gaussian, complex_phase };

std::string to_string(Kind k);
std::string to_string(EntryLaw l);
Kind kind_from_string(const std::string& s);
EntryLaw law_from_string(const std::string& s);

struct EnsembleSpec {
  Kind kind = Kind::girko;
  int n = 0;
  int d = 0;                               // dreg_centered only
  EntryLaw law = EntryLaw::rademacher;     // girko / wigner only

  void validate() const;
};

// Random d-regular multigraph from a uniform perfect matching on the n*d
// half-edges (d slots per vertex cloud). Loops and multi-edges are kept.
struct ConfigGraph {
  int n = 0;
  int d = 0;
  // Matched half-edge pairs; half-edge (vertex i, slot s) has id i*d + s.
  std::vector<std::pair<int, int>> matching;
  Eigen::MatrixXi adjacency;  // off-diagonal multiplicities, symmetric
  std::vector<int> loops;     // per-vertex loop counts

  void validate() const;  // perfect matching + degree identity
};

// All samplers are pure in (spec, seed, trial): entry draws are keyed by
// (seed, trial, entry index), so identical inputs give bit-identical output
// and trials form independent streams.
CMat sample_girko(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t trial = 0);
CMat sample_wigner(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t trial = 0);

struct SpikeSample {
  CMat matrix;
  double magnitude;  // value used for nonzero entries, after any cap
  bool capped;
};
// Entries are 0 w.p. 1 - 2^-n and +-2^{n/2}/sqrt(n) w.p. 2^{-n-1} each; the
// magnitude is capped (default 1e8) once 2^{n/2}/sqrt(n) exceeds the cap.
SpikeSample sample_sparse_spike(int n, std::uint64_t seed, std::uint64_t trial = 0,
                                double cap = 1e8);

// Centered, scaled adjacency of a directed Erdos-Renyi draw:
// sqrt(2)(1 - 1/2n) w.p. 1/2n and -sqrt(2)/2n otherwise; zero diagonal.
CMat sample_centered_er(int n, std::uint64_t seed, std::uint64_t trial = 0);

// The fixed 3x3 principal submatrix from an isolated triangle in that
// ensemble; spectral radius -> sqrt(2) as n grows.
CMat centered_er_three_cycle(int n);

// Uniform perfect matching on [N] by shuffle-and-pair.
std::vector<std::pair<int, int>> sample_perfect_matching(int N, std::uint64_t seed,
                                                         std::uint64_t trial = 0);

ConfigGraph sample_config_model(int n, int d, std::uint64_t seed, std::uint64_t trial = 0);

// M_ij = (A_ij - d/n)/sqrt(d) off the diagonal, 0 on it.
CMat centered_adjacency(const ConfigGraph& g);

// Dispatcher over `spec.kind`.
CMat sample(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t trial = 0);

struct MomentCheckResult {
  double estimate;               // Monte Carlo mean of Re prod M_e^{m_e}
  double standard_error;
  std::optional<double> exact;   // product of per-entry moments; independent-entry kinds only
};

// Monte Carlo estimate of E prod_{ij in S} M_ij^{m(ij)}.
MomentCheckResult empirical_moment_check(const EnsembleSpec& spec,
                                         const SubgraphWithMultiplicities& S, long trials,
                                         std::uint64_t seed);

// Exact factored moment for the independent-entry ensembles; nullopt for
// dreg_centered (entries are not independent).
std::optional<double> exact_entry_moment_product(const EnsembleSpec& spec,
                                                 const SubgraphWithMultiplicities& S);

}  // namespace zerofree::ensembles
