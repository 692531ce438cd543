#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerofree/types.hpp"

namespace zerofree::combinatorics {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact binary value of a finite double.
BigRat rational_from_double(double x);
double to_double(const BigRat& r);

// Number of fixed-point-free permutations of [k], via
// D_k = (k-1)(D_{k-1} + D_{k-2}), D_0 = 1, D_1 = 0.
BigInt derangements(int k);

BigInt binomial(int n, int k);

// Product m * (m-2) * ... * 1 for odd m >= -1, with (-1)!! = 1.
BigInt double_factorial(long long m);

// Probability that a fixed partial matching with t edges is contained in a
// uniform perfect matching on [N]: (N - 2t - 1)!! / (N - 1)!!.
BigRat matching_inclusion_prob(int N, int t);

// E prod_{e in S} (1_{e in G} - 1/(beta N)) for S a fixed k-edge matching and
// G a uniform perfect matching on [N], evaluated by the finite sum
//   (1/(N-1)!!) * sum_r binom(k, r) (N - 2r - 1)!! (-1/(beta N))^{k-r}.
// Valid for 0 <= 2k <= N.
BigRat matching_moment_exact(int N, int k, const BigRat& beta);

// Same expectation by brute-force enumeration of all (N-1)!! matchings.
// Caps at N <= 12.
BigRat matching_moment_enumerated(int N, int k, const BigRat& beta);

// E prod_{e in S} (1_{e in G} - shift)^{m_e} over all perfect matchings on
// [N], for an arbitrary subgraph S of K_N with per-edge powers. N <= 12.
BigRat subgraph_moment_enumerated(int N, const SubgraphWithMultiplicities& S, const BigRat& shift);

// Visits every perfect matching on [N]; partner[i] = j for each matched pair.
void for_each_perfect_matching(int N, const std::function<void(const std::vector<int>&)>& visit);

// Exact E prod_{e in S} (A_e - d/n)^{m_e} in the configuration model on n
// clouds of d half-edges, where A is the collapsed multigraph adjacency.
// Computed by expanding each A_e over half-edge labels and reducing to
// matching inclusion probabilities; S must be vertex-disjoint.
BigRat dreg_centered_adjacency_moment(int n, int d, const SubgraphWithMultiplicities& S);

// Same quantity by enumerating all perfect matchings on [n] x [d]; n*d <= 12.
// Handles arbitrary S, not just matchings.
BigRat dreg_moment_enumerated(int n, int d, const SubgraphWithMultiplicities& S);

// sum_{k=0}^{n} (tau^2 n)^{-k} binom(n, k) D_k: the exact circle average
// E_theta E_M |det(I - e^{i theta} M / tau)|^2 for an n x n Girko matrix.
// The finite sum is defined for any tau > 0; the geometric bound
// tau^2/(tau^2-1) requires tau > 1, which girko_closed_form enforces.
BigRat girko_raw_sum(int n, double tau);
BigRat girko_closed_form_exact(int n, double tau);  // rejects tau <= 1
double girko_closed_form(int n, double tau);

// Exponent in the Laplace-method analysis of the matching moment:
// g(t) = -t/2 + ((1-alpha)/2) log t + (alpha/2) log|1 - t/beta|.
double laplace_g(double t, double alpha, double beta);
double laplace_g_prime(double t, double alpha, double beta);
// Closed-form maximizer (beta+1)/2 - sqrt((beta+1)^2/4 - beta(1-alpha)),
// for 0 <= alpha <= 1/2, beta >= 1. Returns exactly 1 at alpha = 0.
double laplace_tstar(double alpha, double beta);

// ((beta-1)/beta + sqrt(2k/(beta N)))^k / N^k: the k-edge matching moment
// bound without its absolute constant.
double laplace_bound_bracket(int N, int k, double beta);

}  // namespace zerofree::combinatorics
