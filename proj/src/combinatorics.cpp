#include "zerofree/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace zerofree::combinatorics {

BigRat rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return BigRat(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = scaled;
  if (exp >= 0) return BigRat(num << exp);
  return BigRat(num, BigInt(1) << (-exp));
}

double to_double(const BigRat& r) { return r.convert_to<double>(); }

BigInt derangements(int k) {
  if (k < 0) throw std::invalid_argument("derangements: negative k");
  if (k == 0) return 1;
  if (k == 1) return 0;
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  for (int i = 2; i <= k; ++i) {
    BigInt cur = BigInt(i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt double_factorial(long long m) {
  if (m < -1) throw std::invalid_argument("double_factorial: m < -1");
  if (m % 2 == 0) throw std::invalid_argument("double_factorial: even argument");
  BigInt r = 1;
  for (long long i = m; i >= 3; i -= 2) r *= i;
  return r;
}

BigRat matching_inclusion_prob(int N, int t) {
  if (N < 0 || N % 2 != 0) throw std::invalid_argument("matching_inclusion_prob: N must be even");
  if (t < 0 || 2 * t > N) throw std::invalid_argument("matching_inclusion_prob: need 0 <= 2t <= N");
  return BigRat(double_factorial(N - 2 * t - 1), double_factorial(N - 1));
}

BigRat matching_moment_exact(int N, int k, const BigRat& beta) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("matching_moment_exact: N must be even");
  if (k < 0 || 2 * k > N) throw std::invalid_argument("matching_moment_exact: need 0 <= 2k <= N");
  if (beta < 1) throw std::invalid_argument("matching_moment_exact: beta must be >= 1");
  const BigRat x = BigRat(1) / (beta * N);
  BigRat sum = 0;
  for (int r = 0; r <= k; ++r) {
    BigRat term = BigRat(binomial(k, r) * double_factorial(N - 2 * r - 1));
    BigRat sign_pow = 1;
    for (int i = 0; i < k - r; ++i) sign_pow *= -x;
    sum += term * sign_pow;
  }
  return sum / BigRat(double_factorial(N - 1));
}

namespace {

void matchings_rec(std::vector<int>& partner, int N,
                   const std::function<void(const std::vector<int>&)>& visit) {
  int first = -1;
  for (int i = 0; i < N; ++i)
    if (partner[i] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    visit(partner);
    return;
  }
  for (int j = first + 1; j < N; ++j) {
    if (partner[j] >= 0) continue;
    partner[first] = j;
    partner[j] = first;
    matchings_rec(partner, N, visit);
    partner[first] = -1;
    partner[j] = -1;
  }
}

}  // namespace

void for_each_perfect_matching(int N, const std::function<void(const std::vector<int>&)>& visit) {
  if (N < 0 || N % 2 != 0) throw std::invalid_argument("for_each_perfect_matching: N must be even");
  std::vector<int> partner(N, -1);
  matchings_rec(partner, N, visit);
}

BigRat matching_moment_enumerated(int N, int k, const BigRat& beta) {
  if (N > 12) throw std::invalid_argument("matching_moment_enumerated: N > 12");
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("matching_moment_enumerated: N must be even");
  if (k < 0 || 2 * k > N) throw std::invalid_argument("matching_moment_enumerated: 2k > N");
  const BigRat x = BigRat(1) / (beta * N);
  // The fixed matching S = {(0,1), (2,3), ...}; tally by how many of its
  // edges are present, then weight each tally exactly.
  std::vector<long long> count(k + 1, 0);
  long long total = 0;
  for_each_perfect_matching(N, [&](const std::vector<int>& partner) {
    int r = 0;
    for (int e = 0; e < k; ++e)
      if (partner[2 * e] == 2 * e + 1) ++r;
    ++count[r];
    ++total;
  });
  BigRat sum = 0;
  for (int r = 0; r <= k; ++r) {
    if (count[r] == 0) continue;
    BigRat w = 1;
    for (int i = 0; i < r; ++i) w *= (1 - x);
    for (int i = 0; i < k - r; ++i) w *= -x;
    sum += w * count[r];
  }
  return sum / total;
}

BigRat subgraph_moment_enumerated(int N, const SubgraphWithMultiplicities& S,
                                  const BigRat& shift) {
  if (N > 12) throw std::invalid_argument("subgraph_moment_enumerated: N > 12");
  if (N < 0 || N % 2 != 0)
    throw std::invalid_argument("subgraph_moment_enumerated: N must be even");
  S.validate(N);
  const int ne = static_cast<int>(S.edges.size());
  if (ne == 0) return 1;
  std::vector<long long> mask_count(std::size_t(1) << ne, 0);
  long long total = 0;
  for_each_perfect_matching(N, [&](const std::vector<int>& partner) {
    std::size_t mask = 0;
    for (int e = 0; e < ne; ++e)
      if (partner[S.edges[e].first] == S.edges[e].second) mask |= std::size_t(1) << e;
    ++mask_count[mask];
    ++total;
  });
  // prod over edges of (present ? 1-shift : -shift)^{m_e}, per presence mask
  std::vector<BigRat> pow_in(ne), pow_out(ne);
  for (int e = 0; e < ne; ++e) {
    BigRat pi = 1, po = 1;
    for (int i = 0; i < S.mult[e]; ++i) {
      pi *= (1 - shift);
      po *= -shift;
    }
    pow_in[e] = pi;
    pow_out[e] = po;
  }
  BigRat sum = 0;
  for (std::size_t mask = 0; mask < mask_count.size(); ++mask) {
    if (mask_count[mask] == 0) continue;
    BigRat w = 1;
    for (int e = 0; e < ne; ++e) w *= (mask >> e) & 1 ? pow_in[e] : pow_out[e];
    sum += w * mask_count[mask];
  }
  return sum / total;
}

namespace {

// Coefficients c[r] such that, for one S-edge with multiplicity m,
//   (A_e - d/n)^m = sum over half-edge label choices of products of
//   (1_pair - 1/N) terms, and E[...] = sum_r c[r] * Pr[r specific pairs all
//   matched]. Depends only on (d, m, N).
std::vector<BigRat> cloud_edge_coefficients(int d, int m, int N) {
  const BigRat x = BigRat(1) / N;
  std::vector<BigRat> pow_in(m + 1), pow_out(m + 1);  // (1-x)^j - (-x)^j and (-x)^j
  {
    BigRat a = 1, b = 1;
    for (int j = 0; j <= m; ++j) {
      pow_out[j] = b;
      pow_in[j] = a - b;
      a *= (1 - x);
      b *= -x;
    }
  }
  const int npairs = d * d;
  std::vector<BigRat> coeff(m + 1, BigRat(0));
  // Enumerate multisets of m labels from [d]^2 as non-decreasing index
  // tuples, weighting each by its multinomial count.
  std::vector<int> tuple(m, 0);
  std::vector<int> distinct, reps;
  BigInt m_fact = 1;
  for (int i = 2; i <= m; ++i) m_fact *= i;
  for (;;) {
    distinct.clear();
    reps.clear();
    for (int i = 0; i < m;) {
      int j = i;
      while (j < m && tuple[j] == tuple[i]) ++j;
      distinct.push_back(tuple[i]);
      reps.push_back(j - i);
      i = j;
    }
    BigInt ways = m_fact;
    for (int r : reps) {
      BigInt rf = 1;
      for (int i = 2; i <= r; ++i) rf *= i;
      ways /= rf;
    }
    const int nd = static_cast<int>(distinct.size());
    for (int sub = 0; sub < (1 << nd); ++sub) {
      // Pairs in `sub` must be pairwise half-edge-disjoint or the term is 0.
      bool ok = true;
      for (int a = 0; a < nd && ok; ++a) {
        if (!((sub >> a) & 1)) continue;
        for (int b = a + 1; b < nd && ok; ++b) {
          if (!((sub >> b) & 1)) continue;
          const int sa = distinct[a] / d, ta = distinct[a] % d;
          const int sb = distinct[b] / d, tb = distinct[b] % d;
          if (sa == sb || ta == tb) ok = false;
        }
      }
      if (!ok) continue;
      BigRat w = BigRat(ways);
      int r = 0;
      for (int a = 0; a < nd; ++a) {
        if ((sub >> a) & 1) {
          w *= pow_in[reps[a]];
          ++r;
        } else {
          w *= pow_out[reps[a]];
        }
      }
      coeff[r] += w;
    }
    // next non-decreasing tuple
    int i = m - 1;
    while (i >= 0 && tuple[i] == npairs - 1) --i;
    if (i < 0) break;
    ++tuple[i];
    for (int j = i + 1; j < m; ++j) tuple[j] = tuple[i];
  }
  return coeff;
}

}  // namespace

BigRat dreg_centered_adjacency_moment(int n, int d, const SubgraphWithMultiplicities& S) {
  if (n < 2 || d < 1) throw std::invalid_argument("dreg moment: need n >= 2, d >= 1");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("dreg moment: n*d must be even");
  S.validate(n);
  if (!S.is_vertex_disjoint())
    throw std::invalid_argument("dreg moment: exact cloud expansion requires vertex-disjoint S");
  const int N = n * d;
  if (S.edges.empty()) return 1;
  for (int m : S.mult) {
    const BigInt multisets = binomial(d * d + m - 1, m);
    if (multisets > 2'000'000)
      throw std::invalid_argument("dreg moment: cloud expansion too large");
  }
  std::map<int, std::vector<BigRat>> by_mult;
  std::vector<BigRat> conv{BigRat(1)};
  for (int m : S.mult) {
    auto it = by_mult.find(m);
    if (it == by_mult.end()) it = by_mult.emplace(m, cloud_edge_coefficients(d, m, N)).first;
    const auto& c = it->second;
    std::vector<BigRat> next(conv.size() + c.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < conv.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) next[i + j] += conv[i] * c[j];
    conv = std::move(next);
  }
  BigRat sum = 0;
  for (std::size_t r = 0; r < conv.size(); ++r) {
    if (conv[r] == 0) continue;
    sum += conv[r] * matching_inclusion_prob(N, static_cast<int>(r));
  }
  return sum;
}

BigRat dreg_moment_enumerated(int n, int d, const SubgraphWithMultiplicities& S) {
  if (n < 2 || d < 1) throw std::invalid_argument("dreg_moment_enumerated: need n >= 2, d >= 1");
  const int N = n * d;
  if (N > 12) throw std::invalid_argument("dreg_moment_enumerated: n*d > 12");
  if (N % 2 != 0) throw std::invalid_argument("dreg_moment_enumerated: n*d must be even");
  S.validate(n);
  const int ne = static_cast<int>(S.edges.size());
  if (ne == 0) return 1;
  const BigRat dn = BigRat(d, n);
  // (a - d/n)^m for every attainable multiplicity a
  std::vector<std::vector<BigRat>> val(ne);
  for (int e = 0; e < ne; ++e) {
    val[e].resize(d + 1);
    for (int a = 0; a <= d; ++a) {
      BigRat w = 1;
      for (int i = 0; i < S.mult[e]; ++i) w *= (BigRat(a) - dn);
      val[e][a] = w;
    }
  }
  std::map<std::vector<int>, long long> tally;
  long long total = 0;
  std::vector<int> counts(ne);
  for_each_perfect_matching(N, [&](const std::vector<int>& partner) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int p = 0; p < N; ++p) {
      const int q = partner[p];
      if (q < p) continue;
      int cu = p / d, cv = q / d;
      if (cu == cv) continue;
      if (cu > cv) std::swap(cu, cv);
      for (int e = 0; e < ne; ++e)
        if (S.edges[e].first == cu && S.edges[e].second == cv) ++counts[e];
    }
    ++tally[counts];
    ++total;
  });
  BigRat sum = 0;
  for (const auto& [cnts, cnt] : tally) {
    BigRat w = 1;
    for (int e = 0; e < ne; ++e) w *= val[e][cnts[e]];
    sum += w * cnt;
  }
  return sum / total;
}

BigRat girko_raw_sum(int n, double tau) {
  if (n < 1) throw std::invalid_argument("girko sum: n must be >= 1");
  if (!(tau > 0)) throw std::invalid_argument("girko sum: tau must be positive");
  const BigRat t2 = rational_from_double(tau) * rational_from_double(tau);
  const BigInt P = boost::multiprecision::numerator(t2) * n;
  const BigInt Q = boost::multiprecision::denominator(t2);
  // sum_k binom(n,k) D_k Q^k P^{n-k} / P^n, accumulated over the common
  // denominator to avoid per-term gcd normalization.
  std::vector<BigInt> ppow(n + 1), qpow(n + 1);
  ppow[0] = 1;
  qpow[0] = 1;
  for (int i = 1; i <= n; ++i) {
    ppow[i] = ppow[i - 1] * P;
    qpow[i] = qpow[i - 1] * Q;
  }
  BigInt num = 0;
  BigInt dk_prev2 = 1, dk_prev1 = 0;
  BigInt choose = 1;
  for (int k = 0; k <= n; ++k) {
    BigInt dk;
    if (k == 0)
      dk = 1;
    else if (k == 1)
      dk = 0;
    else {
      dk = BigInt(k - 1) * (dk_prev1 + dk_prev2);
      dk_prev2 = dk_prev1;
      dk_prev1 = dk;
    }
    num += choose * dk * qpow[k] * ppow[n - k];
    choose = choose * (n - k) / (k + 1);
  }
  return BigRat(num, ppow[n]);
}

BigRat girko_closed_form_exact(int n, double tau) {
  if (!(tau > 1.0))
    throw std::invalid_argument("girko_closed_form: tau must exceed 1 (bound diverges)");
  return girko_raw_sum(n, tau);
}

double girko_closed_form(int n, double tau) { return to_double(girko_closed_form_exact(n, tau)); }

double laplace_g(double t, double alpha, double beta) {
  return -t / 2.0 + (1.0 - alpha) / 2.0 * std::log(t) +
         alpha / 2.0 * std::log(std::abs(1.0 - t / beta));
}

double laplace_g_prime(double t, double alpha, double beta) {
  return -0.5 + (1.0 - alpha) / (2.0 * t) - alpha / (2.0 * (beta - t));
}

double laplace_tstar(double alpha, double beta) {
  if (alpha < 0.0 || alpha > 0.5) throw std::invalid_argument("laplace_tstar: alpha outside [0, 1/2]");
  if (beta < 1.0) throw std::invalid_argument("laplace_tstar: beta must be >= 1");
  if (alpha == 0.0) return 1.0;  // quadratic factors as (t-1)(t-beta)
  const double half = (beta + 1.0) / 2.0;
  return half - std::sqrt(half * half - beta * (1.0 - alpha));
}

double laplace_bound_bracket(int N, int k, double beta) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("laplace_bound_bracket: N must be even");
  if (k < 0 || 2 * k > N) throw std::invalid_argument("laplace_bound_bracket: need 0 <= 2k <= N");
  if (beta < 1.0) throw std::invalid_argument("laplace_bound_bracket: beta must be >= 1");
  if (k == 0) return 1.0;
  const double base = (beta - 1.0) / beta + std::sqrt(2.0 * k / (beta * N));
  return std::pow(base / N, k);
}

}  // namespace zerofree::combinatorics
