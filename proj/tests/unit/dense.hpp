#pragma once

// Dense reference operators on H^{⊗n}. The isotypic projectors are spectral projectors of
// the transposition class sum, whose eigenvalue on the λ-isotypic component is the content
// sum of λ; for n ≤ 5 distinct partitions have distinct content sums.

#include <cmath>
#include <map>
#include <vector>

#include "oracles.hpp"

namespace oracle {

inline int content_sum(const std::vector<int>& lam) {
  int s = 0;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) s += j - static_cast<int>(i);
  return s;
}

inline double entropy_of(const std::vector<int>& lam) {
  int n = 0;
  for (int x : lam) n += x;
  std::vector<double> p;
  for (int x : lam) p.push_back(static_cast<double>(x) / n);
  return renyi(p, 1.0);
}

inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Σ_{i<j} ρ_side((i j)) on the copy-major register.
inline Eigen::MatrixXcd transposition_sum(const std::vector<int>& dims, int n, const std::vector<int>& side) {
  std::int64_t total = 1;
  for (int c = 0; c < n; ++c)
    for (int d : dims) total *= d;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(total, total);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> sigma(n);
      for (int c = 0; c < n; ++c) sigma[c] = c;
      std::swap(sigma[i], sigma[j]);
      t += permutation_matrix(dims, n, sigma, side);
    }
  return t;
}

// Projectors P_λ on the side's copies, keyed by λ (zero projectors omitted).
inline std::map<std::vector<int>, Eigen::MatrixXcd> isotypic_projectors(const std::vector<int>& dims, int n,
                                                                       const std::vector<int>& side) {
  const Eigen::MatrixXcd t = transposition_sum(dims, n, side);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
  std::map<std::vector<int>, Eigen::MatrixXcd> out;
  for (const auto& lam : partitions(n)) {
    const double c = content_sum(lam);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(t.rows(), t.cols());
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
      if (std::abs(es.eigenvalues()[k] - c) < 1e-6) p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
    if (p.norm() > 1e-9) out.emplace(lam, p);
  }
  return out;
}

// Σ_λ 2^{sign·n·p·H(λ/n)} P_λ on one side.
inline Eigen::MatrixXcd bipartite_observable(const std::vector<int>& dims, int n, const std::vector<int>& side,
                                             double p) {
  Eigen::MatrixXcd a;
  for (const auto& [lam, proj] : isotypic_projectors(dims, n, side)) {
    const Eigen::MatrixXcd term = std::pow(2.0, n * p * entropy_of(lam)) * proj;
    a = a.size() ? Eigen::MatrixXcd(a + term) : term;
  }
  return a;
}

// (1/n)(α/(1−α)) log₂⟨ψ^⊗n| Π_j A_j^{θ_j p} |ψ^⊗n⟩ for single-party sides, which commute on H^{⊗n}.
inline double commuting_value(const Eigen::VectorXcd& psi, const std::vector<int>& dims, int n,
                              const std::vector<std::vector<int>>& sides, const std::vector<double>& theta,
                              double alpha) {
  const double p = (1 - alpha) / alpha;
  const Eigen::VectorXcd v = tensor_power(psi, n);
  Eigen::VectorXcd w = v;
  for (std::size_t j = 0; j < sides.size(); ++j) {
    // A_j^{θ p} = Σ 2^{n θ p H} P_λ
    w = matrix_power(bipartite_observable(dims, n, sides[j], 1.0), theta[j] * p) * w;
  }
  return alpha / (1 - alpha) * std::log2(v.dot(w).real()) / n;
}

}  // namespace oracle
