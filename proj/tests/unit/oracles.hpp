#pragma once

// Brute-force reference computations shared by the unit tests. Nothing here calls
// into the library's combinatorics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Number of partitions of n with parts ≤ k.
inline std::int64_t partition_count(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return partition_count(n, k - 1) + (n >= k ? partition_count(n - k, k) : 0);
}

// Standard Young tableaux, by removing the largest entry from a corner.
inline std::int64_t syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const int next = i + 1 < shape.size() ? shape[i + 1] : 0;
    if (shape[i] > next) {
      std::vector<int> s = shape;
      --s[i];
      total += syt_count(s);
    }
  }
  return total;
}

// Semistandard tableaux of the shape with entries in 1..d, cell by cell.
inline std::int64_t ssyt_count(const std::vector<int>& shape, int d) {
  std::vector<std::vector<int>> t;
  for (int r : shape) t.emplace_back(r, 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
  std::function<std::int64_t(std::size_t)> fill = [&](std::size_t c) -> std::int64_t {
    if (c == cells.size()) return 1;
    const auto [i, j] = cells[c];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    std::int64_t total = 0;
    for (int v = lo; v <= d; ++v) {
      t[i][j] = v;
      total += fill(c + 1);
    }
    return total;
  };
  return fill(0);
}

inline double renyi(const std::vector<double>& p, double alpha) {
  if (alpha == 1.0) {
    double h = 0;
    for (double x : p)
      if (x > 0) h -= x * std::log2(x);
    return h;
  }
  double s = 0;
  for (double x : p) s += std::pow(x, alpha);
  return std::log2(s) / (1.0 - alpha);
}

inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev[i] = ev[i] > 1e-14 ? std::pow(ev[i], t) : 0.0;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

// Dense permutation of tensor factors: copy i of a k-party, n-copy register goes to copy σ(i),
// for the parties listed in `side`. Register index: copy-major, party-minor, mixed radix.
inline Eigen::MatrixXcd permutation_matrix(const std::vector<int>& dims, int n, const std::vector<int>& sigma,
                                           const std::vector<int>& side) {
  const int k = static_cast<int>(dims.size());
  std::vector<int> radix;
  for (int c = 0; c < n; ++c)
    for (int j = 0; j < k; ++j) radix.push_back(dims[j]);
  std::int64_t total = 1;
  for (int r : radix) total *= r;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(total, total);
  std::vector<int> digits(radix.size()), out(radix.size());
  for (std::int64_t x = 0; x < total; ++x) {
    std::int64_t rem = x;
    for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rem % radix[i]);
      rem /= radix[i];
    }
    out = digits;
    for (int c = 0; c < n; ++c)
      for (int j : side) out[sigma[c] * k + j] = digits[c * k + j];
    std::int64_t y = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) y = y * radix[i] + out[i];
    p(y, x) = 1.0;
  }
  return p;
}

// Copy-major ψ^{⊗n}.
inline Eigen::VectorXcd tensor_power(const Eigen::VectorXcd& psi, int n) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXcd w(v.size() * psi.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) w.segment(i * psi.size(), psi.size()) = v[i] * psi;
    v = w;
  }
  return v;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
