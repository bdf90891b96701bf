#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symmono/errors.hpp"

namespace symmono {

enum class SingularPolicy { kRegularize, kStrict };

struct OrderCheck {
  bool holds = true;
  double min_eigenvalue = 0.0;  // of B − A
  double margin = 0.0;          // min_eigenvalue / max(1, ‖B‖)
  Eigen::VectorXcd witness;     // eigenvector of the offending eigenvalue, empty when holds
};

namespace detail {

template <class Mat>
double hermitian_defect(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <class Mat>
Mat hermitian_part(const Mat& a) {
  return (a + a.adjoint()) * 0.5;
}

template <class Mat>
Mat spectral_function(const Eigen::SelfAdjointEigenSolver<Mat>& es, const Eigen::VectorXd& values) {
  const Mat& v = es.eigenvectors();
  Mat out = v * values.asDiagonal() * v.adjoint();
  return hermitian_part(out);
}

}  // namespace detail

// Hermitian PSD matrix with its eigendecomposition computed once at construction.
template <class Mat>
class PsdMatrix {
 public:
  explicit PsdMatrix(Mat m) : m_(std::move(m)) {
    require(m_.rows() == m_.cols(), "PSD matrix must be square");
    const double scale = m_.size() ? std::max(1.0, m_.cwiseAbs().maxCoeff()) : 1.0;
    require(detail::hermitian_defect(m_) <= 1e-12 * scale, "matrix is not Hermitian");
    m_ = detail::hermitian_part(m_);
    es_.compute(m_);
    if (es_.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const double nrm = norm();
    require(m_.rows() == 0 || es_.eigenvalues().minCoeff() >= -1e-10 * nrm, "matrix is not positive semidefinite");
  }

  const Mat& matrix() const { return m_; }
  const Eigen::VectorXd& eigenvalues() const { return es_.eigenvalues(); }
  const Mat& eigenvectors() const { return es_.eigenvectors(); }
  Eigen::Index dim() const { return m_.rows(); }
  double norm() const { return m_.rows() ? es_.eigenvalues().cwiseAbs().maxCoeff() : 0.0; }
  double min_eigenvalue() const { return m_.rows() ? es_.eigenvalues().minCoeff() : 0.0; }
  bool strictly_positive() const { return m_.rows() == 0 || min_eigenvalue() > 1e-10 * norm(); }

  // t < 0 requires strict positivity; t = 0 gives the identity.
  Mat power(double t) const {
    if (t == 0.0) return Mat::Identity(dim(), dim());
    if (t < 0.0 && !strictly_positive()) throw NumericalError("negative power of a singular matrix");
    Eigen::VectorXd v(dim());
    for (Eigen::Index i = 0; i < dim(); ++i) {
      const double x = std::max(es_.eigenvalues()[i], 0.0);
      v[i] = x > 0.0 ? std::pow(x, t) : 0.0;
    }
    return detail::spectral_function(es_, v);
  }

 private:
  Mat m_;
  Eigen::SelfAdjointEigenSolver<Mat> es_;
};

template <class Mat>
Mat psd_power(const Mat& a, double t) {
  return PsdMatrix<Mat>(a).power(t);
}

namespace detail {

// B with positive eigenvalues (possibly tiny, as after regularization).
template <class Mat>
Mat gmean_positive(const Mat& a, const PsdMatrix<Mat>& b, double t) {
  if (b.dim() > 0 && !(b.min_eigenvalue() > 0.0)) throw NumericalError("gmean: second operand is singular");
  Eigen::VectorXd sq(b.dim()), isq(b.dim());
  for (Eigen::Index i = 0; i < b.dim(); ++i) {
    sq[i] = std::sqrt(b.eigenvalues()[i]);
    isq[i] = 1.0 / sq[i];
  }
  const Mat& u = b.eigenvectors();
  const Mat bh = hermitian_part<Mat>(u * sq.asDiagonal() * u.adjoint());
  const Mat bih = hermitian_part<Mat>(u * isq.asDiagonal() * u.adjoint());
  const Mat x = hermitian_part<Mat>(bih * a * bih);
  Eigen::SelfAdjointEigenSolver<Mat> es(x);
  Eigen::VectorXd v(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double e = std::max(es.eigenvalues()[i], 0.0);
    v[i] = e > 0.0 ? std::pow(e, t) : 0.0;
  }
  const Mat xt = spectral_function(es, v);
  return hermitian_part<Mat>(bh * xt * bh);
}

}  // namespace detail

// Kubo–Ando weighted mean A #_t B = B^{1/2}(B^{-1/2} A B^{-1/2})^t B^{1/2}; t is the
// weight on A. Singular B: restrict to supp B when supp A ⊆ supp B, otherwise
// regularize B + εI (ε = 1e−12‖B‖) with one Richardson step, or throw in strict mode.
template <class Mat>
Mat gmean_pair(const Mat& a, const Mat& b, double t, SingularPolicy policy = SingularPolicy::kRegularize) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "gmean_pair: shape mismatch");
  require(t >= 0.0 && t <= 1.0, "gmean_pair: weight must lie in [0,1]");
  const PsdMatrix<Mat> pa(a);
  const PsdMatrix<Mat> pb(b);
  if (t == 1.0) return pa.matrix();
  if (t == 0.0) return pb.matrix();
  if (pb.strictly_positive()) return detail::gmean_positive(pa.matrix(), pb, t);

  const Eigen::Index n = b.rows();
  const double thr = 1e-10 * std::max(pb.norm(), 1e-300);
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < n; ++i)
    if (pb.eigenvalues()[i] > thr) support.push_back(i);
  const Eigen::Index r = static_cast<Eigen::Index>(support.size());
  Mat v(n, r);
  for (Eigen::Index j = 0; j < r; ++j) v.col(j) = pb.eigenvectors().col(support[j]);
  const Mat off = pa.matrix() - v * (v.adjoint() * pa.matrix() * v) * v.adjoint();
  const bool contained = r > 0 && off.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, pa.norm());
  if (contained) {
    const Mat ar = detail::hermitian_part<Mat>(v.adjoint() * pa.matrix() * v);
    const Mat br = detail::hermitian_part<Mat>(v.adjoint() * pb.matrix() * v);
    const Mat gr = detail::gmean_positive(ar, PsdMatrix<Mat>(br), t);
    return detail::hermitian_part<Mat>(v * gr * v.adjoint());
  }
  if (policy == SingularPolicy::kStrict) throw NumericalError("gmean_pair: support of A not contained in support of B");
  double eps = 1e-12 * pb.norm();
  if (eps == 0.0) eps = 1e-12 * std::max(1.0, pa.norm());
  const Mat id = Mat::Identity(n, n);
  const Mat g1 = detail::gmean_positive(pa.matrix(), PsdMatrix<Mat>(pb.matrix() + eps * id), t);
  const Mat g2 = detail::gmean_positive(pa.matrix(), PsdMatrix<Mat>(pb.matrix() + 2.0 * eps * id), t);
  return detail::hermitian_part<Mat>(2.0 * g1 - g2);
}

// Leaf(i) or Node(left, right, t) with t the weight on the left subtree.
// Operand indices are 0-based.
class GMeanTree {
 public:
  static GMeanTree leaf(int index);
  static GMeanTree node(GMeanTree left, GMeanTree right, double t);
  static GMeanTree left_comb(const std::vector<double>& weights);
  static GMeanTree balanced(const std::vector<double>& weights);

  bool is_leaf() const { return node_->left == nullptr; }
  int index() const { return node_->index; }
  double t() const { return node_->t; }
  GMeanTree left() const { return GMeanTree(node_->left); }
  GMeanTree right() const { return GMeanTree(node_->right); }

  int leaf_count() const;
  std::vector<int> leaves() const;
  std::vector<double> effective_weights() const;
  // Throws unless leaves are exactly 0..r-1.
  void validate(int r) const;
  std::string to_string() const;

 private:
  struct Node {
    int index = 0;
    double t = 1.0;
    std::shared_ptr<const Node> left, right;
  };
  explicit GMeanTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace detail {

template <class Mat>
Mat gmean_tree_rec(const GMeanTree& tree, std::span<const Mat> ops, SingularPolicy policy) {
  if (tree.is_leaf()) return PsdMatrix<Mat>(ops[tree.index()]).matrix();
  const Mat l = gmean_tree_rec(tree.left(), ops, policy);
  const Mat r = gmean_tree_rec(tree.right(), ops, policy);
  return gmean_pair(l, r, tree.t(), policy);
}

}  // namespace detail

template <class Mat>
Mat gmean_tree(const GMeanTree& tree, std::span<const Mat> ops, SingularPolicy policy = SingularPolicy::kRegularize) {
  tree.validate(static_cast<int>(ops.size()));
  return detail::gmean_tree_rec(tree, ops, policy);
}

// Scalar version: ∏ c_i^{θ_i}.
double gmean_scalars(const GMeanTree& tree, std::span<const double> values);

template <class Mat>
OrderCheck psd_leq(const Mat& a, const Mat& b, double tol) {
  require(a.rows() == b.rows() && a.cols() == b.cols() && a.rows() == a.cols(), "psd_leq: shape mismatch");
  OrderCheck out;
  if (a.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Mat> eb(detail::hermitian_part<Mat>(b), Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, eb.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<Mat> ed(detail::hermitian_part<Mat>(b - a));
  out.min_eigenvalue = ed.eigenvalues()[0];
  out.margin = out.min_eigenvalue / scale;
  out.holds = out.min_eigenvalue >= -tol * scale;
  if (!out.holds) out.witness = ed.eigenvectors().col(0).template cast<std::complex<double>>();
  return out;
}

// log₂⟨ψ|A⁻¹|ψ⟩ for unit ψ.
double max_divergence_rank1(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& a);

}  // namespace symmono
