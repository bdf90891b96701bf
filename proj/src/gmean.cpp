#include "symmono/gmean.hpp"

#include <numeric>
#include <sstream>

namespace symmono {

GMeanTree GMeanTree::leaf(int index) {
  require(index >= 0, "tree leaf index must be nonnegative");
  auto n = std::make_shared<Node>();
  n->index = index;
  return GMeanTree(std::move(n));
}

GMeanTree GMeanTree::node(GMeanTree left, GMeanTree right, double t) {
  require(t >= 0.0 && t <= 1.0, "tree weight must lie in [0,1]");
  auto n = std::make_shared<Node>();
  n->t = t;
  n->left = left.node_;
  n->right = right.node_;
  return GMeanTree(std::move(n));
}

namespace {

double sum_range(const std::vector<double>& w, std::size_t lo, std::size_t hi) {
  return std::accumulate(w.begin() + lo, w.begin() + hi, 0.0);
}

double split_weight(double left, double total) { return total > 0.0 ? std::clamp(left / total, 0.0, 1.0) : 0.5; }

GMeanTree balanced_rec(const std::vector<double>& w, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return GMeanTree::leaf(static_cast<int>(lo));
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  return GMeanTree::node(balanced_rec(w, lo, mid), balanced_rec(w, mid, hi),
                         split_weight(sum_range(w, lo, mid), sum_range(w, lo, hi)));
}

void check_weights(const std::vector<double>& w) {
  require(!w.empty(), "need at least one weight");
  for (double x : w) require(std::isfinite(x) && x >= 0.0, "weights must be nonnegative");
  require(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) <= 1e-9, "weights must sum to 1");
}

}  // namespace

GMeanTree GMeanTree::left_comb(const std::vector<double>& weights) {
  check_weights(weights);
  GMeanTree t = leaf(0);
  double acc = weights[0];
  for (std::size_t i = 1; i < weights.size(); ++i) {
    const double tot = acc + weights[i];
    t = node(t, leaf(static_cast<int>(i)), split_weight(acc, tot));
    acc = tot;
  }
  return t;
}

GMeanTree GMeanTree::balanced(const std::vector<double>& weights) {
  check_weights(weights);
  return balanced_rec(weights, 0, weights.size());
}

int GMeanTree::leaf_count() const { return is_leaf() ? 1 : left().leaf_count() + right().leaf_count(); }

std::vector<int> GMeanTree::leaves() const {
  if (is_leaf()) return {index()};
  std::vector<int> l = left().leaves();
  const std::vector<int> r = right().leaves();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

namespace {

void weights_rec(const GMeanTree& t, double mult, std::vector<double>& out) {
  if (t.is_leaf()) {
    out[t.index()] += mult;
    return;
  }
  weights_rec(t.left(), mult * t.t(), out);
  weights_rec(t.right(), mult * (1.0 - t.t()), out);
}

}  // namespace

std::vector<double> GMeanTree::effective_weights() const {
  const std::vector<int> l = leaves();
  std::vector<double> out(*std::max_element(l.begin(), l.end()) + 1, 0.0);
  weights_rec(*this, 1.0, out);
  return out;
}

void GMeanTree::validate(int r) const {
  std::vector<int> l = leaves();
  require(static_cast<int>(l.size()) == r,
          "tree has " + std::to_string(l.size()) + " leaves but " + std::to_string(r) + " operands were given");
  std::sort(l.begin(), l.end());
  for (int i = 0; i < r; ++i) require(l[i] == i, "tree leaves must be the operand indices, each exactly once");
}

std::string GMeanTree::to_string() const {
  if (is_leaf()) return std::to_string(index() + 1);
  std::ostringstream os;
  os << "G(" << left().to_string() << "," << right().to_string() << ";" << t() << ")";
  return os.str();
}

double gmean_scalars(const GMeanTree& tree, std::span<const double> values) {
  tree.validate(static_cast<int>(values.size()));
  const std::vector<double> w = tree.effective_weights();
  double out = 1.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(values[i] >= 0.0, "gmean_scalars: negative value");
    if (w[i] > 0.0) out *= std::pow(values[i], w[i]);
  }
  return out;
}

double max_divergence_rank1(const Eigen::VectorXcd& psi, const Eigen::MatrixXcd& a) {
  require(psi.size() == a.rows(), "max_divergence_rank1: dimension mismatch");
  require(std::abs(psi.norm() - 1.0) <= 1e-9, "max_divergence_rank1 needs a unit vector");
  const PsdMatrix<Eigen::MatrixXcd> pa(a);
  const Eigen::VectorXcd c = pa.eigenvectors().adjoint() * psi;
  const double thr = 1e-10 * std::max(pa.norm(), 1e-300);
  double v = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double lam = pa.eigenvalues()[i];
    const double w = std::norm(c[i]);
    if (lam <= thr) {
      if (w > 1e-20) throw NumericalError("max_divergence_rank1: A is singular along psi");
      continue;
    }
    v += w / lam;
  }
  return std::log2(v);
}

}  // namespace symmono
