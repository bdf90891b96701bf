#include "symmono/schurweyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "symmono/errors.hpp"
#include "symmono/gmean.hpp"

namespace symmono {

std::size_t MultisetHash::operator()(const Multiset& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : m) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

double multiset_orderings(const Multiset& m) {
  double k = 1.0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    run = (i > 0 && m[i] == m[i - 1]) ? run + 1 : 1;
    k *= static_cast<double>(i + 1) / static_cast<double>(run);
  }
  return std::round(k);
}

namespace {

constexpr std::size_t kMaxBasis = 4'000'000;

// Calls f on every nondecreasing sequence of length n over [0, d), lexicographically.
template <class F>
void for_each_multiset(std::int64_t d, int n, F&& f) {
  Multiset m(n, 0);
  if (n == 0) {
    f(m);
    return;
  }
  while (true) {
    f(m);
    int i = n - 1;
    while (i >= 0 && m[i] == d - 1) --i;
    if (i < 0) return;
    const std::uint32_t v = m[i] + 1;
    for (int j = i; j < n; ++j) m[j] = v;
  }
}

void check_basis_size(std::int64_t d, int n) {
  const BigInt c = binomial(static_cast<int>(std::min<std::int64_t>(d + n - 1, 1 << 30)), n);
  if (c > BigInt(kMaxBasis)) throw CapExceeded("symmetric power dimension exceeds the enumeration cap");
}

std::int64_t lifted_dim(std::int64_t d, int n) {
  std::int64_t t = 1;
  for (int i = 0; i < n; ++i) {
    t *= d;
    if (t > kMaxLiftedDim) throw CapExceeded("lifted tensor power dimension exceeds the cap");
  }
  return t;
}

std::int64_t flat_of_sequence(const Multiset& y, std::int64_t d) {
  std::int64_t f = 0;
  for (std::uint32_t x : y) f = f * d + x;
  return f;
}

}  // namespace

SymBasis::SymBasis(SpaceSpec space, int copies) : space_(std::move(space)), n_(copies) {
  require(copies >= 0, "copy count must be nonnegative");
  check_basis_size(space_.total_dim(), copies);
  for_each_multiset(space_.total_dim(), copies, [&](const Multiset& m) { elems_.push_back(m); });
  full_ = true;
  finish();
}

SymBasis::SymBasis(SpaceSpec space, int copies, std::vector<Multiset> elems, bool full)
    : space_(std::move(space)), n_(copies), full_(full), elems_(std::move(elems)) {
  finish();
}

SymBasis SymBasis::weight_sector(SpaceSpec space, int copies, const std::set<WeightKey>& weights) {
  require(copies >= 0, "copy count must be nonnegative");
  check_basis_size(space.total_dim(), copies);
  SymBasis probe(space, 0);
  std::vector<Multiset> keep;
  for_each_multiset(space.total_dim(), copies, [&](const Multiset& m) {
    if (weights.count(probe.weight(m))) keep.push_back(m);
  });
  return SymBasis(std::move(space), copies, std::move(keep), false);
}

void SymBasis::finish() {
  k_.resize(elems_.size());
  index_.reserve(elems_.size());
  std::map<WeightKey, std::size_t> block_ids;
  block_of_.resize(elems_.size());
  pos_in_block_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    k_[i] = multiset_orderings(elems_[i]);
    index_.emplace(elems_[i], i);
    const WeightKey w = weight(elems_[i]);
    auto it = block_ids.find(w);
    if (it == block_ids.end()) {
      it = block_ids.emplace(w, blocks_.size()).first;
      blocks_.emplace_back();
    }
    block_of_[i] = it->second;
    pos_in_block_[i] = blocks_[it->second].size();
    blocks_[it->second].push_back(i);
  }
}

std::optional<std::size_t> SymBasis::index_of(const Multiset& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> SymBasis::occupation(std::size_t i) const {
  std::vector<int> occ(local_dim(), 0);
  for (std::uint32_t x : elems_[i]) ++occ[x];
  return occ;
}

WeightKey SymBasis::weight(const Multiset& m) const {
  const auto& dims = space_.dims();
  std::vector<std::size_t> offset(dims.size(), 0);
  std::size_t total = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    offset[j] = total;
    total += dims[j];
  }
  WeightKey w(total, 0);
  for (std::uint32_t x : m) {
    const auto d = space_.digits(x);
    for (std::size_t j = 0; j < dims.size(); ++j) ++w[offset[j] + d[j]];
  }
  return w;
}

Eigen::VectorXcd SymBasis::lift(const Eigen::VectorXcd& c) const {
  require(c.size() == static_cast<Eigen::Index>(size()), "lift: coordinate vector has the wrong size");
  const std::int64_t d = local_dim();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(lifted_dim(d, n_));
  for (std::size_t i = 0; i < size(); ++i) {
    const cplx a = c[i] / std::sqrt(k_[i]);
    Multiset y = elems_[i];
    do {
      v[flat_of_sequence(y, d)] += a;
    } while (std::next_permutation(y.begin(), y.end()));
  }
  return v;
}

Eigen::VectorXcd SymBasis::compress(const Eigen::VectorXcd& v, double tol) const {
  const std::int64_t d = local_dim();
  require(v.size() == lifted_dim(d, n_), "compress: vector has the wrong size");
  Eigen::VectorXcd c(size());
  for (std::size_t i = 0; i < size(); ++i) {
    cplx s = 0.0;
    Multiset y = elems_[i];
    do {
      s += v[flat_of_sequence(y, d)];
    } while (std::next_permutation(y.begin(), y.end()));
    c[i] = s / std::sqrt(k_[i]);
  }
  const double resid = (v - lift(c)).norm();
  if (resid > tol * std::max(1.0, v.norm()))
    throw InvalidArgument("compress: vector is not in the symmetric subspace (residual " + std::to_string(resid) + ")");
  return c;
}

Eigen::VectorXcd SymBasis::power_vector(const Eigen::VectorXcd& psi) const {
  require(psi.size() == local_dim(), "power_vector: state has the wrong dimension");
  Eigen::VectorXcd c(size());
  for (std::size_t i = 0; i < size(); ++i) {
    cplx p = std::sqrt(k_[i]);
    for (std::uint32_t x : elems_[i]) p *= psi[x];
    c[i] = p;
  }
  return c;
}

SymBasis sym_basis(int local_dim, int copies) { return SymBasis(SpaceSpec({local_dim}), copies); }

CompressedOperator::CompressedOperator(std::shared_ptr<const SymBasis> basis, std::vector<Block> blocks)
    : basis_(std::move(basis)), blocks_(std::move(blocks)) {
  std::size_t covered = 0;
  for (const auto& b : blocks_) {
    require(b.matrix.rows() == static_cast<Eigen::Index>(b.index.size()) && b.matrix.cols() == b.matrix.rows(),
            "operator block shape mismatch");
    covered += b.index.size();
  }
  require(covered == basis_->size(), "operator blocks must cover the basis");
}

CompressedOperator CompressedOperator::identity(std::shared_ptr<const SymBasis> basis) {
  std::vector<Block> blocks;
  for (const auto& idx : basis->blocks())
    blocks.push_back({idx, Eigen::MatrixXd::Identity(idx.size(), idx.size())});
  return CompressedOperator(std::move(basis), std::move(blocks));
}

Eigen::MatrixXd CompressedOperator::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.index.size(); ++i)
      for (std::size_t j = 0; j < b.index.size(); ++j) m(b.index[i], b.index[j]) = b.matrix(i, j);
  return m;
}

Eigen::VectorXcd CompressedOperator::apply(const Eigen::VectorXcd& c) const {
  require(c.size() == static_cast<Eigen::Index>(dim()), "operator apply: size mismatch");
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim());
  for (const auto& b : blocks_) {
    Eigen::VectorXcd x(b.index.size());
    for (std::size_t i = 0; i < b.index.size(); ++i) x[i] = c[b.index[i]];
    const Eigen::VectorXcd y = b.matrix.cast<cplx>() * x;
    for (std::size_t i = 0; i < b.index.size(); ++i) out[b.index[i]] = y[i];
  }
  return out;
}

double CompressedOperator::expectation(const Eigen::VectorXcd& c) const {
  require(c.size() == static_cast<Eigen::Index>(dim()), "operator expectation: size mismatch");
  double s = 0.0;
  for (const auto& b : blocks_) {
    Eigen::VectorXcd x(b.index.size());
    for (std::size_t i = 0; i < b.index.size(); ++i) x[i] = c[b.index[i]];
    s += (x.adjoint() * (b.matrix.cast<cplx>() * x))(0, 0).real();
  }
  return s;
}

std::vector<double> CompressedOperator::eigenvalues() const {
  std::vector<double> ev;
  for (const auto& b : blocks_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.matrix, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()[i]);
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

double CompressedOperator::min_eigenvalue() const {
  const auto ev = eigenvalues();
  return ev.empty() ? 0.0 : ev.front();
}

double CompressedOperator::max_eigenvalue() const {
  const auto ev = eigenvalues();
  return ev.empty() ? 0.0 : ev.back();
}

CompressedOperator CompressedOperator::map(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& f) const {
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back({b.index, f(b.matrix)});
  return CompressedOperator(basis_, std::move(out));
}

CompressedOperator CompressedOperator::power(double t) const {
  return map([t](const Eigen::MatrixXd& m) { return psd_power(m, t); });
}

CompressedOperator CompressedOperator::scaled(double s) const {
  return map([s](const Eigen::MatrixXd& m) -> Eigen::MatrixXd { return s * m; });
}

namespace {

// Splits a symbol into its S-digits and remaining digits and back.
struct SidePlan {
  std::vector<std::uint32_t> s_part, r_part;
  std::vector<std::uint32_t> combine;  // s * r_count + r -> symbol
  std::uint32_t r_count = 1;
};

SidePlan make_side_plan(const SpaceSpec& space, std::span<const int> side) {
  const int k = space.parties();
  std::vector<char> in(k, 0);
  for (int j : side) {
    require(j >= 0 && j < k, "side party out of range");
    in[j] = 1;
  }
  SidePlan p;
  std::uint32_t s_count = 1;
  for (int j = 0; j < k; ++j) (in[j] ? s_count : p.r_count) *= space.dim(j);
  const std::int64_t d = space.total_dim();
  p.s_part.resize(d);
  p.r_part.resize(d);
  p.combine.resize(static_cast<std::size_t>(s_count) * p.r_count);
  for (std::int64_t x = 0; x < d; ++x) {
    const auto dg = space.digits(x);
    std::uint32_t s = 0, r = 0;
    for (int j = 0; j < k; ++j) {
      if (in[j]) s = s * space.dim(j) + dg[j];
      else r = r * space.dim(j) + dg[j];
    }
    p.s_part[x] = s;
    p.r_part[x] = r;
    p.combine[static_cast<std::size_t>(s) * p.r_count + r] = static_cast<std::uint32_t>(x);
  }
  return p;
}

}  // namespace

ClassOperators::ClassOperators(std::shared_ptr<const SymBasis> basis, std::span<const int> side)
    : basis_(std::move(basis)) {
  const int n = basis_->copies();
  const SidePlan plan = make_side_plan(basis_->space(), side);
  std::vector<std::vector<int>> reps;
  for (const Partition& c : enumerate_partitions(n)) {
    classes_.emplace_back(c);
    reps.push_back(classes_.back().representative());
  }
  const std::size_t nc = classes_.size();
  per_block_.reserve(basis_->blocks().size());
  Multiset y, z(n);
  for (const auto& idx : basis_->blocks()) {
    const std::size_t bs = idx.size();
    std::vector<Eigen::MatrixXd> mats(nc, Eigen::MatrixXd::Zero(bs, bs));
    for (std::size_t jj = 0; jj < bs; ++jj) {
      const std::size_t j = idx[jj];
      const double kn = basis_->orderings(j);
      y = basis_->multiset(j);
      do {
        for (std::size_t c = 0; c < nc; ++c) {
          const std::vector<int>& sigma = reps[c];
          for (int i = 0; i < n; ++i) {
            const int dst = sigma[i];
            z[dst] = plan.combine[static_cast<std::size_t>(plan.s_part[y[i]]) * plan.r_count + plan.r_part[y[dst]]];
          }
          std::sort(z.begin(), z.end());
          const auto row = basis_->index_of(z);
          if (!row) throw NumericalError("class operators: basis is not closed under the permutation action");
          mats[c](basis_->position_in_block(*row), jj) += 1.0 / std::sqrt(basis_->orderings(*row) * kn);
        }
      } while (std::next_permutation(y.begin(), y.end()));
    }
    per_block_.push_back(std::move(mats));
  }
}

CompressedOperator ClassOperators::combine(const std::map<CycleType, double>& coeff) const {
  std::vector<double> a(classes_.size(), 0.0);
  for (const auto& [cls, c] : coeff) {
    const auto it = std::find(classes_.begin(), classes_.end(), cls);
    require(it != classes_.end(), "class weight for a class of the wrong size");
    a[it - classes_.begin()] = c;
  }
  std::vector<CompressedOperator::Block> blocks;
  blocks.reserve(per_block_.size());
  for (std::size_t b = 0; b < per_block_.size(); ++b) {
    const auto& idx = basis_->blocks()[b];
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(idx.size(), idx.size());
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a[c] != 0.0) m += a[c] * per_block_[b][c];
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
      throw NumericalError("class operators: combined matrix is not symmetric");
    blocks.push_back({idx, 0.5 * (m + m.transpose())});
  }
  return CompressedOperator(basis_, std::move(blocks));
}

CompressedOperator class_function_operator(std::shared_ptr<const SymBasis> basis, std::span<const int> side,
                                           const std::map<CycleType, double>& coeff) {
  return ClassOperators(std::move(basis), side).combine(coeff);
}

std::map<CycleType, double> isotypic_class_weights(int n, const std::map<Partition, double>& lambda_weights) {
  std::map<CycleType, double> out;
  const double nfact = static_cast<double>(factorial(n));
  for (const Partition& c : enumerate_partitions(n)) {
    const CycleType cls(c);
    double a = 0.0;
    for (const auto& [lam, w] : lambda_weights) {
      require(lam.size() == n, "isotypic_class_weights: partition size differs from n");
      a += w * static_cast<double>(irrep_dim(lam)) * static_cast<double>(mn_character(lam, cls));
    }
    out[cls] = a * static_cast<double>(cls.class_size()) / nfact;
  }
  return out;
}

namespace {

struct LiftedPlan {
  std::int64_t d;
  std::int64_t total;
  std::vector<std::uint32_t> symbols;  // total × n
};

LiftedPlan make_lifted_plan(const SpaceSpec& space, int n, Eigen::Index vsize, int copy_cap) {
  if (n > copy_cap) throw CapExceeded("copy count " + std::to_string(n) + " exceeds the cap " + std::to_string(copy_cap));
  require(n >= 1, "copy count must be at least 1");
  LiftedPlan p{space.total_dim(), lifted_dim(space.total_dim(), n), {}};
  require(vsize == p.total, "vector length does not match the tensor power dimension");
  p.symbols.resize(static_cast<std::size_t>(p.total) * n);
  for (std::int64_t f = 0; f < p.total; ++f) {
    std::int64_t g = f;
    for (int i = n - 1; i >= 0; --i) {
      p.symbols[f * n + i] = static_cast<std::uint32_t>(g % p.d);
      g /= p.d;
    }
  }
  return p;
}

void accumulate_permuted(const LiftedPlan& lp, const SidePlan& sp, int n, const std::vector<int>& sigma, cplx c,
                         const Eigen::VectorXcd& v, Eigen::VectorXcd& out) {
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
  for (std::int64_t f = 0; f < lp.total; ++f) {
    const std::uint32_t* y = &lp.symbols[f * n];
    std::int64_t g = 0;
    // z_{σ(i)} takes the S-digits of y_i; z_j keeps its own remaining digits.
    for (int j = 0; j < n; ++j)
      g = g * lp.d + sp.combine[static_cast<std::size_t>(sp.s_part[y[inv[j]]]) * sp.r_count + sp.r_part[y[j]]];
    out[g] += c * v[f];
  }
}

std::vector<int> all_parties(const SpaceSpec& space) {
  std::vector<int> s(space.parties());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

}  // namespace

Eigen::VectorXcd permute_copies(const SpaceSpec& space, int n, const std::vector<int>& sigma, const Eigen::VectorXcd& v,
                                std::span<const int> side) {
  require(static_cast<int>(sigma.size()) == n, "permutation length differs from copy count");
  const LiftedPlan lp = make_lifted_plan(space, n, v.size(), std::max(n, kDefaultCopyCap));
  const SidePlan sp = make_side_plan(space, side);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  accumulate_permuted(lp, sp, n, sigma, 1.0, v, out);
  return out;
}

Eigen::VectorXcd isotypic_apply(const IsotypicSpec& spec, const SpaceSpec& space, int n, const Eigen::VectorXcd& v,
                                int copy_cap) {
  require(spec.lambda.size() == n, "isotypic_apply: partition size differs from copy count");
  const LiftedPlan lp = make_lifted_plan(space, n, v.size(), copy_cap);
  const std::vector<int> side = spec.group_side ? *spec.group_side : all_parties(space);
  const SidePlan sp = make_side_plan(space, side);
  const double dl = static_cast<double>(irrep_dim(spec.lambda));
  const double nfact = static_cast<double>(factorial(n));
  std::map<CycleType, double> coeff;
  for (const Partition& c : enumerate_partitions(n)) {
    const CycleType cls(c);
    coeff[cls] = dl * static_cast<double>(mn_character(spec.lambda, cls)) / nfact;
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const double c = coeff.at(CycleType::of(sigma));
    if (c != 0.0) accumulate_permuted(lp, sp, n, sigma, c, v, out);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Eigen::VectorXcd symmetrize(const SpaceSpec& space, int n, const Eigen::VectorXcd& v, int copy_cap) {
  return isotypic_apply({Partition({n}), std::nullopt}, space, n, v, copy_cap);
}

Eigen::VectorXcd flattening_projector_apply(const SpaceSpec& space, const Bipartition& b, const Partition& lambda,
                                            const Eigen::VectorXcd& v, int copy_cap) {
  require(b.parties() == space.parties(), "bipartition and space have different party counts");
  const int n = lambda.size();
  const Eigen::VectorXcd s = symmetrize(space, n, v, copy_cap);
  if ((s - v).norm() > 1e-9 * std::max(1.0, v.norm()))
    throw InvalidArgument("flattening_projector_apply: input is not symmetric");
  return isotypic_apply({lambda, b.side()}, space, n, v, copy_cap);
}

namespace {

// Calls f(M) for each distinct sub-multiset M of size m of the sorted multiset L.
template <class F>
void for_each_submultiset(const Multiset& l, int m, F&& f) {
  std::vector<std::uint32_t> vals;
  std::vector<int> counts;
  for (std::uint32_t x : l) {
    if (vals.empty() || vals.back() != x) {
      vals.push_back(x);
      counts.push_back(0);
    }
    ++counts.back();
  }
  std::vector<int> take(vals.size(), 0);
  Multiset sub;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == vals.size()) {
      if (left != 0) return;
      sub.clear();
      for (std::size_t j = 0; j < vals.size(); ++j) sub.insert(sub.end(), take[j], vals[j]);
      f(sub);
      return;
    }
    for (int t = std::min(left, counts[i]); t >= 0; --t) {
      take[i] = t;
      rec(i + 1, left - t);
    }
  };
  rec(0, m);
}

Multiset multiset_difference(const Multiset& l, const Multiset& m) {
  Multiset out;
  std::set_difference(l.begin(), l.end(), m.begin(), m.end(), std::back_inserter(out));
  return out;
}

using Triplet = Eigen::Triplet<double>;

Eigen::SparseMatrix<double> from_triplets(Eigen::Index rows, Eigen::Index cols, const std::vector<Triplet>& t) {
  Eigen::SparseMatrix<double> s(rows, cols);
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

// symbol of H⊗K from symbols of H and K (factorwise merged digits)
std::vector<std::uint32_t> tensor_symbol_table(const SpaceSpec& h, const SpaceSpec& k) {
  const SpaceSpec hk = SpaceSpec::tensor(h, k);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(h.total_dim() * k.total_dim()));
  std::vector<int> d(h.parties());
  for (std::int64_t x = 0; x < h.total_dim(); ++x) {
    const auto dx = h.digits(x);
    for (std::int64_t y = 0; y < k.total_dim(); ++y) {
      const auto dy = k.digits(y);
      for (int j = 0; j < h.parties(); ++j) d[j] = dx[j] * k.dim(j) + dy[j];
      t[x * k.total_dim() + y] = static_cast<std::uint32_t>(hk.flat(d));
    }
  }
  return t;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> direct_sum_symbol_tables(const SpaceSpec& h,
                                                                                           const SpaceSpec& k) {
  const SpaceSpec hk = SpaceSpec::direct_sum(h, k);
  std::vector<std::uint32_t> th(h.total_dim()), tk(k.total_dim());
  for (std::int64_t x = 0; x < h.total_dim(); ++x) th[x] = static_cast<std::uint32_t>(hk.flat(h.digits(x)));
  std::vector<int> d(h.parties());
  for (std::int64_t y = 0; y < k.total_dim(); ++y) {
    const auto dy = k.digits(y);
    for (int j = 0; j < h.parties(); ++j) d[j] = h.dim(j) + dy[j];
    tk[y] = static_cast<std::uint32_t>(hk.flat(d));
  }
  return {th, tk};
}

template <class F>
void for_each_tensor_image(const SymBasis& a, const SymBasis& b, const std::vector<std::uint32_t>& table,
                           std::int64_t kdim, F&& f) {
  const int n = a.copies();
  Multiset z(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Multiset& x = a.multiset(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      Multiset y = b.multiset(j);
      do {
        for (int c = 0; c < n; ++c) z[c] = table[x[c] * kdim + y[c]];
        Multiset zs = z;
        std::sort(zs.begin(), zs.end());
        f(i, j, zs);
      } while (std::next_permutation(y.begin(), y.end()));
    }
  }
}

}  // namespace

Eigen::SparseMatrix<double> inclusion_split(const SpaceSpec& space, int m, int n) {
  require(m >= 0 && n >= 0, "inclusion_split: sizes must be nonnegative");
  const SymBasis src(space, m + n), bm(space, m), bn(space, n);
  std::vector<Triplet> t;
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Multiset& l = src.multiset(c);
    const double kl = src.orderings(c);
    for_each_submultiset(l, m, [&](const Multiset& ms) {
      const Multiset ns = multiset_difference(l, ms);
      const std::size_t i = *bm.index_of(ms);
      const std::size_t j = *bn.index_of(ns);
      const double v = std::sqrt(bm.orderings(i) * bn.orderings(j) / kl);
      t.emplace_back(static_cast<int>(i * bn.size() + j), static_cast<int>(c), v);
    });
  }
  return from_triplets(bm.size() * bn.size(), src.size(), t);
}

Eigen::SparseMatrix<double> inclusion_split(int local_dim, int m, int n) {
  return inclusion_split(SpaceSpec({local_dim}), m, n);
}

Eigen::SparseMatrix<double> inclusion_tensor(const SpaceSpec& h, const SpaceSpec& k, int n, const SymBasis& target) {
  require(target.space() == SpaceSpec::tensor(h, k) && target.copies() == n, "inclusion_tensor: target basis mismatch");
  const SymBasis a(h, n), b(k, n);
  const auto table = tensor_symbol_table(h, k);
  std::map<std::pair<std::size_t, std::size_t>, double> acc;
  for_each_tensor_image(a, b, table, k.total_dim(), [&](std::size_t i, std::size_t j, const Multiset& l) {
    const auto row = target.index_of(l);
    if (!row) throw InvalidArgument("inclusion_tensor: target basis does not contain the image");
    const double v = a.orderings(i) / std::sqrt(a.orderings(i) * b.orderings(j) * target.orderings(*row));
    acc[{*row, i * b.size() + j}] += v;
  });
  std::vector<Triplet> t;
  for (const auto& [rc, v] : acc) t.emplace_back(static_cast<int>(rc.first), static_cast<int>(rc.second), v);
  return from_triplets(target.size(), a.size() * b.size(), t);
}

Eigen::SparseMatrix<double> inclusion_tensor(int dh, int dk, int n) {
  const SpaceSpec h({dh}), k({dk});
  return inclusion_tensor(h, k, n, SymBasis(SpaceSpec::tensor(h, k), n));
}

Eigen::SparseMatrix<double> embed_direct_sum(const SpaceSpec& h, const SpaceSpec& k, int m, int n,
                                             const SymBasis& target, int copy_cap) {
  if (m + n > copy_cap) throw CapExceeded("embed_direct_sum: m+n exceeds the copy cap");
  require(target.space() == SpaceSpec::direct_sum(h, k) && target.copies() == m + n,
          "embed_direct_sum: target basis mismatch");
  const SymBasis a(h, m), b(k, n);
  const auto [th, tk] = direct_sum_symbol_tables(h, k);
  std::vector<Triplet> t;
  Multiset l;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      l.clear();
      for (std::uint32_t x : a.multiset(i)) l.push_back(th[x]);
      for (std::uint32_t y : b.multiset(j)) l.push_back(tk[y]);
      std::sort(l.begin(), l.end());
      const auto row = target.index_of(l);
      if (!row) throw InvalidArgument("embed_direct_sum: target basis does not contain the image");
      t.emplace_back(static_cast<int>(*row), static_cast<int>(i * b.size() + j), 1.0);
    }
  return from_triplets(target.size(), a.size() * b.size(), t);
}

Eigen::SparseMatrix<double> embed_direct_sum(int dh, int dk, int m, int n) {
  const SpaceSpec h({dh}), k({dk});
  return embed_direct_sum(h, k, m, n, SymBasis(SpaceSpec::direct_sum(h, k), m + n));
}

std::set<WeightKey> tensor_image_weights(const SpaceSpec& h, const SpaceSpec& k, int n) {
  const SymBasis a(h, n), b(k, n);
  const SymBasis probe(SpaceSpec::tensor(h, k), 0);
  const auto table = tensor_symbol_table(h, k);
  std::set<WeightKey> out;
  for_each_tensor_image(a, b, table, k.total_dim(),
                        [&](std::size_t, std::size_t, const Multiset& l) { out.insert(probe.weight(l)); });
  return out;
}

std::set<WeightKey> direct_sum_image_weights(const SpaceSpec& h, const SpaceSpec& k, int m, int n) {
  const SymBasis a(h, m), b(k, n);
  const SymBasis probe(SpaceSpec::direct_sum(h, k), 0);
  const auto [th, tk] = direct_sum_symbol_tables(h, k);
  std::set<WeightKey> out;
  Multiset l;
  // one representative per pair of weight classes suffices
  for (const auto& bi : a.blocks())
    for (const auto& bj : b.blocks()) {
      l.clear();
      for (std::uint32_t x : a.multiset(bi.front())) l.push_back(th[x]);
      for (std::uint32_t y : b.multiset(bj.front())) l.push_back(tk[y]);
      std::sort(l.begin(), l.end());
      out.insert(probe.weight(l));
    }
  return out;
}

Eigen::MatrixXcd power_map(const Eigen::MatrixXcd& u, const SymBasis& from, const SymBasis& to) {
  require(from.copies() == to.copies(), "power_map: copy counts differ");
  require(u.rows() == to.local_dim() && u.cols() == from.local_dim(), "power_map: map has the wrong shape");
  const int n = from.copies();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    Multiset y = from.multiset(c);
    std::vector<Multiset> ords;
    do {
      ords.push_back(y);
    } while (std::next_permutation(y.begin(), y.end()));
    for (std::size_t r = 0; r < to.size(); ++r) {
      const Multiset& l = to.multiset(r);
      cplx s = 0.0;
      for (const Multiset& o : ords) {
        cplx p = 1.0;
        for (int i = 0; i < n && p != cplx(0.0); ++i) p *= u(l[i], o[i]);
        s += p;
      }
      out(r, c) = s * std::sqrt(to.orderings(r) / from.orderings(c));
    }
  }
  return out;
}

}  // namespace symmono
