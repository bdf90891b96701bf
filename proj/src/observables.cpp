#include "symmono/observables.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "symmono/errors.hpp"

namespace symmono {

FamilySpec FamilySpec::bipartite(Bipartition b) { return FamilySpec(Bipartite{std::move(b)}); }

FamilySpec FamilySpec::grouped(FamilySpec base, std::vector<int> regroup) {
  const int k = base.parties();
  std::vector<char> hit(k, 0);
  for (int j : regroup) {
    require(j >= 0 && j < k, "regroup map points outside the base party set");
    hit[j] = 1;
  }
  require(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }), "regroup map must be surjective");
  return FamilySpec(Grouped{std::make_shared<const FamilySpec>(std::move(base)), std::move(regroup)});
}

FamilySpec FamilySpec::gmean(std::vector<FamilySpec> children, GMeanTree tree) {
  require(!children.empty(), "geometric-mean family needs children");
  tree.validate(static_cast<int>(children.size()));
  const int k = children.front().parties();
  for (const auto& c : children) require(c.parties() == k, "geometric-mean children act on different party counts");
  return FamilySpec(GMean{std::move(children), std::move(tree)});
}

FamilySpec FamilySpec::weighted(const std::vector<Bipartition>& bs, const std::vector<double>& theta, TreeShape shape) {
  require(!bs.empty(), "need at least one bipartition");
  require(bs.size() == theta.size(), "theta must have one weight per bipartition");
  if (bs.size() == 1) return bipartite(bs.front());
  std::vector<FamilySpec> children;
  for (const auto& b : bs) children.push_back(bipartite(b));
  GMeanTree tree = shape == TreeShape::kBalanced ? GMeanTree::balanced(theta) : GMeanTree::left_comb(theta);
  return gmean(std::move(children), std::move(tree));
}

int FamilySpec::parties() const {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Bipartite>) return n.b.parties();
        else if constexpr (std::is_same_v<T, Grouped>) return static_cast<int>(n.regroup.size());
        else return n.children.front().parties();
      },
      node_);
}

namespace {

// pull[j] = party of `s` that outer party j belongs to
FamilySpec resolve_rec(const FamilySpec& s, const std::vector<int>& pull) {
  const int outer = static_cast<int>(pull.size());
  return std::visit(
      [&](const auto& n) -> FamilySpec {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, FamilySpec::Bipartite>) {
          std::vector<int> side;
          for (int j = 0; j < outer; ++j)
            if (n.b.contains(pull[j])) side.push_back(j);
          return FamilySpec::bipartite(Bipartition(outer, side));
        } else if constexpr (std::is_same_v<T, FamilySpec::Grouped>) {
          std::vector<int> next(outer);
          for (int j = 0; j < outer; ++j) next[j] = n.regroup[pull[j]];
          return resolve_rec(*n.base, next);
        } else {
          std::vector<FamilySpec> kids;
          for (const auto& c : n.children) kids.push_back(resolve_rec(c, pull));
          return FamilySpec::gmean(std::move(kids), n.tree);
        }
      },
      s.node());
}

void collect_leaves(const FamilySpec& s, double mult, std::vector<std::pair<Bipartition, double>>& out) {
  if (const auto* b = std::get_if<FamilySpec::Bipartite>(&s.node())) {
    out.emplace_back(b->b, mult);
    return;
  }
  const auto& g = std::get<FamilySpec::GMean>(s.node());
  const auto w = g.tree.effective_weights();
  for (std::size_t i = 0; i < g.children.size(); ++i) collect_leaves(g.children[i], mult * w[i], out);
}

}  // namespace

FamilySpec FamilySpec::resolved() const {
  std::vector<int> id(parties());
  for (int j = 0; j < parties(); ++j) id[j] = j;
  return resolve_rec(*this, id);
}

std::vector<std::pair<Bipartition, double>> FamilySpec::weighted_bipartitions() const {
  std::vector<std::pair<Bipartition, double>> out;
  collect_leaves(resolved(), 1.0, out);
  return out;
}

bool FamilySpec::commuting() const {
  const auto leaves = weighted_bipartitions();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      if (!leaves[i].first.noncrossing(leaves[j].first)) return false;
  return true;
}

std::string FamilySpec::to_string() const {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Bipartite>) {
          return n.b.to_string();
        } else if constexpr (std::is_same_v<T, Grouped>) {
          std::ostringstream os;
          os << "grouped[";
          for (std::size_t i = 0; i < n.regroup.size(); ++i) os << (i ? "," : "") << n.regroup[i] + 1;
          os << "](" << n.base->to_string() << ")";
          return os.str();
        } else {
          std::ostringstream os;
          os << "gmean(";
          for (std::size_t i = 0; i < n.children.size(); ++i) os << (i ? "," : "") << n.children[i].to_string();
          os << ";" << n.tree.to_string() << ")";
          return os.str();
        }
      },
      node_);
}

double exponent_of(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
  return (1.0 - alpha) / alpha;
}

std::shared_ptr<const SymBasis> FamilyBuilder::basis(const SpaceSpec& space, int n) {
  if (n > opts_.copy_cap) throw CapExceeded("copy count " + std::to_string(n) + " exceeds the cap " + std::to_string(opts_.copy_cap));
  auto key = std::make_pair(space.dims(), n);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  auto b = std::make_shared<const SymBasis>(space, n);
  bases_.emplace(std::move(key), b);
  return b;
}

const ClassOperators& FamilyBuilder::class_operators(const std::shared_ptr<const SymBasis>& basis,
                                                     const std::vector<int>& side) {
  auto key = std::make_pair(basis.get(), side);
  auto it = classes_.find(key);
  if (it == classes_.end()) it = classes_.emplace(key, std::make_shared<const ClassOperators>(basis, side)).first;
  return *it->second;
}

CompressedOperator FamilyBuilder::isotypic_sum(std::shared_ptr<const SymBasis> basis, const Bipartition& b,
                                               const std::function<double(const Partition&)>& weight) {
  const SpaceSpec& space = basis->space();
  require(b.parties() == space.parties(), "bipartition and space have different party counts");
  const int n = basis->copies();
  if (n > opts_.copy_cap) throw CapExceeded("copy count exceeds the cap");
  const std::int64_t lmax = std::min(space.group_dim(b.side()), space.group_dim(b.complement()));
  std::map<Partition, double> lw;
  for (const Partition& lam : enumerate_partitions(n))
    if (lam.length() <= lmax) lw[lam] = weight(lam);
  return class_operators(basis, b.side()).combine(isotypic_class_weights(n, lw));
}

CompressedOperator FamilyBuilder::build_node(const FamilySpec& spec, const std::shared_ptr<const SymBasis>& basis,
                                             double p, double& constant) {
  const int n = basis->copies();
  if (const auto* bp = std::get_if<FamilySpec::Bipartite>(&spec.node())) {
    const SpaceSpec& space = basis->space();
    constant = static_cast<double>(std::min(space.group_dim(bp->b.side()), space.group_dim(bp->b.complement())));
    const double sign = opts_.entropy_sign;
    return isotypic_sum(basis, bp->b,
                        [&](const Partition& lam) { return std::exp2(sign * n * p * entropy(lam)); });
  }
  const auto* g = std::get_if<FamilySpec::GMean>(&spec.node());
  require(g != nullptr, "family spec must be resolved before building");
  std::vector<CompressedOperator> ops;
  std::vector<double> consts(g->children.size());
  for (std::size_t i = 0; i < g->children.size(); ++i) ops.push_back(build_node(g->children[i], basis, p, consts[i]));
  constant = gmean_scalars(g->tree, consts);
  std::vector<CompressedOperator::Block> blocks;
  const std::size_t nb = ops.front().blocks().size();
  std::vector<Eigen::MatrixXd> operands(ops.size());
  for (std::size_t b = 0; b < nb; ++b) {
    for (std::size_t i = 0; i < ops.size(); ++i) operands[i] = ops[i].blocks()[b].matrix;
    blocks.push_back({ops.front().blocks()[b].index,
                      gmean_tree<Eigen::MatrixXd>(g->tree, operands, opts_.policy)});
  }
  return CompressedOperator(basis, std::move(blocks));
}

FamilyInstance FamilyBuilder::build_bipartite(const SpaceSpec& space, const Bipartition& b, int n) {
  FamilyInstance inst{FamilySpec::bipartite(b), space, n, std::nullopt, 1.0, {}, 1.0};
  inst.powered = build_node(inst.spec, basis(space, n), 1.0, inst.bound_constant);
  return inst;
}

FamilyInstance FamilyBuilder::build(const FamilySpec& spec, const SpaceSpec& space, int n, double alpha) {
  return build(spec, basis(space, n), alpha);
}

FamilyInstance FamilyBuilder::build(const FamilySpec& spec, std::shared_ptr<const SymBasis> basis, double alpha) {
  const double p = exponent_of(alpha);
  require(spec.parties() == basis->space().parties(), "family and space have different party counts");
  if (basis->copies() > opts_.copy_cap) throw CapExceeded("copy count exceeds the cap");
  FamilyInstance inst{spec, basis->space(), basis->copies(), alpha, p, {}, 1.0};
  inst.powered = build_node(spec.resolved(), basis, p, inst.bound_constant);
  return inst;
}

CompressedOperator FamilyBuilder::log_observable(const FamilySpec& spec, std::shared_ptr<const SymBasis> basis) {
  require(spec.parties() == basis->space().parties(), "family and space have different party counts");
  const int n = basis->copies();
  const double sign = opts_.entropy_sign;
  std::optional<CompressedOperator> acc;
  for (const auto& [b, theta] : spec.weighted_bipartitions()) {
    CompressedOperator l = isotypic_sum(basis, b, [&](const Partition& lam) { return sign * theta * n * entropy(lam); });
    if (!acc) {
      acc = std::move(l);
      continue;
    }
    std::vector<CompressedOperator::Block> blocks;
    for (std::size_t i = 0; i < l.blocks().size(); ++i)
      blocks.push_back({l.blocks()[i].index, acc->blocks()[i].matrix + l.blocks()[i].matrix});
    acc = CompressedOperator(basis, std::move(blocks));
  }
  return *acc;
}

FamilyInstance build_bipartite(const SpaceSpec& space, const Bipartition& b, int n, FamilyOptions opts) {
  return FamilyBuilder(opts).build_bipartite(space, b, n);
}

FamilyInstance build_family(const FamilySpec& spec, const SpaceSpec& space, int n, double alpha, FamilyOptions opts) {
  return FamilyBuilder(opts).build(spec, space, n, alpha);
}

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// W^T A W for block-diagonal A, computed block by block from the sparse rows of W.
Eigen::MatrixXd restrict_operator(const CompressedOperator& a, const Eigen::SparseMatrix<double>& w) {
  const SymBasis& basis = *a.basis();
  require(w.rows() == static_cast<Eigen::Index>(basis.size()), "restriction map has the wrong number of rows");
  struct Entry {
    std::size_t pos;
    Eigen::Index col;
    double v;
  };
  std::vector<std::vector<Entry>> by_block(basis.blocks().size());
  for (Eigen::Index c = 0; c < w.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(w, c); it; ++it) {
      const std::size_t r = static_cast<std::size_t>(it.row());
      by_block[basis.block_of(r)].push_back({basis.position_in_block(r), it.col(), it.value()});
    }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(w.cols(), w.cols());
  for (std::size_t b = 0; b < by_block.size(); ++b) {
    const Eigen::MatrixXd& m = a.blocks()[b].matrix;
    for (const Entry& e1 : by_block[b])
      for (const Entry& e2 : by_block[b]) out(e1.col, e2.col) += e1.v * m(e1.pos, e2.pos) * e2.v;
  }
  return out;
}

// Blocks of Sym^a ⊗ Sym^b indexed i·|b| + j, grouped by the pair of weight classes.
std::vector<std::vector<std::size_t>> pair_blocks(const SymBasis& a, const SymBasis& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto key = std::make_pair(a.block_of(i), b.block_of(j));
      auto it = id.find(key);
      if (it == id.end()) {
        it = id.emplace(key, out.size()).first;
        out.emplace_back();
      }
      out[it->second].push_back(i * b.size() + j);
    }
  return out;
}

// lhs ≤ rhs checked block by block; entries coupling different blocks must vanish.
std::pair<double, bool> blocked_leq(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs,
                                    const std::vector<std::vector<std::size_t>>& blocks, double tol) {
  const Eigen::Index n = rhs.rows();
  std::vector<std::size_t> owner(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i : blocks[b]) owner[i] = b;
  const Eigen::MatrixXd diff = rhs - lhs;
  double scale = 1.0;
  double min_eig = std::numeric_limits<double>::infinity();
  for (const auto& idx : blocks) {
    const Eigen::Index s = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd rb(s, s), db(s, s);
    for (Eigen::Index i = 0; i < s; ++i)
      for (Eigen::Index j = 0; j < s; ++j) {
        rb(i, j) = rhs(idx[i], idx[j]);
        db(i, j) = diff(idx[i], idx[j]);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> er(0.5 * (rb + rb.transpose()), Eigen::EigenvaluesOnly);
    scale = std::max(scale, er.eigenvalues().cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ed(0.5 * (db + db.transpose()), Eigen::EigenvaluesOnly);
    min_eig = std::min(min_eig, ed.eigenvalues()[0]);
  }
  double off = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (owner[i] != owner[j]) off = std::max(off, std::abs(diff(i, j)));
  double margin = min_eig / scale;
  if (off > 1e-9 * scale) margin = std::min(margin, -off / scale);
  return {margin, margin >= -tol};
}

Eigen::MatrixXcd random_isometry(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = cplx(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
}

Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd>& ms) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& m : ms) {
    Eigen::MatrixXcd next(out.rows() * m.rows(), out.cols() * m.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) = out(i, j) * m;
    out = std::move(next);
  }
  return out;
}

std::vector<int> distinct_sizes(std::initializer_list<int> xs) {
  std::set<int> s(xs);
  return {s.begin(), s.end()};
}

std::string fmt_sizes(const char* a, int x) { return std::string(a) + "=" + std::to_string(x); }

}  // namespace

AxiomReport verify_axioms(const FamilySpec& spec, const AxiomSetup& setup, double alpha, double tol,
                          FamilyOptions opts) {
  require(setup.m >= 0 && setup.n >= 0, "sizes must be nonnegative");
  if (setup.m + setup.n > opts.copy_cap) throw CapExceeded("m+n exceeds the copy cap");
  require(setup.h.parties() == spec.parties(), "family and space have different party counts");
  const double p = exponent_of(alpha);
  FamilyBuilder builder(opts);
  AxiomReport report;
  const SpaceSpec& h = setup.h;
  const int m = setup.m;
  const int n = setup.n;
  std::mt19937_64 rng(setup.seed);

  // O1: V^{⊗n*} A_{K'} V^{⊗n} = A_H for random product isometries into d_j + 1.
  {
    std::vector<int> kd = h.dims();
    for (int& d : kd) ++d;
    const SpaceSpec kp(kd);
    for (int c : distinct_sizes({m, n})) {
      const FamilyInstance ah = builder.build(spec, h, c, alpha);
      const FamilyInstance ak = builder.build(spec, kp, c, alpha);
      const Eigen::MatrixXd ahd = ah.powered.to_dense();
      const Eigen::MatrixXcd akd = ak.powered.to_dense().cast<cplx>();
      const double scale = std::max(1.0, ahd.cwiseAbs().maxCoeff());
      for (int s = 0; s < setup.isometry_samples; ++s) {
        std::vector<Eigen::MatrixXcd> vs;
        for (int j = 0; j < h.parties(); ++j) vs.push_back(random_isometry(kd[j], h.dim(j), rng));
        const Eigen::MatrixXcd vc = power_map(kron_all(vs), *ah.powered.basis(), *ak.powered.basis());
        const Eigen::MatrixXcd lhs = vc.adjoint() * akd * vc;
        const double dev = (lhs - ahd.cast<cplx>()).cwiseAbs().maxCoeff() / scale;
        report.checks.push_back({"O1", "H=" + h.to_string() + " K=" + kp.to_string() + " " + fmt_sizes("n", c) +
                                           " sample=" + std::to_string(s),
                                 -dev, dev <= tol, std::nullopt});
      }
    }
  }

  // O2: I ≤ A ≤ c^n I, checked on the powered form (p > 0).
  for (int c : distinct_sizes({m, n, m + n})) {
    const FamilyInstance a = builder.build(spec, h, c, alpha);
    const auto ev = a.powered.eigenvalues();
    const double top = std::pow(a.bound_constant, c * p);
    const double lo = ev.empty() ? 0.0 : ev.front();
    const double hi = ev.empty() ? 0.0 : ev.back();
    const double scale_lo = std::max(1.0, hi);
    const double scale_hi = std::max(1.0, top);
    const double m_lo = (lo - 1.0) / scale_lo;
    const double m_hi = (top - hi) / scale_hi;
    const std::string inst = "H=" + h.to_string() + " " + fmt_sizes("n", c) + " c=" + std::to_string(a.bound_constant);
    report.checks.push_back({"O2", inst + " lower", m_lo, m_lo >= -tol, std::nullopt});
    report.checks.push_back({"O2", inst + " upper", m_hi, m_hi >= -tol, std::nullopt});
  }

  // O3: (A_m ⊗ A_n)|_{Sym^{m+n}} ≤ A_{m+n}
  {
    const FamilyInstance am = builder.build(spec, h, m, alpha);
    const FamilyInstance an = builder.build(spec, h, n, alpha);
    const FamilyInstance amn = builder.build(spec, h, m + n, alpha);
    const Eigen::SparseMatrix<double> w = inclusion_split(h, m, n);
    const Eigen::MatrixXd prod = kron(am.powered.to_dense(), an.powered.to_dense());
    const Eigen::MatrixXd lhs = Eigen::MatrixXd(w.transpose() * (prod * w));
    const auto [margin, ok] = blocked_leq(lhs, amn.powered.to_dense(), amn.powered.basis()->blocks(), tol);
    report.checks.push_back({"O3", "H=" + h.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n), margin,
                             ok, std::nullopt});
  }

  if (setup.k.parties() == h.parties()) {
    const SpaceSpec& k = setup.k;
    require(k.parties() == spec.parties(), "second space has the wrong party count");
    // O4: A_{H⊗K}|_{Sym^c(H)⊗Sym^c(K)} ≤ A_H ⊗ A_K
    for (int c : distinct_sizes({m, n})) {
      const SpaceSpec hk = SpaceSpec::tensor(h, k);
      auto target = std::make_shared<const SymBasis>(SymBasis::weight_sector(hk, c, tensor_image_weights(h, k, c)));
      const FamilyInstance ahk = builder.build(spec, target, alpha);
      const FamilyInstance ah = builder.build(spec, h, c, alpha);
      const FamilyInstance ak = builder.build(spec, k, c, alpha);
      const Eigen::SparseMatrix<double> w = inclusion_tensor(h, k, c, *target);
      const Eigen::MatrixXd lhs = restrict_operator(ahk.powered, w);
      const Eigen::MatrixXd rhs = kron(ah.powered.to_dense(), ak.powered.to_dense());
      const auto [margin, ok] = blocked_leq(lhs, rhs, pair_blocks(*ah.powered.basis(), *ak.powered.basis()), tol);
      report.checks.push_back({"O4", "H=" + h.to_string() + " K=" + k.to_string() + " " + fmt_sizes("n", c), margin, ok,
                               std::nullopt});
    }
    // O5: A_{H⊕K,m+n}|_{Sym^m(H)⊗Sym^n(K)} ≤ 2^{(m+n)p h(m/(m+n))} A_{H,m} ⊗ A_{K,n}
    {
      const SpaceSpec hs = SpaceSpec::direct_sum(h, k);
      auto target =
          std::make_shared<const SymBasis>(SymBasis::weight_sector(hs, m + n, direct_sum_image_weights(h, k, m, n)));
      const FamilyInstance asum = builder.build(spec, target, alpha);
      const FamilyInstance ah = builder.build(spec, h, m, alpha);
      const FamilyInstance ak = builder.build(spec, k, n, alpha);
      const Eigen::SparseMatrix<double> w = embed_direct_sum(h, k, m, n, *target, opts.copy_cap);
      const double q = m + n > 0 ? static_cast<double>(m) / (m + n) : 0.0;
      const double slack = std::exp2((m + n) * p * binary_entropy(q));
      const Eigen::MatrixXd lhs = restrict_operator(asum.powered, w);
      const Eigen::MatrixXd rhs = slack * kron(ah.powered.to_dense(), ak.powered.to_dense());
      const auto [margin, ok] = blocked_leq(lhs, rhs, pair_blocks(*ah.powered.basis(), *ak.powered.basis()), tol);
      report.checks.push_back({"O5",
                               "H=" + h.to_string() + " K=" + k.to_string() + " m=" + std::to_string(m) +
                                   " n=" + std::to_string(n),
                               margin, ok, slack});
    }
  }
  return report;
}

}  // namespace symmono
