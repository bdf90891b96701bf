#include "symmono/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "symmono/errors.hpp"
#include "symmono/functionals.hpp"
#include "symmono/gmean.hpp"
#include "symmono/io.hpp"
#include "symmono/semiring.hpp"

namespace symmono {

namespace {

using Mat = Eigen::MatrixXcd;

CheckResult equality(const std::string& suite, const std::string& name, double deviation, double tol) {
  return {suite, name, -deviation, deviation <= tol};
}

CheckResult inequality(const std::string& suite, const std::string& name, double margin, double tol) {
  return {suite, name, margin, margin >= -tol};
}

CheckResult flag(const std::string& suite, const std::string& name, bool ok) { return {suite, name, ok ? 0.0 : -1.0, ok}; }

std::string fmt(double x) { return format_number(x); }

Mat gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = cplx(re, im);
    }
  return a;
}

Mat random_psd(int d, std::mt19937_64& rng) {
  const Mat x = gaussian(d, d, rng);
  return (x * x.adjoint() / d + 1e-3 * Mat::Identity(d, d)).eval();
}

Mat random_unitary(int d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian(d, d, rng));
  return qr.householderQ() * Mat::Identity(d, d);
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat dsum(const Mat& a, const Mat& b) {
  Mat out = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double rel_dev(const Mat& a, const Mat& b) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

std::vector<double> random_weights(int r, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(r);
  double s = 0.0;
  for (double& x : w) s += (x = e(rng) + 1e-3);
  for (double& x : w) x /= s;
  return w;
}

}  // namespace

std::vector<CheckResult> verify_schur_weyl(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "schur-weyl";
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 5; ++n) {
      const SpaceSpec space({d});
      const Eigen::Index dim = static_cast<Eigen::Index>(std::pow(d, n));
      const auto lams = enumerate_partitions(n);
      std::vector<Mat> proj;
      for (const auto& lam : lams) {
        Mat p(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i) {
          Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
          e[i] = 1.0;
          p.col(i) = isotypic_apply({lam, std::nullopt}, space, n, e);
        }
        proj.push_back(std::move(p));
      }
      const std::string tag = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      Mat sum = Mat::Zero(dim, dim);
      for (const auto& p : proj) sum += p;
      out.push_back(equality(suite, "completeness " + tag, rel_dev(sum, Mat::Identity(dim, dim)), cfg.tol));
      double orth = 0.0;
      for (std::size_t a = 0; a < proj.size(); ++a)
        for (std::size_t b = 0; b < proj.size(); ++b) {
          const Mat target = a == b ? proj[a] : Mat::Zero(dim, dim);
          orth = std::max(orth, rel_dev(proj[a] * proj[b], target));
        }
      out.push_back(equality(suite, "orthogonality " + tag, orth, cfg.tol));
      bool ranks = true;
      for (std::size_t a = 0; a < proj.size(); ++a) {
        const BigInt expect = weyl_dim(lams[a], d) * irrep_dim(lams[a]);
        Eigen::SelfAdjointEigenSolver<Mat> es(proj[a], Eigen::EigenvaluesOnly);
        const long numeric = (es.eigenvalues().array() > 0.5).count();
        const long trace = std::lround(proj[a].trace().real());
        if (BigInt(numeric) != expect || BigInt(trace) != expect) ranks = false;
      }
      out.push_back(flag(suite, "ranks " + tag, ranks));
    }
  return out;
}

std::vector<CheckResult> verify_axiom_suite(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "axioms";
  struct Case {
    std::string label;
    FamilySpec spec;
    SpaceSpec h, k;
    std::vector<std::pair<int, int>> sizes;
  };
  const std::vector<std::pair<int, int>> mn{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  const Bipartition b12 = Bipartition::parse("1|2");
  const FamilySpec gm = FamilySpec::weighted(Bipartition::elementary(3), {1.0 / 3, 1.0 / 3, 1.0 / 3}, TreeShape::kBalanced);
  const std::vector<Case> cases{
      {"bipartite", FamilySpec::bipartite(b12), SpaceSpec({2, 2}), SpaceSpec({2, 3}), mn},
      {"bipartite", FamilySpec::bipartite(b12), SpaceSpec({2, 3}), SpaceSpec({2, 2}), mn},
      {"gmean-elementary", gm, SpaceSpec({2, 2, 2}), SpaceSpec({2, 2, 2}), mn},
  };
  std::uint64_t seed = cfg.seed;
  for (const auto& c : cases)
    for (double alpha : {0.5, 0.75})
      for (const auto& [m, n] : c.sizes) {
        AxiomSetup setup{c.h, c.k, m, n, 3, seed++};
        const AxiomReport r = verify_axioms(c.spec, setup, alpha, cfg.tol, cfg.family);
        for (const auto& chk : r.checks)
          out.push_back({suite, c.label + " alpha=" + fmt(alpha) + " " + chk.axiom + " " + chk.instance, chk.margin,
                         chk.pass});
      }
  return out;
}

std::vector<CheckResult> verify_gmean_suite(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "gmean";
  std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> dim_pick(2, 8);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  const double tol = cfg.gmean_tol;
  for (int s = 0; s < cfg.gmean_samples; ++s) {
    const int d = dim_pick(rng);
    std::vector<Mat> a;
    for (int i = 0; i < 3; ++i) a.push_back(random_psd(d, rng));
    const std::vector<double> theta = random_weights(3, rng);
    const GMeanTree tree = s % 2 == 0 ? GMeanTree::balanced(theta) : GMeanTree::left_comb(theta);
    auto g = [&](const std::vector<Mat>& ops) { return gmean_tree<Mat>(tree, ops); };
    const Mat ga = g(a);
    const std::string tag = "sample " + std::to_string(s) + " d=" + std::to_string(d);

    const Mat u = random_unitary(d, rng);
    std::vector<Mat> ua;
    for (const auto& x : a) ua.push_back(u * x * u.adjoint());
    out.push_back(equality(suite, "G1 unitary covariance " + tag, rel_dev(g(ua), u * ga * u.adjoint()), tol));

    std::vector<Mat> bigger;
    for (const auto& x : a) bigger.push_back(x + random_psd(d, rng) * unif(rng));
    out.push_back(inequality(suite, "G2 monotone " + tag, psd_leq(ga, g(bigger), tol).margin, tol));

    const int e = d <= 4 ? 2 : 1;
    std::vector<Mat> b, ab, a_plus_b;
    for (int i = 0; i < 3; ++i) b.push_back(random_psd(e, rng));
    for (int i = 0; i < 3; ++i) ab.push_back(kron(a[i], b[i]));
    const Mat gb = g(b);
    out.push_back(equality(suite, "G3 tensor " + tag, rel_dev(g(ab), kron(ga, gb)), tol));
    if (d + e <= 8) {
      for (int i = 0; i < 3; ++i) a_plus_b.push_back(dsum(a[i], b[i]));
      out.push_back(equality(suite, "G4 direct sum " + tag, rel_dev(g(a_plus_b), dsum(ga, gb)), tol));
    }

    const double lam = 0.1 + 10.0 * unif(rng);
    std::vector<Mat> scaled;
    for (const auto& x : a) scaled.push_back(lam * x);
    out.push_back(equality(suite, "G5 homogeneous " + tag, rel_dev(g(scaled), lam * ga), tol));

    const double t = unif(rng);
    std::vector<Mat> c, mix;
    for (int i = 0; i < 3; ++i) c.push_back(random_psd(d, rng));
    for (int i = 0; i < 3; ++i) mix.push_back(t * a[i] + (1.0 - t) * c[i]);
    out.push_back(inequality(suite, "G6 concave " + tag, psd_leq<Mat>(t * ga + (1.0 - t) * g(c), g(mix), tol).margin, tol));

    // T(X) = V*XV with a contraction V is completely positive.
    Mat v = gaussian(d, d, rng);
    v /= Eigen::JacobiSVD<Mat>(v).singularValues()[0];
    std::vector<Mat> ta;
    for (const auto& x : a) ta.push_back(v.adjoint() * x * v);
    out.push_back(inequality(suite, "CP map " + tag, psd_leq<Mat>(v.adjoint() * ga * v, g(ta), tol).margin, tol));

    Eigen::VectorXcd psi = gaussian(d, 1, rng).col(0);
    psi.normalize();
    std::vector<double> vals;
    double dmax = 0.0;
    for (int i = 0; i < 3; ++i) {
      vals.push_back((psi.adjoint() * a[i] * psi)(0, 0).real());
      dmax += tree.effective_weights()[i] * max_divergence_rank1(psi, a[i]);
    }
    const double lhs = (psi.adjoint() * ga * psi)(0, 0).real();
    const double rhs = gmean_scalars(tree, vals);
    out.push_back(inequality(suite, "vector state " + tag, (rhs - lhs) / std::max(1.0, rhs), tol));
    const Mat lower = std::exp2(-dmax) * psi * psi.adjoint();
    out.push_back(inequality(suite, "rank-one lower bound " + tag, psd_leq<Mat>(lower, ga, tol).margin, tol));

    // commuting arguments reduce to ∏ A_i^{θ_i}
    std::vector<Mat> diag;
    Mat prod = Mat::Identity(d, d);
    for (int i = 0; i < 3; ++i) {
      Eigen::VectorXd ev(d);
      for (int j = 0; j < d; ++j) ev[j] = 0.1 + 5.0 * unif(rng);
      diag.push_back(u * ev.cast<cplx>().asDiagonal() * u.adjoint());
      Eigen::VectorXd pw = ev.array().pow(tree.effective_weights()[i]);
      prod = prod * (u * pw.cast<cplx>().asDiagonal() * u.adjoint());
    }
    out.push_back(equality(suite, "commuting weights " + tag, rel_dev(g(diag), prod), tol));
  }
  return out;
}

std::vector<CheckResult> verify_coefficients(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "coefficients";
  const double etol = 1e-12;
  for (int n = 1; n <= 5; ++n) {
    const auto ps = enumerate_partitions(n);
    int violations = 0, asym = 0, nonzero = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& l : ps)
      for (const auto& m : ps)
        for (const auto& v : ps) {
          const BigInt g = kronecker(l, m, v);
          const BigInt perms[] = {kronecker(l, v, m), kronecker(m, l, v), kronecker(m, v, l), kronecker(v, l, m),
                                  kronecker(v, m, l)};
          for (const auto& p : perms)
            if (p != g) ++asym;
          if (g == 0) continue;
          ++nonzero;
          const double slack = entropy(m) + entropy(v) - entropy(l);
          worst = std::min(worst, slack);
          if (slack < -etol) ++violations;
        }
    const std::string tag = "n=" + std::to_string(n) + " nonzero=" + std::to_string(nonzero);
    out.push_back(inequality(suite, "kronecker entropic " + tag, worst, etol));
    out.push_back(flag(suite, "kronecker violations=" + std::to_string(violations) + " " + tag, violations == 0));
    out.push_back(flag(suite, "kronecker symmetry n=" + std::to_string(n), asym == 0));
  }
  for (int total = 2; total <= 6; ++total)
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      const double q = static_cast<double>(m) / total;
      int violations = 0, nonzero = 0;
      double worst = std::numeric_limits<double>::infinity();
      for (const auto& l : enumerate_partitions(total))
        for (const auto& mu : enumerate_partitions(m))
          for (const auto& nu : enumerate_partitions(n)) {
            if (littlewood_richardson(l, mu, nu) == 0) continue;
            ++nonzero;
            const double avg = q * entropy(mu) + (1.0 - q) * entropy(nu);
            const double lo = entropy(l) - avg;
            const double hi = avg + binary_entropy(q) - entropy(l);
            worst = std::min({worst, lo, hi});
            if (lo < -etol || hi < -etol) ++violations;
          }
      const std::string tag = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " nonzero=" + std::to_string(nonzero);
      out.push_back(inequality(suite, "LR entropic " + tag, worst, etol));
      out.push_back(flag(suite, "LR violations=" + std::to_string(violations) + " " + tag, violations == 0));
    }
  (void)cfg;
  return out;
}

std::vector<CheckResult> verify_bipartite(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "bipartite";
  const Bipartition b = Bipartition::parse("1|2");
  const FamilySpec spec = FamilySpec::bipartite(b);
  UpperEstimator est(cfg.family, cfg.tol);
  const int d = 2;
  for (double alpha : {0.5, 0.75}) {
    const double corr = d * (d + 1) / 2.0 * std::log2(6.0 + d) / 6.0 * std::max(1.0, alpha / (1.0 - alpha));
    double worst_upper = std::numeric_limits<double>::infinity();
    double worst_doubling = std::numeric_limits<double>::infinity();
    double worst_gap = std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.random_states; ++s) {
      const MultipartiteState psi = states::random({2, 2}, cfg.seed + 100 + s);
      const FunctionalReport r = est.estimate(psi, spec, alpha, 6);
      const double h = renyi_entropy(schmidt_spectrum(psi, b), alpha);
      for (const auto& [n, e] : r.sequence) worst_upper = std::min(worst_upper, h - e);
      for (int m = 1; 2 * m <= 6; ++m)
        worst_doubling = std::min(worst_doubling, r.sequence[2 * m - 1].second - r.sequence[m - 1].second);
      worst_gap = std::min(worst_gap, corr - std::abs(r.sequence[5].second - h));
    }
    const std::string tag = "alpha=" + fmt(alpha) + " states=" + std::to_string(cfg.random_states);
    out.push_back(inequality(suite, "e_n <= H_alpha " + tag, worst_upper, cfg.tol));
    out.push_back(inequality(suite, "e_2m >= e_m " + tag, worst_doubling, cfg.tol));
    out.push_back(inequality(suite, "|e_6 - H_alpha| within type-class correction " + tag, worst_gap, cfg.tol));

    const MultipartiteState psi = states::random({2, 2}, cfg.seed + 7);
    const double p = 0.37;
    const double e1 = est.log_value(psi, spec, alpha, 3);
    const double e2 = est.log_value(psi.scaled(std::sqrt(p)), spec, alpha, 3);
    out.push_back(equality(suite, "scaling " + tag, std::abs(e2 - e1 - alpha / (1.0 - alpha) * std::log2(p)), 1e-9));
  }
  for (int r : {2, 3})
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
      const double f = bipartite_closed_form(states::unit(r, 2), b, alpha);
      out.push_back(equality(suite, "unit tensor r=" + std::to_string(r) + " alpha=" + fmt(alpha), std::abs(f - r), 1e-9));
    }
  return out;
}

std::vector<CheckResult> verify_sandwich_upper(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "sandwich";
  const FamilySpec spec = FamilySpec::weighted(Bipartition::elementary(3), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  UpperEstimator est(cfg.family, cfg.tol);
  for (double alpha : {0.5, 0.75}) {
    double worst = std::numeric_limits<double>::infinity();
    std::size_t flagged = 0;
    for (int s = 0; s < cfg.random_states; ++s) {
      const FunctionalReport r = est.estimate(states::random({2, 2, 2}, cfg.seed + 200 + s), spec, alpha, 4);
      worst = std::min(worst, r.closed_upper - r.e_interval[0]);
      flagged += r.violations.size();
    }
    const std::string tag = "alpha=" + fmt(alpha);
    out.push_back(inequality(suite, "max e_n <= closed upper " + tag, worst, cfg.tol));
    out.push_back(flag(suite, "report violations=" + std::to_string(flagged) + " " + tag, flagged == 0));
  }
  const MultipartiteState ghz = states::ghz(2, 3);
  const WeightedBipartitions theta = spec.weighted_bipartitions();
  out.push_back(equality(suite, "ghz closed upper = 1", std::abs(closed_upper_bound(ghz, theta, 0.5) - 1.0), 1e-12));
  out.push_back(equality(suite, "ghz closed lower = 1", std::abs(closed_lower_bound(ghz, theta, 0.5) - 1.0), 1e-12));
  return out;
}

std::vector<CheckResult> verify_semiring(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  const std::string suite = "semiring";
  using P = PositivePairs;
  const auto f = gmean_functionals<P>({pairs::h1(), pairs::h2()}, {0.5, 0.5});
  const std::pair<P::Element, double> expect[] = {
      {P::make(1, 1), 1.0}, {P::make(1, 4), 2.0}, {P::make(2, 5), std::sqrt(10.0)}};
  for (const auto& [x, v] : expect)
    out.push_back(equality(suite, "sqrt(ab) at " + P::describe(x), std::abs(f(x) - v) / v, 1e-12));
  out.push_back(flag(suite, "sqrt(ab) not additive on (1,1)+(1,4)",
                     std::abs(f(P::make(2, 5)) - (f(P::make(1, 1)) + f(P::make(1, 4)))) > 1e-6));
  out.push_back(flag(suite, "sqrt(ab) not below h1 or h2",
                     f(P::make(1, 4)) > pairs::h1()(P::make(1, 4)) && f(P::make(4, 1)) > pairs::h2()(P::make(4, 1))));

  const std::vector<P::Element> ts{P::nat(2), P::nat(3), P::nat(7)};
  for (const auto& x : {P::make(2, 5), P::make(0.3, 1.7)}) {
    const auto seq = regularize<P>(pairs::h1(), x, ts, 6);
    double dev = 0.0;
    for (double v : seq) dev = std::max(dev, std::abs(v - x[0]) / x[0]);
    out.push_back(equality(suite, "regularize multiplicative h1 at " + P::describe(x), dev, 1e-12));
    const auto mseq = regularize<P>(pairs::max_component(), x, ts, 6);
    double mdev = 0.0;
    const double mx = std::max(x[0], x[1]);
    for (double v : mseq) mdev = std::max(mdev, std::abs(v - mx) / mx);
    out.push_back(equality(suite, "regularize max stays max at " + P::describe(x), mdev, 1e-12));
    const double sup = polynomial_sup_lower<P>(f, x, {1000000}, {1, 2, 4, 8, 16});
    out.push_back(flag(suite, "sup variant exceeds sqrt(ab) at " + P::describe(x), sup > f(x) * (1.0 + 1e-6)));
  }

  out.push_back(flag(suite, "rank (1,4) = 4", abstract_rank<P>(P::make(1, 4), 100) == 4));
  out.push_back(flag(suite, "subrank (1,4) = 1", abstract_subrank<P>(P::make(1, 4), 100) == 1));
  out.push_back(flag(suite, "subrank (2,5) = 2", abstract_subrank<P>(P::make(2, 5), 100) == 2));
  out.push_back(flag(suite, "rank 1 = 1, rank 0 = 0",
                     abstract_rank<P>(P::one(), 10) == 1 && abstract_rank<P>(P::zero(), 10) == 0));
  const auto ar = asymptotic_rank_estimate<P>(P::make(2, 3), 4, 100);
  double ardev = 0.0;
  for (double v : ar.values) ardev = std::max(ardev, std::abs(v - 3.0));
  out.push_back(equality(suite, "asymptotic rank (2,3) = 3", ardev, 1e-12));

  std::vector<P::Element> samples{P::zero(), P::one(), P::make(1, 4), P::make(2, 5), P::make(0.5, 3),
                                  P::make(3, 0.25), P::make(2, 2)};
  const Functional<P> rank{[](const P::Element& x) { return static_cast<double>(*abstract_rank<P>(x, 1000)); },
                           FunctionalKind::kUpper, "rank"};
  const Functional<P> subrank{[](const P::Element& x) { return static_cast<double>(abstract_subrank<P>(x, 1000)); },
                              FunctionalKind::kLower, "subrank"};
  const Functional<P> twice{[&](const P::Element& x) { return 2.0 * rank(x); }, FunctionalKind::kUpper, "2rank"};
  for (const auto& fn : {pairs::h1(), pairs::h2(), f, pairs::max_component(), rank, subrank}) {
    const FunctionalCheck c = check_functional<P>(fn, samples);
    out.push_back(flag(suite, "functional laws " + fn.name + " pairs=" + std::to_string(c.pairs), c.ok()));
  }
  const auto norm_ok = check_normalization_equivalences<P>(rank, subrank, samples, 6, 1000);
  out.push_back(flag(suite, "rank/subrank normalized and consistent",
                     norm_ok.consistent() && norm_ok.upper_fixes_naturals && norm_ok.lower_fixes_naturals));
  const auto norm_bad = check_normalization_equivalences<P>(twice, subrank, samples, 6, 1000);
  out.push_back(flag(suite, "2rank is flagged as not normalized", !norm_bad.upper_fixes_naturals));
  const auto laws = check_semiring_laws<P>(samples, 100);
  out.push_back(flag(suite, "positive pairs semiring laws violations=" + std::to_string(laws.size()), laws.empty()));

  using T = TensorSurrogate<3>;
  const std::vector<T::Element> tensors{states::w(3), states::ghz(2, 3), T::one(), states::random({2, 2, 1}, cfg.seed)};
  const auto tlaws = check_semiring_laws<T>(tensors, 8);
  out.push_back(flag(suite, "tensor surrogate laws violations=" + std::to_string(tlaws.size()), tlaws.empty()));
  out.push_back(flag(suite, "surrogate rank of W = 2", abstract_rank<T>(states::w(3), 8) == 2));
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schur-weyl", "axioms",   "gmean",   "coefficients",
                                              "bipartite",  "sandwich", "semiring"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "default") {
    std::vector<CheckResult> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, cfg);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (name == "schur-weyl") return verify_schur_weyl(cfg);
  if (name == "axioms") return verify_axiom_suite(cfg);
  if (name == "gmean") return verify_gmean_suite(cfg);
  if (name == "coefficients") return verify_coefficients(cfg);
  if (name == "bipartite") return verify_bipartite(cfg);
  if (name == "sandwich") return verify_sandwich_upper(cfg);
  if (name == "semiring") return verify_semiring(cfg);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace symmono
