#include "symmono/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "symmono/errors.hpp"
#include "symmono/io.hpp"

namespace symmono {

double conjugate_order(double alpha) {
  require(alpha >= 0.5 && alpha < 1.0, "conjugate order needs alpha in [1/2,1)");
  if (alpha == 0.5) return kInfinity;
  return alpha / (2.0 * alpha - 1.0);
}

namespace {

void check_state(const MultipartiteState& psi, const FamilySpec& spec) {
  require(!psi.is_zero(), "functional evaluated on the zero state");
  require(psi.space().parties() == spec.parties(), "state and family have different party counts");
}

void check_theta(const MultipartiteState& psi, const WeightedBipartitions& theta) {
  require(!theta.empty(), "theta must be nonempty");
  double tot = 0.0;
  for (const auto& [b, w] : theta) {
    require(b.parties() == psi.space().parties(), "bipartition and state have different party counts");
    require(w >= 0.0, "theta weights must be nonnegative");
    tot += w;
  }
  require(std::abs(tot - 1.0) <= 1e-9, "theta weights must sum to 1");
}

double weighted_entropy(const MultipartiteState& psi, const WeightedBipartitions& theta, double order) {
  double s = 0.0;
  for (const auto& [b, w] : theta)
    if (w > 0.0) s += w * renyi_entropy(schmidt_spectrum(psi, b), order);
  return s;
}

}  // namespace

double UpperEstimator::log_value(const MultipartiteState& psi, const FamilySpec& spec, double alpha, int n) {
  check_state(psi, spec);
  require(n >= 1, "n must be positive");
  const FamilyInstance inst = builder_.build(spec, builder_.basis(psi.space(), n), alpha);
  const Eigen::VectorXcd c = inst.powered.basis()->power_vector(psi.amplitudes());
  const double v = inst.powered.expectation(c);
  if (!(v > 0.0)) throw NumericalError("nonpositive expectation value");
  return std::log2(v) * alpha / ((1.0 - alpha) * n);
}

double UpperEstimator::limit1_value(const MultipartiteState& psi, const FamilySpec& spec, int n) {
  check_state(psi, spec);
  require(n >= 1, "n must be positive");
  const MultipartiteState unit = psi.normalized();
  auto basis = builder_.basis(psi.space(), n);
  const CompressedOperator l = builder_.log_observable(spec, basis);
  return l.expectation(basis->power_vector(unit.amplitudes())) / n;
}

FunctionalReport UpperEstimator::estimate(const MultipartiteState& psi, const FamilySpec& spec,
                                          std::optional<double> alpha, int n_max) {
  check_state(psi, spec);
  require(n_max >= 1, "n_max must be positive");
  if (n_max > builder_.options().copy_cap)
    throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the cap " +
                      std::to_string(builder_.options().copy_cap));
  if (alpha) exponent_of(*alpha);

  FunctionalReport r;
  r.state_digest = state_digest(psi);
  r.spec = spec.to_string();
  r.alpha = alpha;
  r.theta = spec.weighted_bipartitions();
  const double norm2 = psi.norm_squared();
  const double order = alpha.value_or(1.0);
  r.closed_upper = closed_upper_bound(psi, r.theta, order);
  if (order >= 0.5) r.closed_lower = closed_lower_bound(psi, r.theta, order);

  double best = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= n_max; ++n) {
    double e = 0.0;
    std::ostringstream tag;
    tag << "n=" << n;
    if (alpha) {
      const FamilyInstance inst = builder_.build(spec, builder_.basis(psi.space(), n), *alpha);
      const Eigen::VectorXcd c = inst.powered.basis()->power_vector(psi.amplitudes());
      const double v = inst.powered.expectation(c);
      if (!(v > 0.0)) throw NumericalError("nonpositive expectation value");
      e = std::log2(v) * *alpha / ((1.0 - *alpha) * n);
      const double base = *alpha / (1.0 - *alpha) * std::log2(norm2);
      const double slack = tol_ * std::max(1.0, std::abs(base));
      if (e < base - slack) r.violations.push_back("e_n below the norm lower bound at " + tag.str());
      if (e > base + std::log2(inst.bound_constant) + slack)
        r.violations.push_back("e_n above the norm-constant upper bound at " + tag.str());
    } else {
      e = limit1_value(psi, spec, n);
    }
    if (e > r.closed_upper + tol_ * std::max(1.0, std::abs(r.closed_upper)))
      r.violations.push_back("e_n above the closed upper bound at " + tag.str());
    if (n % 2 == 0) {
      const double half = r.sequence[n / 2 - 1].second;
      if (e < half - tol_ * std::max(1.0, std::abs(half)))
        r.violations.push_back("e_n decreases along doubling at " + tag.str());
    }
    r.sequence.emplace_back(n, e);
    best = std::max(best, e);
  }
  r.e_interval = {best, r.closed_upper};
  if (alpha) {
    const double s = 1.0 - *alpha;
    r.f_interval = {std::exp2(s * r.e_interval[0]), std::exp2(s * r.e_interval[1])};
  } else {
    r.f_interval = {norm2, norm2};
  }
  return r;
}

double finite_n_log_value(const MultipartiteState& psi, const FamilySpec& spec, double alpha, int n,
                          FamilyOptions opts) {
  return UpperEstimator(opts).log_value(psi, spec, alpha, n);
}

double finite_n_limit1_value(const MultipartiteState& psi, const FamilySpec& spec, int n, FamilyOptions opts) {
  return UpperEstimator(opts).limit1_value(psi, spec, n);
}

FunctionalReport estimate_upper(const MultipartiteState& psi, const FamilySpec& spec, std::optional<double> alpha,
                                int n_max, FamilyOptions opts, double tol) {
  return UpperEstimator(opts, tol).estimate(psi, spec, alpha, n_max);
}

double bipartite_closed_form(const MultipartiteState& psi, const Bipartition& b, double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "bipartite closed form needs alpha in (0,1]");
  if (psi.is_zero()) return 0.0;
  const double norm2 = psi.norm_squared();
  if (alpha == 1.0) return norm2;
  double s = 0.0;
  const ProbVector spec = schmidt_spectrum(psi, b);
  for (double p : spec.weights()) s += std::pow(p * norm2, alpha);
  return s;
}

double closed_upper_bound(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha) {
  require(alpha > 0.0 && alpha <= 1.0, "closed upper bound needs alpha in (0,1]");
  require(!psi.is_zero(), "closed bound of the zero state");
  check_theta(psi, theta);
  const double h = weighted_entropy(psi, theta, alpha);
  if (alpha == 1.0) return h;
  return alpha / (1.0 - alpha) * std::log2(psi.norm_squared()) + h;
}

double closed_lower_bound(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha) {
  require(alpha >= 0.5 && alpha <= 1.0, "closed lower bound needs alpha in [1/2,1]");
  require(!psi.is_zero(), "closed bound of the zero state");
  check_theta(psi, theta);
  if (alpha == 1.0) return weighted_entropy(psi, theta, 1.0);
  return alpha / (1.0 - alpha) * std::log2(psi.norm_squared()) + weighted_entropy(psi, theta, conjugate_order(alpha));
}

MultipartiteState tensor_power(const MultipartiteState& psi, int n) {
  require(n >= 1, "tensor power needs n >= 1");
  MultipartiteState out = psi;
  for (int i = 1; i < n; ++i) out = tensor_product(out, psi);
  return out;
}

namespace {

Eigen::MatrixXcd top_projector(const DensityMatrix& rho, int r) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix());
  const Eigen::MatrixXcd v = es.eigenvectors().rightCols(r);
  return v * v.adjoint();
}

Eigen::MatrixXcd random_contraction(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = g(rng);
      const double im = g(rng);
      a(i, j) = cplx(re, im);
    }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return a / svd.singularValues()[0];
}

}  // namespace

LowerFunctionalResult lower_functional(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha,
                                       int budget, std::uint64_t seed) {
  require(alpha >= 0.5 && alpha < 1.0, "lower functional needs alpha in [1/2,1)");
  require(budget >= 0, "budget must be nonnegative");
  require(!psi.is_zero(), "lower functional of the zero state");
  check_theta(psi, theta);
  const int k = psi.space().parties();
  LowerFunctionalResult best;
  best.e_value = -std::numeric_limits<double>::infinity();

  auto consider = [&](const MultipartiteState& phi, const std::string& what) {
    ++best.candidates;
    if (phi.norm_squared() <= 1e-24) return;
    const double v = closed_lower_bound(phi, theta, alpha);
    if (v > best.e_value) {
      best.e_value = v;
      best.best = what;
    }
  };

  consider(psi, "identity");
  for (int j = 0; j < k; ++j) {
    const std::vector<int> side{j};
    const DensityMatrix rho = marginal(psi, side);
    for (int r = 1; r < psi.space().dim(j); ++r) {
      std::vector<Eigen::MatrixXcd> maps;
      for (int i = 0; i < k; ++i)
        maps.push_back(i == j ? top_projector(rho, r) : Eigen::MatrixXcd::Identity(psi.space().dim(i), psi.space().dim(i)));
      consider(apply_local(maps, psi), "truncate party " + std::to_string(j + 1) + " to rank " + std::to_string(r));
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < budget; ++s) {
    std::vector<Eigen::MatrixXcd> maps;
    for (int i = 0; i < k; ++i) maps.push_back(random_contraction(psi.space().dim(i), rng));
    consider(apply_local(maps, psi), "random contraction " + std::to_string(s));
  }
  best.f_value = std::exp2((1.0 - alpha) * best.e_value);
  return best;
}

LowerFunctionalResult lower_functional_power(const MultipartiteState& psi, const WeightedBipartitions& theta,
                                             double alpha, int n, int budget, std::uint64_t seed) {
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= psi.space().total_dim();
    if (total > kMaxLiftedDim) throw CapExceeded("tensor power exceeds the lifted dimension cap");
  }
  LowerFunctionalResult r = lower_functional(tensor_power(psi, n), theta, alpha, budget, seed);
  r.e_value /= n;
  r.f_value = std::exp2((1.0 - alpha) * r.e_value);
  return r;
}

}  // namespace symmono
