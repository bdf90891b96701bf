#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "symmono/errors.hpp"
#include "symmono/multilinear.hpp"

namespace symmono {

// A commutative semiring with a preorder in which ℕ embeds via nat().
template <class S>
concept PreorderedSemiring = requires(const typename S::Element& x, const typename S::Element& y, int n) {
  { S::zero() } -> std::convertible_to<typename S::Element>;
  { S::one() } -> std::convertible_to<typename S::Element>;
  { S::add(x, y) } -> std::convertible_to<typename S::Element>;
  { S::mul(x, y) } -> std::convertible_to<typename S::Element>;
  { S::leq(x, y) } -> std::convertible_to<bool>;
  { S::nat(n) } -> std::convertible_to<typename S::Element>;
  { S::describe(x) } -> std::convertible_to<std::string>;
};

inline constexpr double kSemiringTol = 1e-9;

struct Naturals {
  using Element = std::uint64_t;
  static Element zero() { return 0; }
  static Element one() { return 1; }
  static Element add(Element a, Element b) { return a + b; }
  static Element mul(Element a, Element b) { return a * b; }
  static bool leq(Element a, Element b) { return a <= b; }
  static Element nat(int n) { return static_cast<Element>(n); }
  static std::string describe(Element a) { return std::to_string(a); }
};

// ℝ_{>0}² ∪ {(0,0)} with componentwise operations and order.
struct PositivePairs {
  using Element = std::array<double, 2>;
  static Element make(double a, double b) {
    require((a > 0.0 && b > 0.0) || (a == 0.0 && b == 0.0), "positive pair needs both entries > 0, or both 0");
    return {a, b};
  }
  static Element zero() { return {0.0, 0.0}; }
  static Element one() { return {1.0, 1.0}; }
  static Element add(const Element& x, const Element& y) { return {x[0] + y[0], x[1] + y[1]}; }
  static Element mul(const Element& x, const Element& y) { return {x[0] * y[0], x[1] * y[1]}; }
  static bool leq(const Element& x, const Element& y) {
    auto le = [](double a, double b) { return a <= b + 1e-12 * std::max(1.0, std::abs(b)); };
    return le(x[0], y[0]) && le(x[1], y[1]);
  }
  static Element nat(int n) { return {static_cast<double>(n), static_cast<double>(n)}; }
  static std::string describe(const Element& x) {
    return "(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + ")";
  }
};

// k-party tensors with ⊕ and ⊗. The preorder x ≼ y iff every flattening rank of x is at most
// that of y is only a NECESSARY condition for restriction, not restriction itself.
template <int K>
struct TensorSurrogate {
  static_assert(K >= 2);
  using Element = MultipartiteState;
  static Element zero() { return states::zero(std::vector<int>(K, 1)); }
  static Element one() { return states::unit(1, K); }
  static Element add(const Element& x, const Element& y) { return direct_sum(x, y); }
  static Element mul(const Element& x, const Element& y) { return tensor_product(x, y); }
  static bool leq(const Element& x, const Element& y) {
    for (const auto& b : Bipartition::all(K))
      if (flattening_rank(x, b) > flattening_rank(y, b)) return false;
    return true;
  }
  static Element nat(int n) { return n == 0 ? zero() : states::unit(n, K); }
  static std::string describe(const Element& x) { return "tensor" + x.space().to_string(); }
};

enum class FunctionalKind { kUpper, kLower, kSpectralCandidate };

template <PreorderedSemiring S>
struct Functional {
  std::function<double(const typename S::Element&)> eval;
  FunctionalKind kind = FunctionalKind::kUpper;
  std::string name;
  double operator()(const typename S::Element& x) const { return eval(x); }
};

template <PreorderedSemiring S>
bool equivalent(const typename S::Element& x, const typename S::Element& y) {
  return S::leq(x, y) && S::leq(y, x);
}

template <PreorderedSemiring S>
typename S::Element power(const typename S::Element& x, int n) {
  require(n >= 0, "negative semiring power");
  typename S::Element out = S::one();
  for (int i = 0; i < n; ++i) out = S::mul(out, x);
  return out;
}

// min{n ≤ bound : x ≼ n}, nullopt when the bound is exhausted.
template <PreorderedSemiring S>
std::optional<int> abstract_rank(const typename S::Element& x, int search_bound) {
  require(search_bound >= 1, "search bound must be at least 1");
  for (int n = 0; n <= search_bound; ++n)
    if (S::leq(x, S::nat(n))) return n;
  return std::nullopt;
}

// max{n ≤ bound : n ≼ x}
template <PreorderedSemiring S>
int abstract_subrank(const typename S::Element& x, int search_bound) {
  require(search_bound >= 1, "search bound must be at least 1");
  int best = 0;
  for (int n = 0; n <= search_bound; ++n)
    if (S::leq(S::nat(n), x)) best = n;
  return best;
}

struct RankSequence {
  std::vector<double> values;  // rank(xⁿ)^{1/n}, n = 1..n_max
  bool nonincreasing_along_doubling = true;
};

// Budget: rank search up to search_bound; throws CapExceeded when exhausted.
template <PreorderedSemiring S>
RankSequence asymptotic_rank_estimate(const typename S::Element& x, int n_max, int search_bound) {
  require(n_max >= 1, "n_max must be at least 1");
  RankSequence out;
  typename S::Element p = S::one();
  for (int n = 1; n <= n_max; ++n) {
    p = S::mul(p, x);
    const auto r = abstract_rank<S>(p, search_bound);
    if (!r) throw CapExceeded("rank search bound exhausted at power " + std::to_string(n));
    out.values.push_back(std::pow(static_cast<double>(*r), 1.0 / n));
  }
  for (int n = 1; 2 * n <= n_max; ++n)
    if (out.values[2 * n - 1] > out.values[n - 1] * (1.0 + kSemiringTol)) out.nonincreasing_along_doubling = false;
  return out;
}

// x ↦ ∏ f_i(x)^{θ_i}; every f_i must be lower (or spectral candidates).
template <PreorderedSemiring S>
Functional<S> gmean_functionals(std::vector<Functional<S>> fs, std::vector<double> theta) {
  require(!fs.empty() && fs.size() == theta.size(), "gmean_functionals needs one weight per functional");
  double tot = 0.0;
  for (double t : theta) {
    require(t >= 0.0, "weights must be nonnegative");
    tot += t;
  }
  require(std::abs(tot - 1.0) <= 1e-12, "weights must sum to 1");
  std::string name = "G(";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].kind == FunctionalKind::kUpper) throw InvalidArgument("gmean_functionals: '" + fs[i].name + "' is not lower");
    name += (i ? "," : "") + fs[i].name;
  }
  name += ")";
  if (fs.size() == 1) return fs.front();
  auto eval = [fs, theta](const typename S::Element& x) {
    double v = 1.0;
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (theta[i] > 0.0) v *= std::pow(fs[i](x), theta[i]);
    return v;
  };
  return {eval, FunctionalKind::kLower, name};
}

// n = 1..n_max: min over t ∈ samples ∪ {1} of (g(t·xⁿ)/g(t))^{1/n}. Only monomials t·Tⁿ are
// explored; every entry is an upper bound on the regularization by submultiplicativity.
template <PreorderedSemiring S>
std::vector<double> regularize(const Functional<S>& g, const typename S::Element& x,
                               const std::vector<typename S::Element>& t_samples, int n_max) {
  require(g.kind != FunctionalKind::kLower, "regularize needs an upper functional");
  require(n_max >= 1, "n_max must be at least 1");
  std::vector<typename S::Element> ts = t_samples;
  ts.push_back(S::one());
  std::vector<double> out;
  typename S::Element xn = S::one();
  for (int n = 1; n <= n_max; ++n) {
    xn = S::mul(xn, x);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : ts) {
      const double gt = g(t);
      if (!(gt > 0.0)) continue;
      best = std::min(best, std::pow(g(S::mul(t, xn)) / gt, 1.0 / n));
    }
    out.push_back(best);
  }
  return out;
}

// sup over p = M + Tⁿ of p_f^{-1}(f(p(x))) = (f(M + xⁿ) − M)^{1/n}; for a lower functional this is
// not the regularization (contrast with regularize).
template <PreorderedSemiring S>
double polynomial_sup_lower(const Functional<S>& f, const typename S::Element& x, const std::vector<int>& ms,
                            const std::vector<int>& ns) {
  double best = 0.0;
  for (int m : ms)
    for (int n : ns) {
      const double v = f(S::add(S::nat(m), power<S>(x, n))) - m;
      if (v > 0.0) best = std::max(best, std::pow(v, 1.0 / n));
    }
  return best;
}

struct NormalizationReport {
  bool upper_fixes_naturals = true;      // g(n) = n on the sampled n
  bool upper_dominates_subrank = true;   // g(s) ≥ subrank(s) on samples
  bool lower_fixes_naturals = true;      // f(n) = n
  bool lower_below_rank = true;          // f(s) ≤ rank(s) on samples
  bool pair_ordered = true;              // f ≤ g on samples
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

// Samples the equivalence chains: an upper g is normalized iff g ≥ subrank iff some lower f ≤ g,
// and dually for f. A violation is a sampled pattern contradicting an implication.
template <PreorderedSemiring S>
NormalizationReport check_normalization_equivalences(const Functional<S>& g, const Functional<S>& f,
                                                     const std::vector<typename S::Element>& samples, int n_max,
                                                     int search_bound) {
  NormalizationReport r;
  auto close = [](double a, double b) { return std::abs(a - b) <= kSemiringTol * std::max(1.0, std::abs(b)); };
  for (int n = 0; n <= n_max; ++n) {
    if (!close(g(S::nat(n)), n)) r.upper_fixes_naturals = false;
    if (!close(f(S::nat(n)), n)) r.lower_fixes_naturals = false;
    if (f(S::nat(n)) > g(S::nat(n)) + kSemiringTol) r.pair_ordered = false;
  }
  for (const auto& s : samples) {
    const double gs = g(s);
    const double fs = f(s);
    if (gs + kSemiringTol < abstract_subrank<S>(s, search_bound)) r.upper_dominates_subrank = false;
    const auto rk = abstract_rank<S>(s, search_bound);
    if (rk && fs > *rk + kSemiringTol) r.lower_below_rank = false;
    if (fs > gs + kSemiringTol * std::max(1.0, gs)) r.pair_ordered = false;
  }
  if (r.upper_fixes_naturals != r.upper_dominates_subrank)
    r.violations.push_back(g.name + ": g(n)=n and g >= subrank disagree");
  if (r.lower_fixes_naturals != r.lower_below_rank)
    r.violations.push_back(f.name + ": f(n)=n and f <= rank disagree");
  if (r.pair_ordered && !(r.upper_fixes_naturals && r.lower_fixes_naturals))
    r.violations.push_back("f <= g on samples but the pair is not normalized");
  return r;
}

struct FunctionalCheck {
  int pairs = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Samples the inequalities the declared kind promises: normalization at 0 and 1, monotonicity,
// sub-/super-additivity and sub-/super-multiplicativity.
template <PreorderedSemiring S>
FunctionalCheck check_functional(const Functional<S>& g, const std::vector<typename S::Element>& samples) {
  FunctionalCheck c;
  auto tol = [](double v) { return kSemiringTol * std::max(1.0, std::abs(v)); };
  if (std::abs(g(S::zero())) > kSemiringTol) c.violations.push_back(g.name + "(0) != 0");
  if (std::abs(g(S::one()) - 1.0) > kSemiringTol) c.violations.push_back(g.name + "(1) != 1");
  const bool upper = g.kind != FunctionalKind::kLower;
  const bool lower = g.kind != FunctionalKind::kUpper;
  for (const auto& x : samples)
    for (const auto& y : samples) {
      ++c.pairs;
      const double gx = g(x), gy = g(y);
      const std::string tag = " at " + S::describe(x) + ", " + S::describe(y);
      if (S::leq(x, y) && gx > gy + tol(gy)) c.violations.push_back("monotonicity" + tag);
      const double s = g(S::add(x, y)), m = g(S::mul(x, y));
      if (upper && s > gx + gy + tol(s)) c.violations.push_back("subadditivity" + tag);
      if (upper && m > gx * gy + tol(m)) c.violations.push_back("submultiplicativity" + tag);
      if (lower && s < gx + gy - tol(s)) c.violations.push_back("superadditivity" + tag);
      if (lower && m < gx * gy - tol(m)) c.violations.push_back("supermultiplicativity" + tag);
    }
  return c;
}

// Spot checks of the semiring laws (up to preorder equivalence), reflexivity/transitivity of ≼,
// and the Strassen property: for x ≠ 0 some r has x ≼ r and 1 ≼ r·x.
template <PreorderedSemiring S>
std::vector<std::string> check_semiring_laws(const std::vector<typename S::Element>& samples, int strassen_bound) {
  std::vector<std::string> v;
  const auto zero = S::zero();
  const auto one = S::one();
  for (const auto& x : samples) {
    if (!S::leq(x, x)) v.push_back("reflexivity at " + S::describe(x));
    if (!equivalent<S>(S::add(x, zero), x)) v.push_back("additive identity at " + S::describe(x));
    if (!equivalent<S>(S::mul(x, one), x)) v.push_back("multiplicative identity at " + S::describe(x));
    if (!equivalent<S>(S::mul(x, zero), zero)) v.push_back("absorbing zero at " + S::describe(x));
    if (!equivalent<S>(x, zero)) {
      bool found = false;
      for (int r = 1; r <= strassen_bound && !found; ++r)
        found = S::leq(x, S::nat(r)) && S::leq(one, S::mul(S::nat(r), x));
      if (!found) v.push_back("Strassen bound not found at " + S::describe(x));
    }
    for (const auto& y : samples) {
      if (!equivalent<S>(S::add(x, y), S::add(y, x))) v.push_back("additive commutativity");
      if (!equivalent<S>(S::mul(x, y), S::mul(y, x))) v.push_back("multiplicative commutativity");
      for (const auto& z : samples) {
        if (!equivalent<S>(S::mul(x, S::add(y, z)), S::add(S::mul(x, y), S::mul(x, z)))) v.push_back("distributivity");
        if (S::leq(x, y) && S::leq(y, z) && !S::leq(x, z)) v.push_back("transitivity");
      }
    }
  }
  for (int m = 0; m <= strassen_bound; ++m)
    for (int n = 0; n <= strassen_bound; ++n)
      if (S::leq(S::nat(m), S::nat(n)) != (m <= n)) v.push_back("naturals do not order-embed");
  return v;
}

namespace pairs {

inline Functional<PositivePairs> h1() {
  return {[](const PositivePairs::Element& x) { return x[0]; }, FunctionalKind::kSpectralCandidate, "h1"};
}
inline Functional<PositivePairs> h2() {
  return {[](const PositivePairs::Element& x) { return x[1]; }, FunctionalKind::kSpectralCandidate, "h2"};
}
inline Functional<PositivePairs> max_component() {
  return {[](const PositivePairs::Element& x) { return std::max(x[0], x[1]); }, FunctionalKind::kUpper, "max"};
}

}  // namespace pairs

}  // namespace symmono
