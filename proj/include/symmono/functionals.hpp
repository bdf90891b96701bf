#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symmono/multilinear.hpp"
#include "symmono/observables.hpp"

namespace symmono {

using WeightedBipartitions = std::vector<std::pair<Bipartition, double>>;

// α′ = α/(2α−1); +∞ at α = 1/2.
double conjugate_order(double alpha);

// (1/n)(α/(1−α)) log₂⟨ψ^⊗n|A^{(1−α)/α}_{H,n}|ψ^⊗n⟩
double finite_n_log_value(const MultipartiteState& psi, const FamilySpec& spec, double alpha, int n,
                          FamilyOptions opts = {});
// α → 1: (1/n)⟨ψ̂^⊗n| Σ θ_b log₂ A_b |ψ̂^⊗n⟩ for the normalized state ψ̂.
double finite_n_limit1_value(const MultipartiteState& psi, const FamilySpec& spec, int n, FamilyOptions opts = {});

// Tr(Tr_{S^c}|ψ⟩⟨ψ|)^α; α = 1 gives ‖ψ‖², the zero state gives 0.
double bipartite_closed_form(const MultipartiteState& psi, const Bipartition& b, double alpha);

// (α/(1−α))log₂‖ψ‖² + Σ θ_b H_α(spectrum on b). α = 1 (limit mode) drops the norm term.
double closed_upper_bound(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha);
// Same with H_{α′}; α ∈ [1/2,1), or α = 1 for the Shannon limit.
double closed_lower_bound(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha);

struct FunctionalReport {
  std::string state_digest;
  std::string spec;
  std::optional<double> alpha;  // nullopt: α → 1 limit mode
  WeightedBipartitions theta;
  std::vector<std::pair<int, double>> sequence;
  std::array<double, 2> e_interval{};
  std::array<double, 2> f_interval{};
  double closed_upper = 0.0;
  std::optional<double> closed_lower;
  std::vector<std::string> violations;
};

// Keeps one FamilyBuilder so repeated states, orders and sizes share the assembled operators.
class UpperEstimator {
 public:
  explicit UpperEstimator(FamilyOptions opts = {}, double tol = 1e-9) : builder_(opts), tol_(tol) {}

  double log_value(const MultipartiteState& psi, const FamilySpec& spec, double alpha, int n);
  double limit1_value(const MultipartiteState& psi, const FamilySpec& spec, int n);
  // alpha = nullopt selects the α → 1 limit mode.
  FunctionalReport estimate(const MultipartiteState& psi, const FamilySpec& spec, std::optional<double> alpha,
                            int n_max);
  FamilyBuilder& builder() { return builder_; }

 private:
  FamilyBuilder builder_;
  double tol_;
};

FunctionalReport estimate_upper(const MultipartiteState& psi, const FamilySpec& spec, std::optional<double> alpha,
                                int n_max, FamilyOptions opts = {}, double tol = 1e-9);

struct LowerFunctionalResult {
  double e_value = 0.0;  // log scale, bits
  double f_value = 0.0;  // 2^{(1−α)E}
  std::string best;      // description of the maximizing filter
  int candidates = 0;
};

// max over φ = (A₁⊗…⊗A_k)ψ with contractions A_j of
//   (α/(1−α))log₂‖φ‖² + Σ θ_b H_{α′}(φ on b).
// Candidates: identity, rank truncations onto top single-party eigenvectors, and
// `budget` seeded random contractions.
LowerFunctionalResult lower_functional(const MultipartiteState& psi, const WeightedBipartitions& theta, double alpha,
                                       int budget = 0, std::uint64_t seed = 0);
// (1/n)·lower_functional(ψ^⊗n) with ψ^⊗n regarded as a k-party state of local dims d_j^n.
LowerFunctionalResult lower_functional_power(const MultipartiteState& psi, const WeightedBipartitions& theta,
                                             double alpha, int n, int budget = 0, std::uint64_t seed = 0);

// Multiparty tensor power, party-wise grouped.
MultipartiteState tensor_power(const MultipartiteState& psi, int n);

}  // namespace symmono
