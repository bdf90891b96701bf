#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symmono/observables.hpp"

namespace symmono {

struct CheckResult {
  std::string suite;
  std::string name;
  double margin = 0.0;  // ≥ −tol passes; −deviation for equalities
  bool pass = false;
};

struct VerifyConfig {
  double tol = 1e-9;
  double gmean_tol = 1e-8;
  std::uint64_t seed = 0;
  FamilyOptions family;
  int random_states = 20;
  int gmean_samples = 50;
};

// Σ_λ P_λ = I, P_λP_μ = δ_λμ P_λ and rank P_λ = weyl_dim·dim[λ] on (C^d)^{⊗n}, d ≤ 3, n ≤ 5.
std::vector<CheckResult> verify_schur_weyl(const VerifyConfig& cfg);
// O1–O5 for the bipartite family on (2,2), (2,3) and the balanced elementary mean on (2,2,2).
std::vector<CheckResult> verify_axiom_suite(const VerifyConfig& cfg);
// G1–G6, the completely positive map inequality and the rank-one lower bound on random triples.
std::vector<CheckResult> verify_gmean_suite(const VerifyConfig& cfg);
// Entropic vanishing of Kronecker (n ≤ 5) and LR (m+n ≤ 6) coefficients; Kronecker symmetry.
std::vector<CheckResult> verify_coefficients(const VerifyConfig& cfg);
// Bipartite finite-n sequences against H_α, and unit tensors against r.
std::vector<CheckResult> verify_bipartite(const VerifyConfig& cfg);
// Upper side of the closed sandwich for random 3-qubit states and the GHZ closed forms.
std::vector<CheckResult> verify_sandwich_upper(const VerifyConfig& cfg);
// Positive-pair counterexamples, rank/subrank, regularization and sampled functional laws.
std::vector<CheckResult> verify_semiring(const VerifyConfig& cfg);

const std::vector<std::string>& suite_names();
// "default" runs every suite.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace symmono
