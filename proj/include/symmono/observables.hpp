#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symmono/gmean.hpp"
#include "symmono/multilinear.hpp"
#include "symmono/schurweyl.hpp"

namespace symmono {

enum class TreeShape { kLeftComb, kBalanced };

// Bipartite(b) | Grouped(base, f) | GMean(children, tree).
// Grouped: f maps the k' outer parties onto the k parties of `base`
// (regroup[j'] = j), and must be surjective.
class FamilySpec {
 public:
  struct Bipartite {
    Bipartition b;
  };
  struct Grouped {
    std::shared_ptr<const FamilySpec> base;
    std::vector<int> regroup;
  };
  struct GMean {
    std::vector<FamilySpec> children;
    GMeanTree tree;
  };
  using Node = std::variant<Bipartite, Grouped, GMean>;

  static FamilySpec bipartite(Bipartition b);
  static FamilySpec grouped(FamilySpec base, std::vector<int> regroup);
  static FamilySpec gmean(std::vector<FamilySpec> children, GMeanTree tree);
  // Flat weights over bipartitions; one bipartition gives a plain Bipartite spec.
  static FamilySpec weighted(const std::vector<Bipartition>& bs, const std::vector<double>& theta,
                             TreeShape shape = TreeShape::kBalanced);

  const Node& node() const { return node_; }
  int parties() const;
  // Leaves with Grouped nodes pulled back to the outer parties, and their effective weights.
  std::vector<std::pair<Bipartition, double>> weighted_bipartitions() const;
  // Equivalent spec with every Grouped node resolved.
  FamilySpec resolved() const;
  bool commuting() const;
  std::string to_string() const;

 private:
  explicit FamilySpec(Node n) : node_(std::move(n)) {}
  Node node_;
};

struct FamilyOptions {
  int copy_cap = kDefaultCopyCap;
  SingularPolicy policy = SingularPolicy::kRegularize;
  // −1 flips the sign of the entropy weights; used to exercise the verifier.
  double entropy_sign = 1.0;
};

// A_{H,n}^{exponent} on a (full or sector) symmetric basis.
struct FamilyInstance {
  FamilySpec spec;
  SpaceSpec space;
  int copies = 0;
  std::optional<double> alpha;
  double exponent = 1.0;
  CompressedOperator powered;
  double bound_constant = 1.0;

  CompressedOperator unpowered() const { return exponent == 1.0 ? powered : powered.power(1.0 / exponent); }
};

double exponent_of(double alpha);  // (1−α)/α

// Caches the per-class operators so families over several α reuse one assembly.
// Not synchronized; use one builder per thread.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(FamilyOptions opts = {}) : opts_(opts) {}

  const FamilyOptions& options() const { return opts_; }
  std::shared_ptr<const SymBasis> basis(const SpaceSpec& space, int n);

  FamilyInstance build_bipartite(const SpaceSpec& space, const Bipartition& b, int n);
  FamilyInstance build(const FamilySpec& spec, const SpaceSpec& space, int n, double alpha);
  FamilyInstance build(const FamilySpec& spec, std::shared_ptr<const SymBasis> basis, double alpha);
  // Σ θ_b log₂ A_b (natural limit of the powered family as α → 1).
  CompressedOperator log_observable(const FamilySpec& spec, std::shared_ptr<const SymBasis> basis);

  // Σ_λ weight(λ) P^{H_S}_λ on the basis, restricted to λ with l(λ) ≤ min side dims.
  CompressedOperator isotypic_sum(std::shared_ptr<const SymBasis> basis, const Bipartition& b,
                                  const std::function<double(const Partition&)>& weight);

 private:
  FamilyOptions opts_;
  std::map<std::pair<std::vector<int>, int>, std::shared_ptr<const SymBasis>> bases_;
  std::map<std::pair<const SymBasis*, std::vector<int>>, std::shared_ptr<const ClassOperators>> classes_;

  const ClassOperators& class_operators(const std::shared_ptr<const SymBasis>& basis, const std::vector<int>& side);
  CompressedOperator build_node(const FamilySpec& spec, const std::shared_ptr<const SymBasis>& basis, double p,
                                double& constant);
};

FamilyInstance build_bipartite(const SpaceSpec& space, const Bipartition& b, int n, FamilyOptions opts = {});
FamilyInstance build_family(const FamilySpec& spec, const SpaceSpec& space, int n, double alpha,
                            FamilyOptions opts = {});

struct AxiomCheck {
  std::string axiom;     // "O1".."O5"
  std::string instance;  // human-readable description of the instance
  double margin = 0.0;   // min eigenvalue of (rhs − lhs) / max(1, ‖rhs‖); −deviation for O1
  bool pass = false;
  std::optional<double> slack_factor;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

struct AxiomSetup {
  SpaceSpec h;  // O1–O3 space, and the first summand/factor in O4–O5
  SpaceSpec k;  // second factor/summand in O4–O5
  int m = 1;
  int n = 1;
  int isometry_samples = 10;
  std::uint64_t seed = 0;
};

AxiomReport verify_axioms(const FamilySpec& spec, const AxiomSetup& setup, double alpha, double tol,
                          FamilyOptions opts = {});

}  // namespace symmono
