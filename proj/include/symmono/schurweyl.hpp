#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "symmono/multilinear.hpp"
#include "symmono/partitions.hpp"

namespace symmono {

inline constexpr int kDefaultCopyCap = 7;
// Largest D^n a lifted vector may have.
inline constexpr std::int64_t kMaxLiftedDim = std::int64_t{1} << 22;

// Sorted symbols x_1 ≤ … ≤ x_n, each a flat index into the space.
using Multiset = std::vector<std::uint32_t>;
// Per-party digit histograms, concatenated.
using WeightKey = std::vector<std::uint16_t>;

struct MultisetHash {
  std::size_t operator()(const Multiset& m) const noexcept;
};

// Orthonormal basis e_M = K_M^{-1/2} Σ_{orderings y of M} |y⟩ of Symⁿ(H), or of a
// union of weight classes of it (a "sector").
class SymBasis {
 public:
  SymBasis(SpaceSpec space, int copies);
  static SymBasis weight_sector(SpaceSpec space, int copies, const std::set<WeightKey>& weights);

  const SpaceSpec& space() const { return space_; }
  std::int64_t local_dim() const { return space_.total_dim(); }
  int copies() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  bool is_full() const { return full_; }

  const Multiset& multiset(std::size_t i) const { return elems_[i]; }
  double orderings(std::size_t i) const { return k_[i]; }
  std::optional<std::size_t> index_of(const Multiset& m) const;
  std::vector<int> occupation(std::size_t i) const;

  WeightKey weight(const Multiset& m) const;
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  std::size_t position_in_block(std::size_t i) const { return pos_in_block_[i]; }

  Eigen::VectorXcd lift(const Eigen::VectorXcd& c) const;
  // Throws if v is farther than tol·max(1,‖v‖) from the span of this basis.
  Eigen::VectorXcd compress(const Eigen::VectorXcd& v, double tol = 1e-9) const;
  // Coordinates of ψ^{⊗n} (components outside a sector are dropped).
  Eigen::VectorXcd power_vector(const Eigen::VectorXcd& psi) const;

 private:
  SpaceSpec space_;
  int n_ = 0;
  bool full_ = true;
  std::vector<Multiset> elems_;
  std::vector<double> k_;
  std::unordered_map<Multiset, std::size_t, MultisetHash> index_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> pos_in_block_;

  SymBasis(SpaceSpec space, int copies, std::vector<Multiset> elems, bool full);
  void finish();
};

SymBasis sym_basis(int local_dim, int copies);
double multiset_orderings(const Multiset& m);

// Hermitian operator on a SymBasis, stored as real symmetric weight blocks.
class CompressedOperator {
 public:
  struct Block {
    std::vector<std::size_t> index;
    Eigen::MatrixXd matrix;
  };

  CompressedOperator() = default;
  CompressedOperator(std::shared_ptr<const SymBasis> basis, std::vector<Block> blocks);
  static CompressedOperator identity(std::shared_ptr<const SymBasis> basis);

  const std::shared_ptr<const SymBasis>& basis() const { return basis_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t dim() const { return basis_ ? basis_->size() : 0; }

  Eigen::MatrixXd to_dense() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& c) const;
  double expectation(const Eigen::VectorXcd& c) const;
  std::vector<double> eigenvalues() const;
  double min_eigenvalue() const;
  double max_eigenvalue() const;

  // Applies f to every block matrix.
  CompressedOperator map(const std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>& f) const;
  CompressedOperator power(double t) const;
  CompressedOperator scaled(double s) const;

 private:
  std::shared_ptr<const SymBasis> basis_;
  std::vector<Block> blocks_;
};

// X_C[M,N] = ⟨e_M|ρ_S(σ_C)|e_N⟩ for every class C of S_n, where ρ_S permutes copies
// of the parties in `side` only. Well defined because e_M, e_N are fully symmetric.
// One pass over the basis; any class function is then a linear combination.
class ClassOperators {
 public:
  ClassOperators(std::shared_ptr<const SymBasis> basis, std::span<const int> side);

  const std::shared_ptr<const SymBasis>& basis() const { return basis_; }
  const std::vector<CycleType>& classes() const { return classes_; }
  // Σ_C coeff[C]·X_C; throws if the result is not symmetric to 1e−8.
  CompressedOperator combine(const std::map<CycleType, double>& coeff) const;

 private:
  std::shared_ptr<const SymBasis> basis_;
  std::vector<CycleType> classes_;
  std::vector<std::vector<Eigen::MatrixXd>> per_block_;  // [block][class]
};

CompressedOperator class_function_operator(std::shared_ptr<const SymBasis> basis, std::span<const int> side,
                                           const std::map<CycleType, double>& coeff);

// Weights a_C with Σ_λ w_λ P^{H_S}_λ = Σ_C a_C ρ_S(σ_C) on symmetric vectors.
std::map<CycleType, double> isotypic_class_weights(int n, const std::map<Partition, double>& lambda_weights);

struct IsotypicSpec {
  Partition lambda;
  std::optional<std::vector<int>> group_side;  // nullopt: whole space
};

// Matrix-free P^{H_S}_λ ⊗ I on (H)^{⊗n}, n! permutation loop.
Eigen::VectorXcd isotypic_apply(const IsotypicSpec& spec, const SpaceSpec& space, int n, const Eigen::VectorXcd& v,
                                int copy_cap = kDefaultCopyCap);
Eigen::VectorXcd symmetrize(const SpaceSpec& space, int n, const Eigen::VectorXcd& v, int copy_cap = kDefaultCopyCap);
Eigen::VectorXcd flattening_projector_apply(const SpaceSpec& space, const Bipartition& b, const Partition& lambda,
                                            const Eigen::VectorXcd& v, int copy_cap = kDefaultCopyCap);
// v ↦ ρ(σ)v with σ in one-line notation; copy i moves to copy σ(i).
Eigen::VectorXcd permute_copies(const SpaceSpec& space, int n, const std::vector<int>& sigma,
                                const Eigen::VectorXcd& v, std::span<const int> side);

// Rows indexed i_m·dim(Symⁿ) + i_n.
Eigen::SparseMatrix<double> inclusion_split(const SpaceSpec& space, int m, int n);
Eigen::SparseMatrix<double> inclusion_split(int local_dim, int m, int n);
// Sym^n(H)⊗Sym^n(K) → target ⊆ Sym^n(H⊗K).
Eigen::SparseMatrix<double> inclusion_tensor(const SpaceSpec& h, const SpaceSpec& k, int n, const SymBasis& target);
Eigen::SparseMatrix<double> inclusion_tensor(int dh, int dk, int n);
// Sym^m(H)⊗Sym^n(K) → target ⊆ Sym^{m+n}(H⊕K).
Eigen::SparseMatrix<double> embed_direct_sum(const SpaceSpec& h, const SpaceSpec& k, int m, int n,
                                             const SymBasis& target, int copy_cap = kDefaultCopyCap);
Eigen::SparseMatrix<double> embed_direct_sum(int dh, int dk, int m, int n);

// Weight classes hit by the images of inclusion_tensor / embed_direct_sum.
std::set<WeightKey> tensor_image_weights(const SpaceSpec& h, const SpaceSpec& k, int n);
std::set<WeightKey> direct_sum_image_weights(const SpaceSpec& h, const SpaceSpec& k, int m, int n);

// Compressed U^{⊗n}: from Symⁿ(H) to Symⁿ(K) with U : H → K (dense on total spaces).
Eigen::MatrixXcd power_map(const Eigen::MatrixXcd& u, const SymBasis& from, const SymBasis& to);

}  // namespace symmono
