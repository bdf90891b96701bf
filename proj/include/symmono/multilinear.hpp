#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symmono/partitions.hpp"

namespace symmono {

using cplx = std::complex<double>;

// Local dimensions d_1..d_k. Flat indices are mixed radix, party 1 most significant.
class SpaceSpec {
 public:
  SpaceSpec() = default;
  explicit SpaceSpec(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_[party]; }
  std::int64_t total_dim() const { return total_; }
  // Dimension of the grouped factor ⊗_{j∈S} H_j.
  std::int64_t group_dim(std::span<const int> side) const;

  std::vector<int> digits(std::int64_t flat) const;
  std::int64_t flat(std::span<const int> digits) const;

  // dims d_j e_j / d_j + e_j
  static SpaceSpec tensor(const SpaceSpec& h, const SpaceSpec& k);
  static SpaceSpec direct_sum(const SpaceSpec& h, const SpaceSpec& k);

  std::string to_string() const;
  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  std::vector<int> dims_;
  std::int64_t total_ = 1;
};

class MultipartiteState {
 public:
  MultipartiteState() = default;
  MultipartiteState(SpaceSpec space, Eigen::VectorXcd amplitudes);

  const SpaceSpec& space() const { return space_; }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  double norm() const { return amp_.norm(); }
  double norm_squared() const { return amp_.squaredNorm(); }
  bool is_zero() const { return amp_.squaredNorm() == 0.0; }
  MultipartiteState scaled(cplx s) const { return {space_, amp_ * s}; }
  MultipartiteState normalized() const;

 private:
  SpaceSpec space_;
  Eigen::VectorXcd amp_;
};

// Unordered pair {S, [k]∖S}, stored by the side containing party 0.
// Parties are 0-based internally and 1-based in strings ("1|23").
class Bipartition {
 public:
  Bipartition() = default;
  Bipartition(int parties, std::vector<int> side);
  static Bipartition parse(const std::string& text);
  static std::vector<Bipartition> elementary(int parties);
  static std::vector<Bipartition> all(int parties);

  int parties() const { return k_; }
  const std::vector<int>& side() const { return side_; }
  std::vector<int> complement() const;
  bool contains(int party) const;
  // Noncrossing: one side of a is nested in a side of b.
  bool noncrossing(const Bipartition& other) const;
  std::string to_string() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition& a, const Bipartition& b) = default;

 private:
  int k_ = 0;
  std::vector<int> side_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  explicit DensityMatrix(Eigen::MatrixXcd m);
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }
  // Eigenvalues, decreasing.
  std::vector<double> spectrum() const;

 private:
  Eigen::MatrixXcd m_;
};

namespace states {
MultipartiteState unit(int r, int k);
MultipartiteState ghz(int level, int k);
MultipartiteState w(int k);
// Unit vector with i.i.d. complex Gaussian amplitudes.
MultipartiteState random(const std::vector<int>& dims, std::uint64_t seed);
MultipartiteState explicit_state(const std::vector<int>& dims, const std::vector<cplx>& amplitudes);
MultipartiteState zero(const std::vector<int>& dims);
}  // namespace states

MultipartiteState tensor_product(const MultipartiteState& a, const MultipartiteState& b);
MultipartiteState direct_sum(const MultipartiteState& a, const MultipartiteState& b);
// Successive mode contractions; maps[j] is d'_j × d_j.
MultipartiteState apply_local(std::span<const Eigen::MatrixXcd> maps, const MultipartiteState& psi);
// ψ reshaped as (⊗_{S}) × (⊗_{S^c}).
Eigen::MatrixXcd flattening(const MultipartiteState& psi, std::span<const int> side);
DensityMatrix marginal(const MultipartiteState& psi, std::span<const int> side);
ProbVector schmidt_spectrum(const MultipartiteState& psi, const Bipartition& b);
int flattening_rank(const MultipartiteState& psi, const Bipartition& b);
double sandwiched_divergence_rank1(const MultipartiteState& psi, const Eigen::MatrixXcd& sigma, double alpha);

}  // namespace symmono
