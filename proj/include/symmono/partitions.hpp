#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symmono {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Nonincreasing sequence of positive integers. Trailing zeros are stripped on
// construction; anything else out of shape throws.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  Partition conjugate() const;
  // λ/n as a probability vector (empty for n = 0).
  std::vector<double> normalized() const;
  std::string to_string() const;

  // multiplicity(i) = number of parts equal to i
  int multiplicity(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Cycle lengths of a conjugacy class of S_n.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition cycles) : cycles_(std::move(cycles)) {}
  static CycleType identity(int n);
  // Cycle type of a permutation given in one-line notation (0-based images).
  static CycleType of(const std::vector<int>& perm);

  const Partition& shape() const { return cycles_; }
  int size() const { return cycles_.size(); }
  BigInt class_size() const;
  double class_fraction() const;  // |C| / n!
  // A permutation (0-based one-line notation) in this class.
  std::vector<int> representative() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) {
    return a.cycles_ <=> b.cycles_;
  }

 private:
  Partition cycles_;
};

class ProbVector {
 public:
  ProbVector() = default;
  // Nonnegative weights; normalized() checks |Σ − 1| ≤ 1e−12.
  explicit ProbVector(std::vector<double> weights);
  static ProbVector normalize(std::vector<double> weights);
  static ProbVector uniform(int r);

  const std::vector<double>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  double total() const;
  bool is_normalized() const;

 private:
  std::vector<double> w_;
};

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_len = std::nullopt);

BigInt factorial(int n);
BigInt binomial(int n, int k);

double shannon_entropy(const ProbVector& p);
// alpha in (0, ∞]; alpha == 1 gives Shannon, alpha == kInfinity min-entropy.
// Unnormalized inputs are accepted; the formula is evaluated on p as given.
double renyi_entropy(const ProbVector& p, double alpha);
double binary_entropy(double q);
// D(p||q) in bits; +∞ when supp p ⊄ supp q.
double relative_entropy(const ProbVector& p, const ProbVector& q);
// H(λ/n)
double entropy(const Partition& lam);

// χ_λ on the class; exact via Murnaghan–Nakayama, memoized.
BigInt mn_character(const Partition& lam, const CycleType& cls);
// dim[λ] by the hook length formula.
BigInt irrep_dim(const Partition& lam);
BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& nu);
BigInt littlewood_richardson(const Partition& lam, const Partition& mu, const Partition& nu);
BigInt weyl_dim(const Partition& lam, int d);

}  // namespace symmono
