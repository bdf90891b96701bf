#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "symmono/errors.hpp"
#include "symmono/partitions.hpp"

using namespace symmono;

namespace {

std::int64_t to_i64(const BigInt& b) { return static_cast<std::int64_t>(b); }

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("partition shape validation") {
    CHECK(P({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(P({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(P({2, -1}), InvalidArgument);
    CHECK(P({}).size() == 0);
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
    CHECK(P({3, 3}).conjugate().conjugate() == P({3, 3}));
  }

  TEST_CASE("enumeration counts and order") {
    for (int n = 0; n <= 12; ++n) {
      const auto ps = enumerate_partitions(n);
      CHECK(static_cast<std::int64_t>(ps.size()) == oracle::partition_count(n, n));
      CHECK(std::is_sorted(ps.begin(), ps.end()));
      CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
      for (const auto& p : ps) CHECK(p.size() == n);
      for (int k = 1; k <= 4; ++k) {
        const auto bounded = enumerate_partitions(n, k);
        // conjugation: at most k rows ⇔ parts ≤ k after conjugation
        CHECK(static_cast<std::int64_t>(bounded.size()) == oracle::partition_count(n, k));
      }
    }
    CHECK(enumerate_partitions(4) ==
          std::vector<Partition>{P({1, 1, 1, 1}), P({2, 1, 1}), P({2, 2}), P({3, 1}), P({4})});
    CHECK_THROWS_AS(enumerate_partitions(-1), InvalidArgument);
  }

  TEST_CASE("irrep dimensions against tableau counting") {
    for (int n = 1; n <= 9; ++n) {
      BigInt sum_sq = 0;
      for (const auto& p : enumerate_partitions(n)) {
        CHECK(to_i64(irrep_dim(p)) == oracle::syt_count(p.parts()));
        sum_sq += irrep_dim(p) * irrep_dim(p);
      }
      CHECK(sum_sq == factorial(n));
    }
    CHECK(irrep_dim(P({3, 2})) == 5);
    CHECK(irrep_dim(P({4, 3, 2, 1})) == 768);
  }

  TEST_CASE("weyl dimensions against semistandard tableau counting") {
    for (int n = 1; n <= 5; ++n)
      for (const auto& p : enumerate_partitions(n))
        for (int d = 1; d <= 4; ++d) CHECK(to_i64(weyl_dim(p, d)) == oracle::ssyt_count(p.parts(), d));
    CHECK(weyl_dim(P({2, 1}), 3) == 8);
    CHECK(weyl_dim(P({1, 1, 1}), 2) == 0);
  }

  TEST_CASE("character table of S_4") {
    // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns 1^4, 2 1^2, 2^2, 3 1, 4
    const std::vector<std::vector<int>> classes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const std::map<std::vector<int>, std::vector<int>> table{
        {{4}, {1, 1, 1, 1, 1}},       {{3, 1}, {3, 1, -1, 0, -1}},     {{2, 2}, {2, 0, 2, -1, 0}},
        {{2, 1, 1}, {3, -1, -1, 0, 1}}, {{1, 1, 1, 1}, {1, -1, 1, 1, -1}}};
    for (const auto& [lam, row] : table)
      for (std::size_t c = 0; c < classes.size(); ++c)
        CHECK(mn_character(P(lam), CycleType(P(classes[c]))) == row[c]);
  }

  TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 7; ++n) {
      const auto ps = enumerate_partitions(n);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          BigInt s = 0;
          for (const auto& c : ps) {
            const CycleType cls(c);
            s += cls.class_size() * mn_character(a, cls) * mn_character(b, cls);
          }
          CHECK(s == (a == b ? factorial(n) : BigInt(0)));
        }
      for (const auto& p : ps) CHECK(mn_character(p, CycleType::identity(n)) == irrep_dim(p));
    }
    CHECK_THROWS_AS(mn_character(P({2, 1}), CycleType(P({2, 2}))), InvalidArgument);
  }

  TEST_CASE("cycle type of a permutation") {
    CHECK(CycleType::of({1, 0, 3, 2}).shape() == P({2, 2}));
    CHECK(CycleType::of({1, 2, 0, 3}).shape() == P({3, 1}));
    CHECK(CycleType(P({3, 1})).class_size() == 8);
    CHECK(CycleType::of(CycleType(P({3, 2})).representative()).shape() == P({3, 2}));
  }

  TEST_CASE("kronecker coefficients: trivial and sign rows, hand values") {
    for (int n = 1; n <= 5; ++n) {
      const auto ps = enumerate_partitions(n);
      std::vector<int> one(n, 1);
      for (const auto& a : ps)
        for (const auto& b : ps) {
          CHECK(kronecker(a, b, P({n})) == (a == b ? 1 : 0));
          CHECK(kronecker(a, b, P(one)) == (a == b.conjugate() ? 1 : 0));
        }
    }
    CHECK(kronecker(P({2, 1}), P({2, 1}), P({2, 1})) == 1);
    CHECK(kronecker(P({2, 2}), P({2, 2}), P({2, 2})) == 1);
    CHECK(kronecker(P({3, 2, 1}), P({3, 2, 1}), P({3, 2, 1})) == 5);
    CHECK_THROWS_AS(kronecker(P({2}), P({2}), P({3})), InvalidArgument);
  }

  TEST_CASE("kronecker coefficients reproduce Schur polynomial of a product alphabet") {
    // Σ_{λ,μ} g_{λμν} s_λ(1^a) s_μ(1^b) = s_ν(1^{ab})
    for (int n = 1; n <= 4; ++n) {
      const auto ps = enumerate_partitions(n);
      for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}})
        for (const auto& nu : ps) {
          std::int64_t lhs = 0;
          for (const auto& l : ps)
            for (const auto& m : ps)
              lhs += to_i64(kronecker(l, m, nu)) * oracle::ssyt_count(l.parts(), a) * oracle::ssyt_count(m.parts(), b);
          CHECK(lhs == oracle::ssyt_count(nu.parts(), a * b));
        }
    }
  }

  TEST_CASE("littlewood-richardson coefficients") {
    CHECK(littlewood_richardson(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
    CHECK(littlewood_richardson(P({2, 1}), P({1}), P({1, 1})) == 1);
    CHECK(littlewood_richardson(P({3}), P({1}), P({1, 1})) == 0);
    CHECK(littlewood_richardson(P({4, 2}), P({2, 1}), P({2, 1})) == 1);
    CHECK_THROWS_AS(littlewood_richardson(P({3}), P({1}), P({1})), InvalidArgument);
    // s_μ s_ν = Σ_λ c^λ_{μν} s_λ, evaluated at 1^d; and the induced dimension.
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n)
        for (const auto& mu : enumerate_partitions(m))
          for (const auto& nu : enumerate_partitions(n)) {
            BigInt induced = 0;
            for (const auto& l : enumerate_partitions(m + n)) induced += littlewood_richardson(l, mu, nu) * irrep_dim(l);
            CHECK(induced == binomial(m + n, m) * irrep_dim(mu) * irrep_dim(nu));
            for (int d = 1; d <= 4; ++d) {
              std::int64_t lhs = 0;
              for (const auto& l : enumerate_partitions(m + n))
                lhs += to_i64(littlewood_richardson(l, mu, nu)) * oracle::ssyt_count(l.parts(), d);
              CHECK(lhs == oracle::ssyt_count(mu.parts(), d) * oracle::ssyt_count(nu.parts(), d));
            }
          }
  }

  TEST_CASE("entropies") {
    const ProbVector p({2.0 / 3, 1.0 / 3});
    CHECK(renyi_entropy(p, 0.5) == doctest::Approx(oracle::renyi({2.0 / 3, 1.0 / 3}, 0.5)).epsilon(1e-14));
    CHECK(renyi_entropy(p, 0.5) == doctest::Approx(0.9581441056060677).epsilon(1e-12));
    CHECK(renyi_entropy(p, 1.5) == doctest::Approx(0.8813839112838207).epsilon(1e-12));
    CHECK(renyi_entropy(p, 1.0) == doctest::Approx(0.9182958340544896).epsilon(1e-12));
    CHECK(renyi_entropy(p, kInfinity) == doctest::Approx(std::log2(1.5)).epsilon(1e-12));
    CHECK(renyi_entropy(ProbVector({0.3, 0.7}), 0.5) == doctest::Approx(0.9384853943613469).epsilon(1e-12));
    CHECK(renyi_entropy(ProbVector::uniform(4), 0.3) == doctest::Approx(2.0));
    CHECK(shannon_entropy(ProbVector({1.0, 0.0})) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
    CHECK(entropy(P({2, 1, 1})) == doctest::Approx(1.5));
    CHECK(relative_entropy(ProbVector({0.5, 0.5}), ProbVector({1.0, 0.0})) == kInfinity);
    CHECK(relative_entropy(ProbVector({0.5, 0.5}), ProbVector({0.25, 0.75})) ==
          doctest::Approx(0.5 * std::log2(2.0) + 0.5 * std::log2(0.5 / 0.75)));
    CHECK_THROWS_AS(renyi_entropy(p, 0.0), InvalidArgument);
    CHECK_THROWS_AS(ProbVector({0.5, -0.1}), InvalidArgument);
  }

  TEST_CASE("renyi entropy is nonincreasing in the order") {
    const std::vector<double> w{0.1, 0.2, 0.3, 0.4};
    double prev = renyi_entropy(ProbVector(w), 0.1);
    for (double a : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 5.0, kInfinity}) {
      const double h = renyi_entropy(ProbVector(w), a);
      CHECK(h <= prev + 1e-12);
      prev = h;
    }
  }
}
