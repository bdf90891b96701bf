#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symmono/errors.hpp"
#include "symmono/multilinear.hpp"

using namespace symmono;

namespace {

Eigen::MatrixXcd random_contraction(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return m / svd.singularValues()[0];
}

void check_spectrum(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
    const double a = i < got.size() ? got[i] : 0.0;
    const double b = i < want.size() ? want[i] : 0.0;
    CHECK(std::abs(a - b) <= tol);
  }
}

}  // namespace

TEST_SUITE("multilinear") {
  TEST_CASE("space indexing") {
    SpaceSpec s({2, 3, 4});
    CHECK(s.total_dim() == 24);
    const std::vector<int> d{1, 2, 3};
    CHECK(s.flat(d) == 1 * 12 + 2 * 4 + 3);
    CHECK(s.digits(23) == d);
    const int side[] = {0, 2};
    CHECK(s.group_dim(side) == 8);
    CHECK(SpaceSpec::tensor(s, SpaceSpec({2, 2, 2})).dims() == std::vector<int>{4, 6, 8});
    CHECK(SpaceSpec::direct_sum(s, SpaceSpec({1, 1, 1})).dims() == std::vector<int>{3, 4, 5});
    CHECK_THROWS_AS(SpaceSpec({2, 0}), InvalidArgument);
  }

  TEST_CASE("bipartition parsing and canonical side") {
    const Bipartition b = Bipartition::parse("2|13");
    CHECK(b.to_string() == "13|2");
    CHECK(b.side() == std::vector<int>{0, 2});
    CHECK(Bipartition::parse("13|2") == b);
    CHECK(Bipartition::elementary(3).size() == 3);
    CHECK(Bipartition::elementary(2).size() == 1);
    CHECK(Bipartition::all(4).size() == 7);
    CHECK_THROWS_AS(Bipartition::parse("1|1"), InvalidArgument);
    CHECK_THROWS_AS(Bipartition::parse("12"), InvalidArgument);
    CHECK_THROWS_AS(Bipartition::parse("1|3"), InvalidArgument);
  }

  TEST_CASE("named states") {
    CHECK(states::unit(3, 2).norm_squared() == doctest::Approx(3.0));
    CHECK(states::ghz(2, 3).norm() == doctest::Approx(1.0));
    CHECK(states::random({2, 3}, 5).norm() == doctest::Approx(1.0));
    CHECK(states::random({2, 3}, 5).amplitudes() == states::random({2, 3}, 5).amplitudes());
    CHECK(states::random({2, 3}, 5).amplitudes() != states::random({2, 3}, 6).amplitudes());
    CHECK_THROWS_AS(states::explicit_state({2, 2}, {1.0, 0.0}), InvalidArgument);
  }

  TEST_CASE("schmidt spectra of named states") {
    check_spectrum(schmidt_spectrum(states::ghz(2, 4), Bipartition::parse("12|34")).weights(), {0.5, 0.5}, 1e-12);
    check_spectrum(schmidt_spectrum(states::w(3), Bipartition::parse("1|23")).weights(), {2.0 / 3, 1.0 / 3}, 1e-12);
    check_spectrum(schmidt_spectrum(states::explicit_state({2, 2}, {1.0, 0, 0, 0}), Bipartition::parse("1|2")).weights(),
                   {1.0}, 1e-12);
    CHECK(flattening_rank(states::w(3), Bipartition::parse("1|23")) == 2);
    CHECK(flattening_rank(states::unit(3, 3), Bipartition::parse("12|3")) == 3);
  }

  TEST_CASE("complementary marginals share their spectra") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto psi = states::random({2 + static_cast<int>(seed % 2), 3, 2 + static_cast<int>(seed % 3)}, seed);
      for (const auto& b : Bipartition::all(3)) {
        const auto s1 = marginal(psi, b.side()).spectrum();
        const auto comp = b.complement();
        const auto s2 = marginal(psi, comp).spectrum();
        check_spectrum(s1, s2, 1e-10);
        check_spectrum(s1, oracle::hermitian_eigenvalues(flattening(psi, b.side()) * flattening(psi, b.side()).adjoint()),
                       1e-10);
      }
    }
  }

  TEST_CASE("schmidt spectrum of a tensor product is the outer product") {
    const auto a = states::random({2, 3}, 1);
    const auto b = states::random({3, 2}, 2);
    const auto ab = tensor_product(a, b);
    CHECK(ab.space().dims() == std::vector<int>{6, 6});
    const auto pa = schmidt_spectrum(a, Bipartition::parse("1|2")).weights();
    const auto pb = schmidt_spectrum(b, Bipartition::parse("1|2")).weights();
    std::vector<double> outer;
    for (double x : pa)
      for (double y : pb) outer.push_back(x * y);
    std::sort(outer.rbegin(), outer.rend());
    check_spectrum(schmidt_spectrum(ab, Bipartition::parse("1|2")).weights(), outer, 1e-12);
  }

  TEST_CASE("direct sum marginals are block sums") {
    const auto a = states::random({2, 2}, 3);
    const auto b = states::random({1, 3}, 4);
    const auto s = direct_sum(a, b);
    CHECK(s.space().dims() == std::vector<int>{3, 5});
    const int side[] = {0};
    const Eigen::MatrixXcd m = marginal(s, side).matrix();
    CHECK((m.topLeftCorner(2, 2) - marginal(a, side).matrix()).norm() < 1e-12);
    CHECK((m.bottomRightCorner(1, 1) - marginal(b, side).matrix()).norm() < 1e-12);
    CHECK(m.topRightCorner(2, 1).norm() < 1e-12);
  }

  TEST_CASE("local contractions never increase the norm") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const auto psi = states::random({2, 3, 2}, 100 + t);
      std::vector<Eigen::MatrixXcd> maps{random_contraction(2, 2, rng), random_contraction(2, 3, rng),
                                         random_contraction(3, 2, rng)};
      const auto phi = apply_local(maps, psi);
      CHECK(phi.space().dims() == std::vector<int>{2, 2, 3});
      CHECK(phi.norm() <= psi.norm() + 1e-12);
    }
  }

  TEST_CASE("apply_local against a dense kronecker product") {
    std::mt19937_64 rng(5);
    const auto psi = states::random({2, 3}, 9);
    std::vector<Eigen::MatrixXcd> maps{random_contraction(3, 2, rng), random_contraction(2, 3, rng)};
    const Eigen::MatrixXcd k = oracle::kron(maps[0], maps[1]);
    CHECK((apply_local(maps, psi).amplitudes() - k * psi.amplitudes()).norm() < 1e-12);
  }

  TEST_CASE("rank-one sandwiched divergence") {
    const auto psi = states::random({2, 2}, 8);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
    CHECK(std::abs(sandwiched_divergence_rank1(psi, id, 0.5)) < 1e-12);
    for (double alpha : {0.3, 0.5, 0.8})
      CHECK(sandwiched_divergence_rank1(psi, 3.0 * id, alpha) == doctest::Approx(-std::log2(3.0)).epsilon(1e-12));
    // dense oracle: (1/(α−1)) log₂ Tr[(σ^{(1−α)/2α} ρ σ^{(1−α)/2α})^α] with ρ = |ψ⟩⟨ψ|
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd x(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) x(i, j) = {g(rng), g(rng)};
    const Eigen::MatrixXcd sigma = x * x.adjoint();
    const Eigen::MatrixXcd rho = psi.amplitudes() * psi.amplitudes().adjoint();
    for (double alpha : {0.4, 0.7}) {
      const Eigen::MatrixXcd s = oracle::matrix_power(sigma, (1 - alpha) / (2 * alpha));
      const Eigen::MatrixXcd inner = s * rho * s.adjoint();
      const double tr = oracle::matrix_power(0.5 * (inner + inner.adjoint()), alpha).trace().real();
      CHECK(sandwiched_divergence_rank1(psi, sigma, alpha) ==
            doctest::Approx(std::log2(tr) / (alpha - 1)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(sandwiched_divergence_rank1(psi, -id, 0.5), InvalidArgument);
    CHECK_THROWS_AS(sandwiched_divergence_rank1(psi, Eigen::MatrixXcd::Identity(3, 3), 0.5), InvalidArgument);
  }
}
