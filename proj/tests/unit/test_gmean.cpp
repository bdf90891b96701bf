#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "symmono/errors.hpp"
#include "symmono/gmean.hpp"

using namespace symmono;
using Mat = Eigen::MatrixXcd;

namespace {

Mat random_pd(int d, std::mt19937_64& rng, double shift = 0.1) {
  std::normal_distribution<double> g;
  Mat x(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) x(i, j) = {g(rng), g(rng)};
  return x * x.adjoint() + shift * Mat::Identity(d, d);
}

// B^{1/2}(B^{-1/2} A B^{-1/2})^t B^{1/2}
Mat reference_mean(const Mat& a, const Mat& b, double t) {
  const Mat bh = oracle::matrix_power(b, 0.5);
  const Mat bih = oracle::matrix_power(b, -0.5);
  const Mat x = bih * a * bih;
  return bh * oracle::matrix_power(0.5 * (x + x.adjoint()), t) * bh;
}

}  // namespace

TEST_SUITE("gmean") {
  TEST_CASE("pair mean against the reference formula") {
    std::mt19937_64 rng(1);
    for (int d : {1, 2, 4, 6})
      for (double t : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        const Mat a = random_pd(d, rng), b = random_pd(d, rng);
        const Mat g = gmean_pair(a, b, t);
        CHECK((g - reference_mean(a, b, t)).norm() < 1e-9 * g.norm());
        CHECK((g - gmean_pair(b, a, 1.0 - t)).norm() < 1e-9 * g.norm());
      }
  }

  TEST_CASE("commuting operands give weighted products") {
    Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3);
    a.diagonal() << 1.0, 4.0, 9.0;
    b.diagonal() << 16.0, 1.0, 2.0;
    const Mat g = gmean_pair(a, b, 0.25);
    for (int i = 0; i < 3; ++i)
      CHECK(g(i, i).real() == doctest::Approx(std::pow(a(i, i).real(), 0.25) * std::pow(b(i, i).real(), 0.75)));
  }

  TEST_CASE("midpoint solves the Riccati equation") {
    std::mt19937_64 rng(2);
    const Mat a = random_pd(4, rng), b = random_pd(4, rng);
    const Mat g = gmean_pair(a, b, 0.5);
    CHECK((g * a.inverse() * g - b).norm() < 1e-9 * b.norm());
    CHECK((g * b.inverse() * g - a).norm() < 1e-9 * a.norm());
  }

  TEST_CASE("singular operands") {
    Mat p = Mat::Zero(2, 2), q = Mat::Zero(2, 2);
    p(0, 0) = 1.0;
    q(1, 1) = 1.0;
    // supp A ⊆ supp B: exact restriction
    Mat a = Mat::Zero(2, 2);
    a(0, 0) = 4.0;
    Mat b = Mat::Identity(2, 2);
    b(1, 1) = 0.0;
    const Mat g = gmean_pair(a, b, 0.5, SingularPolicy::kStrict);
    CHECK(g(0, 0).real() == doctest::Approx(2.0));
    CHECK(std::abs(g(1, 1)) < 1e-12);
    // orthogonal projectors: mean is zero, strict mode refuses
    CHECK(gmean_pair(p, q, 0.5).norm() < 1e-5);
    CHECK_THROWS_AS(gmean_pair(p, q, 0.5, SingularPolicy::kStrict), NumericalError);
    CHECK_THROWS_AS(gmean_pair(p, q, 1.5), InvalidArgument);
    Mat bad = Mat::Zero(2, 2);
    bad(0, 0) = -1.0;
    CHECK_THROWS_AS(gmean_pair(bad, q, 0.5), InvalidArgument);
  }

  TEST_CASE("trees: shapes, effective weights and scalars") {
    const std::vector<double> w{0.2, 0.3, 0.5};
    for (const auto& t : {GMeanTree::balanced(w), GMeanTree::left_comb(w)}) {
      const auto e = t.effective_weights();
      for (std::size_t i = 0; i < w.size(); ++i) CHECK(e[i] == doctest::Approx(w[i]));
      const double vals[] = {2.0, 3.0, 5.0};
      CHECK(gmean_scalars(t, vals) == doctest::Approx(std::pow(2.0, 0.2) * std::pow(3.0, 0.3) * std::pow(5.0, 0.5)));
    }
    CHECK(GMeanTree::balanced({0.25, 0.25, 0.25, 0.25}).to_string() == "G(G(1,2;0.5),G(3,4;0.5);0.5)");
    CHECK_THROWS_AS(GMeanTree::balanced({0.5, 0.6}), InvalidArgument);
    CHECK_THROWS_AS(GMeanTree::node(GMeanTree::leaf(0), GMeanTree::leaf(0), 0.5).validate(2), InvalidArgument);
  }

  TEST_CASE("tree mean of commuting operands is the weighted product") {
    std::vector<Mat> ops;
    for (double s : {1.0, 2.0, 3.0}) {
      Mat m = Mat::Zero(2, 2);
      m.diagonal() << s, 1.0 / s;
      ops.push_back(m);
    }
    const Mat g = gmean_tree(GMeanTree::left_comb({0.5, 0.25, 0.25}), std::span<const Mat>(ops));
    CHECK(g(0, 0).real() == doctest::Approx(std::pow(2.0, 0.25) * std::pow(3.0, 0.25)));
    CHECK(g(1, 1).real() == doctest::Approx(1.0 / (std::pow(2.0, 0.25) * std::pow(3.0, 0.25))));
  }

  TEST_CASE("monotonicity, congruence and the arithmetic-mean bound") {
    std::mt19937_64 rng(3);
    for (int s = 0; s < 20; ++s) {
      const int d = 1 + s % 5;
      const Mat a = random_pd(d, rng), b = random_pd(d, rng), c = random_pd(d, rng);
      const double t = 0.1 + 0.8 * (s % 7) / 6.0;
      const Mat g = gmean_pair(a, b, t);
      CHECK(psd_leq(g, gmean_pair(Mat(a + c), b, t), 1e-9).holds);
      CHECK(psd_leq(g, Mat(t * a + (1 - t) * b), 1e-9).holds);
      const Mat x = random_pd(d, rng);
      CHECK((gmean_pair(Mat(x * a * x.adjoint()), Mat(x * b * x.adjoint()), t) - x * g * x.adjoint()).norm() <
            1e-8 * (x * g * x.adjoint()).norm());
    }
  }

  TEST_CASE("psd order witness") {
    Mat a = Mat::Identity(2, 2), b = Mat::Identity(2, 2);
    b(1, 1) = 0.5;
    const auto r = psd_leq(a, b, 1e-12);
    CHECK_FALSE(r.holds);
    CHECK(r.min_eigenvalue == doctest::Approx(-0.5));
    CHECK(std::abs(r.witness[1]) == doctest::Approx(1.0));
    CHECK(psd_leq(b, a, 1e-12).holds);
  }

  TEST_CASE("rank-one max divergence") {
    std::mt19937_64 rng(9);
    const Mat a = random_pd(3, rng);
    Eigen::VectorXcd psi = Eigen::VectorXcd::Random(3);
    psi.normalize();
    CHECK(max_divergence_rank1(psi, a) == doctest::Approx(std::log2((psi.adjoint() * a.inverse() * psi)(0, 0).real())));
  }
}
