#include <doctest.h>

#include "dense.hpp"
#include "symmono/errors.hpp"
#include "symmono/observables.hpp"

using namespace symmono;

namespace {

Eigen::MatrixXcd lifted_basis(const SymBasis& b) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(std::pow(b.local_dim(), b.copies())), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(b.size());
    e[i] = 1.0;
    m.col(i) = b.lift(e);
  }
  return m;
}

}  // namespace

TEST_SUITE("observables") {
  TEST_CASE("family specs") {
    const auto e3 = Bipartition::elementary(3);
    const FamilySpec f = FamilySpec::weighted(e3, {0.5, 0.25, 0.25});
    CHECK(f.parties() == 3);
    CHECK(f.commuting());
    const auto wb = f.weighted_bipartitions();
    REQUIRE(wb.size() == 3);
    CHECK(wb[0].second == doctest::Approx(0.5));
    CHECK_FALSE(FamilySpec::weighted(Bipartition::all(4), std::vector<double>(7, 1.0 / 7)).commuting());
    CHECK(FamilySpec::weighted({Bipartition::parse("1|2")}, {1.0}).to_string() == "1|2");

    // party 3 joins party 2, then the pulled-back leaf is 1|23
    const FamilySpec g = FamilySpec::grouped(FamilySpec::bipartite(Bipartition::parse("1|2")), {0, 1, 1});
    CHECK(g.parties() == 3);
    REQUIRE(g.weighted_bipartitions().size() == 1);
    CHECK(g.weighted_bipartitions()[0].first == Bipartition::parse("1|23"));
    CHECK_THROWS_AS(FamilySpec::grouped(FamilySpec::bipartite(Bipartition::parse("1|2")), {0, 0}), InvalidArgument);
    CHECK_THROWS_AS(FamilySpec::weighted(e3, {0.5, 0.5}), InvalidArgument);
  }

  TEST_CASE("bipartite observable matches the dense isotypic sum") {
    const std::vector<int> dims{2, 3};
    for (int n = 1; n <= 3; ++n) {
      const FamilyInstance inst = build_bipartite(SpaceSpec(dims), Bipartition::parse("1|2"), n);
      CHECK(inst.bound_constant == 2.0);
      const Eigen::MatrixXcd l = lifted_basis(*inst.powered.basis());
      const Eigen::MatrixXcd dense = oracle::bipartite_observable(dims, n, {0}, 1.0);
      const Eigen::MatrixXcd want = l.adjoint() * dense * l;
      CHECK((want - inst.powered.to_dense().cast<cplx>()).norm() < 1e-9 * want.norm());
    }
  }

  TEST_CASE("powered family spectrum sits between 1 and c^{np}") {
    for (double alpha : {0.5, 0.75}) {
      const double p = (1 - alpha) / alpha;
      for (int n = 1; n <= 4; ++n) {
        const FamilyInstance inst = build_family(FamilySpec::weighted(Bipartition::elementary(3), {1.0 / 3, 1.0 / 3, 1.0 / 3}),
                                                 SpaceSpec({2, 2, 2}), n, alpha);
        CHECK(inst.exponent == doctest::Approx(p));
        CHECK(inst.powered.min_eigenvalue() >= 1.0 - 1e-9);
        CHECK(inst.powered.max_eigenvalue() <= std::pow(inst.bound_constant, n * p) * (1 + 1e-9));
      }
    }
  }

  TEST_CASE("axioms hold for small bipartite instances") {
    AxiomSetup setup{SpaceSpec({2, 2}), SpaceSpec({2, 2}), 1, 2, 3, 5};
    const FamilySpec f = FamilySpec::bipartite(Bipartition::parse("1|2"));
    for (double alpha : {0.5, 0.75}) {
      const AxiomReport r = verify_axioms(f, setup, alpha, 1e-9);
      CHECK(r.all_pass());
      std::set<std::string> seen;
      for (const auto& c : r.checks) seen.insert(c.axiom);
      CHECK(seen == std::set<std::string>{"O1", "O2", "O3", "O4", "O5"});
    }
  }

  TEST_CASE("flipped entropy weights break submultiplicativity") {
    AxiomSetup setup{SpaceSpec({2, 2}), SpaceSpec({2, 2}), 1, 1, 2, 5};
    FamilyOptions bad;
    bad.entropy_sign = -1.0;
    const AxiomReport r = verify_axioms(FamilySpec::bipartite(Bipartition::parse("1|2")), setup, 0.5, 1e-9, bad);
    bool o3_failed = false;
    for (const auto& c : r.checks)
      if (c.axiom == "O3" && !c.pass) {
        o3_failed = true;
        CHECK(c.margin < 0.0);
      }
    CHECK(o3_failed);
  }

  TEST_CASE("log observable is the derivative of the powered family at p = 0") {
    FamilyBuilder fb;
    const FamilySpec f = FamilySpec::weighted(Bipartition::elementary(3), {0.2, 0.3, 0.5});
    auto basis = fb.basis(SpaceSpec({2, 2, 2}), 2);
    const Eigen::MatrixXd lg = fb.log_observable(f, basis).to_dense();
    const double alpha = 1.0 - 1e-6;
    const double p = (1 - alpha) / alpha;
    const Eigen::MatrixXd a = fb.build(f, basis, alpha).powered.to_dense();
    const Eigen::MatrixXd approx = (a - Eigen::MatrixXd::Identity(a.rows(), a.cols())) / (p * std::log(2.0));
    CHECK((approx - lg).norm() < 1e-4 * std::max(1.0, lg.norm()));
  }
}
