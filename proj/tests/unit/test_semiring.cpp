#include <doctest.h>

#include <cmath>

#include "symmono/errors.hpp"
#include "symmono/semiring.hpp"

using namespace symmono;
using P = PositivePairs;

TEST_SUITE("semiring") {
  TEST_CASE("naturals") {
    CHECK(abstract_rank<Naturals>(5, 10) == 5);
    CHECK(abstract_subrank<Naturals>(5, 10) == 5);
    CHECK_FALSE(abstract_rank<Naturals>(50, 10).has_value());
    CHECK(power<Naturals>(3, 4) == 81);
    CHECK(check_semiring_laws<Naturals>({0, 1, 2, 7}, 10).empty());
  }

  TEST_CASE("positive pairs: construction and order") {
    CHECK_THROWS_AS(P::make(1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(P::make(-1.0, 2.0), InvalidArgument);
    CHECK(P::leq(P::make(1, 2), P::make(1, 3)));
    CHECK_FALSE(P::leq(P::make(1, 4), P::make(2, 2)));
    CHECK(check_semiring_laws<P>({P::zero(), P::one(), P::make(0.5, 3), P::make(2, 5)}, 100).empty());
  }

  TEST_CASE("geometric-mean functional on pairs") {
    const auto f = gmean_functionals<P>({pairs::h1(), pairs::h2()}, {0.5, 0.5});
    CHECK(f(P::make(1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f(P::make(1, 4)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f(P::make(2, 5)) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
    // (1,1) + (1,4) = (2,5) but 1 + 2 ≠ √10
    CHECK(std::abs(f(P::make(2, 5)) - 3.0) > 0.1);
    CHECK_THROWS_AS(gmean_functionals<P>({pairs::max_component(), pairs::h1()}, {0.5, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(gmean_functionals<P>({pairs::h1(), pairs::h2()}, {0.5, 0.6}), InvalidArgument);
  }

  TEST_CASE("rank and subrank on pairs") {
    CHECK(abstract_rank<P>(P::make(1, 4), 100) == 4);
    CHECK(abstract_subrank<P>(P::make(1, 4), 100) == 1);
    CHECK(abstract_subrank<P>(P::make(2, 5), 100) == 2);
    CHECK(abstract_rank<P>(P::make(2.5, 0.5), 100) == 3);
    const auto seq = asymptotic_rank_estimate<P>(P::make(2, 3), 4, 100);
    for (double v : seq.values) CHECK(v == doctest::Approx(3.0));
    CHECK_THROWS_AS(asymptotic_rank_estimate<P>(P::make(2, 30), 3, 100), CapExceeded);
  }

  TEST_CASE("regularization with natural multipliers") {
    const std::vector<P::Element> ts{P::nat(2), P::nat(5)};
    for (const auto& x : {P::make(2, 5), P::make(0.3, 1.7)}) {
      for (double v : regularize<P>(pairs::h1(), x, ts, 5)) CHECK(v == doctest::Approx(x[0]).epsilon(1e-12));
      for (double v : regularize<P>(pairs::max_component(), x, ts, 5))
        CHECK(v == doctest::Approx(std::max(x[0], x[1])).epsilon(1e-12));
    }
    const Functional<P> lower{[](const P::Element& x) { return std::min(x[0], x[1]); }, FunctionalKind::kLower, "min"};
    CHECK_THROWS_AS(regularize<P>(lower, P::one(), ts, 2), InvalidArgument);
  }

  TEST_CASE("polynomial sup variant overshoots the geometric mean") {
    const auto f = gmean_functionals<P>({pairs::h1(), pairs::h2()}, {0.5, 0.5});
    const auto x = P::make(1, 4);
    CHECK(polynomial_sup_lower<P>(f, x, {1000000}, {1, 2, 4}) > f(x) * 1.01);
  }

  TEST_CASE("functional law sampling") {
    const std::vector<P::Element> samples{P::zero(), P::one(), P::make(1, 4), P::make(2, 5), P::make(3, 0.5)};
    CHECK(check_functional<P>(pairs::h1(), samples).ok());
    CHECK(check_functional<P>(pairs::max_component(), samples).ok());
    const Functional<P> sq{[](const P::Element& x) { return x[0] * x[0]; }, FunctionalKind::kUpper, "sq"};
    CHECK_FALSE(check_functional<P>(sq, samples).ok());
  }

  TEST_CASE("tensor surrogate") {
    using T = TensorSurrogate<3>;
    CHECK(abstract_rank<T>(states::w(3), 8) == 2);
    CHECK(abstract_rank<T>(states::unit(3, 3), 8) == 3);
    CHECK(abstract_subrank<T>(states::w(3), 8) == 2);
    CHECK(T::leq(states::unit(2, 3), states::unit(3, 3)));
    CHECK(check_semiring_laws<T>({T::one(), states::w(3), states::ghz(2, 3)}, 6).empty());
  }
}
