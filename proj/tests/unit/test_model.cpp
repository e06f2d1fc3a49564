#include <doctest.h>

#include "famart/errors.hpp"
#include "famart/fap.hpp"
#include "helpers.hpp"

using namespace famart;
using famart::test::R;
using famart::test::Rs;
using famart::test::X;

TEST_CASE("model validation") {
  CHECK_NOTHROW(Model::create(Rs({"1/2", "1/2"}), std::nullopt));
  CHECK_NOTHROW(Model::create(Rs({"1/2", "1/4"}), R("1/4")));
  CHECK_THROWS_AS(Model::create(Rs({"1/2", "1/3"}), std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Model::create(Rs({"3/2", "-1/2"}), std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Model::create({}, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Model::create(Rs({"1/2"}), R("-1/2")), InvalidInput);
  CHECK_THROWS_AS(Model::create(Rs({"1/2", "1/2"}), R("1/4")), InvalidInput);

  // zero masses are legal, including a P0-null tail
  const Model m = Model::create(Rs({"1", "0"}), R("0"));
  CHECK(m.dimension() == 3);
  CHECK(m.support() == std::vector<std::size_t>{0});
  CHECK_FALSE(m.full_support());
}

TEST_CASE("random variable conformance") {
  const Model tail = Model::create(Rs({"1/2", "1/4"}), R("1/4"));
  const Model plain = Model::create(Rs({"1/2", "1/2"}), std::nullopt);
  CHECK(X({"1", "2"}, "0").conforms(tail));
  CHECK_FALSE(X({"1", "2"}).conforms(tail));
  CHECK_FALSE(X({"1", "2"}, "0").conforms(plain));
  CHECK_FALSE(X({"1"}).conforms(plain));
  CHECK_THROWS_AS(X({"1"}).require_conforms(plain), InvalidInput);
  CHECK_THROWS_AS(X({"1"}) + X({"1", "2"}), InvalidInput);
  CHECK(RandVar::indicator(tail, 2) == X({"0", "0"}, "1"));
  CHECK(RandVar::constant(plain, R("3")) == X({"3", "3"}));
  CHECK(product(X({"2", "3"}, "1"), X({"1/2", "-1"}, "5")) == X({"1", "-3"}, "5"));
}

TEST_CASE("ess_sup, sup_norm and expect on the worked examples") {
  const Model m3 = Model::create(Rs({"1/2", "1/2", "0"}), std::nullopt);
  CHECK(ess_sup(X({"-1", "-2", "5"}), m3) == R("-1"));
  CHECK(ess_inf(X({"-1", "-2", "5"}), m3) == R("-2"));

  const Model mt = Model::create(Rs({"1/2", "1/4"}), R("1/4"));
  CHECK(ess_sup(X({"-1", "-1/2"}, "0"), mt) == R("0"));
  CHECK(sup_norm(X({"-1", "-1/2"}, "0"), mt) == R("1"));
  CHECK(ess_sup(X({"7/3", "7/3"}, "7/3"), mt) == R("7/3"));

  const Model m2 = Model::create(Rs({"1/2", "1/2"}), std::nullopt);
  CHECK(sup_norm(X({"3", "-1"}), m2) == R("3"));
  CHECK(sup_norm(X({"0", "0"}), m2) == R("0"));
  CHECK_THROWS_AS(ess_sup(X({"1"}), m2), InvalidInput);

  CHECK(expect(Fap::point_mass(m2, 0), X({"7", "0"})) == R("7"));

  // Q{w} = 1/w - 1/(w+1) truncated at N = 3, increment S1 - S0
  const Fap q = Fap::countably_additive(Rs({"1/2", "1/6", "1/12"}), R("1/4"));
  CHECK(expect(q, X({"3/2", "-1/2", "-1/2"}, "-1/2")) == R("1/2"));

  const Fap pure = Fap::create(R("1"), Rs({"1", "0", "0"}), R("0"));
  CHECK(expect(pure, X({"5", "6", "7"}, "-9/4")) == R("-9/4"));
  CHECK_THROWS_AS(expect(q, X({"1", "1", "1"})), InvalidInput);
}

TEST_CASE("ess_sup is positively homogeneous and subadditive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const bool has_tail = rng() % 2 == 0;
    auto mass = famart::test::random_pmf(rng, n + (has_tail ? 1 : 0), true);
    std::optional<Rational> tail;
    if (has_tail) {
      tail = mass.back();
      mass.pop_back();
    }
    if (sum(mass).is_zero()) continue;  // support must contain an explicit state or the tail
    const Model m = Model::create(mass, tail);
    auto draw = [&] {
      std::vector<Rational> v(n);
      for (auto& x : v) x = famart::test::random_rational(rng);
      return RandVar(v, has_tail ? std::optional<Rational>(famart::test::random_rational(rng)) : std::nullopt);
    };
    const RandVar a = draw(), b = draw();
    const Rational c = abs(famart::test::random_rational(rng));
    CHECK(ess_sup(c * a, m) == c * ess_sup(a, m));
    CHECK(ess_sup(a + b, m) <= ess_sup(a, m) + ess_sup(b, m));
    CHECK(ess_inf(a, m) == -ess_sup(-a, m));

    // internal expectation for an absolutely continuous charge
    const Fap p = Fap::countably_additive(mass, tail);
    CHECK(expect(p, a) <= ess_sup(a, m));
    CHECK(expect(p, a) >= ess_inf(a, m));
    CHECK(expect(p, a + b) == expect(p, a) + expect(p, b));
  }
}

TEST_CASE("linear space combination") {
  const Model m = Model::create(Rs({"1/2", "1/2"}), std::nullopt);
  const LinSpace l({X({"1", "0"}), X({"1", "-1"})});
  CHECK(l.combine(m, Rs({"2", "3"})) == X({"5", "-3"}));
  CHECK(l.combine_at(Rs({"2", "3"}), 1) == R("-3"));
  CHECK_THROWS_AS(l.combine(m, Rs({"1"})), InvalidInput);
  CHECK_THROWS_AS(LinSpace({X({"1"})}).require_conforms(m), InvalidInput);
}
