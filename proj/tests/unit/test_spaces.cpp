#include <doctest.h>

#include <string>

#include "famart/errors.hpp"
#include "famart/fap.hpp"
#include "famart/spaces.hpp"
#include "helpers.hpp"

using namespace famart;
using namespace famart::spaces;
using famart::test::R;
using famart::test::Rs;
using famart::test::X;

TEST_CASE("dmw path model") {
  const auto dmw = example_dmw(R("1/3"), 2);
  CHECK(dmw.model.p0_mass() == Rs({"1/9", "2/9", "2/9", "4/9"}));
  CHECK_FALSE(dmw.model.has_tail());
  CHECK(trading_space(dmw.model, dmw.filtration, dmw.process).size() == 3);

  const auto one = example_dmw(R("2/5"), 1);
  const LinSpace l = trading_space(one.model, one.filtration, one.process);
  REQUIRE(l.size() == 1);
  CHECK(l[0] == X({"1", "-1"}));

  for (unsigned n = 1; n <= 6; ++n) CHECK(sum(example_dmw(R("1/7"), n).model.p0_mass()) == Rational(1));

  CHECK_THROWS_AS(example_dmw(R("1/2"), 2), InvalidInput);
  CHECK_THROWS_AS(example_dmw(R("0"), 2), InvalidInput);
  CHECK_THROWS_AS(example_dmw(R("1/3"), 0), InvalidInput);
}

TEST_CASE("bp tail model") {
  const auto bp = example_bp(3, 1);
  const Model& m = bp.filtered.model;
  CHECK(bp.q_ref.ca_mass() == Rs({"1/2", "1/6", "1/12"}));
  CHECK(bp.q_ref.ca_tail() == R("1/4"));
  CHECK(bp.filtered.process[1] == X({"5/2", "1/2", "1/2"}, "1/2"));
  CHECK(sum(m.p0_mass()) + *m.p0_tail() == Rational(1));

  CHECK_THROWS_AS(example_bp(3, 2), InvalidInput);

  for (unsigned n : {4u, 8u, 12u}) {
    const auto ex = example_bp(n, n - 2);
    const Model& mm = ex.filtered.model;
    CHECK(sum(mm.p0_mass()) + *mm.p0_tail() == Rational(1));
    CHECK(sum(ex.q_ref.ca_mass()) + *ex.q_ref.ca_tail() == Rational(1));

    // ((j+1)^2 + 2(j+1)) Q{j+1} - Q(A_{j+1}) = 1, A_n the states beyond n plus the tail
    for (unsigned j = 0; j + 2 < n; ++j) {
      const unsigned w = j + 1;
      Rational tail_set = *ex.q_ref.ca_tail();
      for (unsigned i = w; i < n; ++i) tail_set += ex.q_ref.ca_mass()[i];
      CHECK(Rational(w * w + 2 * w) * ex.q_ref.ca_mass()[w - 1] - tail_set == Rational(1));
    }

    const LinSpace l = trading_space(mm, ex.filtered.filtration, ex.filtered.process);
    REQUIRE(l.size() == n - 1);
    std::mt19937_64 rng(n);
    std::vector<Rational> b(l.size());
    Rational closed_form;
    for (std::size_t j = 0; j < l.size(); ++j) {
      CHECK(expect(ex.q_ref, l[j]) == inverse_power_of_two(static_cast<unsigned>(j + 1)));
      CHECK(*l[j].tail() == -inverse_power_of_two(static_cast<unsigned>(j + 1)));
      b[j] = famart::test::random_rational(rng);
      closed_form += b[j] * inverse_power_of_two(static_cast<unsigned>(j + 1));
    }
    CHECK(expect(ex.q_ref, l.combine(mm, b)) == closed_form);
  }
}

TEST_CASE("harmonic model") {
  const auto h = example_harmonic(2);
  REQUIRE(h.space.size() == 1);
  CHECK(h.space[0] == X({"1", "1/2"}, "0"));
  CHECK(ess_sup(-h.space[0], h.model) == R("0"));
  CHECK(ess_sup(h.space[0], h.model) == R("1"));
  CHECK_THROWS_AS(example_harmonic(1), InvalidInput);
}

TEST_CASE("filtration validation") {
  const Model m = Model::create(Rs({"1/4", "1/4", "1/2"}), std::nullopt);
  CHECK_NOTHROW(Filtration({{{0, 1, 2}}, {{0}, {1, 2}}}).validate(m));
  CHECK_THROWS_AS(Filtration(std::vector<Partition>{}).validate(m), InvalidInput);
  CHECK_THROWS_AS(Filtration({{{0}, {1, 2}}}).validate(m), InvalidInput);         // time 0 not trivial
  CHECK_THROWS_AS(Filtration({{{0, 1, 2}}, {{0, 1}, {1, 2}}}).validate(m), InvalidInput);  // overlap
  CHECK_THROWS_AS(Filtration({{{0, 1, 2}}, {{0}, {1}}}).validate(m), InvalidInput);  // misses state 2
  CHECK_THROWS_AS(Filtration({{{0, 1, 2}}, {{0}, {1, 2, 5}}}).validate(m), InvalidInput);
  CHECK_THROWS_AS(Filtration({{{0, 1, 2}}, {{0}, {1, 2}}, {{0, 1}, {2}}}).validate(m), InvalidInput);  // coarsens
}

TEST_CASE("trading space") {
  const Model m = Model::create(Rs({"1/2", "1/2"}), std::nullopt);
  const Filtration f({{{0, 1}}, {{0}, {1}}});

  try {
    (void)trading_space(m, f, {X({"0", "1"}), X({"0", "1"})});
    FAIL("non-adapted process accepted");
  } catch (const InvalidInput& e) {
    const std::string what = e.what();
    CHECK(what.find("time 0") != std::string::npos);
    CHECK(what.find("block 0") != std::string::npos);
    CHECK(what.find("states 0 and 1") != std::string::npos);
  }

  CHECK(trading_space(m, f, {X({"2", "2"}), X({"2", "2"})}).empty());
  CHECK_THROWS_AS(trading_space(m, f, {X({"0", "0"})}), InvalidInput);

  // every generated element is measurable and conforms
  const auto dmw = example_dmw(R("1/3"), 3);
  const LinSpace l = trading_space(dmw.model, dmw.filtration, dmw.process);
  CHECK_NOTHROW(l.require_conforms(dmw.model));
  CHECK(l.size() == 7);
}

TEST_CASE("binomial pmf and random finite models") {
  CHECK(binomial_pmf(2, R("1/3")) == Rs({"4/9", "4/9", "1/9"}));
  CHECK(sum(binomial_pmf(40, R("2/7"))) == Rational(1));
  CHECK_THROWS_AS(binomial_pmf(3, R("3/2")), InvalidInput);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = example_finite_random(seed);
    const auto b = example_finite_random(seed);
    CHECK(a.model == b.model);
    CHECK(a.space == b.space);
    CHECK_NOTHROW(a.space.require_conforms(a.model));
    for (const auto& x : a.space.basis()) CHECK_FALSE(x.is_zero());
  }
}
