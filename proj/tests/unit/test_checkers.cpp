#include <doctest.h>

#include "famart/checkers.hpp"
#include "famart/errors.hpp"
#include "famart/fap.hpp"
#include "famart/spaces.hpp"
#include "famart/cli/json_io.hpp"
#include "helpers.hpp"

using namespace famart;
using namespace famart::checkers;
using famart::test::R;
using famart::test::Rs;
using famart::test::X;

namespace {

const Model& two_states() {
  static const Model m = Model::create(Rs({"1/2", "1/2"}), std::nullopt);
  return m;
}

LinSpace bp_space(const spaces::BpExample& ex) {
  return spaces::trading_space(ex.filtered.model, ex.filtered.filtration, ex.filtered.process);
}

void check_valid(const Model& m, const LinSpace& l, const Verdict& v) {
  const auto val = validate(m, l, v);
  INFO(condition_id(v.condition), ": ", val.reason);
  CHECK(val.ok);
}

struct Sample {
  Model model;
  LinSpace space;
};

// random model with optional tail point and zero-mass states, small integer basis
Sample random_sample(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t n = 1 + rng() % 4;
    const bool has_tail = rng() % 2 == 0;
    auto mass = famart::test::random_pmf(rng, n + (has_tail ? 1 : 0), true);
    std::optional<Rational> tail;
    if (has_tail) {
      tail = mass.back();
      mass.pop_back();
    }
    const Model m = Model::create(mass, tail);
    std::vector<RandVar> basis;
    const std::size_t k = rng() % 4;
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<Rational> v(n);
      for (auto& x : v) x = Rational(static_cast<long>(rng() % 5) - 2);
      basis.emplace_back(v, has_tail ? std::optional<Rational>(Rational(static_cast<long>(rng() % 5) - 2))
                                     : std::nullopt);
    }
    return {m, LinSpace(basis)};
  }
}

}  // namespace

TEST_CASE("no-arbitrage") {
  const LinSpace arb({X({"1", "0"})});
  Verdict v = check_no_arbitrage(two_states(), arb);
  CHECK_FALSE(v.holds);
  REQUIRE(std::holds_alternative<ArbitrageVector>(v.certificate));
  const RandVar& x = std::get<ArbitrageVector>(v.certificate).x;
  CHECK(x.at(1) == R("0"));
  CHECK(x.at(0).is_positive());
  check_valid(two_states(), arb, v);

  const auto h = spaces::example_harmonic(6);
  v = check_no_arbitrage(h.model, h.space);
  CHECK_FALSE(v.holds);
  check_valid(h.model, h.space, v);

  const auto dmw = spaces::example_dmw(R("1/3"), 3);
  const LinSpace l = spaces::trading_space(dmw.model, dmw.filtration, dmw.process);
  v = check_no_arbitrage(dmw.model, l);
  CHECK(v.holds);
  check_valid(dmw.model, l, v);
}

TEST_CASE("absolutely continuous martingale charge") {
  const auto h = spaces::example_harmonic(6);
  Verdict v = check_acmfap(h.model, h.space);
  CHECK(v.holds);
  check_valid(h.model, h.space, v);

  const LinSpace neg({X({"-1", "-1"})});
  v = check_acmfap(two_states(), neg);
  CHECK_FALSE(v.holds);
  REQUIRE(std::holds_alternative<Witness>(v.certificate));
  CHECK(ess_sup(std::get<Witness>(v.certificate).x, two_states()).is_negative());
  check_valid(two_states(), neg, v);
}

TEST_CASE("equivalent martingale charge") {
  const auto bp = spaces::example_bp(8, 4);
  const LinSpace l = bp_space(bp);
  Verdict v = find_emfap(bp.filtered.model, l);
  CHECK(v.holds);
  REQUIRE(std::holds_alternative<MartingaleFap>(v.certificate));
  const auto& mf = std::get<MartingaleFap>(v.certificate);
  CHECK(mf.equivalent);
  CHECK(is_equivalent(mf.fap, bp.filtered.model));
  REQUIRE(l.size() == 5);
  for (const auto& x : l.basis()) CHECK(expect(mf.fap, x) == R("0"));
  check_valid(bp.filtered.model, l, v);

  const auto dmw = spaces::example_dmw(R("1/3"), 2);
  const LinSpace ld = spaces::trading_space(dmw.model, dmw.filtration, dmw.process);
  v = find_emfap(dmw.model, ld);
  REQUIRE(v.holds);
  CHECK(std::get<MartingaleFap>(v.certificate).fap.ca_mass() == Rs({"1/4", "1/4", "1/4", "1/4"}));

  v = find_emfap(two_states(), LinSpace({X({"1", "0"})}));
  CHECK_FALSE(v.holds);
  CHECK(std::holds_alternative<ArbitrageVector>(v.certificate));
}

TEST_CASE("condition (3) for a given Q and c") {
  const auto bp = spaces::example_bp(8, 4);
  const LinSpace l = bp_space(bp);
  Verdict v = verify_condition3(bp.filtered.model, l, bp.q_ref, R("1"));
  CHECK(v.holds);
  check_valid(bp.filtered.model, l, v);

  const Fap p0 = Fap::countably_additive(Rs({"1/2", "1/2"}), std::nullopt);
  const LinSpace sym({X({"1", "-1"})});
  v = verify_condition3(two_states(), sym, p0, R("1"));
  CHECK(v.holds);
  check_valid(two_states(), sym, v);

  const LinSpace arb({X({"1", "0"})});
  for (const char* c : {"1/100", "1", "7"}) {
    v = verify_condition3(two_states(), arb, Fap::countably_additive(Rs({"1/3", "2/3"}), std::nullopt), R(c));
    CHECK_FALSE(v.holds);
    check_valid(two_states(), arb, v);
  }

  CHECK_THROWS_AS(verify_condition3(two_states(), sym, p0, R("0")), InvalidInput);
  CHECK_THROWS_AS(
      verify_condition3(two_states(), sym, Fap::countably_additive(Rs({"1", "0"}), std::nullopt), R("1")),
      InvalidInput);
}

TEST_CASE("least constant c*") {
  CStar c = compute_cstar(two_states(), LinSpace({X({"1", "-1"})}));
  REQUIRE_FALSE(c.infinite());
  CHECK(*c.value == R("1"));

  CHECK(compute_cstar(two_states(), LinSpace({X({"1", "0"})})).infinite());
  // every truncation of the bp model is finite-dimensional without arbitrage, so c* stays finite
  // there; the blow-up only shows as growth in N
  std::optional<Rational> previous;
  for (unsigned n : {6u, 8u, 10u}) {
    const auto bp = spaces::example_bp(n, n - 2);
    const CStar cn = compute_cstar(bp.filtered.model, bp_space(bp));
    REQUIRE_FALSE(cn.infinite());
    if (previous) CHECK(*previous < *cn.value);
    previous = cn.value;
  }

  c = compute_cstar(two_states(), LinSpace());
  REQUIRE_FALSE(c.infinite());
  CHECK(*c.value == R("0"));

  // asymmetric two-point space: X = (1, -3) gives ratio 1/3, -X gives 3
  c = compute_cstar(two_states(), LinSpace({X({"1", "-3"})}));
  REQUIRE_FALSE(c.infinite());
  CHECK(*c.value == R("3"));
}

TEST_CASE("weighted condition (5*) and Q*") {
  const auto dmw = spaces::example_dmw(R("1/3"), 2);
  const LinSpace l = spaces::trading_space(dmw.model, dmw.filtration, dmw.process);
  const Verdict v = verify_condition5star(dmw.model, l, RandVar::constant(dmw.model, R("1")));
  const CStar plain = compute_cstar(dmw.model, l);
  REQUIRE(v.holds);
  REQUIRE_FALSE(plain.infinite());
  CHECK(std::get<CStarBound>(v.certificate).value == *plain.value);
  check_valid(dmw.model, l, v);

  const auto bp = spaces::example_bp(8, 4);
  const Model& m = bp.filtered.model;
  const LinSpace lb = bp_space(bp);
  std::vector<Rational> y(m.n_states());
  for (unsigned w = 1; w <= m.n_states(); ++w) y[w - 1] = inverse_power_of_two(w);
  const RandVar weight(y, Rational(0));
  const Verdict vb = verify_condition5star(m, lb, weight);
  check_valid(m, lb, vb);
  if (vb.holds) {
    const auto& bound = std::get<CStarBound>(vb.certificate);
    REQUIRE(bound.qstar);
    for (const auto& x : lb.basis()) CHECK(expect(*bound.qstar, x) == R("0"));
  }

  CHECK_THROWS_AS(verify_condition5star(m, lb, RandVar(y, Rational(1))), InvalidInput);
  y[2] = 0;
  CHECK_THROWS_AS(verify_condition5star(m, lb, RandVar(y, Rational(0))), InvalidInput);
}

TEST_CASE("qstar_from_weight") {
  const Fap q = Fap::countably_additive(Rs({"1/2", "1/2"}), std::nullopt);
  CHECK(qstar_from_weight(two_states(), q, X({"1", "1"})) == q);
  CHECK(qstar_from_weight(two_states(), q, X({"1", "3"})).ca_mass() == Rs({"1/4", "3/4"}));
  CHECK_THROWS_AS(qstar_from_weight(two_states(), q, X({"-1", "0"})), InvalidInput);

  std::mt19937_64 rng(9);
  const Model m = Model::create(Rs({"1/4", "1/4", "1/4"}), R("1/4"));
  for (int i = 0; i < 100; ++i) {
    auto pm = famart::test::random_pmf(rng, 4);
    const Rational t = pm.back();
    pm.pop_back();
    const Fap qq = Fap::countably_additive(pm, t);
    std::vector<Rational> yv(3);
    for (auto& x : yv) x = abs(famart::test::random_rational(rng)) + R("1/5");
    const Fap qs = qstar_from_weight(m, qq, RandVar(yv, abs(famart::test::random_rational(rng))));
    CHECK(sum(qs.ca_mass()) + *qs.ca_tail() == Rational(1));
  }
}

TEST_CASE("condition (8)") {
  const Model m = Model::create(Rs({"1/2", "1/4"}), R("1/4"));
  CHECK(check_condition8(m, LinSpace({X({"1", "2"}, "0")})).holds);
  const auto bp = spaces::example_bp(8, 4);
  const Verdict v = check_condition8(bp.filtered.model, bp_space(bp));
  CHECK_FALSE(v.holds);
  check_valid(bp.filtered.model, bp_space(bp), v);
  const auto h = spaces::example_harmonic(5);
  CHECK(check_condition8(h.model, h.space).holds);
  CHECK_THROWS_AS(check_condition8(two_states(), LinSpace()), InvalidInput);
}

TEST_CASE("norm closure") {
  CHECK_FALSE(check_norm_closure(two_states(), LinSpace({X({"1", "0"})})).holds);
  const auto dmw = spaces::example_dmw(R("1/3"), 2);
  const LinSpace l = spaces::trading_space(dmw.model, dmw.filtration, dmw.process);
  const Verdict v = check_norm_closure(dmw.model, l);
  CHECK(v.holds);
  check_valid(dmw.model, l, v);
}

TEST_CASE("coherence") {
  const std::vector<RandVar> bets{X({"1", "0"})};
  Verdict v = check_coherence(bets, Rs({"1/2"}), two_states());
  CHECK(v.holds);
  check_valid(two_states(), LinSpace(), v);

  v = check_coherence(bets, Rs({"2"}), two_states());
  CHECK_FALSE(v.holds);
  REQUIRE(std::holds_alternative<SureLossBet>(v.certificate));
  CHECK(std::get<SureLossBet>(v.certificate).stakes == Rs({"-1"}));
  check_valid(two_states(), LinSpace(), v);

  CHECK_THROWS_AS(check_coherence(bets, Rs({"1", "2"}), two_states()), InvalidInput);

  // previsions computed from any charge are coherent
  std::mt19937_64 rng(21);
  const Model m = Model::create(Rs({"1/4", "1/4", "1/4"}), R("1/4"));
  for (int i = 0; i < 60; ++i) {
    auto pm = famart::test::random_pmf(rng, 4, true);
    const Rational t = pm.back();
    pm.pop_back();
    const Fap p = Fap::create(Rational(static_cast<long>(rng() % 3), 2), pm, t);
    std::vector<RandVar> d;
    std::vector<Rational> e;
    for (int k = 0; k < 3; ++k) {
      RandVar x({famart::test::random_rational(rng), famart::test::random_rational(rng),
                 famart::test::random_rational(rng)},
                famart::test::random_rational(rng));
      e.push_back(expect(p, x));
      d.push_back(std::move(x));
    }
    const Verdict c = check_coherence(d, e, m);
    CHECK(c.holds);
    check_valid(m, LinSpace(), c);
  }
}

TEST_CASE("sup over events dominates the prevision") {
  const std::vector<std::vector<std::size_t>> any{{0, 1}, {1}};
  Verdict v = check_sup_dominates_prevision(two_states(), LinSpace({X({"0", "0"})}), Rs({"0"}), any);
  CHECK(v.holds);

  const LinSpace d({X({"1", "0"})});
  v = check_sup_dominates_prevision(two_states(), d, Rs({"1"}), {{1}});
  CHECK_FALSE(v.holds);
  REQUIRE(std::holds_alternative<Witness>(v.certificate));
  const auto& w = std::get<Witness>(v.certificate);
  CHECK(w.event == std::vector<std::size_t>{1});
  CHECK(w.x.at(0).is_positive());
  CHECK(w.x.at(1) == R("0"));

  try {
    (void)check_sup_dominates_prevision(two_states(), d, Rs({"1"}), {{0, 1}, {0}, {1}});
    FAIL("events without the empty intersection were accepted");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("intersection") != std::string::npos);
  }

  // previsions of a charge living inside every event pass
  std::mt19937_64 rng(33);
  const Model m = Model::create(Rs({"1/5", "1/5", "1/5", "1/5"}), R("1/5"));
  const std::vector<std::vector<std::size_t>> chain{{0, 1, 2, 3, 4}, {1, 2, 4}, {2, 4}};
  for (int i = 0; i < 40; ++i) {
    auto pm = famart::test::random_pmf(rng, 2);
    const Fap p = Fap::create(Rational(static_cast<long>(rng() % 2), 2), {R("0"), R("0"), pm[0], R("0")}, pm[1]);
    std::vector<RandVar> basis;
    std::vector<Rational> e;
    for (int k = 0; k < 2; ++k) {
      std::vector<Rational> vals(4);
      for (auto& x : vals) x = famart::test::random_rational(rng);
      RandVar x(vals, famart::test::random_rational(rng));
      e.push_back(expect(p, x));
      basis.push_back(std::move(x));
    }
    const LinSpace dl(basis);
    const Verdict k = check_sup_dominates_prevision(m, dl, e, chain);
    CHECK(k.holds);
    check_valid(m, dl, k);
  }
}

TEST_CASE("divergence study") {
  const auto one = divergence_study(R("1/3"), {1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].total_variation == R("1/6"));
  const auto rows = divergence_study(R("1/3"), {10, 20, 40});
  CHECK(rows[0].total_variation < rows[1].total_variation);
  CHECK(rows[1].total_variation < rows[2].total_variation);
  CHECK_THROWS_AS(divergence_study(R("1/2"), {1}), InvalidInput);
}

TEST_CASE("implication chain and bridges on random models") {
  std::mt19937_64 rng(77);
  int na_true = 0, na_false = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Sample s = random_sample(rng);
    const Model& m = s.model;
    const LinSpace& l = s.space;
    const Verdict em = find_emfap(m, l), na = check_no_arbitrage(m, l), acm = check_acmfap(m, l);
    const Verdict nc = check_norm_closure(m, l);
    for (const auto* v : {&em, &na, &acm, &nc}) check_valid(m, l, *v);
    if (em.holds) CHECK(na.holds);
    if (na.holds) CHECK(acm.holds);
    CHECK(nc.holds == na.holds);
    if (!m.has_tail()) CHECK(na.holds == em.holds);
    (na.holds ? na_true : na_false)++;

    if (em.holds) {
      const Fap& p = std::get<MartingaleFap>(em.certificate).fap;
      if (p.alpha().is_zero() && is_equivalent(p, m)) CHECK(verify_condition3(m, l, p, R("1")).holds);
    }
    const CStar c = compute_cstar(m, l);
    if (!c.infinite() && c.value->is_positive() && m.full_support()) {
      const Fap p0 = Fap::countably_additive(m.p0_mass(), m.p0_tail());
      const Verdict b = verify_condition3(m, l, p0, Rational(1) / *c.value);
      CHECK(b.holds);
      check_valid(m, l, b);
    }

    // deterministic: a second run serializes identically
    CHECK(cli::to_json(find_emfap(m, l)) == cli::to_json(em));
  }
  CHECK(na_true > 10);
  CHECK(na_false > 10);
}
