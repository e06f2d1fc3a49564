#include "famart/checkers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "famart/errors.hpp"
#include "famart/lp.hpp"

namespace famart::checkers {

namespace {

using lp::LinearProgram;
using lp::Relation;
using lp::Sense;

constexpr const char* kOpenSet = "U = {X in L_inf : E_P(X) > 0}";

/// Coefficients of X_b(coordinate) in b, padded with zeros for extra variables.
std::vector<Rational> evaluation_row(const LinSpace& l, std::size_t coordinate, std::size_t n_vars) {
  std::vector<Rational> row(n_vars);
  for (std::size_t k = 0; k < l.size(); ++k) row[k] = l[k].at(coordinate);
  return row;
}

template <typename T>
const T& expect_outcome(const lp::LpOutcome& out, const char* what) {
  if (const auto* v = std::get_if<T>(&out)) return *v;
  throw std::logic_error(std::string("unexpected LP outcome in ") + what);
}

std::vector<Rational> head(const std::vector<Rational>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<Rational> normalized(std::vector<Rational> w) {
  const Rational total = sum(w);
  for (auto& x : w) x /= total;
  return w;
}

/// Checks X >= 0 on the support with a positive charged coordinate.
bool is_arbitrage(const RandVar& x, const Model& m) {
  bool positive = false;
  for (std::size_t c : m.support()) {
    if (x.at(c).is_negative()) return false;
    positive = positive || x.at(c).is_positive();
  }
  return positive;
}

ArbitrageVector arbitrage_from(const Model& m, const LinSpace& l, std::vector<Rational> b, const char* what) {
  RandVar x = l.combine(m, b);
  if (!is_arbitrage(x, m)) throw std::logic_error(std::string("dual certificate of ") + what + " is not an arbitrage");
  return {std::move(b), std::move(x)};
}

std::string describe_support(const Model& m) {
  return m.has_tail() && m.charged(m.tail_coordinate()) ? "the essential support (tail point included)"
                                                        : "the essential support";
}

struct CStarOutcome {
  CStar cstar;
  Certificate certificate;
};

CStarOutcome cstar_impl(const Model& m, const LinSpace& l) {
  const auto support = m.support();
  const std::size_t k = l.size();
  CStarBound cert;
  std::optional<Rational> best;
  for (std::size_t sigma : support) {
    LinearProgram prog(k, Sense::Maximize);
    prog.objective = evaluation_row(l, sigma, k);
    for (std::size_t tau : support) prog.add(evaluation_row(l, tau, k), Relation::GreaterEqual, Rational(-1));
    const auto out = lp::solve(prog);
    if (const auto* unb = std::get_if<lp::Unbounded>(&out)) {
      return {CStar{}, arbitrage_from(m, l, unb->ray, "compute_cstar")};
    }
    const auto& opt = expect_outcome<lp::Optimal>(out, "compute_cstar");
    std::vector<Rational> weights(m.dimension());
    for (std::size_t j = 0; j < support.size(); ++j) weights[support[j]] = opt.dual[j];
    cert.bounds.push_back({sigma, std::move(weights), opt.value});
    if (!best || opt.value > *best) {
      best = opt.value;
      cert.attaining_coordinate = sigma;
      cert.attaining_coefficients = opt.primal;
      cert.attaining_x = l.combine(m, opt.primal);
    }
  }
  cert.value = *best;
  return {CStar{best}, std::move(cert)};
}

LinSpace weighted_space(const Model& m, const LinSpace& l, const RandVar& y) {
  y.require_conforms(m, "weight");
  for (std::size_t i = 0; i < m.n_states(); ++i) {
    if (m.charged(i) && !y.at(i).is_positive()) {
      throw InvalidInput("weight must be positive on the essential support (state " + std::to_string(i) + ")");
    }
  }
  if (m.has_tail() && !y.tail()->is_zero()) {
    throw InvalidInput("weight must vanish at the tail point (lim Y|A_n = 0), got " + y.tail()->str());
  }
  std::vector<RandVar> basis;
  for (const auto& x : l.basis()) basis.push_back(product(x, y));
  return LinSpace(std::move(basis));
}

std::vector<std::vector<std::size_t>> normalize_events(const Model& m, std::vector<std::vector<std::size_t>> events) {
  if (events.empty()) throw InvalidInput("event family is empty");
  for (auto& e : events) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (std::size_t c : e) {
      if (c >= m.dimension()) throw InvalidInput("event names coordinate " + std::to_string(c) + " outside the model");
    }
  }
  return events;
}

std::string show_set(const std::vector<std::size_t>& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + "}";
}

}  // namespace

std::string_view condition_id(Condition c) {
  switch (c) {
    case Condition::EquivalentMartingale: return "(3)";
    case Condition::EssSupNonNegative: return "(4)";
    case Condition::BoundedRatio: return "(5)";
    case Condition::WeightedBoundedRatio: return "(5*)";
    case Condition::NoArbitrage: return "(6)";
    case Condition::SupDominatesPrevision: return "(7)";
    case Condition::VanishingAtInfinity: return "(8)";
    case Condition::NormClosure: return "(10)";
    case Condition::Coherence: return "coherence";
  }
  return "?";
}

Condition parse_condition(std::string_view text) {
  std::string s(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  for (Condition c : kAllConditions) {
    std::string id(condition_id(c));
    if (id.front() == '(') id = id.substr(1, id.size() - 2);
    if (id == s) return c;
  }
  throw InvalidInput("unknown condition \"" + std::string(text) +
                     "\" (expected one of 3, 4, 5, 5*, 6, 7, 8, 10, coherence)");
}

std::string_view certificate_kind(const Certificate& c) {
  struct Visitor {
    std::string_view operator()(const Trivial&) const { return "trivial"; }
    std::string_view operator()(const ArbitrageVector&) const { return "arbitrage_vector"; }
    std::string_view operator()(const MartingaleFap&) const { return "martingale_fap"; }
    std::string_view operator()(const SeparatingFunctional&) const { return "separating_functional"; }
    std::string_view operator()(const FarkasWitness&) const { return "farkas_witness"; }
    std::string_view operator()(const CStarBound&) const { return "cstar_bound"; }
    std::string_view operator()(const SureLossBet&) const { return "sure_loss_bet"; }
    std::string_view operator()(const Witness&) const { return "witness"; }
    std::string_view operator()(const RepresentingFap&) const { return "representing_fap"; }
  };
  return std::visit(Visitor{}, c);
}

std::vector<Rational> coordinate_charges(const Fap& p, const Model& m) {
  p.require_conforms(m);
  std::vector<Rational> out(m.dimension());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = p.charge(c);
  return out;
}

Verdict check_no_arbitrage(const Model& m, const LinSpace& l) {
  l.require_conforms(m);
  const auto support = m.support();
  const std::size_t k = l.size();

  // max sum_sigma X_b(sigma) over 0 <= X_b <= 1 on the support: positive iff arbitrage.
  LinearProgram prog(k, Sense::Maximize);
  for (std::size_t sigma : support) {
    auto row = evaluation_row(l, sigma, k);
    for (std::size_t j = 0; j < k; ++j) prog.objective[j] += row[j];
    prog.add(row, Relation::GreaterEqual, Rational(0));
    prog.add(std::move(row), Relation::LessEqual, Rational(1));
  }
  const auto out = lp::solve(prog);
  const auto& opt = expect_outcome<lp::Optimal>(out, "check_no_arbitrage");

  Verdict v;
  v.condition = Condition::NoArbitrage;
  if (opt.value.is_positive()) {
    v.holds = false;
    v.certificate = arbitrage_from(m, l, opt.primal, "check_no_arbitrage");
    v.narrative = "no-arbitrage fails: X in L is non-negative on " + describe_support(m) +
                  " and positive with positive P0 probability";
    return v;
  }
  // Dual: sum_sigma (1 + u_sigma - v_sigma) X(sigma) = 0 with v = 0.
  std::vector<Rational> weights(m.dimension());
  for (std::size_t j = 0; j < support.size(); ++j) {
    weights[support[j]] = Rational(1) + opt.dual[2 * j] - opt.dual[2 * j + 1];
  }
  v.holds = true;
  v.certificate = FarkasWitness{normalized(std::move(weights))};
  v.narrative = "no-arbitrage holds: a strictly positive pmf on " + describe_support(m) +
                " gives every element of L mean zero, so no X in L is non-negative and non-null";
  return v;
}

Verdict check_norm_closure(const Model& m, const LinSpace& l) {
  Verdict na = check_no_arbitrage(m, l);
  Verdict v;
  v.condition = Condition::NormClosure;
  v.holds = na.holds;
  if (na.holds) {
    const auto& w = std::get<FarkasWitness>(na.certificate).weights;
    Fap p = Fap::from_weights(m, w, Rational(1, 2));
    auto charges = coordinate_charges(p, m);
    v.certificate = SeparatingFunctional{std::move(p), kOpenSet, std::move(charges)};
    v.narrative =
        "(10) holds: L - L_inf^+ is a polyhedral cone here, hence norm-closed, and it meets L_inf^+ only at 0; "
        "the equivalent martingale P yields the separating open convex set U (P0 treated as atomic, "
        "each coordinate an atom)";
  } else {
    v.certificate = std::move(na.certificate);
    v.narrative =
        "(10) fails: the arbitrage Z = X - 0 lies in (L - L_inf^+) and in L_inf^+ \\ {0}; "
        "closedness of the polyhedral cone makes this the only way to fail";
  }
  return v;
}

Verdict check_acmfap(const Model& m, const LinSpace& l) {
  l.require_conforms(m);
  const auto support = m.support();
  const std::size_t k = l.size();

  // ess sup(X) < 0 for some X iff X <= -1 on the support for some X (homogeneity).
  LinearProgram prog(k, Sense::Maximize);
  for (std::size_t sigma : support) prog.add(evaluation_row(l, sigma, k), Relation::LessEqual, Rational(-1));
  const auto out = lp::solve(prog);

  Verdict v;
  v.condition = Condition::EssSupNonNegative;
  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    RandVar x = l.combine(m, opt->primal);
    Rational gap = ess_sup(x, m);
    v.holds = false;
    v.certificate = Witness{opt->primal, std::move(x), support, std::move(gap)};
    v.narrative = "(4) fails: some X in L has ess sup(X) < 0, so no absolutely continuous martingale f.a.p. exists";
    return v;
  }
  const auto& inf = expect_outcome<lp::Infeasible>(out, "check_acmfap");
  std::vector<Rational> weights(m.dimension());
  for (std::size_t j = 0; j < support.size(); ++j) weights[support[j]] = inf.farkas[j];
  v.holds = true;
  Fap p = Fap::from_weights(m, normalized(std::move(weights)), Rational(1));
  auto charges = coordinate_charges(p, m);
  v.certificate = MartingaleFap{std::move(p), false, std::move(charges)};
  v.narrative =
      "(4) holds: ess sup(X) >= 0 on L; the returned P << P0 has E_P = 0 on L "
      "(absolutely continuous martingale f.a.p., tail mass carried by the pure part)";
  return v;
}

Verdict find_emfap(const Model& m, const LinSpace& l) {
  l.require_conforms(m);
  const auto support = m.support();
  const std::size_t n = support.size();
  const std::size_t k = l.size();
  const std::size_t t_var = n;

  LinearProgram prog(n + 1, Sense::Maximize);
  prog.objective[t_var] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row(n + 1);
    row[j] = 1;
    row[t_var] = -1;
    prog.add(std::move(row), Relation::GreaterEqual, Rational(0));
  }
  {
    std::vector<Rational> row(n + 1, Rational(1));
    row[t_var] = 0;
    prog.add(std::move(row), Relation::Equal, Rational(1));
  }
  for (std::size_t kk = 0; kk < k; ++kk) {
    std::vector<Rational> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = l[kk].at(support[j]);
    prog.add(std::move(row), Relation::Equal, Rational(0));
  }
  for (std::size_t j = 0; j < n; ++j) prog.set_lower(j, Rational(0));
  const auto out = lp::solve(prog);

  Verdict v;
  v.condition = Condition::EquivalentMartingale;
  const std::size_t first_martingale_row = n + 1;
  std::vector<Rational> b(k);

  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    v.stats.emplace_back("t_star", opt->value.str());
    if (opt->value.is_positive()) {
      std::vector<Rational> weights(m.dimension());
      for (std::size_t j = 0; j < n; ++j) weights[support[j]] = opt->primal[j];
      Fap p = Fap::from_weights(m, weights, Rational(1, 2));
      v.holds = true;
      v.narrative =
          "equivalent martingale f.a.p. exists (t* = " + opt->value.str() +
          " > 0), so (3) holds; P = alpha P1 + (1 - alpha) Q with alpha = " + p.alpha().str() +
          " < 1 and Q ~ P0; it induces the open convex witness " + kOpenSet;
      auto charges = coordinate_charges(p, m);
      v.certificate = MartingaleFap{std::move(p), true, std::move(charges)};
      return v;
    }
    for (std::size_t kk = 0; kk < k; ++kk) b[kk] = opt->dual[first_martingale_row + kk];
  } else {
    const auto& inf = expect_outcome<lp::Infeasible>(out, "find_emfap");
    for (std::size_t kk = 0; kk < k; ++kk) b[kk] = inf.farkas[first_martingale_row + kk];
  }
  v.holds = false;
  v.certificate = arbitrage_from(m, l, std::move(b), "find_emfap");
  v.narrative =
      "no equivalent martingale f.a.p.: the dual yields X in L with X >= 0 and P0(X > 0) > 0, "
      "so c E_Q(X) > 0 = ess sup(-X) for every Q ~ P0 and c > 0, and (3) fails";
  return v;
}

Verdict verify_condition3(const Model& m, const LinSpace& l, const Fap& q, const Rational& c) {
  l.require_conforms(m);
  q.require_conforms(m);
  if (!q.alpha().is_zero()) throw InvalidInput("condition (3) needs a countably additive Q (alpha = 0)");
  if (!is_equivalent(q, m)) throw InvalidInput("condition (3) needs Q equivalent to P0");
  if (!c.is_positive()) throw InvalidInput("condition (3) needs a constant c > 0, got " + c.str());

  const auto support = m.support();
  const std::size_t k = l.size();
  const std::size_t s_var = k;
  std::vector<Rational> eq(k);
  for (std::size_t kk = 0; kk < k; ++kk) eq[kk] = expect(q, l[kk]);

  // min s - c E_Q(X_b) with s >= -X_b on the support and -1 <= X_b <= 1 there.
  LinearProgram prog(k + 1, Sense::Minimize);
  for (std::size_t kk = 0; kk < k; ++kk) prog.objective[kk] = -c * eq[kk];
  prog.objective[s_var] = 1;
  for (std::size_t tau : support) {
    auto row = evaluation_row(l, tau, k + 1);
    auto epi = row;
    epi[s_var] = 1;
    prog.add(std::move(epi), Relation::GreaterEqual, Rational(0));
    prog.add(row, Relation::LessEqual, Rational(1));
    prog.add(std::move(row), Relation::GreaterEqual, Rational(-1));
  }
  const auto out = lp::solve(prog);
  const auto& opt = expect_outcome<lp::Optimal>(out, "verify_condition3");

  Verdict v;
  v.condition = Condition::EquivalentMartingale;
  v.problem.q = q;
  v.problem.c = c;
  v.stats.emplace_back("min_gap", opt.value.str());
  if (opt.value.is_negative()) {
    std::vector<Rational> b = head(opt.primal, k);
    RandVar x = l.combine(m, b);
    Rational gap = ess_sup(-x, m) - c * expect(q, x);
    v.holds = false;
    v.certificate = Witness{std::move(b), std::move(x), support, std::move(gap)};
    v.narrative = "(3) fails for the given (Q, c): some X in L has c E_Q(X) > ess sup(-X)";
    return v;
  }
  std::vector<Rational> weights(m.dimension());
  for (std::size_t j = 0; j < support.size(); ++j) weights[support[j]] = opt.dual[3 * j];
  v.holds = true;
  Fap p1 = Fap::from_weights(m, weights, Rational(1));
  auto charges = coordinate_charges(p1, m);
  v.certificate = SeparatingFunctional{std::move(p1),
                                       "E_P1(X) = -c E_Q(X) on L with P1 << P0, hence c E_Q(X) <= ess sup(-X); "
                                       "P = (P1 + c Q) / (1 + c) is an equivalent martingale f.a.p.",
                                       std::move(charges)};
  v.narrative = "(3) holds with c = " + c.str() + ": min over the unit ball of ess sup(-X) - c E_Q(X) is 0";
  return v;
}

CStar compute_cstar(const Model& m, const LinSpace& l) {
  l.require_conforms(m);
  return cstar_impl(m, l).cstar;
}

Verdict check_bounded_ratio(const Model& m, const LinSpace& l) {
  l.require_conforms(m);
  auto [cstar, cert] = cstar_impl(m, l);
  Verdict v;
  v.condition = Condition::BoundedRatio;
  v.holds = !cstar.infinite();
  v.certificate = std::move(cert);
  v.stats.emplace_back("c_star", cstar.infinite() ? "inf" : cstar.value->str());
  v.narrative = v.holds ? "(5) holds with least constant c* = " + cstar.value->str() +
                              "; with c = 1/c* and Q = P0 this gives (3)"
                        : "(5) fails: L contains a non-null X >= 0, so ess sup(X) / ess sup(-X) is unbounded";
  return v;
}

Verdict verify_condition5star(const Model& m, const LinSpace& l, const RandVar& y) {
  l.require_conforms(m);
  const LinSpace weighted = weighted_space(m, l, y);
  auto [cstar, cert] = cstar_impl(m, weighted);

  Verdict v;
  v.condition = Condition::WeightedBoundedRatio;
  v.problem.weight = y;
  v.holds = !cstar.infinite();
  v.stats.emplace_back("c_star", cstar.infinite() ? "inf" : cstar.value->str());
  if (v.holds) {
    Verdict em = find_emfap(m, weighted);
    if (!em.holds) throw std::logic_error("finite weighted c* without an equivalent martingale f.a.p.");
    const Fap& p = std::get<MartingaleFap>(em.certificate).fap;
    const Fap q = *yh_decompose(p).ca;
    auto& bound = std::get<CStarBound>(cert);
    if (expect(q, y).is_positive()) bound.qstar = qstar_from_weight(m, q, y);
    v.narrative = "(5*) holds with c* = " + cstar.value->str() +
                  "; E_Q(X Y) = 0 for some Q ~ P0 and Q*(A) = E_Q(Y I_A) / E_Q(Y) is a martingale measure";
  } else {
    v.narrative = "(5*) fails: the weighted family X Y admits a non-null non-negative element";
  }
  v.certificate = std::move(cert);
  return v;
}

Fap qstar_from_weight(const Model& m, const Fap& q, const RandVar& y) {
  q.require_conforms(m);
  y.require_conforms(m, "weight");
  if (!q.alpha().is_zero()) throw InvalidInput("Q* construction needs a countably additive Q (alpha = 0)");
  const Rational norm = expect(q, y);
  if (!norm.is_positive()) throw InvalidInput("E_Q(Y) = " + norm.str() + " must be positive");
  std::vector<Rational> mass(m.n_states());
  for (std::size_t i = 0; i < m.n_states(); ++i) mass[i] = q.ca_mass()[i] * y.at(i) / norm;
  std::optional<Rational> tail;
  if (m.has_tail()) tail = *q.ca_tail() * *y.tail() / norm;
  return Fap::countably_additive(std::move(mass), std::move(tail));
}

Verdict check_condition8(const Model& m, const LinSpace& l) {
  if (!m.has_tail()) throw InvalidInput("condition (8) concerns the atom sequence and needs a tail point");
  l.require_conforms(m);
  Verdict v;
  v.condition = Condition::VanishingAtInfinity;
  for (std::size_t k = 0; k < l.size(); ++k) {
    const Rational& tail = *l[k].tail();
    if (tail.is_zero()) continue;
    std::vector<Rational> b(l.size());
    b[k] = 1;
    v.holds = false;
    v.certificate = Witness{std::move(b), l[k], {m.tail_coordinate()}, tail};
    v.narrative = "(8) fails: basis element " + std::to_string(k) + " tends to " + tail.str() + " along A_n";
    return v;
  }
  v.holds = true;
  v.certificate = Trivial{};
  v.narrative = "(8) holds: every basis element has tail value 0";
  return v;
}

Verdict check_coherence(const std::vector<RandVar>& bets, const std::vector<Rational>& previsions, const Model& m) {
  if (bets.size() != previsions.size()) {
    throw InvalidInput("coherence check has " + std::to_string(bets.size()) + " bets but " +
                       std::to_string(previsions.size()) + " previsions");
  }
  for (const auto& d : bets) d.require_conforms(m, "bet");
  const std::size_t dim = m.dimension();

  LinearProgram prog(dim, Sense::Maximize);
  prog.add(std::vector<Rational>(dim, Rational(1)), Relation::Equal, Rational(1));
  for (std::size_t d = 0; d < bets.size(); ++d) {
    std::vector<Rational> row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = bets[d].at(c);
    prog.add(std::move(row), Relation::Equal, previsions[d]);
  }
  for (std::size_t c = 0; c < dim; ++c) prog.set_lower(c, Rational(0));
  const auto out = lp::solve(prog);

  Verdict v;
  v.condition = Condition::Coherence;
  v.problem.bets = bets;
  v.problem.previsions = previsions;
  if (const auto* opt = std::get_if<lp::Optimal>(&out)) {
    v.holds = true;
    Fap p = Fap::from_weights(m, opt->primal, Rational(1));
    auto charges = coordinate_charges(p, m);
    v.certificate = RepresentingFap{std::move(p), std::move(charges)};
    v.narrative = "coherent: E(X) = E_P(X) on the bets for the returned f.a.p. P";
    return v;
  }
  const auto& inf = expect_outcome<lp::Infeasible>(out, "check_coherence");
  std::vector<Rational> stakes(bets.size());
  for (std::size_t d = 0; d < bets.size(); ++d) stakes[d] = inf.farkas[1 + d];
  std::optional<Rational> worst;
  for (std::size_t c = 0; c < dim; ++c) {
    Rational g;
    for (std::size_t d = 0; d < bets.size(); ++d) g += stakes[d] * (bets[d].at(c) - previsions[d]);
    if (!worst || g < *worst) worst = g;
  }
  for (auto& s : stakes) s /= *worst;
  v.holds = false;
  v.certificate = SureLossBet{std::move(stakes), Rational(1)};
  v.narrative = "incoherent: the stakes win at least 1 against the previsions whatever the state";
  return v;
}

Verdict check_sup_dominates_prevision(const Model& m, const LinSpace& d, const std::vector<Rational>& previsions,
                          std::vector<std::vector<std::size_t>> events) {
  d.require_conforms(m);
  if (previsions.size() != d.size()) {
    throw InvalidInput("prevision vector has " + std::to_string(previsions.size()) + " entries for " +
                       std::to_string(d.size()) + " basis elements");
  }
  events = normalize_events(m, std::move(events));
  const std::set<std::vector<std::size_t>> family(events.begin(), events.end());
  for (const auto& a : events) {
    for (const auto& b : events) {
      std::vector<std::size_t> both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (!family.count(both)) {
        throw InvalidInput("events not closed under intersection: " + show_set(a) + " and " + show_set(b));
      }
    }
  }

  Verdict v;
  v.condition = Condition::SupDominatesPrevision;
  v.problem.previsions = previsions;
  v.problem.events = events;
  const std::size_t k = d.size();
  const std::size_t dim = m.dimension();

  for (const auto& a : events) {
    if (a.empty()) {
      v.holds = false;
      v.certificate = Witness{std::vector<Rational>(k), RandVar::constant(m, Rational(0)), {}, std::nullopt};
      v.narrative = "(7) fails: the empty event has sup = -inf, and P(empty) = 1 is impossible";
      return v;
    }
    // min s - E(X_b) with s >= X_b on A and -1 <= X_b <= 1 everywhere.
    LinearProgram prog(k + 1, Sense::Minimize);
    for (std::size_t kk = 0; kk < k; ++kk) prog.objective[kk] = -previsions[kk];
    prog.objective[k] = 1;
    for (std::size_t w : a) {
      auto row = evaluation_row(d, w, k + 1);
      for (auto& r : row) r = -r;
      row[k] = 1;
      prog.add(std::move(row), Relation::GreaterEqual, Rational(0));
    }
    for (std::size_t w = 0; w < dim; ++w) {
      auto row = evaluation_row(d, w, k + 1);
      prog.add(row, Relation::LessEqual, Rational(1));
      prog.add(std::move(row), Relation::GreaterEqual, Rational(-1));
    }
    const auto out = lp::solve(prog);
    const auto& opt = expect_outcome<lp::Optimal>(out, "check_sup_dominates_prevision");
    if (opt.value.is_negative()) {
      std::vector<Rational> b = head(opt.primal, k);
      RandVar x = d.combine(m, b);
      Rational sup_a = x.at(a.front());
      for (std::size_t w : a) sup_a = std::max(sup_a, x.at(w));
      Rational gap = sup_a - dot(b, previsions);
      v.holds = false;
      v.certificate = Witness{std::move(b), std::move(x), a, std::move(gap)};
      v.narrative = "(7) fails on event " + show_set(a) + ": sup_A X < E(X) for the returned X";
      return v;
    }
  }

  // A finite intersection-closed family contains the intersection of all its
  // members; a representation supported there has P(A) = 1 for every A.
  std::vector<std::size_t> minimal = events.front();
  for (const auto& a : events) {
    std::vector<std::size_t> both;
    std::set_intersection(minimal.begin(), minimal.end(), a.begin(), a.end(), std::back_inserter(both));
    minimal = std::move(both);
  }
  LinearProgram prog(minimal.size(), Sense::Maximize);
  prog.add(std::vector<Rational>(minimal.size(), Rational(1)), Relation::Equal, Rational(1));
  for (std::size_t kk = 0; kk < k; ++kk) {
    std::vector<Rational> row(minimal.size());
    for (std::size_t j = 0; j < minimal.size(); ++j) row[j] = d[kk].at(minimal[j]);
    prog.add(std::move(row), Relation::Equal, previsions[kk]);
  }
  for (std::size_t j = 0; j < minimal.size(); ++j) prog.set_lower(j, Rational(0));
  const auto out = lp::solve(prog);
  const auto& opt = expect_outcome<lp::Optimal>(out, "check_sup_dominates_prevision representation");
  std::vector<Rational> weights(dim);
  for (std::size_t j = 0; j < minimal.size(); ++j) weights[minimal[j]] = opt.primal[j];
  v.holds = true;
  Fap p = Fap::from_weights(m, weights, Rational(1));
  auto charges = coordinate_charges(p, m);
  v.certificate = RepresentingFap{std::move(p), std::move(charges)};
  v.narrative = "(7) holds: a f.a.p. P with P(A) = 1 on every event and E_P = E on D is supported on " +
                show_set(minimal);
  return v;
}

}  // namespace famart::checkers
