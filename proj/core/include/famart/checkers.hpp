#ifndef FAMART_CHECKERS_HPP
#define FAMART_CHECKERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "famart/fap.hpp"
#include "famart/model.hpp"
#include "famart/rational.hpp"

namespace famart::checkers {

/// Conditions in report order.
enum class Condition {
  EquivalentMartingale,   ///< (3): some Q ~ P0, c > 0 with c E_Q(X) <= ess sup(-X)
  EssSupNonNegative,      ///< (4): ess sup(X) >= 0 on L
  BoundedRatio,           ///< (5): ess sup(X) <= c* ess sup(-X)
  WeightedBoundedRatio,   ///< (5*): (5) for the family X * Y
  NoArbitrage,            ///< (6)
  SupDominatesPrevision,  ///< (7): sup_A X >= E(X)
  VanishingAtInfinity,    ///< (8): lim X|A_n = 0
  NormClosure,            ///< (10)
  Coherence,
};

inline constexpr Condition kAllConditions[] = {
    Condition::EquivalentMartingale, Condition::EssSupNonNegative, Condition::BoundedRatio,
    Condition::WeightedBoundedRatio, Condition::NoArbitrage,       Condition::SupDominatesPrevision,
    Condition::VanishingAtInfinity,  Condition::NormClosure,       Condition::Coherence,
};

/// "(3)", "(5*)", "coherence", ...
std::string_view condition_id(Condition c);
/// Accepts "(6)", "6", "5*", "coherence". Throws InvalidInput otherwise.
Condition parse_condition(std::string_view text);

// ---------------------------------------------------------------------------
// Certificates. Each one is checkable by validate() with plain arithmetic.

/// X = sum_k b_k X_k with X >= 0 on the essential support and X > 0 somewhere on it.
struct ArbitrageVector {
  std::vector<Rational> coefficients;
  RandVar x;
};

/// P with E_P = 0 on every basis element; equivalent or only absolutely continuous.
struct MartingaleFap {
  Fap fap;
  bool equivalent = false;
  std::vector<Rational> charges;  ///< P of each coordinate, must agree with fap
};

/// A positive functional E_P. For (10) it is an equivalent martingale P whose
/// open half-space U = {X : E_P(X) > 0} separates L - L_inf^+ from L_inf^+ \ {0};
/// for (3) with a given (Q, c) it is an absolutely continuous P1 with
/// E_P1 = -c E_Q on L.
struct SeparatingFunctional {
  Fap fap;
  std::string open_set;
  std::vector<Rational> charges;
};

/// Normalized dual weights of the arbitrage LP: a strictly positive pmf on the
/// essential support under which every basis element has mean zero.
struct FarkasWitness {
  std::vector<Rational> weights;  ///< one per model coordinate
};

/// Dual bound for one coordinate sigma: weights w >= 0 on the support with
/// sum_tau w_tau X(tau) = -X(sigma) on L, hence X(sigma) <= sum w whenever X >= -1.
struct CoordinateBound {
  std::size_t coordinate = 0;
  std::vector<Rational> weights;
  Rational bound;
};

/// Certifies the least constant c* of (5): every coordinate bound is at most
/// `value` and the attaining X reaches it.
struct CStarBound {
  Rational value;
  std::vector<CoordinateBound> bounds;
  std::size_t attaining_coordinate = 0;
  std::vector<Rational> attaining_coefficients;
  RandVar attaining_x;
  std::optional<Fap> qstar;  ///< martingale measure derived from the weight (5*)
};

/// Stakes c with sum_d c_d (D_d(w) - E_d) >= gain > 0 at every coordinate w.
struct SureLossBet {
  std::vector<Rational> stakes;
  Rational gain;
};

/// A violating X together with the event it is evaluated on and the amount of
/// the violation (negative). An empty event has no finite gap.
struct Witness {
  std::vector<Rational> coefficients;
  RandVar x;
  std::vector<std::size_t> event;
  std::optional<Rational> gap;
};

/// A f.a.p. representing given previsions (coherence, condition (7)).
struct RepresentingFap {
  Fap fap;
  std::vector<Rational> charges;
};

struct Trivial {};

using Certificate = std::variant<Trivial, ArbitrageVector, MartingaleFap, SeparatingFunctional, FarkasWitness,
                                 CStarBound, SureLossBet, Witness, RepresentingFap>;

std::string_view certificate_kind(const Certificate& c);

/// P{c} for every coordinate c of m.
std::vector<Rational> coordinate_charges(const Fap& p, const Model& m);

/// Inputs beyond (Model, L) that a verdict depends on.
struct Problem {
  std::optional<Fap> q;
  std::optional<Rational> c;
  std::optional<RandVar> weight;
  std::optional<std::vector<RandVar>> bets;
  std::optional<std::vector<Rational>> previsions;
  std::optional<std::vector<std::vector<std::size_t>>> events;
};

struct Verdict {
  Condition condition = Condition::NoArbitrage;
  bool holds = false;
  Certificate certificate;
  std::string narrative;
  Problem problem;
  /// Extra exact quantities (t*, c*, ...) as name/value text pairs.
  std::vector<std::pair<std::string, std::string>> stats;
};

// ---------------------------------------------------------------------------
// Decision procedures. All take conforming (Model, L) and throw InvalidInput
// on precondition violations.

Verdict check_no_arbitrage(const Model& m, const LinSpace& l);
Verdict check_acmfap(const Model& m, const LinSpace& l);
/// Maximizes the minimum charge t over martingale pmfs on the support;
/// holds iff t* > 0.
Verdict find_emfap(const Model& m, const LinSpace& l);
Verdict verify_condition3(const Model& m, const LinSpace& l, const Fap& q, const Rational& c);

struct CStar {
  std::optional<Rational> value;  ///< empty means infinite
  bool infinite() const { return !value.has_value(); }
};

CStar compute_cstar(const Model& m, const LinSpace& l);
/// Verdict form of compute_cstar: holds iff c* is finite.
Verdict check_bounded_ratio(const Model& m, const LinSpace& l);
Verdict verify_condition5star(const Model& m, const LinSpace& l, const RandVar& y);
/// Q*(A) = E_Q(Y I_A) / E_Q(Y).
Fap qstar_from_weight(const Model& m, const Fap& q, const RandVar& y);
Verdict check_condition8(const Model& m, const LinSpace& l);
Verdict check_norm_closure(const Model& m, const LinSpace& l);
/// De Finetti coherence of previsions E on bets D, over every coordinate of m.
Verdict check_coherence(const std::vector<RandVar>& bets, const std::vector<Rational>& previsions, const Model& m);
/// Condition (7) for a linear functional given by its values on the basis of d
/// and an intersection-closed family of events (coordinate sets).
Verdict check_sup_dominates_prevision(const Model& m, const LinSpace& d, const std::vector<Rational>& previsions,
                          std::vector<std::vector<std::size_t>> events);

struct DivergenceRow {
  unsigned n = 0;
  Rational total_variation;
  Rational min_likelihood_ratio;  ///< over head counts, dP0/dQ0
  Rational max_likelihood_ratio;
};

/// Exact Binomial(n, p) versus Binomial(n, 1/2) comparison per horizon.
std::vector<DivergenceRow> divergence_study(const Rational& p, const std::vector<unsigned>& horizons);

// ---------------------------------------------------------------------------
// Certificate re-validation, independent of the LP solver.

struct Validation {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that the verdict's certificate proves `holds` for its condition on
/// (m, l), using the inputs recorded in verdict.problem.
Validation validate(const Model& m, const LinSpace& l, const Verdict& verdict);

}  // namespace famart::checkers

#endif  // FAMART_CHECKERS_HPP
