#ifndef FAMART_LP_HPP
#define FAMART_LP_HPP

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "famart/rational.hpp"

namespace famart::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Maximize, Minimize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

struct Bounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// Linear program over free variables unless bounds are set.
///
/// Certificates refer to the *expanded rows*: the constraints in insertion
/// order followed by one row per finite bound (for each variable, its lower
/// bound then its upper bound).
struct LinearProgram {
  explicit LinearProgram(std::size_t n_vars = 0, Sense s = Sense::Maximize)
      : sense(s), objective(n_vars), bounds(n_vars) {}

  std::size_t n_vars() const { return objective.size(); }

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
  void set_lower(std::size_t j, Rational v) { bounds.at(j).lower = std::move(v); }
  void set_upper(std::size_t j, Rational v) { bounds.at(j).upper = std::move(v); }

  /// Throws InvalidInput when a constraint or the bound list has the wrong length.
  void validate() const;

  Sense sense;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
  std::vector<Bounds> bounds;
};

/// Constraints followed by bound rows, see LinearProgram.
std::vector<Constraint> expanded_rows(const LinearProgram& lp);

/// Optimal solution with a dual vector y >= 0 on inequality rows (equality
/// rows are free). Row i enters with sign s * o_i, where s = +1 to maximize
/// and -1 to minimize and o_i = -1 for ">=" rows, +1 otherwise; then
/// sum_i y_i s o_i row_i reproduces the objective and sum_i y_i s o_i rhs_i == value.
struct Optimal {
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
};

/// Farkas weights y >= 0 on inequality rows, each row oriented as "<=". The
/// weighted sum of the rows reads 0 <= -1.
struct Infeasible {
  std::vector<Rational> farkas;
};

/// Feasible point plus a recession direction that strictly improves the objective.
struct Unbounded {
  std::vector<Rational> point;
  std::vector<Rational> ray;
};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Two-phase primal simplex in exact arithmetic with Bland's rule.
LpOutcome solve(const LinearProgram& lp);

/// Checks the certificate embedded in an outcome against lp. Uses only row
/// evaluations, never the solver.
bool verify_outcome(const LinearProgram& lp, const LpOutcome& out);

}  // namespace famart::lp

#endif  // FAMART_LP_HPP
