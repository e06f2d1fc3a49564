#include "famart/lp.hpp"

#include <string>

#include "famart/errors.hpp"

namespace famart::lp {

void LinearProgram::validate() const {
  const std::size_t n = n_vars();
  if (bounds.size() != n) throw InvalidInput("bound list length differs from the variable count");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coefficients.size() != n) {
      throw InvalidInput("constraint " + std::to_string(i) + " has " +
                         std::to_string(constraints[i].coefficients.size()) + " coefficients, expected " +
                         std::to_string(n));
    }
  }
}

std::vector<Constraint> expanded_rows(const LinearProgram& lp) {
  std::vector<Constraint> rows = lp.constraints;
  const std::size_t n = lp.n_vars();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = lp.bounds[j];
    if (b.lower) {
      std::vector<Rational> e(n);
      e[j] = 1;
      rows.push_back({std::move(e), Relation::GreaterEqual, *b.lower});
    }
    if (b.upper) {
      std::vector<Rational> e(n);
      e[j] = 1;
      rows.push_back({std::move(e), Relation::LessEqual, *b.upper});
    }
  }
  return rows;
}

namespace {

// Sign that turns a row into "<=" orientation.
int le_orientation(Relation r) { return r == Relation::GreaterEqual ? -1 : 1; }

// Dense tableau in equality form M z = beta, z >= 0, beta >= 0. Columns are
// laid out as [x_j^+ , x_j^-]_j, then slacks, then artificials.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp), rows_(expanded_rows(lp)) { build(); }

  LpOutcome run();

 private:
  enum class Status { Optimal, Unbounded };

  void build();
  void pivot(std::size_t r, std::size_t e);
  void price(const std::vector<Rational>& cost);
  Status iterate(std::size_t& entering);
  Rational objective_value() const;
  std::vector<Rational> basis_inverse_dual() const;
  std::vector<Rational> current_x() const;

  const LinearProgram& lp_;
  std::vector<Constraint> rows_;
  std::size_t n_ = 0;      // original variables
  std::size_t cols_ = 0;   // tableau columns, rhs stored at index cols_
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;  // column forming the initial identity in row i
  std::vector<int> flip_;              // +1 / -1 applied to make rhs >= 0
  std::vector<bool> artificial_;
  std::vector<bool> forbidden_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

void Simplex::build() {
  n_ = lp_.n_vars();
  const std::size_t m = rows_.size();
  std::size_t n_slack = 0;
  for (const auto& row : rows_) n_slack += row.relation != Relation::Equal ? 1 : 0;

  // Decide which rows need an artificial before sizing the tableau.
  flip_.assign(m, 1);
  std::vector<bool> needs_art(m, false);
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    flip_[i] = rows_[i].rhs.is_negative() ? -1 : 1;
    const int slack_sign = rows_[i].relation == Relation::Equal ? 0 : le_orientation(rows_[i].relation) * flip_[i];
    needs_art[i] = slack_sign != 1;
    n_art += needs_art[i] ? 1 : 0;
  }

  cols_ = 2 * n_ + n_slack + n_art;
  t_.assign(m, std::vector<Rational>(cols_ + 1));
  basis_.assign(m, 0);
  unit_col_.assign(m, 0);
  artificial_.assign(cols_, false);
  forbidden_.assign(cols_, false);

  std::size_t next_slack = 2 * n_;
  std::size_t next_art = 2 * n_ + n_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational f(flip_[i]);
    auto& row = t_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& a = rows_[i].coefficients[j];
      if (a.is_zero()) continue;
      row[2 * j] = a * f;
      row[2 * j + 1] = -(a * f);
    }
    if (rows_[i].relation != Relation::Equal) {
      row[next_slack] = Rational(le_orientation(rows_[i].relation) * flip_[i]);
      if (!needs_art[i]) unit_col_[i] = next_slack;
      ++next_slack;
    }
    if (needs_art[i]) {
      row[next_art] = 1;
      artificial_[next_art] = true;
      unit_col_[i] = next_art;
      ++next_art;
    }
    row[cols_] = rows_[i].rhs * f;
    basis_[i] = unit_col_[i];
  }
}

void Simplex::pivot(std::size_t r, std::size_t e) {
  auto& prow = t_[r];
  const Rational inv = Rational(1) / prow[e];
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j <= cols_; ++j) {
    if (prow[j].is_zero()) continue;
    prow[j] *= inv;
    nz.push_back(j);
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i == r || t_[i][e].is_zero()) continue;
    const Rational factor = t_[i][e];
    for (std::size_t j : nz) t_[i][j] -= factor * prow[j];
  }
  if (!reduced_[e].is_zero()) {
    const Rational factor = reduced_[e];
    for (std::size_t j : nz) {
      if (j < cols_) reduced_[j] -= factor * prow[j];
    }
  }
  basis_[r] = e;
}

void Simplex::price(const std::vector<Rational>& cost) {
  cost_ = cost;
  reduced_ = cost;
  for (std::size_t r = 0; r < t_.size(); ++r) {
    const Rational& cb = cost_[basis_[r]];
    if (cb.is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!t_[r][j].is_zero()) reduced_[j] -= cb * t_[r][j];
    }
  }
}

// Bland's rule: lowest-index improving column enters; among minimum-ratio rows
// the one whose basic variable has the lowest index leaves.
Simplex::Status Simplex::iterate(std::size_t& entering) {
  for (;;) {
    std::size_t e = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!forbidden_[j] && reduced_[j].is_positive()) {
        e = j;
        break;
      }
    }
    if (e == cols_) return Status::Optimal;

    std::size_t leave = t_.size();
    Rational best_ratio;
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (!t_[r][e].is_positive()) continue;
      Rational ratio = t_[r][cols_] / t_[r][e];
      if (leave == t_.size() || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == t_.size()) {
      entering = e;
      return Status::Unbounded;
    }
    pivot(leave, e);
  }
}

Rational Simplex::objective_value() const {
  Rational v;
  for (std::size_t r = 0; r < t_.size(); ++r) v += cost_[basis_[r]] * t_[r][cols_];
  return v;
}

// y = c_B^T B^{-1}, read off the columns that formed the initial identity.
std::vector<Rational> Simplex::basis_inverse_dual() const {
  std::vector<Rational> y(t_.size());
  for (std::size_t i = 0; i < t_.size(); ++i) {
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (!cb.is_zero()) y[i] += cb * t_[r][unit_col_[i]];
    }
  }
  return y;
}

std::vector<Rational> Simplex::current_x() const {
  std::vector<Rational> z(cols_);
  for (std::size_t r = 0; r < t_.size(); ++r) z[basis_[r]] = t_[r][cols_];
  std::vector<Rational> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = z[2 * j] - z[2 * j + 1];
  return x;
}

LpOutcome Simplex::run() {
  const std::size_t m = rows_.size();
  std::size_t entering = 0;

  bool any_artificial = false;
  for (std::size_t j = 0; j < cols_; ++j) any_artificial = any_artificial || artificial_[j];

  if (any_artificial) {
    std::vector<Rational> phase1(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (artificial_[j]) phase1[j] = -1;
    }
    price(phase1);
    iterate(entering);  // bounded above by zero
    if (objective_value().is_negative()) {
      // Dual of phase one: y^T M >= 0 on real columns, y^T beta < 0.
      const auto y = basis_inverse_dual();
      std::vector<Rational> farkas(m);
      Rational total;
      for (std::size_t i = 0; i < m; ++i) {
        farkas[i] = y[i] * Rational(flip_[i] * le_orientation(rows_[i].relation));
        total += farkas[i] * Rational(le_orientation(rows_[i].relation)) * rows_[i].rhs;
      }
      const Rational scale = Rational(-1) / total;
      for (auto& f : farkas) f *= scale;
      return Infeasible{std::move(farkas)};
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and keep their artificial at zero.
    for (std::size_t r = 0; r < m; ++r) {
      if (!artificial_[basis_[r]]) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!artificial_[j] && !t_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
    for (std::size_t j = 0; j < cols_; ++j) forbidden_[j] = artificial_[j];
  }

  const Rational direction(lp_.sense == Sense::Maximize ? 1 : -1);
  std::vector<Rational> phase2(cols_);
  for (std::size_t j = 0; j < n_; ++j) {
    phase2[2 * j] = lp_.objective[j] * direction;
    phase2[2 * j + 1] = -phase2[2 * j];
  }
  price(phase2);

  if (iterate(entering) == Status::Unbounded) {
    std::vector<Rational> dz(cols_);
    dz[entering] = 1;
    for (std::size_t r = 0; r < m; ++r) dz[basis_[r]] = -t_[r][entering];
    std::vector<Rational> ray(n_);
    for (std::size_t j = 0; j < n_; ++j) ray[j] = dz[2 * j] - dz[2 * j + 1];
    return Unbounded{current_x(), std::move(ray)};
  }

  Optimal opt;
  opt.primal = current_x();
  opt.value = dot(lp_.objective, opt.primal);
  const auto y = basis_inverse_dual();
  opt.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    opt.dual[i] = y[i] * Rational(flip_[i] * le_orientation(rows_[i].relation));
  }
  return opt;
}

bool satisfies(const Constraint& row, const std::vector<Rational>& x) {
  const Rational lhs = dot(row.coefficients, x);
  switch (row.relation) {
    case Relation::LessEqual: return lhs <= row.rhs;
    case Relation::Equal: return lhs == row.rhs;
    case Relation::GreaterEqual: return lhs >= row.rhs;
  }
  return false;
}

bool feasible(const std::vector<Constraint>& rows, const std::vector<Rational>& x) {
  for (const auto& row : rows) {
    if (!satisfies(row, x)) return false;
  }
  return true;
}

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  lp.validate();
  return Simplex(lp).run();
}

bool verify_outcome(const LinearProgram& lp, const LpOutcome& out) {
  try {
    lp.validate();
  } catch (const InvalidInput&) {
    return false;
  }
  const auto rows = expanded_rows(lp);
  const std::size_t n = lp.n_vars();
  const std::size_t m = rows.size();

  if (const auto* opt = std::get_if<Optimal>(&out)) {
    if (opt->primal.size() != n || opt->dual.size() != m) return false;
    if (!feasible(rows, opt->primal)) return false;
    if (dot(lp.objective, opt->primal) != opt->value) return false;
    const int sense = lp.sense == Sense::Maximize ? 1 : -1;
    std::vector<Rational> combo(n);
    Rational bound;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].relation != Relation::Equal && opt->dual[i].is_negative()) return false;
      const Rational w = opt->dual[i] * Rational(sense * le_orientation(rows[i].relation));
      for (std::size_t j = 0; j < n; ++j) combo[j] += w * rows[i].coefficients[j];
      bound += w * rows[i].rhs;
    }
    return combo == lp.objective && bound == opt->value;
  }

  if (const auto* inf = std::get_if<Infeasible>(&out)) {
    if (inf->farkas.size() != m) return false;
    std::vector<Rational> combo(n);
    Rational rhs;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].relation != Relation::Equal && inf->farkas[i].is_negative()) return false;
      const Rational w = inf->farkas[i] * Rational(le_orientation(rows[i].relation));
      for (std::size_t j = 0; j < n; ++j) combo[j] += w * rows[i].coefficients[j];
      rhs += w * rows[i].rhs;
    }
    for (const auto& c : combo) {
      if (!c.is_zero()) return false;
    }
    return rhs.is_negative();
  }

  const auto& unb = std::get<Unbounded>(out);
  if (unb.point.size() != n || unb.ray.size() != n) return false;
  if (!feasible(rows, unb.point)) return false;
  for (const auto& row : rows) {
    const Rational d = dot(row.coefficients, unb.ray);
    if (row.relation == Relation::LessEqual && d.is_positive()) return false;
    if (row.relation == Relation::GreaterEqual && d.is_negative()) return false;
    if (row.relation == Relation::Equal && !d.is_zero()) return false;
  }
  const Rational gain = dot(lp.objective, unb.ray);
  return lp.sense == Sense::Maximize ? gain.is_positive() : gain.is_negative();
}

}  // namespace famart::lp
