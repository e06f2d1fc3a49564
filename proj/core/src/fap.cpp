#include "famart/fap.hpp"

#include "famart/errors.hpp"

namespace famart {

Fap Fap::create(Rational alpha, std::vector<Rational> ca_mass, std::optional<Rational> ca_tail) {
  if (alpha.is_negative() || alpha > Rational(1)) {
    throw InvalidInput("f.a.p. alpha " + alpha.str() + " outside [0,1]");
  }
  if (alpha.is_positive() && !ca_tail) {
    throw InvalidInput("f.a.p. with a pure part needs a tail point");
  }
  Rational total;
  for (std::size_t i = 0; i < ca_mass.size(); ++i) {
    if (ca_mass[i].is_negative()) {
      throw InvalidInput("f.a.p. mass of state " + std::to_string(i) + " is negative");
    }
    total += ca_mass[i];
  }
  if (ca_tail) {
    if (ca_tail->is_negative()) throw InvalidInput("f.a.p. tail residual is negative");
    total += *ca_tail;
  }
  if (total != Rational(1)) {
    throw InvalidInput("f.a.p. countably additive part sums to " + total.str() + ", expected 1/1");
  }
  return Fap(std::move(alpha), std::move(ca_mass), std::move(ca_tail));
}

Fap Fap::countably_additive(std::vector<Rational> mass, std::optional<Rational> tail) {
  return create(Rational(0), std::move(mass), std::move(tail));
}

Fap Fap::point_mass(const Model& m, std::size_t coordinate) {
  std::vector<Rational> w(m.dimension());
  w.at(coordinate) = 1;
  return from_weights(m, w, Rational(1));
}

Fap Fap::from_weights(const Model& m, const std::vector<Rational>& weights, const Rational& pure_share) {
  if (weights.size() != m.dimension()) {
    throw InvalidInput("weight vector length does not match the model dimension");
  }
  std::vector<Rational> mass(weights.begin(), weights.begin() + static_cast<std::ptrdiff_t>(m.n_states()));
  if (!m.has_tail()) return create(Rational(0), std::move(mass), std::nullopt);

  const Rational& w_tail = weights[m.tail_coordinate()];
  Rational alpha = w_tail * pure_share;
  if (alpha == Rational(1)) {
    return create(std::move(alpha), std::vector<Rational>(m.n_states()), Rational(1));
  }
  const Rational scale = Rational(1) - alpha;
  for (auto& q : mass) q /= scale;
  return create(alpha, std::move(mass), (w_tail - alpha) / scale);
}

Rational Fap::state_charge(std::size_t i) const { return (Rational(1) - alpha_) * ca_mass_.at(i); }

Rational Fap::tail_charge() const {
  if (!ca_tail_) return Rational(0);
  return alpha_ + (Rational(1) - alpha_) * *ca_tail_;
}

Rational Fap::charge(std::size_t coordinate) const {
  if (coordinate < ca_mass_.size()) return state_charge(coordinate);
  if (ca_tail_ && coordinate == ca_mass_.size()) return tail_charge();
  throw InvalidInput("coordinate " + std::to_string(coordinate) + " outside the f.a.p.");
}

bool Fap::conforms(const Model& m) const {
  return ca_mass_.size() == m.n_states() && ca_tail_.has_value() == m.has_tail();
}

void Fap::require_conforms(const Model& m) const {
  if (!conforms(m)) {
    throw InvalidInput("f.a.p. with " + std::to_string(ca_mass_.size()) + " states" +
                       (ca_tail_ ? " and tail" : "") + " does not match model with " +
                       std::to_string(m.n_states()) + " states" + (m.has_tail() ? " and tail" : ""));
  }
}

YosidaHewitt yh_decompose(const Fap& p) {
  YosidaHewitt out{p.alpha(), std::nullopt, std::nullopt};
  if (p.alpha().is_positive()) out.pure = Fap::create(Rational(1), p.ca_mass(), p.ca_tail());
  if (p.alpha() < Rational(1)) out.ca = Fap::create(Rational(0), p.ca_mass(), p.ca_tail());
  return out;
}

bool is_pure(const Fap& p, const Model& m) {
  p.require_conforms(m);
  return p.alpha() == Rational(1);
}

bool is_abs_continuous(const Fap& p, const Model& m) {
  p.require_conforms(m);
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    if (!m.charged(c) && !p.charge(c).is_zero()) return false;
  }
  return true;
}

bool is_equivalent(const Fap& p, const Model& m) {
  if (!is_abs_continuous(p, m)) return false;
  if (p.alpha() >= Rational(1)) return false;
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    if (m.charged(c) && !p.charge(c).is_positive()) return false;
  }
  return true;
}

}  // namespace famart
