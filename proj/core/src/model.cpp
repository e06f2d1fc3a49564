#include "famart/model.hpp"

#include <algorithm>
#include <sstream>

#include "famart/errors.hpp"
#include "famart/fap.hpp"

namespace famart {

Model Model::create(std::vector<Rational> p0_mass, std::optional<Rational> p0_tail) {
  if (p0_mass.empty()) throw InvalidInput("model needs at least one explicit state");
  Rational total;
  for (std::size_t i = 0; i < p0_mass.size(); ++i) {
    if (p0_mass[i].is_negative()) {
      throw InvalidInput("p0 mass of state " + std::to_string(i) + " is negative");
    }
    total += p0_mass[i];
  }
  if (p0_tail) {
    if (p0_tail->is_negative()) throw InvalidInput("p0 tail residual is negative");
    total += *p0_tail;
  }
  if (total != Rational(1)) {
    throw InvalidInput("p0 masses sum to " + total.str() + ", expected 1/1");
  }
  return Model(std::move(p0_mass), std::move(p0_tail));
}

const Rational& Model::mass(std::size_t coordinate) const {
  if (coordinate < n_states()) return p0_mass_[coordinate];
  if (is_tail(coordinate)) return *p0_tail_;
  throw InvalidInput("coordinate " + std::to_string(coordinate) + " outside the model");
}

std::vector<std::size_t> Model::support() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dimension(); ++c) {
    if (charged(c)) out.push_back(c);
  }
  return out;
}

bool Model::full_support() const { return support().size() == dimension(); }

RandVar RandVar::constant(const Model& m, const Rational& c) {
  std::optional<Rational> tail;
  if (m.has_tail()) tail = c;
  return RandVar(std::vector<Rational>(m.n_states(), c), tail);
}

RandVar RandVar::indicator(const Model& m, std::size_t coordinate) {
  RandVar x = constant(m, Rational(0));
  if (coordinate < m.n_states()) {
    x.values_[coordinate] = 1;
  } else if (m.is_tail(coordinate)) {
    x.tail_ = Rational(1);
  } else {
    throw InvalidInput("indicator coordinate " + std::to_string(coordinate) + " outside the model");
  }
  return x;
}

const Rational& RandVar::at(std::size_t coordinate) const {
  if (coordinate < values_.size()) return values_[coordinate];
  if (coordinate == values_.size() && tail_) return *tail_;
  throw InvalidInput("coordinate " + std::to_string(coordinate) + " outside the random variable");
}

bool RandVar::conforms(const Model& m) const {
  return values_.size() == m.n_states() && tail_.has_value() == m.has_tail();
}

void RandVar::require_conforms(const Model& m, const char* what) const {
  if (values_.size() != m.n_states()) {
    std::ostringstream os;
    os << what << " has " << values_.size() << " values, model has " << m.n_states() << " states";
    throw InvalidInput(os.str());
  }
  if (tail_.has_value() != m.has_tail()) {
    throw InvalidInput(std::string(what) +
                       (m.has_tail() ? " lacks a tail value on a tail model"
                                     : " carries a tail value on a model without tail"));
  }
}

bool RandVar::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); }) &&
         (!tail_ || tail_->is_zero());
}

RandVar RandVar::operator-() const {
  RandVar out = *this;
  out *= Rational(-1);
  return out;
}

namespace {

void require_same_shape(const RandVar& a, const RandVar& b) {
  if (a.size() != b.size() || a.tail().has_value() != b.tail().has_value()) {
    throw InvalidInput("random variables of different shape combined");
  }
}

}  // namespace

RandVar& RandVar::operator+=(const RandVar& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  if (tail_) *tail_ += *o.tail_;
  return *this;
}

RandVar& RandVar::operator-=(const RandVar& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  if (tail_) *tail_ -= *o.tail_;
  return *this;
}

RandVar& RandVar::operator*=(const Rational& a) {
  for (auto& v : values_) v *= a;
  if (tail_) *tail_ *= a;
  return *this;
}

RandVar product(const RandVar& a, const RandVar& b) {
  require_same_shape(a, b);
  RandVar out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
  if (out.tail_) *out.tail_ *= *b.tail_;
  return out;
}

void LinSpace::require_conforms(const Model& m) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::string what = "basis element " + std::to_string(k);
    basis_[k].require_conforms(m, what.c_str());
  }
}

RandVar LinSpace::combine(const Model& m, std::span<const Rational> coefficients) const {
  if (coefficients.size() != basis_.size()) {
    throw InvalidInput("coefficient vector length " + std::to_string(coefficients.size()) +
                       " does not match basis size " + std::to_string(basis_.size()));
  }
  RandVar x = RandVar::constant(m, Rational(0));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (coefficients[k].is_zero()) continue;
    x += coefficients[k] * basis_[k];
  }
  return x;
}

Rational LinSpace::combine_at(std::span<const Rational> coefficients, std::size_t coordinate) const {
  Rational v;
  for (std::size_t k = 0; k < basis_.size(); ++k) v += coefficients[k] * basis_[k].at(coordinate);
  return v;
}

Rational ess_sup(const RandVar& x, const Model& m) {
  x.require_conforms(m);
  std::optional<Rational> best;
  for (std::size_t c = 0; c < m.dimension(); ++c) {
    if (!m.charged(c)) continue;
    if (!best || x.at(c) > *best) best = x.at(c);
  }
  // Model invariant: total mass one, so the support is never empty.
  return *best;
}

Rational ess_inf(const RandVar& x, const Model& m) { return -ess_sup(-x, m); }

Rational sup_norm(const RandVar& x, const Model& m) {
  return std::max(ess_sup(x, m), ess_sup(-x, m));
}

Rational expect(const Fap& p, const RandVar& x) {
  if (x.size() != p.ca_mass().size()) {
    throw InvalidInput("random variable and f.a.p. live on models of different size");
  }
  if (p.ca_tail() && !x.tail()) throw InvalidInput("random variable lacks a tail value on a tail model");
  if (!p.ca_tail() && x.tail()) throw InvalidInput("random variable carries a tail value on a model without tail");
  Rational ca = dot(p.ca_mass(), x.values());
  if (p.ca_tail()) ca += *p.ca_tail() * *x.tail();
  Rational out = (Rational(1) - p.alpha()) * ca;
  if (!p.alpha().is_zero()) out += p.alpha() * *x.tail();
  return out;
}

}  // namespace famart
