#ifndef FAMART_MODEL_HPP
#define FAMART_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "famart/rational.hpp"

namespace famart {

class Fap;

/// Truncated sample space: N explicit states plus an optional ideal tail point.
///
/// The tail point stands for the decreasing chain of sets {N+1, N+2, ...} of a
/// countable space; an eventually constant random variable takes its limit
/// value there. Coordinates are numbered 0..N-1 for the explicit states and N
/// for the tail point (when present).
class Model {
 public:
  /// Validates masses (non-negative, summing to one with the tail residual).
  /// Throws InvalidInput on violation.
  static Model create(std::vector<Rational> p0_mass, std::optional<Rational> p0_tail);

  std::size_t n_states() const { return p0_mass_.size(); }
  bool has_tail() const { return p0_tail_.has_value(); }
  const std::vector<Rational>& p0_mass() const { return p0_mass_; }
  const std::optional<Rational>& p0_tail() const { return p0_tail_; }

  /// Number of coordinates: explicit states plus the tail point if present.
  std::size_t dimension() const { return n_states() + (has_tail() ? 1 : 0); }
  std::size_t tail_coordinate() const { return n_states(); }
  bool is_tail(std::size_t coordinate) const { return has_tail() && coordinate == n_states(); }

  /// P0 mass of a coordinate (explicit mass, or the tail residual).
  const Rational& mass(std::size_t coordinate) const;
  bool charged(std::size_t coordinate) const { return mass(coordinate).is_positive(); }

  /// The essential support: charged coordinates in increasing order. The tail
  /// point belongs to it iff p0_tail > 0.
  std::vector<std::size_t> support() const;
  bool full_support() const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Model(std::vector<Rational> mass, std::optional<Rational> tail)
      : p0_mass_(std::move(mass)), p0_tail_(std::move(tail)) {}

  std::vector<Rational> p0_mass_;
  std::optional<Rational> p0_tail_;
};

/// Bounded, eventually constant random variable: explicit values plus the
/// value taken beyond the truncation (the tail value).
class RandVar {
 public:
  RandVar() = default;
  explicit RandVar(std::vector<Rational> values, std::optional<Rational> tail = std::nullopt)
      : values_(std::move(values)), tail_(std::move(tail)) {}

  static RandVar constant(const Model& m, const Rational& c);
  /// Indicator of a single coordinate (explicit state or the tail point).
  static RandVar indicator(const Model& m, std::size_t coordinate);

  const std::vector<Rational>& values() const { return values_; }
  const std::optional<Rational>& tail() const { return tail_; }
  std::size_t size() const { return values_.size(); }

  /// Value at a model coordinate; coordinate N is the tail value.
  const Rational& at(std::size_t coordinate) const;

  bool conforms(const Model& m) const;
  /// Throws InvalidInput describing the mismatch when !conforms(m).
  void require_conforms(const Model& m, const char* what = "random variable") const;

  bool is_zero() const;

  RandVar operator-() const;
  RandVar& operator+=(const RandVar& o);
  RandVar& operator-=(const RandVar& o);
  RandVar& operator*=(const Rational& a);
  friend RandVar operator+(RandVar a, const RandVar& b) { return a += b; }
  friend RandVar operator-(RandVar a, const RandVar& b) { return a -= b; }
  friend RandVar operator*(const Rational& a, RandVar x) { return x *= a; }

  /// Pointwise product, tail values included.
  friend RandVar product(const RandVar& a, const RandVar& b);

  friend bool operator==(const RandVar&, const RandVar&) = default;

 private:
  std::vector<Rational> values_;
  std::optional<Rational> tail_;
};

/// Finite generating list of a trading space L. Elements need not be linearly
/// independent; an empty list spans L = {0}.
class LinSpace {
 public:
  LinSpace() = default;
  explicit LinSpace(std::vector<RandVar> basis) : basis_(std::move(basis)) {}

  const std::vector<RandVar>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const RandVar& operator[](std::size_t k) const { return basis_[k]; }

  void require_conforms(const Model& m) const;

  /// X_b = sum_k b_k X_k as a random variable on m.
  RandVar combine(const Model& m, std::span<const Rational> coefficients) const;
  /// X_b evaluated at one coordinate.
  Rational combine_at(std::span<const Rational> coefficients, std::size_t coordinate) const;

  friend bool operator==(const LinSpace&, const LinSpace&) = default;

 private:
  std::vector<RandVar> basis_;
};

/// inf{a : P0(X > a) = 0}: the maximum over charged coordinates.
Rational ess_sup(const RandVar& x, const Model& m);
/// Minimum over charged coordinates, i.e. -ess_sup(-X).
Rational ess_inf(const RandVar& x, const Model& m);
/// max{ess_sup(X), ess_sup(-X)}.
Rational sup_norm(const RandVar& x, const Model& m);

/// Integral of an eventually constant X against a finitely additive P in
/// Yosida-Hewitt form: alpha * tail(X) + (1 - alpha) * E_Q(X).
Rational expect(const Fap& p, const RandVar& x);

}  // namespace famart

#endif  // FAMART_MODEL_HPP
