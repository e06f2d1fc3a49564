#ifndef FAMART_FAP_HPP
#define FAMART_FAP_HPP

#include <optional>
#include <vector>

#include "famart/model.hpp"
#include "famart/rational.hpp"

namespace famart {

/// Finitely additive probability P = alpha * P1 + (1 - alpha) * Q where P1 is
/// the tail functional (the pure part, charging every tail set {n, n+1, ...})
/// and Q is a countably additive pmf over the explicit states plus a residual
/// mass on the tail region.
class Fap {
 public:
  /// Validates alpha in [0,1], non-negative masses summing to one, and that a
  /// positive alpha comes with a tail. Throws InvalidInput.
  static Fap create(Rational alpha, std::vector<Rational> ca_mass, std::optional<Rational> ca_tail);
  /// Countably additive pmf (alpha = 0).
  static Fap countably_additive(std::vector<Rational> mass, std::optional<Rational> tail);
  /// Point mass on a coordinate of m; the tail coordinate yields the pure tail functional.
  static Fap point_mass(const Model& m, std::size_t coordinate);

  /// Builds a Fap from non-negative coordinate weights summing to one. The
  /// tail weight w is split as alpha = w * pure_share, the rest of it stays in
  /// the countably additive residual.
  static Fap from_weights(const Model& m, const std::vector<Rational>& weights,
                          const Rational& pure_share);

  const Rational& alpha() const { return alpha_; }
  const std::vector<Rational>& ca_mass() const { return ca_mass_; }
  const std::optional<Rational>& ca_tail() const { return ca_tail_; }

  /// Total charge of an explicit state: (1 - alpha) * q_i.
  Rational state_charge(std::size_t i) const;
  /// Total charge of the tail region: alpha + (1 - alpha) * q_tail.
  Rational tail_charge() const;
  /// Charge of a model coordinate (explicit state or tail).
  Rational charge(std::size_t coordinate) const;

  bool conforms(const Model& m) const;
  void require_conforms(const Model& m) const;

  friend bool operator==(const Fap&, const Fap&) = default;

 private:
  Fap(Rational alpha, std::vector<Rational> mass, std::optional<Rational> tail)
      : alpha_(std::move(alpha)), ca_mass_(std::move(mass)), ca_tail_(std::move(tail)) {}

  Rational alpha_;
  std::vector<Rational> ca_mass_;
  std::optional<Rational> ca_tail_;
};

struct YosidaHewitt {
  Rational alpha;
  std::optional<Fap> pure;  ///< alpha = 1 component, absent when alpha = 0
  std::optional<Fap> ca;    ///< alpha = 0 component, absent when alpha = 1
};

YosidaHewitt yh_decompose(const Fap& p);

/// P assigns zero to every explicit state, i.e. alpha = 1. The partition into
/// singletons plus tail sets then consists of P-null sets.
bool is_pure(const Fap& p, const Model& m);
bool is_abs_continuous(const Fap& p, const Model& m);
/// Same null sets as P0 at truncation level: positive charge on every charged
/// coordinate, zero on null coordinates, and alpha < 1.
bool is_equivalent(const Fap& p, const Model& m);

}  // namespace famart

#endif  // FAMART_FAP_HPP
