#ifndef FAMART_SPACES_HPP
#define FAMART_SPACES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "famart/fap.hpp"
#include "famart/model.hpp"
#include "famart/rational.hpp"

namespace famart::spaces {

/// A partition of the model coordinates (explicit states plus the tail point,
/// numbered as in Model) into blocks.
using Partition = std::vector<std::vector<std::size_t>>;

/// One partition per time index t = 0..T, each refining the previous one;
/// the time-0 partition is the trivial one.
class Filtration {
 public:
  Filtration() = default;
  explicit Filtration(std::vector<Partition> partitions) : partitions_(std::move(partitions)) {}

  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t horizon() const { return partitions_.empty() ? 0 : partitions_.size() - 1; }

  /// Throws InvalidInput when a partition does not cover the coordinates
  /// exactly once, the time-0 partition is not trivial, or refinement fails.
  void validate(const Model& m) const;

  friend bool operator==(const Filtration&, const Filtration&) = default;

 private:
  std::vector<Partition> partitions_;
};

/// S_0..S_T, one random variable per time index.
using AdaptedProcess = std::vector<RandVar>;

struct FilteredModel {
  Model model;
  Filtration filtration;
  AdaptedProcess process;
};

/// Basis {I_B (S_{t+1} - S_t) : t < T, B a block at time t}, identically zero
/// elements omitted. Throws InvalidInput naming (t, block, states) when S is
/// not adapted.
LinSpace trading_space(const Model& m, const Filtration& f, const AdaptedProcess& s);

/// Coin-tossing model with 2^n path states, P0(Y = +1) = p, S the partial sums
/// and F the path filtration. Paths are ordered lexicographically with +1
/// first and Y_1 most significant. Requires 0 < p < 1/2 and n >= 1.
FilteredModel example_dmw(const Rational& p, unsigned n);

struct BpExample {
  FilteredModel filtered;
  Fap q_ref;  ///< Q{w} = 1/w - 1/(w+1), residual 1/(N+1) on the tail
};

/// States 1..N with P0{w} = 2^-w plus a tail point of mass 2^-N. S_0 = 1 and
/// S_n = 2^-n on {n+1, ...}, (w^2 + 2w + 2) / 2^w on {1..n}, for n = 0..k+1.
/// Requires k + 1 < N.
BpExample example_bp(unsigned n_states, unsigned k);

struct HarmonicExample {
  Model model;
  LinSpace space;
};

/// P0{w} = 2^-w on states 1..N plus the tail; L spanned by X(w) = 1/w with
/// tail value 0. Requires N >= 2.
HarmonicExample example_harmonic(unsigned n_states);

struct FiniteExample {
  Model model;
  LinSpace space;
};

/// Reproducible random finite model: at most 6 states (some possibly null),
/// at most 4 non-zero basis elements with small rational entries, no tail.
FiniteExample example_finite_random(std::uint64_t seed);

/// Binomial(n, p) pmf over the number of +1 steps, exact.
std::vector<Rational> binomial_pmf(unsigned n, const Rational& p);

}  // namespace famart::spaces

#endif  // FAMART_SPACES_HPP
