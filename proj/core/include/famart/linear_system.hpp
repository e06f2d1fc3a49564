#ifndef FAMART_LINEAR_SYSTEM_HPP
#define FAMART_LINEAR_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "famart/rational.hpp"

namespace famart::lp {

/// Solution set of A x = b computed by exact Gauss-Jordan elimination.
struct AffineSolution {
  std::optional<std::vector<Rational>> particular;  ///< empty when inconsistent
  std::size_t rank = 0;
  std::size_t nullity = 0;  ///< dimension of the solution set when consistent
};

AffineSolution solve_linear_system(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace famart::lp

#endif  // FAMART_LINEAR_SYSTEM_HPP
