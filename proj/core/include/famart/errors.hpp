#ifndef FAMART_ERRORS_HPP
#define FAMART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace famart {

/// Raised when an input violates a documented precondition or invariant
/// (dimension mismatch, masses not summing to one, malformed rationals...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace famart

#endif  // FAMART_ERRORS_HPP
