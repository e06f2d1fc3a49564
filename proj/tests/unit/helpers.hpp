#ifndef FAMART_TESTS_HELPERS_HPP
#define FAMART_TESTS_HELPERS_HPP

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "famart/model.hpp"
#include "famart/rational.hpp"

namespace famart::test {

inline Rational R(const char* s) { return Rational::parse(s); }

inline std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(R(x));
  return out;
}

inline RandVar X(std::initializer_list<const char*> xs, std::optional<const char*> tail = std::nullopt) {
  return RandVar(Rs(xs), tail ? std::optional<Rational>(R(*tail)) : std::nullopt);
}

// small random rationals in [-bound, bound] with denominators up to 6
inline Rational random_rational(std::mt19937_64& rng, int bound = 3) {
  const int d = std::uniform_int_distribution<int>(1, 6)(rng);
  const int n = std::uniform_int_distribution<int>(-bound * d, bound * d)(rng);
  return Rational(static_cast<long>(n), static_cast<long>(d));
}

// random pmf of length n, every entry positive unless zeros is set
inline std::vector<Rational> random_pmf(std::mt19937_64& rng, std::size_t n, bool zeros = false) {
  std::uniform_int_distribution<int> w(zeros ? 0 : 1, 5);
  std::vector<Rational> out(n);
  Rational total;
  for (auto& x : out) {
    x = Rational(w(rng));
    total += x;
  }
  if (total.is_zero()) {
    out[0] = Rational(1);
    total = Rational(1);
  }
  for (auto& x : out) x /= total;
  return out;
}

// scratch directory removed on scope exit
struct TempDir {
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = std::filesystem::temp_directory_path() / ("famart-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::filesystem::path path;
};

}  // namespace famart::test

#endif  // FAMART_TESTS_HELPERS_HPP
