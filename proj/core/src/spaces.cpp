#include "famart/spaces.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "famart/errors.hpp"

namespace famart::spaces {

void Filtration::validate(const Model& m) const {
  const std::size_t dim = m.dimension();
  if (partitions_.empty()) throw InvalidInput("filtration needs at least the time-0 partition");

  std::vector<std::vector<std::size_t>> block_of(partitions_.size(), std::vector<std::size_t>(dim));
  for (std::size_t t = 0; t < partitions_.size(); ++t) {
    std::vector<int> seen(dim, 0);
    for (std::size_t b = 0; b < partitions_[t].size(); ++b) {
      if (partitions_[t][b].empty()) {
        throw InvalidInput("time " + std::to_string(t) + " partition has an empty block");
      }
      for (std::size_t c : partitions_[t][b]) {
        if (c >= dim) {
          throw InvalidInput("time " + std::to_string(t) + " partition names coordinate " +
                             std::to_string(c) + " outside the model");
        }
        ++seen[c];
        block_of[t][c] = b;
      }
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (seen[c] != 1) {
        throw InvalidInput("time " + std::to_string(t) + " partition covers coordinate " +
                           std::to_string(c) + " " + std::to_string(seen[c]) + " times");
      }
    }
  }
  if (partitions_[0].size() != 1) throw InvalidInput("time-0 partition must be the trivial one");

  for (std::size_t t = 1; t < partitions_.size(); ++t) {
    for (const auto& block : partitions_[t]) {
      const std::size_t parent = block_of[t - 1][block.front()];
      for (std::size_t c : block) {
        if (block_of[t - 1][c] != parent) {
          throw InvalidInput("time " + std::to_string(t) + " partition does not refine time " +
                             std::to_string(t - 1) + " (coordinates " + std::to_string(block.front()) +
                             " and " + std::to_string(c) + ")");
        }
      }
    }
  }
}

LinSpace trading_space(const Model& m, const Filtration& f, const AdaptedProcess& s) {
  f.validate(m);
  if (s.size() != f.partitions().size()) {
    throw InvalidInput("process has " + std::to_string(s.size()) + " time points, filtration has " +
                       std::to_string(f.partitions().size()));
  }
  for (std::size_t t = 0; t < s.size(); ++t) {
    const std::string what = "process at time " + std::to_string(t);
    s[t].require_conforms(m, what.c_str());
    for (std::size_t b = 0; b < f.partitions()[t].size(); ++b) {
      const auto& block = f.partitions()[t][b];
      for (std::size_t c : block) {
        if (s[t].at(c) != s[t].at(block.front())) {
          std::ostringstream os;
          os << "process not adapted: time " << t << ", block " << b << ", states " << block.front()
             << " and " << c << " carry " << s[t].at(block.front()) << " and " << s[t].at(c);
          throw InvalidInput(os.str());
        }
      }
    }
  }

  std::vector<RandVar> basis;
  for (std::size_t t = 0; t + 1 < s.size(); ++t) {
    const RandVar increment = s[t + 1] - s[t];
    for (const auto& block : f.partitions()[t]) {
      RandVar x = RandVar::constant(m, Rational(0));
      std::vector<Rational> values = x.values();
      std::optional<Rational> tail = x.tail();
      for (std::size_t c : block) {
        if (m.is_tail(c)) {
          tail = increment.at(c);
        } else {
          values[c] = increment.at(c);
        }
      }
      RandVar element(std::move(values), std::move(tail));
      if (!element.is_zero()) basis.push_back(std::move(element));
    }
  }
  return LinSpace(std::move(basis));
}

FilteredModel example_dmw(const Rational& p, unsigned n) {
  if (!p.is_positive() || p >= Rational(1, 2)) {
    throw InvalidInput("coin bias p = " + p.str() + " must satisfy 0 < p < 1/2");
  }
  if (n == 0) throw InvalidInput("horizon must be at least 1");
  if (n > 20) throw InvalidInput("path-state horizon above 20 is not supported; use binomial_pmf");

  const std::size_t paths = std::size_t{1} << n;
  const Rational q = Rational(1) - p;
  std::vector<Rational> mass(paths);
  for (std::size_t i = 0; i < paths; ++i) {
    const unsigned downs = static_cast<unsigned>(std::popcount(i));
    mass[i] = pow(p, n - downs) * pow(q, downs);
  }
  Model model = Model::create(std::move(mass), std::nullopt);

  std::vector<Partition> partitions;
  AdaptedProcess process;
  for (unsigned t = 0; t <= n; ++t) {
    Partition blocks(std::size_t{1} << t);
    std::vector<Rational> s(paths);
    for (std::size_t i = 0; i < paths; ++i) {
      blocks[i >> (n - t)].push_back(i);
      long total = 0;
      for (unsigned step = 1; step <= t; ++step) total += ((i >> (n - step)) & 1U) ? -1 : 1;
      s[i] = total;
    }
    partitions.push_back(std::move(blocks));
    process.emplace_back(std::move(s));
  }
  return {std::move(model), Filtration(std::move(partitions)), std::move(process)};
}

BpExample example_bp(unsigned n_states, unsigned k) {
  if (k + 1 >= n_states) {
    throw InvalidInput("example needs k + 1 < N so increments are constant beyond the truncation (N = " +
                       std::to_string(n_states) + ", k = " + std::to_string(k) + ")");
  }
  const unsigned N = n_states;
  std::vector<Rational> p0(N);
  std::vector<Rational> q(N);
  for (unsigned w = 1; w <= N; ++w) {
    p0[w - 1] = inverse_power_of_two(w);
    q[w - 1] = Rational(1, static_cast<long>(w)) - Rational(1, static_cast<long>(w) + 1);
  }
  Model model = Model::create(std::move(p0), inverse_power_of_two(N));

  // Times 0..k+1; coordinate w-1 is state w, coordinate N the tail point.
  std::vector<Partition> partitions;
  AdaptedProcess process;
  for (unsigned t = 0; t <= k + 1; ++t) {
    Partition blocks;
    for (unsigned w = 1; w <= t; ++w) blocks.push_back({w - 1});
    std::vector<std::size_t> rest;
    for (unsigned c = t; c <= N; ++c) rest.push_back(c);
    blocks.push_back(std::move(rest));
    partitions.push_back(std::move(blocks));

    std::vector<Rational> s(N);
    for (unsigned w = 1; w <= N; ++w) {
      if (w <= t) {
        s[w - 1] = Rational(static_cast<long>(w) * w + 2L * w + 2) * inverse_power_of_two(w);
      } else {
        s[w - 1] = inverse_power_of_two(t);
      }
    }
    process.emplace_back(std::move(s), inverse_power_of_two(t));
  }

  Fap q_ref = Fap::countably_additive(std::move(q), Rational(1, static_cast<long>(N) + 1));
  return {{std::move(model), Filtration(std::move(partitions)), std::move(process)}, std::move(q_ref)};
}

HarmonicExample example_harmonic(unsigned n_states) {
  if (n_states < 2) throw InvalidInput("harmonic example needs N >= 2");
  std::vector<Rational> p0(n_states);
  std::vector<Rational> x(n_states);
  for (unsigned w = 1; w <= n_states; ++w) {
    p0[w - 1] = inverse_power_of_two(w);
    x[w - 1] = Rational(1, static_cast<long>(w));
  }
  Model model = Model::create(std::move(p0), inverse_power_of_two(n_states));
  return {std::move(model), LinSpace({RandVar(std::move(x), Rational(0))})};
}

FiniteExample example_finite_random(std::uint64_t seed) {
  // Raw mt19937_64 output is fully specified, unlike the std distributions.
  std::mt19937_64 gen(seed);
  auto below = [&gen](std::uint64_t n) { return static_cast<long>(gen() % n); };

  const std::size_t n_states = 1 + static_cast<std::size_t>(below(6));
  std::vector<long> weights(n_states);
  long total = 0;
  for (auto& w : weights) {
    w = below(4) == 0 ? 0 : 1 + below(4);
    total += w;
  }
  if (total == 0) {
    weights[static_cast<std::size_t>(below(static_cast<std::uint64_t>(n_states)))] = 1;
    total = 1;
  }
  std::vector<Rational> p0;
  for (long w : weights) p0.emplace_back(w, total);

  const std::size_t n_basis = static_cast<std::size_t>(below(5));
  std::vector<RandVar> basis;
  for (std::size_t k = 0; k < n_basis; ++k) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n_states; ++i) values.emplace_back(below(7) - 3, 1 + below(3));
    RandVar x(std::move(values));
    if (!x.is_zero()) basis.push_back(std::move(x));  // a zero element would make coefficients ambiguous
  }
  return {Model::create(std::move(p0), std::nullopt), LinSpace(std::move(basis))};
}

std::vector<Rational> binomial_pmf(unsigned n, const Rational& p) {
  if (p.is_negative() || p > Rational(1)) throw InvalidInput("probability " + p.str() + " outside [0,1]");
  const Rational q = Rational(1) - p;
  std::vector<Rational> out(n + 1);
  for (unsigned h = 0; h <= n; ++h) out[h] = binomial_coefficient(n, h) * pow(p, h) * pow(q, n - h);
  return out;
}

}  // namespace famart::spaces
