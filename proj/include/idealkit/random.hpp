#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

// Seeded generator whose draws are identical on every platform
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p_true = 0.5);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Derived seed for instance `index` of a suite, so single failures can be
// replayed on their own.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index);

// Random monomial supported on `var_mask` with 1 <= degree <= max_degree.
Monomial random_monomial(Rng& rng, std::size_t num_vars, std::uint64_t var_mask, int max_degree);

struct RandomPolyShape {
  std::uint64_t var_mask = ~std::uint64_t{0};
  int max_terms = 3;
  int max_degree = 3;
  int max_coefficient = 3;
  bool allow_constant = false;
};

// Nonzero random polynomial; coefficients are nonzero integers in
// [-max_coefficient, max_coefficient].
Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolyShape& shape);

}  // namespace idealkit
