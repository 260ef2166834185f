#include "idealkit/random.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace idealkit {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::coin(double p_true) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p_true;
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Monomial random_monomial(Rng& rng, std::size_t num_vars, std::uint64_t var_mask, int max_degree) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < num_vars && v < 64; ++v)
    if (var_mask >> v & 1u) vars.push_back(v);
  if (vars.empty() || max_degree < 1) throw std::invalid_argument("random_monomial: empty support");
  const auto degree = rng.uniform(1, max_degree);
  std::vector<Monomial::exponent_type> e(num_vars, 0);
  for (std::int64_t k = 0; k < degree; ++k)
    ++e[vars[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vars.size()) - 1))]];
  return Monomial(std::move(e));
}

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, const RandomPolyShape& shape) {
  while (true) {
    const auto nterms = rng.uniform(1, shape.max_terms);
    std::vector<Term> terms;
    for (std::int64_t k = 0; k < nterms; ++k) {
      Monomial m = (shape.allow_constant && rng.coin(0.15))
                       ? Monomial(ring->num_vars())
                       : random_monomial(rng, ring->num_vars(), shape.var_mask, shape.max_degree);
      std::int64_t c = 0;
      while (c == 0) c = rng.uniform(-shape.max_coefficient, shape.max_coefficient);
      terms.push_back({std::move(m), Rational(c)});
    }
    auto p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) return p;
  }
}

}  // namespace idealkit
