#include "idealkit/identity_suites.hpp"

#include <bit>
#include <exception>

#include "idealkit/random.hpp"
#include "idealkit/sumdecomp.hpp"

namespace idealkit {

std::string_view suite_name(IdentitySuite s) {
  switch (s) {
    case IdentitySuite::sum_intersection:
      return "sum-intersection";
    case IdentitySuite::intersection_of_sums:
      return "intersection-of-sums";
    case IdentitySuite::power_of_sum:
      return "power-of-sum";
    case IdentitySuite::colon_of_sum:
      return "colon-of-sum";
  }
  return "";
}

std::vector<IdentitySuite> all_suites() {
  return {IdentitySuite::sum_intersection, IdentitySuite::intersection_of_sums, IdentitySuite::power_of_sum,
          IdentitySuite::colon_of_sum};
}

std::optional<IdentitySuite> parse_suite(std::string_view name) {
  for (auto s : all_suites())
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

namespace {

RingPtr suite_ring() { return Ring::make({"x1", "x2", "x3"}, {"y1", "y2", "y3"}); }

std::vector<Polynomial> random_generators(Rng& rng, const RingPtr& ring, std::uint64_t mask, int max_gens) {
  RandomPolyShape shape{.var_mask = mask, .max_terms = 3, .max_degree = 3, .max_coefficient = 3,
                        .allow_constant = false};
  std::vector<Polynomial> gens;
  const auto count = rng.uniform(1, max_gens);
  for (std::int64_t i = 0; i < count; ++i) gens.push_back(random_polynomial(rng, ring, shape));
  return gens;
}

MonomialIdeal random_monomial_block(Rng& rng, const RingPtr& ring, std::uint64_t mask, int max_gens,
                                    int max_degree) {
  std::vector<Monomial> gens;
  const auto count = rng.uniform(1, max_gens);
  for (std::int64_t i = 0; i < count; ++i) {
    auto m = random_monomial(rng, ring->num_vars(), mask, max_degree);
    if (m.is_one()) m = m.with(static_cast<std::size_t>(std::countr_zero(mask)), 1);
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::string describe(const std::string& lhs, const std::string& rhs) { return "left " + lhs + " != right " + rhs; }

// Each returns one verdict per case of the instance; "" means pass.
std::vector<std::string> sum_intersection_case(Rng& rng, bool inject) {
  const auto ring = suite_ring();
  const Ideal i(ring, random_generators(rng, ring, ring->x_mask(), 2));
  const Ideal j1(ring, random_generators(rng, ring, ring->y_mask(), 2));
  const Ideal j2(ring, random_generators(rng, ring, ring->y_mask(), 2));
  const auto lhs = intersect(sum(i, j1), j2);
  auto rhs = sum(product(i, j2), intersect(j1, j2));
  if (inject) rhs = product(rhs, Ideal::of_variables(ring, 1));
  if (equal(lhs, rhs)) return {""};
  return {"I = " + i.to_string() + ", J1 = " + j1.to_string() + ", J2 = " + j2.to_string() + ": " +
          describe(GroebnerEngine::ideal_string(lhs), GroebnerEngine::ideal_string(rhs))};
}

std::vector<std::string> colon_of_sum_case(Rng& rng, bool inject) {
  const auto ring = suite_ring();
  const Ideal i(ring, random_generators(rng, ring, ring->x_mask(), 2));
  const Ideal j(ring, random_generators(rng, ring, ring->y_mask(), 2));
  const auto f = random_generators(rng, ring, ring->x_mask(), 1).front();
  const auto lhs = colon(sum(i, j), f);
  auto rhs = sum(colon(i, f), j);
  if (inject) rhs = product(rhs, Ideal::of_variables(ring, 1));
  if (equal(lhs, rhs)) return {""};
  return {"I = " + i.to_string() + ", J = " + j.to_string() + ", f = " + f.to_string() + ": " +
          describe(GroebnerEngine::ideal_string(lhs), GroebnerEngine::ideal_string(rhs))};
}

std::vector<std::string> intersection_of_sums_case(Rng& rng, bool inject) {
  const auto ring = suite_ring();
  const auto n = static_cast<unsigned>(rng.uniform(1, 3));
  const auto r = static_cast<std::size_t>(rng.uniform(1, 2));
  std::vector<std::vector<MonomialIdeal>> fil(n + 1, std::vector<MonomialIdeal>(r, MonomialIdeal::unit(ring)));
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<MonomialIdeal> column{MonomialIdeal::unit(ring)};
    for (unsigned m = 1; m <= n; ++m) column.push_back(random_monomial_block(rng, ring, ring->x_mask(), 3, 3));
    column = filtrate_column<MonomialEngine>(column);
    for (unsigned m = 0; m <= n; ++m) fil[m][k] = column[m];
  }
  std::vector<MonomialIdeal> chain{MonomialIdeal::unit(ring)};
  for (unsigned m = 1; m <= n; ++m) chain.push_back(random_monomial_block(rng, ring, ring->y_mask(), 3, 3));
  chain = filtrate_column<MonomialEngine>(chain);
  auto [lhs, rhs] = intersect_of_sums<MonomialEngine>(fil, chain, n);
  if (inject) rhs = m_product(rhs, MonomialIdeal::of_variables(ring, VarSet(1)));
  if (lhs == rhs) return {""};
  return {"n = " + std::to_string(n) + ", r = " + std::to_string(r) + ": " + describe(lhs.to_string(), rhs.to_string())};
}

std::vector<std::string> power_of_sum_case(Rng& rng, bool inject) {
  const auto ring = suite_ring();
  const auto i = random_monomial_block(rng, ring, ring->x_mask(), 5, 4);
  const auto j = random_monomial_block(rng, ring, ring->y_mask(), 5, 4);
  const auto a = monomial_table(i, Block::x, 3);
  const auto b = monomial_table(j, Block::y, 3);
  std::vector<std::string> out;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto d = power_decomposition(a, b, n, false);
    std::vector<MonomialIdeal> parts;
    for (const auto& c : d.components)
      if (!c.unit) parts.push_back(c.ideal);
    const auto lhs = parts.empty() ? MonomialIdeal::unit(ring) : m_intersect(parts);
    auto rhs = m_power(m_sum(i, j), n);
    if (inject) rhs = m_product(rhs, MonomialIdeal::of_variables(ring, VarSet(1)));
    out.push_back(lhs == rhs ? ""
                             : "I = " + i.to_string() + ", J = " + j.to_string() + ", n = " + std::to_string(n) +
                                   ": " + describe(lhs.to_string(), rhs.to_string()));
  }
  return out;
}

}  // namespace

SuiteResult run_suite(IdentitySuite suite, std::uint64_t seed, unsigned count, bool inject_failure) {
  SuiteResult result{.suite = suite, .base_seed = seed, .instances = count, .cases = 0, .passed = 0, .failures = {}};
  for (unsigned idx = 0; idx < count; ++idx) {
    const auto s = instance_seed(seed, idx);
    Rng rng(s);
    std::vector<std::string> verdicts;
    try {
      switch (suite) {
        case IdentitySuite::sum_intersection:
          verdicts = sum_intersection_case(rng, inject_failure);
          break;
        case IdentitySuite::intersection_of_sums:
          verdicts = intersection_of_sums_case(rng, inject_failure);
          break;
        case IdentitySuite::power_of_sum:
          verdicts = power_of_sum_case(rng, inject_failure);
          break;
        case IdentitySuite::colon_of_sum:
          verdicts = colon_of_sum_case(rng, inject_failure);
          break;
      }
    } catch (const std::exception& e) {
      verdicts = {std::string("exception: ") + e.what()};
    }
    for (const auto& v : verdicts) {
      ++result.cases;
      if (v.empty()) ++result.passed;
      else result.failures.push_back({idx, s, v});
    }
  }
  return result;
}

}  // namespace idealkit
