#include "doctest.h"

#include <algorithm>
#include <cstdlib>

#include "idealkit/errors.hpp"
#include "idealkit/linear_feasibility.hpp"
#include "idealkit/monomial_ideal.hpp"
#include "idealkit/poly_io.hpp"
#include "idealkit/random.hpp"

using namespace idealkit;

namespace {

RingPtr ring6() { return Ring::make({"x1", "x2", "x3"}, {"y1", "y2", "y3"}); }

MonomialIdeal M(const RingPtr& r, const char* text) {
  auto ideal = MonomialIdeal::from_ideal(Ideal(r, parse_polynomial_list(text, r)));
  REQUIRE(ideal.has_value());
  return *ideal;
}

Monomial mono(const RingPtr& r, const char* text) { return parse_polynomial(text, r).leading_monomial(); }

VarSet vars(const RingPtr& r, std::initializer_list<const char*> names) {
  std::uint64_t mask = 0;
  for (auto n : names) mask |= std::uint64_t{1} << r->index_of(n).value();
  return VarSet(mask);
}

constexpr const char* kIex = "x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4";
constexpr const char* kJex = "y1^4, y1^3*y2, y1^2*y2^2*y3, y1*y2^3, y2^4";

std::vector<std::int32_t> max_exponents(const MonomialIdeal& m) {
  std::vector<std::int32_t> out(m.ring()->num_vars(), 0);
  for (const auto& g : m.generators())
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
  return out;
}

// Calls f on every exponent vector e with 0 <= e_i <= bound_i.
template <class F>
void for_each_in_box(const std::vector<std::int32_t>& bound, F&& f) {
  std::vector<std::int32_t> e(bound.size(), 0);
  while (true) {
    f(Monomial(e));
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound[i]) e[i++] = 0;
    if (i == e.size()) return;
    ++e[i];
  }
}

// Minimal irreducible ideals containing M, by exhaustive search over
// corners with exponents bounded by those of the generators.
std::vector<MonomialIdeal> brute_irreducibles(const MonomialIdeal& m) {
  std::vector<MonomialIdeal> found;
  for_each_in_box(max_exponents(m), [&](const Monomial& b) {
    if (b.is_one()) return;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] > 0) gens.push_back(Monomial(b.size()).with(i, b[i]));
    MonomialIdeal q(m.ring(), gens);
    if (m_contains(q, m)) found.push_back(q);
  });
  std::vector<MonomialIdeal> minimal;
  for (const auto& q : found) {
    bool is_min = std::none_of(found.begin(), found.end(), [&](const MonomialIdeal& o) {
      return !(o == q) && m_contains(q, o);
    });
    if (is_min) minimal.push_back(q);
  }
  return minimal;
}

// Ass by witnesses: P is associated iff M : w = P for a monomial w.
PrimeSet brute_ass(const MonomialIdeal& m) {
  PrimeSet out;
  for_each_in_box(max_exponents(m), [&](const Monomial& w) {
    if (m.contains(w)) return;
    auto q = m_colon(m, w);
    if (std::all_of(q.generators().begin(), q.generators().end(),
                    [](const Monomial& g) { return g.degree() == 1; }))
      out.insert(q.support());
  });
  return out;
}

// Two-variable Newton polygon test: some segment between generators lies
// componentwise below m.
bool newton_2d(const Monomial& m, const MonomialIdeal& ideal, std::size_t a, std::size_t b) {
  for (const auto& g : ideal.generators())
    for (const auto& h : ideal.generators()) {
      // point t*g + (1-t)*h, t in [0, 1]
      Rational lo = 0, hi = 1;
      for (auto v : {a, b}) {
        const Rational slope = g[v] - h[v], rest = m[v] - h[v];
        if (slope > 0) hi = std::min(hi, Rational(rest / slope));
        else if (slope < 0) lo = std::max(lo, Rational(rest / slope));
        else if (rest < 0) lo = 2;
      }
      if (lo <= hi) return true;
    }
  return false;
}

MonomialIdeal random_monomial_ideal(Rng& rng, const RingPtr& r, std::uint64_t mask, int ngens, int maxdeg) {
  std::vector<Monomial> gens;
  for (int i = 0; i < ngens; ++i) {
    auto g = random_monomial(rng, r->num_vars(), mask, maxdeg);
    if (!g.is_one()) gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(Monomial(r->num_vars()).with(0, 1));
  return MonomialIdeal(r, gens);
}

}  // namespace

TEST_CASE("min_gens") {
  auto r = ring6();
  CHECK(M(r, "x1, x1^2").generators() == std::vector{mono(r, "x1")});
  CHECK(MonomialIdeal(r, {}).is_zero());
  CHECK(MonomialIdeal::unit(r).is_unit());
  CHECK(M(r, "1, x1").is_unit());

  auto iex = M(r, kIex);
  std::vector<Monomial> products;
  for (const auto& f : iex.generators())
    for (const auto& g : iex.generators()) products.push_back(f * g);
  std::vector<Monomial> filtered;
  for (const auto& p : products) {
    bool divisible = std::any_of(products.begin(), products.end(),
                                 [&](const Monomial& q) { return q != p && q.divides(p); });
    if (!divisible && std::find(filtered.begin(), filtered.end(), p) == filtered.end()) filtered.push_back(p);
  }
  CHECK(filtered.size() == 9);
  CHECK(MonomialIdeal(r, products).generators().size() == 9);
}

TEST_CASE("min_gens parallel kernel matches serial reference") {
  auto r = Ring::make({"x1", "x2", "x3", "x4"}, {"y1", "y2"});
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Monomial> gens;
    const int count = static_cast<int>(rng.uniform(1, 3000));
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, r->num_vars(), ~std::uint64_t{0}, 12));
    CHECK(min_gens(*r, gens, Execution::serial) == min_gens(*r, gens, Execution::parallel));
  }
}

TEST_CASE("generators are sorted descending in the ring order") {
  auto r = ring6();
  auto iex = M(r, "x2^4, x1*x2^3, x1^4, x1^3*x2, x1^2*x2^2*x3");
  const auto& g = iex.generators();
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(r->compare(g[i - 1], g[i]) == std::strong_ordering::greater);
  CHECK(iex.to_string() == "(x1^2*x2^2*x3, x1^4, x1^3*x2, x1*x2^3, x2^4)");
}

TEST_CASE("ideal algebra examples") {
  auto r = ring6();
  CHECK(m_intersect(M(r, "x1"), M(r, "x2")) == M(r, "x1*x2"));
  auto p1_4 = m_power(M(r, "x1, x2"), 4);
  CHECK(m_intersect(p1_4, M(r, "x1^4, x1^3*x2, x1*x2^3, x2^4, x3")) == M(r, kIex));
  CHECK(m_colon(M(r, kIex), mono(r, "x1^2*x2^2")) == M(r, "x1, x2, x3"));
  CHECK(m_colon(M(r, kIex), M(r, "x1, x2, x3")) == M(r, "x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4"));
  CHECK_THROWS_AS(m_colon(M(r, kIex), MonomialIdeal::zero(r)), std::domain_error);
  CHECK(m_power(M(r, "x1"), 0).is_unit());
  CHECK(m_sum(M(r, "x1"), M(r, "x1^2, y1")) == M(r, "x1, y1"));
  CHECK(m_contains(M(r, "x1, x2"), M(r, kIex)));
  CHECK_FALSE(m_contains(M(r, kIex), M(r, "x1, x2")));
  CHECK_THROWS_AS(m_sum(M(r, "x1"), M(Ring::make({"x1"}, {"y1"}), "x1")), RingMismatch);
}

TEST_CASE("irreducible decomposition examples") {
  auto r = ring6();
  auto d1 = irreducible_decomposition(M(r, "x1*x2"));
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == M(r, "x1"));
  CHECK(d1[1] == M(r, "x2"));

  auto d2 = irreducible_decomposition(M(r, "x1^2, x1*x2"));
  REQUIRE(d2.size() == 2);
  CHECK(d2[0] == M(r, "x1"));
  CHECK(d2[1] == M(r, "x1^2, x2"));

  auto d3 = irreducible_decomposition(M(r, kIex));
  std::set<VarSet> supports;
  for (const auto& q : d3) supports.insert(q.support());
  CHECK(supports == PrimeSet{vars(r, {"x1", "x2"}), vars(r, {"x1", "x2", "x3"})});

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::zero(r)), std::domain_error);
  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(r)), std::domain_error);
}

TEST_CASE("primary decomposition examples") {
  auto r = ring6();
  auto d1 = primary_decomposition(M(r, "x1^2*x2"));
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].component == M(r, "x1^2"));
  CHECK(d1[1].component == M(r, "x2"));

  auto iex = M(r, kIex);
  auto d2 = primary_decomposition(iex);
  REQUIRE(d2.size() == 2);
  CHECK(d2[0].radical_support == vars(r, {"x1", "x2"}));
  CHECK(d2[0].component == m_power(M(r, "x1, x2"), 4));
  CHECK(d2[1].radical_support == vars(r, {"x1", "x2", "x3"}));
  CHECK(associated_primes(d2[1].component) == PrimeSet{vars(r, {"x1", "x2", "x3"})});
  CHECK(m_intersect({d2[0].component, d2[1].component}) == iex);

  auto d3 = primary_decomposition(m_power(iex, 2));
  REQUIRE(d3.size() == 1);
  CHECK(d3[0].radical_support == vars(r, {"x1", "x2"}));
}

TEST_CASE("associated primes examples") {
  auto r = ring6();
  CHECK(associated_primes(M(r, "x1*x2")) == PrimeSet{vars(r, {"x1"}), vars(r, {"x2"})});
  CHECK(associated_primes(M(r, kIex)) == PrimeSet{vars(r, {"x1", "x2"}), vars(r, {"x1", "x2", "x3"})});
  CHECK(associated_primes(M(r, kJex)) == PrimeSet{vars(r, {"y1", "y2"}), vars(r, {"y1", "y2", "y3"})});
  CHECK(to_string(associated_primes(M(r, kIex)), *r) == "{(x1, x2), (x1, x2, x3)}");
}

TEST_CASE("associated primes of powers") {
  auto r = ring6();
  auto p1 = vars(r, {"x1", "x2"}), p2 = vars(r, {"x1", "x2", "x3"});
  auto res = ass_of_powers(M(r, kIex), 3);
  REQUIRE(res.by_power.size() == 3);
  CHECK(res.by_power[0] == PrimeSet{p1, p2});
  CHECK(res.by_power[1] == PrimeSet{p1});
  CHECK(res.by_power[2] == PrimeSet{p1});
  CHECK(res.stable_estimate == PrimeSet{p1, p2});
  CHECK(res.first_power.at(p1) == 1);
  CHECK(res.first_power.at(p2) == 1);
  CHECK(res.stabilized == false);

  auto single = ass_of_powers(M(r, "x1"), 5);
  for (const auto& s : single.by_power) CHECK(s == PrimeSet{vars(r, {"x1"})});
  CHECK(single.stabilized);

  CHECK_THROWS_AS(ass_of_powers(M(r, "x1"), 0), std::invalid_argument);
}

TEST_CASE("ass_of_powers serial and parallel agree, union stable under extra powers") {
  auto r = Ring::make({"x1", "x2", "x3"}, {"y1"});
  Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto m = random_monomial_ideal(rng, r, 0b0111, static_cast<int>(rng.uniform(2, 4)), 4);
    if (m.is_unit()) continue;
    auto par = ass_of_powers(m, 4, 3, Execution::parallel);
    auto ser = ass_of_powers(m, 4, 3, Execution::serial);
    CHECK(par.by_power == ser.by_power);
    auto wider = ass_of_powers(m, 6, 3);
    CHECK(wider.stable_estimate == par.stable_estimate);
  }
}

TEST_CASE("decomposition properties on random ideals") {
  auto r = Ring::make({"x1", "x2", "x3"}, {"y1"});
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    auto m = random_monomial_ideal(rng, r, 0b1111, static_cast<int>(rng.uniform(1, 5)), 4);
    if (m.is_unit()) continue;
    auto irr = irreducible_decomposition(m);
    CHECK(m_intersect(irr) == m);
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j)
        if (i != j) CHECK_FALSE(m_contains(irr[j], irr[i]));

    auto brute = brute_irreducibles(m);
    auto sorted_keys = [](const std::vector<MonomialIdeal>& v) {
      std::vector<std::string> s;
      for (const auto& q : v) s.push_back(q.to_string());
      std::sort(s.begin(), s.end());
      return s;
    };
    CHECK(sorted_keys(irr) == sorted_keys(brute));

    auto prim = primary_decomposition(m);
    std::vector<MonomialIdeal> comps;
    PrimeSet supports;
    for (const auto& c : prim) {
      comps.push_back(c.component);
      supports.insert(c.radical_support);
      CHECK(associated_primes(c.component) == PrimeSet{c.radical_support});
    }
    CHECK(supports.size() == prim.size());
    CHECK(m_intersect(comps) == m);

    PrimeSet irr_supports;
    for (const auto& q : irr) irr_supports.insert(q.support());
    CHECK(associated_primes(m) == irr_supports);
    CHECK(associated_primes(m) == brute_ass(m));
  }
}

TEST_CASE("monomial operations agree with the Groebner engine") {
  auto r = Ring::make({"x1", "x2"}, {"y1", "y2"});
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    auto a = random_monomial_ideal(rng, r, 0b1111, static_cast<int>(rng.uniform(1, 3)), 3);
    auto b = random_monomial_ideal(rng, r, 0b1111, static_cast<int>(rng.uniform(1, 3)), 3);
    auto w = random_monomial(rng, r->num_vars(), 0b1111, 3);
    CHECK(equal(m_sum(a, b).to_ideal(), sum(a.to_ideal(), b.to_ideal())));
    CHECK(equal(m_product(a, b).to_ideal(), product(a.to_ideal(), b.to_ideal())));
    CHECK(equal(m_intersect(a, b).to_ideal(), intersect(a.to_ideal(), b.to_ideal())));
    CHECK(equal(m_colon(a, w).to_ideal(), colon(a.to_ideal(), Polynomial::term(r, w))));
    CHECK(equal(m_colon(a, b).to_ideal(), colon(a.to_ideal(), b.to_ideal())));
    CHECK(equal(m_power(a, 2).to_ideal(), power(a.to_ideal(), 2)));
  }
}

TEST_CASE("monomial witness") {
  auto r = ring6();
  auto iex = M(r, kIex);
  auto w = monomial_witness(iex, vars(r, {"x1", "x2", "x3"}), 8);
  REQUIRE(w.has_value());
  CHECK(*w == mono(r, "x1^2*x2^2"));
  auto p1 = monomial_witness(iex, vars(r, {"x1", "x2"}), 8);
  REQUIRE(p1.has_value());
  CHECK(m_colon(iex, *p1) == M(r, "x1, x2"));
  CHECK_FALSE(monomial_witness(iex, vars(r, {"x1"}), 8).has_value());
}

TEST_CASE("linear feasibility") {
  // x >= 0, y >= 0, x + y <= 1
  std::vector<LinearConstraint> s{{{-1, 0}, 0, false}, {{0, -1}, 0, false}, {{1, 1}, 1, false}};
  CHECK(fm_feasible(s, 2));
  s.push_back({{-1, -1}, -1, true});  // x + y > 1
  CHECK_FALSE(fm_feasible(s, 2));
  s.back().strict = false;  // x + y >= 1
  CHECK(fm_feasible(s, 2));
}

TEST_CASE("integral closure membership") {
  auto r = ring6();
  CHECK(integral_closure_member(mono(r, "x1*x2"), M(r, "x1^2, x2^2")));
  CHECK_FALSE(integral_closure_member(mono(r, "x1"), M(r, "x1^2")));
  auto iex = M(r, kIex);
  for (const auto& g : iex.generators()) CHECK(integral_closure_member(g, iex));
  CHECK(integral_closure_member(mono(r, "x1^2*x2^2"), iex));
  CHECK_FALSE(integral_closure_member(mono(r, "x1^3"), iex));
  CHECK_FALSE(integral_closure_member(mono(r, "x3^5"), iex));
  CHECK(integral_closure_member(mono(r, "y1^2*y2^2"), M(r, "y1^3, y2^3")));
  CHECK(integral_closure_member(mono(r, "y1^2*y2"), M(r, "y1^3, y2^3")));
  CHECK_FALSE(integral_closure_member(mono(r, "y1*y2"), M(r, "y1^3, y2^3")));
}

TEST_CASE("integral closure agrees with the planar oracle and is monotone") {
  auto r = Ring::make({"x1", "x2"}, {"y1"});
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_monomial_ideal(rng, r, 0b011, static_cast<int>(rng.uniform(1, 4)), 6);
    for_each_in_box({7, 7, 1}, [&](const Monomial& u) {
      const bool in = integral_closure_member(u, m);
      CHECK(in == newton_2d(u, m, 0, 1));
      if (in)
        for (std::size_t v = 0; v < 3; ++v) CHECK(integral_closure_member(u.with(v, u[v] + 1), m));
    });
  }
}

TEST_CASE("normality") {
  auto r = ring6();
  auto n1 = is_normal_up_to(M(r, "y1^2, y1*y2, y2^2"), 4);
  CHECK(n1 == std::vector<bool>{true, true, true, true});
  CHECK(is_normal_up_to(M(r, "x1^2, x2^2"), 1) == std::vector<bool>{false});
  CHECK(is_normal_up_to(M(r, "y1^3, y2^3"), 1) == std::vector<bool>{false});
  CHECK(is_normal_up_to(M(r, "x1, x2, x3"), 3) == std::vector<bool>{true, true, true});
  CHECK(is_normal_up_to(M(r, "x1*x2"), 2) == std::vector<bool>{true, true});
  CHECK_THROWS_AS(is_normal_up_to(M(r, "x1"), 0), std::invalid_argument);
}

TEST_CASE("thread cap honours IDEALKIT_THREADS") {
  setenv("IDEALKIT_THREADS", "2", 1);
  CHECK(thread_cap() == 2);
  setenv("IDEALKIT_THREADS", "0", 1);
  CHECK(thread_cap() >= 1);
  unsetenv("IDEALKIT_THREADS");
}
