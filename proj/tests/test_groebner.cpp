#include "doctest.h"

#include <algorithm>

#include "idealkit/errors.hpp"
#include "idealkit/ideal.hpp"
#include "idealkit/poly_io.hpp"
#include "idealkit/random.hpp"

using namespace idealkit;

namespace {

RingPtr ring6() { return Ring::make({"x1", "x2", "x3"}, {"y1", "y2", "y3"}); }

Polynomial P(const RingPtr& r, const char* text) { return parse_polynomial(text, r); }

Ideal Id(const RingPtr& r, const char* text) { return Ideal(r, parse_polynomial_list(text, r)); }

constexpr const char* kIex = "x1^4, x1^3*x2, x1^2*x2^2*x3, x1*x2^3, x2^4";
constexpr const char* kJcurve = "y1^3 - y2*y3, y2^2 - y1*y3, y3^2 - y1^2*y2";
// Reduced grevlex basis of the curve ideal's second symbolic power, computed
// independently with sympy (lex elimination of t from J^2 + (1 - t*y1)).
constexpr const char* kJcurveSymbolic2 =
    "y1^5 - 3*y1^2*y2*y3 + y1*y2^3 + y3^3,"
    "-y1^4*y3 + y1^3*y2^2 + y1*y2*y3^2 - y2^3*y3,"
    "-y1^3*y2*y3 + y1^2*y2^3 + y1*y3^3 - y2^2*y3^2,"
    "y1^2*y3^2 - 2*y1*y2^2*y3 + y2^4";

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t mask, int degree) {
  std::vector<Monomial> out{Monomial(nvars)};
  for (int d = 0; d < degree; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      if (m.degree() != d) continue;
      for (std::size_t v = 0; v < nvars; ++v)
        if (mask >> v & 1u) next.push_back(m.with(v, m[v] + 1));
    }
    for (auto& m : next)
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_CASE("groebner_basis") {
  auto r = Ring::make({"x1", "x2"}, {});
  auto gb = groebner_basis(Id(r, "x1^2 - x2, x2").generators(), r);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == P(r, "x2"));
  CHECK(gb[1] == P(r, "x1^2"));
  CHECK(Ideal::zero(r).reduced_basis().empty());

  auto y = Ring::make({}, {"y1", "y2", "y3"});
  auto curve = Id(y, kJcurve);
  // sympy: [y1^3 - y2*y3, y1^2*y2 - y3^2, y2^2 - y1*y3] under grevlex
  const auto& basis = curve.reduced_basis();
  REQUIRE(basis.size() == 3);
  CHECK(equal(Ideal(y, basis), Id(y, "y1^3 - y2*y3, y1^2*y2 - y3^2, y2^2 - y1*y3")));
  CHECK(std::find(basis.begin(), basis.end(), P(y, "y1^2*y2 - y3^2")) != basis.end());

  // reduced basis is order-dependent but always unique
  auto lex = groebner_basis(curve, MonomialOrder::lex());
  auto lex_again = groebner_basis(Ideal(y, {P(y, "y3^2 - y1^2*y2"), P(y, "y2^2 - y1*y3"),
                                             P(y, "y1^3 - y2*y3"), P(y, "y1^4 - y1*y2*y3")}),
                                  MonomialOrder::lex());
  CHECK(lex == lex_again);
}

TEST_CASE("unit ideal detection") {
  auto r = Ring::make({"x1", "x2"}, {});
  CHECK(Id(r, "x1, x1 + 1").is_unit());
  CHECK(Ideal::unit(r).is_unit());
  CHECK_FALSE(Id(r, "x1*x2 - 1, x1").is_zero());
  CHECK(Id(r, "x1*x2 - 1, x1").is_unit());
  CHECK_FALSE(Id(r, "x1^2, x2").is_unit());
}

TEST_CASE("member") {
  auto r = ring6();
  CHECK(member(P(r, "x1*x2"), Id(r, "x1")));
  CHECK_FALSE(member(P(r, "1"), Id(r, "x1")));
  // y1*(y1^3 - y2*y3)
  CHECK(member(P(r, "y1^4 - y1*y2*y3"), Id(r, kJcurve)));
  CHECK_FALSE(member(P(r, "y1^3"), Id(r, kJcurve)));
  auto other = Ring::make({"x1"}, {});
  CHECK_THROWS_AS(member(P(other, "x1"), Id(r, "x1")), RingMismatch);
}

TEST_CASE("equal") {
  auto r = ring6();
  CHECK(equal(Id(r, "x1, x1^2"), Id(r, "x1")));
  CHECK_FALSE(equal(Id(r, "x1"), Id(r, "x2")));
  auto I = Id(r, kIex);
  auto J = Id(r, kJcurve);
  CHECK(equal(intersect(I, J), product(I, J)));
}

TEST_CASE("sum, product, power") {
  auto r = ring6();
  CHECK(equal(power(Id(r, "x1"), 3), Id(r, "x1^3")));
  CHECK(power(Id(r, "x1"), 0).is_unit());
  CHECK(equal(sum(Id(r, "x1"), Id(r, "y1")), Id(r, "x1, y1")));

  // Oracle: brute-force pairwise products filtered by divisibility.
  auto I = Id(r, kIex);
  std::vector<Monomial> products;
  for (const auto& a : I.generators())
    for (const auto& b : I.generators()) products.push_back(a.leading_monomial() * b.leading_monomial());
  std::vector<Monomial> minimal;
  for (const auto& m : products) {
    bool redundant = false;
    for (const auto& o : products)
      if (o != m && o.divides(m)) redundant = true;
    if (!redundant && std::find(minimal.begin(), minimal.end(), m) == minimal.end()) minimal.push_back(m);
  }
  CHECK(minimal.size() == 9);
  // The reduced basis of a monomial ideal is its minimal generating set.
  CHECK(power(I, 2).reduced_basis().size() == minimal.size());
}

TEST_CASE("intersect") {
  auto r = ring6();
  CHECK(equal(intersect(Id(r, "x1"), Id(r, "x2")), Id(r, "x1*x2")));
  CHECK(equal(intersect(Id(r, "x1, x2"), Id(r, "y1")), Id(r, "x1*y1, x2*y1")));

  auto a = Id(r, "x1^2, x2");
  auto b = Id(r, "x1, x2^2");
  auto meet = intersect(a, b);
  CHECK(equal(meet, Id(r, "x1^2, x1*x2, x2^2")));
  // Oracle: a monomial lies in a ∩ b iff it lies in both.
  for (const auto& m : monomials_up_to(6, 0b11, 3)) {
    auto f = Polynomial::term(r, m);
    CHECK(member(f, meet) == (member(f, a) && member(f, b)));
  }
  CHECK(intersect(Id(r, "x1"), Ideal::zero(r)).is_zero());
}

TEST_CASE("colon") {
  auto r = ring6();
  CHECK(equal(colon(Id(r, "x1^2"), P(r, "x1")), Id(r, "x1")));
  CHECK(equal(colon(sum(Id(r, "x1^2"), Id(r, "y1")), P(r, "x1")), Id(r, "x1, y1")));
  CHECK(equal(colon(Id(r, kIex), P(r, "x1^2*x2^2")), Id(r, "x1, x2, x3")));
  CHECK(equal(colon(Id(r, kIex), Id(r, "x1, x2, x3")), Id(r, "x1^4, x1^3*x2, x1^2*x2^2, x1*x2^3, x2^4")));
  CHECK_THROWS_AS(colon(Id(r, "x1"), Ideal::zero(r)), std::domain_error);
  CHECK_THROWS_AS(colon(Id(r, "x1"), Polynomial(r)), std::domain_error);
}

TEST_CASE("saturate") {
  auto r = ring6();
  auto s = saturate(Id(r, "x1^2*x2"), P(r, "x1"));
  CHECK(equal(s.ideal, Id(r, "x2")));
  CHECK(s.exponent == 2);
  auto t = saturate(Id(r, "x1"), P(r, "x2"));
  CHECK(equal(t.ideal, Id(r, "x1")));
  CHECK(t.exponent == 0);

  auto J = Id(r, kJcurve);
  auto J2 = power(J, 2);
  auto sym = saturate(J2, P(r, "y1"));
  CHECK(equal(sym.ideal, Id(r, kJcurveSymbolic2)));
  CHECK(contains(sym.ideal, J2));
  CHECK_FALSE(equal(sym.ideal, J2));
  // The degree-5 element of the symbolic square is not in J^2.
  auto witness = P(r, "y1^5 - 3*y1^2*y2*y3 + y1*y2^3 + y3^3");
  CHECK(member(witness, sym.ideal));
  CHECK_FALSE(member(witness, J2));
  CHECK(sym.exponent >= 1);
}

TEST_CASE("eliminate") {
  auto r = Ring::make({"t"}, {"x1", "x2"});
  CHECK(equal(eliminate(Id(r, "t - x1, t - x2"), std::vector<std::string>{"t"}), Id(r, "x1 - x2")));
  auto s = Ring::make({"x1", "x2"}, {});
  CHECK(equal(eliminate(Id(s, "x1"), std::vector<std::string>{"x2"}), Id(s, "x1")));
  CHECK(equal(eliminate(Id(r, "t*x1, x2 - t*x2"), std::vector<std::string>{"t"}), Id(r, "x1*x2")));
  CHECK_THROWS_AS(eliminate(Id(s, "x1"), std::vector<std::string>{"zz"}), std::invalid_argument);
}

TEST_CASE("gb cache is transparent") {
  auto r = ring6();
  auto I = Id(r, kJcurve);
  Ideal copy = I;
  CHECK_FALSE(copy.has_cached_basis());
  auto before = Ideal(r, I.generators()).reduced_basis();
  (void)I.reduced_basis();
  CHECK(copy.has_cached_basis());
  CHECK(copy.reduced_basis() == before);
}

TEST_CASE("property: generic ideal operations on random inputs") {
  auto r = Ring::make({"x1", "x2"}, {"y1", "y2"});
  Rng rng(7);
  RandomPolyShape shape;
  shape.max_terms = 2;
  shape.max_degree = 2;
  auto random_ideal = [&](std::uint64_t mask, int gens) {
    shape.var_mask = mask;
    std::vector<Polynomial> g;
    for (int k = 0; k < gens; ++k) g.push_back(random_polynomial(rng, r, shape));
    return Ideal(r, std::move(g));
  };
  for (int k = 0; k < 8; ++k) {
    CAPTURE(k);
    auto I = random_ideal(0b1111, 2);
    auto J = random_ideal(0b1111, 1 + k % 2);
    for (const auto& g : I.generators()) CHECK(member(g, I));
    CHECK(equal(I, sum(I, product(I, I))));
    auto meet = intersect(I, J);
    CHECK(equal(meet, intersect(J, I)));
    CHECK(contains(I, meet));
    CHECK(contains(J, meet));
    CHECK(contains(meet, product(I, J)));
    auto q = colon(I, J);
    CHECK(contains(I, product(q, J)));
    CHECK(contains(q, I));
    CHECK(equal(colon(I, Ideal::unit(r)), I));
    auto f = random_polynomial(rng, r, shape);
    auto s = saturate(I, f);
    CHECK(contains(s.ideal, I));
    CHECK(equal(saturate(s.ideal, f).ideal, s.ideal));
  }
}

TEST_CASE("property: disjoint-block identities") {
  auto r = Ring::make({"x1", "x2"}, {"y1", "y2"});
  Rng rng(11);
  RandomPolyShape shape;
  shape.max_terms = 2;
  shape.max_degree = 2;
  auto random_ideal = [&](std::uint64_t mask) {
    shape.var_mask = mask;
    return Ideal(r, {random_polynomial(rng, r, shape)});
  };
  for (int k = 0; k < 5; ++k) {
    auto I = random_ideal(r->x_mask());
    auto J1 = random_ideal(r->y_mask());
    auto J2 = random_ideal(r->y_mask());
    CHECK(equal(intersect(sum(I, J1), J2), sum(product(I, J2), intersect(J1, J2))));
    shape.var_mask = r->x_mask();
    auto f = random_polynomial(rng, r, shape);
    CHECK(equal(colon(sum(I, J1), f), sum(colon(I, f), J1)));
  }
}
