#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealkit/monomial.hpp"
#include "idealkit/ring.hpp"

namespace idealkit {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial with exact rational coefficients. Terms are stored in
// strictly descending order under the ring's monomial order and never carry
// a zero coefficient; the zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c = 1);
  // Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Throws std::domain_error on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coefficient; }

  std::int64_t total_degree() const;
  // Union of the variable supports of all terms.
  std::uint64_t support_mask() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  // this - c*m*g, used by reduction.
  Polynomial minus_term_times(const Monomial& m, const Rational& c, const Polynomial& g) const;

  // Scaled so the leading coefficient is 1.
  Polynomial monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;

  // Same terms viewed in another ring; var_map[i] is the target index of
  // variable i. Terms are re-sorted under the target order.
  Polynomial mapped(const RingPtr& target, std::span<const std::size_t> var_map) const;
  // Same variables, different order.
  Polynomial reordered(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms, bool /*already_canonical*/)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

// Maximal term under an arbitrary order (not necessarily the ring's).
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order);

// Image of p under var -> assignment[var]; every variable occurring in p
// must be assigned, and all images must live in `target`.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target);

// Exact quotient f / g; throws VerificationFailure when the remainder of
// multivariate division is nonzero.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

Polynomial pow(const Polynomial& p, unsigned n);

std::string format_rational(const Rational& q);

}  // namespace idealkit
