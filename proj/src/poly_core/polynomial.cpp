#include "idealkit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealkit/errors.hpp"

namespace idealkit {

namespace {

bool greater(const RingPtr& ring, const Monomial& a, const Monomial& b) {
  return ring->compare(a, b) == std::strong_ordering::greater;
}

// Merges two descending term lists, scaling the second one by `sign`.
std::vector<Term> merge(const RingPtr& ring, std::span<const Term> a, std::span<const Term> b,
                        int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring->compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
      ++j;
    } else {
      Rational s = sign < 0 ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({Monomial(p.ring_->num_vars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  Polynomial p(std::move(ring));
  if (var >= p.ring_->num_vars()) throw std::out_of_range("variable index out of range");
  p.terms_.push_back({Monomial(p.ring_->num_vars()).with(var, 1), Rational(1)});
  return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial p(std::move(ring));
  if (m.size() != p.ring_->num_vars()) throw std::invalid_argument("monomial length does not match ring");
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms)
    if (t.monomial.size() != p.ring_->num_vars())
      throw std::invalid_argument("monomial length does not match ring");
  const auto& r = p.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return greater(r, a.monomial, b.monomial); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
      if (sgn(p.terms_.back().coefficient) == 0) p.terms_.pop_back();
    } else if (sgn(t.coefficient) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::uint64_t Polynomial::support_mask() const {
  std::uint64_t m = 0;
  for (const auto& t : terms_) m |= t.monomial.support_mask();
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_, "add");
  return Polynomial(p.ring_, merge(p.ring_, p.terms_, q.terms_, +1), true);
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_, "subtract");
  return Polynomial(p.ring_, merge(p.ring_, p.terms_, q.terms_, -1), true);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p.ring_, q.ring_, "multiply");
  if (p.is_zero() || q.is_zero()) return Polynomial(p.ring_);
  const Polynomial& small = p.size() <= q.size() ? p : q;
  const Polynomial& large = p.size() <= q.size() ? q : p;
  Polynomial acc(p.ring_);
  for (const auto& t : small.terms_) acc = acc + large.times_term(t.monomial, t.coefficient);
  return acc;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coefficient * c});
  // Monomial orders are multiplicative, so the order is preserved.
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::minus_term_times(const Monomial& m, const Rational& c,
                                        const Polynomial& g) const {
  require_same_ring(ring_, g.ring_, "reduce");
  Polynomial shifted = g.times_term(m, c);
  return Polynomial(ring_, merge(ring_, terms_, shifted.terms_, -1), true);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coefficient;
  return scaled(inv);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class den = 1, num = 0;
  for (const auto& t : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational factor(den, num);
  factor.canonicalize();
  if (sgn(terms_.front().coefficient) < 0) factor = -factor;
  return scaled(factor);
}

Polynomial Polynomial::mapped(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->num_vars()) throw std::invalid_argument("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::exponent_type> e(target->num_vars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (var_map[i] >= e.size()) throw std::invalid_argument("variable has no image in target ring");
      e[var_map[i]] += t.monomial[i];
    }
    out.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return from_terms(target, std::move(out));
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
  if (target->var_names() != ring_->var_names())
    throw RingMismatch("reorder: target ring has different variables");
  std::vector<Term> out(terms_.begin(), terms_.end());
  return from_terms(target, std::move(out));
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return same_ring(p.ring_, q.ring_) && p.terms_ == q.terms_;
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  const Term* best = &p.terms()[0];
  for (const auto& t : p.terms())
    if (compare_monomials(t.monomial, best->monomial, order) == std::strong_ordering::greater)
      best = &t;
  return {best->monomial, best->coefficient};
}

Polynomial pow(const Polynomial& p, unsigned n) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const RingPtr& target) {
  const auto& ring = p.ring();
  std::vector<const Polynomial*> images(ring->num_vars(), nullptr);
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    auto it = assignment.find(ring->var_name(v));
    if (it == assignment.end()) continue;
    require_same_ring(it->second.ring(), target, "substitute");
    images[v] = &it->second;
  }
  Polynomial out(target);
  for (const auto& t : p.terms()) {
    Polynomial value = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < ring->num_vars(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (!images[v])
        throw std::invalid_argument("substitute: no assignment for variable '" + ring->var_name(v) + "'");
      value = value * pow(*images[v], static_cast<unsigned>(t.monomial[v]));
    }
    out = out + value;
  }
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "divide");
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& lt = g.leading_term();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& head = rest.leading_term();
    if (!lt.monomial.divides(head.monomial))
      throw VerificationFailure("exact division left a nonzero remainder");
    Monomial m = head.monomial / lt.monomial;
    Rational c = head.coefficient / lt.coefficient;
    quotient.push_back({m, c});
    rest = rest.minus_term_times(m, c, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t.coefficient);
    bool need_star = false;
    if (t.monomial.is_one() || mag != 1) {
      out += format_rational(mag);
      need_star = true;
    }
    for (std::size_t v = 0; v < t.monomial.size(); ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      if (need_star) out += '*';
      out += ring_->var_name(v);
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

}  // namespace idealkit
