// Buchberger's algorithm with the Gebauer-Moeller installation of both
// Buchberger criteria. Basis elements are kept monic.

#include <algorithm>
#include <limits>

#include "idealkit/errors.hpp"
#include "idealkit/ideal.hpp"

namespace idealkit {

namespace {

using TermVec = std::vector<Term>;

// f[head..] - c*m*g, written back into f starting at 0.
void subtract_multiple(const Ring& ring, TermVec& f, std::size_t& head, const Monomial& m,
                       const Rational& c, std::span<const Term> g) {
  TermVec out;
  out.reserve(f.size() - head + g.size());
  std::size_t i = head, j = 0;
  Monomial shifted;
  bool have_shifted = false;
  while (i < f.size() || j < g.size()) {
    if (j < g.size() && !have_shifted) {
      shifted = g[j].monomial * m;
      have_shifted = true;
    }
    if (j >= g.size()) {
      out.push_back(std::move(f[i++]));
      continue;
    }
    if (i >= f.size()) {
      out.push_back({shifted, -(c * g[j].coefficient)});
      ++j;
      have_shifted = false;
      continue;
    }
    auto cmp = ring.compare(f[i].monomial, shifted);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(std::move(f[i++]));
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({shifted, -(c * g[j].coefficient)});
      ++j;
      have_shifted = false;
    } else {
      Rational s = f[i].coefficient - c * g[j].coefficient;
      if (sgn(s) != 0) out.push_back({shifted, std::move(s)});
      ++i;
      ++j;
      have_shifted = false;
    }
  }
  f = std::move(out);
  head = 0;
}

class Reducer {
 public:
  explicit Reducer(const Ring& ring) : ring_(ring) {}

  // Full reduction of f by the given monic basis elements. `sugar` is
  // updated with the sugar of every reduction step.
  TermVec reduce(TermVec f, const std::vector<const Polynomial*>& basis, std::int64_t* sugar,
                 const std::vector<std::int64_t>* basis_sugar) const {
    TermVec rest;
    std::size_t head = 0;
    while (head < f.size()) {
      const Term& lt = f[head];
      const Polynomial* divisor = nullptr;
      std::size_t which = 0;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k]->leading_monomial().divides(lt.monomial)) {
          divisor = basis[k];
          which = k;
          break;
        }
      }
      if (!divisor) {
        rest.push_back(std::move(f[head]));
        ++head;
        continue;
      }
      Monomial m = lt.monomial / divisor->leading_monomial();
      Rational c = lt.coefficient / divisor->leading_coefficient();
      if (sugar && basis_sugar) *sugar = std::max(*sugar, m.degree() + (*basis_sugar)[which]);
      subtract_multiple(ring_, f, head, m, c, divisor->terms());
    }
    return rest;
  }

 private:
  const Ring& ring_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::int64_t sugar;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring)
      : ring_(std::move(ring)), use_sugar_(!ring_->order().degree_compatible()) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> input;
    for (const auto& g : generators) {
      require_same_ring(g.ring(), ring_, "groebner_basis");
      if (!g.is_zero()) input.push_back(g.monic());
    }
    if (input.empty()) return {};
    // Smaller leading monomials first keeps the early basis small.
    std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });
    for (auto& g : input) {
      std::int64_t sugar = g.total_degree();
      auto reduced = reduce_by_active(TermVec(g.terms().begin(), g.terms().end()), &sugar);
      if (!add(std::move(reduced), sugar)) return unit_basis();
    }
    while (!pairs_.empty()) {
      Pair p = take_pair();
      std::int64_t sugar = p.sugar;
      TermVec s = spoly(p);
      auto reduced = reduce_by_active(std::move(s), &sugar);
      if (!add(std::move(reduced), sugar)) return unit_basis();
    }
    return finish();
  }

 private:
  std::vector<Polynomial> unit_basis() const { return {Polynomial::constant(ring_, 1)}; }

  TermVec reduce_by_active(TermVec f, std::int64_t* sugar) const {
    std::vector<const Polynomial*> basis;
    std::vector<std::int64_t> sugars;
    basis.reserve(active_.size());
    for (auto k : active_) {
      basis.push_back(&polys_[k]);
      sugars.push_back(sugar_[k]);
    }
    return Reducer(*ring_).reduce(std::move(f), basis, sugar, &sugars);
  }

  // Returns false when the ideal turned out to be the unit ideal.
  bool add(TermVec terms, std::int64_t sugar) {
    if (terms.empty()) return true;
    Polynomial h = Polynomial::from_terms(ring_, std::move(terms)).monic();
    if (h.leading_monomial().is_one()) return false;
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    update(polys_.size() - 1);
    return true;
  }

  TermVec spoly(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    Monomial mf = p.lcm / f.leading_monomial();
    Monomial mg = p.lcm / g.leading_monomial();
    Polynomial s = f.times_term(mf, 1).minus_term_times(mg, 1, g);
    return TermVec(s.terms().begin(), s.terms().end());
  }

  Pair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k)
      if (better(pairs_[k], pairs_[best])) best = k;
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  bool better(const Pair& a, const Pair& b) const {
    auto cmp = ring_->compare(a.lcm, b.lcm);
    if (use_sugar_ && a.sugar != b.sugar) return a.sugar < b.sugar;
    if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(polys_[i].leading_monomial(), polys_[j].leading_monomial());
    std::int64_t s = std::max(sugar_[i] + (l.degree() - polys_[i].leading_monomial().degree()),
                              sugar_[j] + (l.degree() - polys_[j].leading_monomial().degree()));
    return {i, j, std::move(l), s};
  }

  // Gebauer-Moeller update for the new element h.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].leading_monomial();
    std::vector<Pair> candidates;
    for (auto g : active_) candidates.push_back(make_pair(g, h));

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool disjoint = lh.coprime(polys_[p.i].leading_monomial());
      bool dominated = false;
      if (!disjoint) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          if (candidates[b].lcm.divides(p.lcm)) dominated = true;
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          if (kept[b].lcm.divides(p.lcm)) dominated = true;
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (auto& p : kept)
      if (!lh.coprime(polys_[p.i].leading_monomial())) fresh.push_back(std::move(p));

    std::vector<Pair> old;
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && lcm(polys_[p.i].leading_monomial(), lh) != p.lcm &&
                  lcm(lh, polys_[p.j].leading_monomial()) != p.lcm;
      if (!drop) old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    std::vector<std::size_t> next;
    for (auto g : active_)
      if (!lh.divides(polys_[g].leading_monomial())) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  std::vector<Polynomial> finish() const {
    std::vector<Polynomial> out;
    for (std::size_t a = 0; a < active_.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (std::size_t b = 0; b < active_.size(); ++b)
        if (b != a) others.push_back(&polys_[active_[b]]);
      const Polynomial& g = polys_[active_[a]];
      TermVec tail(g.terms().begin() + 1, g.terms().end());
      TermVec reduced = Reducer(*ring_).reduce(std::move(tail), others, nullptr, nullptr);
      reduced.insert(reduced.begin(), g.terms()[0]);
      out.push_back(Polynomial::from_terms(ring_, std::move(reduced)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });
    return out;
  }

  RingPtr ring_;
  bool use_sugar_;
  std::vector<Polynomial> polys_;
  std::vector<std::int64_t> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const RingPtr& ring) {
  return Buchberger(ring).run(generators);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<const Polynomial*> ptrs;
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring(), "normal_form");
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  TermVec rest = Reducer(*f.ring()).reduce(TermVec(f.terms().begin(), f.terms().end()), ptrs,
                                           nullptr, nullptr);
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

}  // namespace idealkit
