#include "idealkit/ideal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "idealkit/errors.hpp"

namespace idealkit {

namespace {

std::string fresh_name(const Ring& ring, std::string base) {
  while (ring.index_of(base)) base += "_";
  return base;
}

std::vector<Polynomial> dedup(std::vector<Polynomial> polys) {
  std::vector<Polynomial> out;
  std::set<std::string> seen;
  for (auto& p : polys) {
    if (p.is_zero()) continue;
    if (seen.insert(p.monic().to_string()).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<BasisCache>()) {
  if (!ring_) throw std::invalid_argument("ideal without a ring");
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::of_variables(RingPtr ring, std::uint64_t var_mask) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ring->num_vars(); ++v)
    if (var_mask >> v & 1u) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
  std::call_once(cache_->once, [&] {
    cache_->basis = groebner_basis(gens_, ring_);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const { return cache_->ready; }

bool Ideal::is_unit() const {
  for (const auto& g : gens_)
    if (g.is_constant()) return true;
  const auto& b = reduced_basis();
  return b.size() == 1 && b[0].is_constant();
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::uint64_t Ideal::variable_mask() const {
  if (gens_.empty()) return 0;
  std::uint64_t mask = 0;
  for (const auto& g : gens_) {
    if (!g.is_monomial() || g.leading_monomial().degree() != 1) return 0;
    mask |= g.leading_monomial().support_mask();
  }
  return mask;
}

Ideal Ideal::reordered(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(g.reordered(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

std::string_view certificate_name(PrimeCertificate c) {
  switch (c) {
    case PrimeCertificate::variable_generated:
      return "variable-generated";
    case PrimeCertificate::assumed_prime:
      return "assumed-prime";
    case PrimeCertificate::sum_with_variable_block:
      return "sum-with-variable-block";
  }
  return "assumed-prime";
}

PrimeIdeal PrimeIdeal::variables(RingPtr ring, std::uint64_t var_mask) {
  if (var_mask == 0) throw std::invalid_argument("a variable-generated prime needs at least one variable");
  return {Ideal::of_variables(std::move(ring), var_mask), PrimeCertificate::variable_generated};
}

PrimeIdeal PrimeIdeal::assumed(Ideal ideal) {
  return {std::move(ideal), PrimeCertificate::assumed_prime};
}

PrimeIdeal PrimeIdeal::from_ideal(Ideal ideal) {
  if (auto mask = ideal.variable_mask()) return variables(ideal.ring(), mask);
  return assumed(std::move(ideal));
}

std::string prime_key(const PrimeIdeal& p) {
  std::string key;
  for (const auto& g : p.underlying.reduced_basis()) key += g.to_string() + ";";
  return key;
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (ideal.ring()->order() == order) return ideal.reduced_basis();
  auto target = ideal.ring()->with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.reordered(target));
  return groebner_basis(gens, target);
}

bool member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring(), "member");
  if (f.is_zero()) return true;
  return normal_form(f, ideal.reduced_basis()).is_zero();
}

bool contains(const Ideal& big, const Ideal& small) {
  require_same_ring(big.ring(), small.ring(), "contains");
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return member(g, big); });
}

bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "equal");
  return a.reduced_basis() == b.reduced_basis();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "product");
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal power(const Ideal& ideal, unsigned n) {
  Ideal result = Ideal::unit(ideal.ring());
  for (unsigned k = 0; k < n; ++k) result = product(result, ideal);
  return result;
}

Ideal eliminate(const Ideal& ideal, std::uint64_t var_mask) {
  const Ring& ring = *ideal.ring();
  const std::size_t n = ring.num_vars();
  std::vector<std::size_t> to_new(n);
  std::vector<std::string> names;
  std::size_t k = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (var_mask >> v & 1u) {
      to_new[v] = names.size();
      names.push_back(ring.var_name(v));
      ++k;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (!(var_mask >> v & 1u)) {
      to_new[v] = names.size();
      names.push_back(ring.var_name(v));
    }
  if (k == 0) return ideal;
  auto elim_ring = Ring::make(std::move(names), {}, MonomialOrder::block_elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapped(elim_ring, to_new));
  std::vector<std::size_t> back(n);
  for (std::size_t v = 0; v < n; ++v) back[to_new[v]] = v;
  std::vector<Polynomial> kept;
  for (const auto& g : groebner_basis(gens, elim_ring)) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t v = 0; v < k && free; ++v)
        if (t.monomial[v] != 0) free = false;
    if (free) kept.push_back(g.mapped(ideal.ring(), back));
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars) {
  std::uint64_t mask = 0;
  for (const auto& name : vars) {
    auto idx = ideal.ring()->index_of(name);
    if (!idx) throw std::invalid_argument("eliminate: unknown variable '" + name + "'");
    mask |= std::uint64_t{1} << *idx;
  }
  return eliminate(ideal, mask);
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  const Ring& ring = *a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  // Fresh variable t, ordered greatest: (t*a + (1-t)*b) ∩ K[vars].
  std::vector<std::string> names{fresh_name(ring, "_t")};
  names.insert(names.end(), ring.var_names().begin(), ring.var_names().end());
  auto aux = Ring::make(std::move(names), {}, MonomialOrder::block_elimination(1));
  std::vector<std::size_t> shift(ring.num_vars());
  std::iota(shift.begin(), shift.end(), 1);
  const Polynomial t = Polynomial::variable(aux, 0);
  const Polynomial one_minus_t = Polynomial::constant(aux, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.mapped(aux, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped(aux, shift));
  std::vector<std::size_t> back(aux->num_vars(), aux->num_vars());
  for (std::size_t v = 0; v < ring.num_vars(); ++v) back[v + 1] = v;
  std::vector<Polynomial> kept;
  for (const auto& g : groebner_basis(gens, aux)) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(),
                             [](const Term& term) { return term.monomial[0] != 0; });
    if (!has_t) kept.push_back(g.mapped(a.ring(), back));
  }
  return Ideal(a.ring(), std::move(kept));
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    if (ideals[i].is_unit()) continue;
    acc = acc.is_unit() ? ideals[i] : intersect(acc, ideals[i]);
  }
  return acc;
}

Ideal colon(const Ideal& ideal, const Polynomial& f) {
  require_same_ring(ideal.ring(), f.ring(), "colon");
  if (f.is_zero()) throw std::domain_error("colon by the zero polynomial");
  Ideal meet = intersect(ideal, Ideal(ideal.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal colon(const Ideal& ideal, const Ideal& other) {
  require_same_ring(ideal.ring(), other.ring(), "colon");
  if (other.is_zero()) throw std::domain_error("colon by the zero ideal");
  std::vector<Ideal> parts;
  for (const auto& g : other.generators()) parts.push_back(colon(ideal, g));
  return intersect(parts);
}

Saturation saturate(const Ideal& ideal, const Polynomial& f) {
  Ideal current = ideal;
  unsigned exponent = 0;
  while (true) {
    Ideal next = colon(current, f);
    if (equal(next, current)) return {std::move(current), exponent};
    current = std::move(next);
    ++exponent;
  }
}

}  // namespace idealkit
