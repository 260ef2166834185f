#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idealkit/execution.hpp"
#include "idealkit/ideal.hpp"
#include "idealkit/monomial.hpp"
#include "idealkit/ring.hpp"

namespace idealkit {

// Subset of the ring variables; doubles as the monomial prime it generates.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t mask) : mask_(mask) {}

  std::uint64_t mask() const { return mask_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(std::size_t var) const { return mask_ >> var & 1u; }
  bool subset_of(VarSet other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<std::size_t> indices() const;

  friend VarSet operator|(VarSet a, VarSet b) { return VarSet(a.mask_ | b.mask_); }
  friend VarSet operator&(VarSet a, VarSet b) { return VarSet(a.mask_ & b.mask_); }
  friend bool operator==(VarSet, VarSet) = default;
  // Smaller sets first, then lexicographic on variable indices.
  friend std::strong_ordering operator<=>(VarSet a, VarSet b);

  // "(x1, x2)"
  std::string to_string(const Ring& ring) const;

 private:
  std::uint64_t mask_ = 0;
};

using PrimeSet = std::set<VarSet>;

std::string to_string(const PrimeSet& primes, const Ring& ring);

// Monomial ideal stored as its minimal generators (a divisibility
// antichain), sorted descending in the ring order. The unit ideal is the
// single generator 1, the zero ideal has no generators.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators,
                Execution exec = Execution::parallel);

  static MonomialIdeal unit(RingPtr ring);
  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal of_variables(RingPtr ring, VarSet vars);
  // Defined when every generator is a single term.
  static std::optional<MonomialIdeal> from_ideal(const Ideal& ideal);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;
  VarSet support() const;
  std::int64_t max_degree() const;

  Ideal to_ideal() const;
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  struct Canonical {};
  MonomialIdeal(RingPtr ring, std::vector<Monomial> minimal, Canonical);

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

// Divisibility antichain of the given monomials. The parallel kernel and the
// serial reference return the same (canonically sorted) list.
std::vector<Monomial> min_gens(const Ring& ring, std::vector<Monomial> gens,
                               Execution exec = Execution::parallel);
MonomialIdeal min_gens(const RingPtr& ring, std::vector<Monomial> gens,
                       Execution exec = Execution::parallel);

MonomialIdeal m_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal m_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal m_power(const MonomialIdeal& a, unsigned n);
MonomialIdeal m_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal m_intersect(const std::vector<MonomialIdeal>& ideals);
MonomialIdeal m_colon(const MonomialIdeal& a, const Monomial& m);
// Throws std::domain_error when b is the zero ideal.
MonomialIdeal m_colon(const MonomialIdeal& a, const MonomialIdeal& b);
bool m_contains(const MonomialIdeal& big, const MonomialIdeal& small);

// Irredundant decomposition into ideals generated by pure powers of
// variables. Throws std::domain_error for the unit or zero ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

struct MonomialPrimaryComponent {
  MonomialIdeal component;
  VarSet radical_support;
};

// Minimal primary decomposition: irreducible components grouped by support
// and intersected. Sorted by support.
std::vector<MonomialPrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

PrimeSet associated_primes(const MonomialIdeal& ideal);

struct AssOfPowers {
  // by_power[n-1] = Ass(R / M^n)
  std::vector<PrimeSet> by_power;
  // Union over all computed powers.
  PrimeSet stable_estimate;
  // Least power at which each prime of the estimate appears.
  std::map<VarSet, unsigned> first_power;
  // Ass constant on the last `window` powers; a heuristic, not a proof.
  bool stabilized = false;
  unsigned window = 3;
  unsigned n_max = 0;
};

AssOfPowers ass_of_powers(const MonomialIdeal& ideal, unsigned n_max, unsigned window = 3,
                          Execution exec = Execution::parallel);

// Monomial w with ideal : w equal to the prime; searched among generators of
// ideal : prime, then their monomial multiples up to total degree `bound`.
std::optional<Monomial> monomial_witness(const MonomialIdeal& ideal, VarSet prime, int bound);

// m lies in the integral closure of the ideal, i.e. its exponent vector is
// in the Newton polyhedron conv(generators) + R^n_{>=0}.
bool integral_closure_member(const Monomial& m, const MonomialIdeal& ideal);

// result[n-1]: ideal^n equals its integral closure (checked on all monomials
// up to the degree where new closure generators can occur).
std::vector<bool> is_normal_up_to(const MonomialIdeal& ideal, unsigned n_max);

}  // namespace idealkit
