#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealkit/execution.hpp"
#include "idealkit/ideal.hpp"
#include "idealkit/monomial_ideal.hpp"

namespace idealkit {

// monomial: decompositions, Ass and redundancy are exact.
// general: equalities via Groebner bases, Ass membership only via witnesses.
enum class Regime { monomial, general };
std::string_view regime_name(Regime r);

enum class Block { x, y };
std::string_view block_name(Block b);
std::uint64_t block_mask(const Ring& ring, Block b);

struct MonomialEngine {
  using IdealT = MonomialIdeal;
  using PrimeT = VarSet;
  static constexpr Regime regime = Regime::monomial;

  static IdealT unit(const RingPtr& ring) { return MonomialIdeal::unit(ring); }
  static IdealT sum(const IdealT& a, const IdealT& b) { return m_sum(a, b); }
  static IdealT product(const IdealT& a, const IdealT& b) { return m_product(a, b); }
  static IdealT power(const IdealT& a, unsigned n) { return m_power(a, n); }
  static IdealT intersect(const std::vector<IdealT>& v) { return m_intersect(v); }
  static bool equal(const IdealT& a, const IdealT& b) { return a == b; }
  static bool is_unit(const IdealT& a) { return a.is_unit(); }
  static std::uint64_t support(const IdealT& a) { return a.support().mask(); }
  static IdealT prime_ideal(const RingPtr& ring, const PrimeT& p) { return MonomialIdeal::of_variables(ring, p); }
  static PrimeT prime_sum(const PrimeT& p, const PrimeT& q) { return p | q; }
  static bool prime_less(const PrimeT& a, const PrimeT& b) { return a < b; }
  static bool prime_equal(const PrimeT& a, const PrimeT& b) { return a == b; }
  static std::string ideal_string(const IdealT& a) { return a.to_string(); }
  static std::string prime_string(const Ring& ring, const PrimeT& p) { return p.to_string(ring); }
};

struct GroebnerEngine {
  using IdealT = Ideal;
  using PrimeT = PrimeIdeal;
  static constexpr Regime regime = Regime::general;

  static IdealT unit(const RingPtr& ring) { return Ideal::unit(ring); }
  static IdealT sum(const IdealT& a, const IdealT& b) { return idealkit::sum(a, b); }
  static IdealT product(const IdealT& a, const IdealT& b) { return idealkit::product(a, b); }
  static IdealT power(const IdealT& a, unsigned n) { return idealkit::power(a, n); }
  static IdealT intersect(const std::vector<IdealT>& v) { return idealkit::intersect(v); }
  static bool equal(const IdealT& a, const IdealT& b) { return idealkit::equal(a, b); }
  static bool is_unit(const IdealT& a) { return a.is_unit(); }
  static std::uint64_t support(const IdealT& a);
  static IdealT prime_ideal(const RingPtr&, const PrimeT& p) { return p.underlying; }
  // Throws UnsupportedPair unless one summand is variable-generated.
  static PrimeT prime_sum(const PrimeT& p, const PrimeT& q);
  static bool prime_less(const PrimeT& a, const PrimeT& b) { return prime_key(a) < prime_key(b); }
  static bool prime_equal(const PrimeT& a, const PrimeT& b) { return prime_key(a) == prime_key(b); }
  static std::string ideal_string(const IdealT& a);
  static std::string prime_string(const Ring&, const PrimeT& p);
};

enum class TableSource { computed, user_supplied };
std::string_view source_name(TableSource s);

// The grid p_{mk}: for each power m = 0..depth and prime P_k, the P_k-primary
// component of base^m, or the unit ideal when P_k is not associated.
template <class E>
struct DecompositionTable {
  using IdealT = typename E::IdealT;
  using PrimeT = typename E::PrimeT;

  Block block = Block::x;
  RingPtr ring;
  IdealT base;
  std::vector<PrimeT> primes;
  // rows[m][k], k 0-based; rows[0] is all unit.
  std::vector<std::vector<IdealT>> rows;
  // associated[m][k]: P_k in Ass(base^m), recorded before any filtration.
  std::vector<std::vector<bool>> associated;
  TableSource source = TableSource::computed;
  bool filtered = false;

  unsigned depth() const { return static_cast<unsigned>(rows.size()) - 1; }
  std::size_t width() const { return primes.size(); }
};

using MonomialTable = DecompositionTable<MonomialEngine>;
using GeneralTable = DecompositionTable<GroebnerEngine>;

// Table of primary decompositions of base^1..base^depth, primes sorted.
MonomialTable monomial_table(const MonomialIdeal& base, Block block, unsigned depth);

// Table from explicit rows 1..depth (row 0 is prepended). Validated: block
// membership and row intersections equal to the powers of base. Throws
// VerificationFailure otherwise.
template <class E>
DecompositionTable<E> make_table(Block block, typename E::IdealT base, std::vector<typename E::PrimeT> primes,
                                 std::vector<std::vector<typename E::IdealT>> rows, TableSource source);

// Table for a prime whose powers have at most one embedded prime, the
// ideal of all block variables, with sat_elem in it: column 1 holds the
// symbolic powers prime^m : sat^inf, column 2 holds prime^m + (sat^M) with M
// the stabilization exponent.
GeneralTable saturation_table(const Ideal& prime, const Polynomial& sat_elem, Block block, unsigned depth);

GeneralTable to_general(const MonomialTable& table);

// Throws VerificationFailure when a row does not intersect to the power.
template <class E>
void validate(const DecompositionTable<E>& table);

// L'_m = intersection of L_i for i <= m; column[0] is the unit ideal.
template <class E>
std::vector<typename E::IdealT> filtrate_column(const std::vector<typename E::IdealT>& column);

// p'_{mk} = intersection of p_{ik} for i <= m. Idempotent.
template <class E>
DecompositionTable<E> filtrate(const DecompositionTable<E>& table);

enum class Redundancy { unknown, needed, redundant };
std::string_view redundancy_name(Redundancy r);

template <class E>
struct SumComponent {
  unsigned n = 0;
  std::size_t k = 0, l = 0;  // 1-based
  typename E::IdealT ideal;
  typename E::PrimeT target;
  bool unit = false;
  Redundancy redundancy = Redundancy::unknown;
};

// sum_{i=0}^n p_{ik} * q_{n-i,l}; k and l are 1-based. Tables are filtered
// first when needed. Throws std::out_of_range when n exceeds a table depth.
template <class E>
SumComponent<E> component(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n,
                          std::size_t k, std::size_t l);

template <class E>
struct PowerDecomposition {
  unsigned n = 0;
  // Ordered by (k, l).
  std::vector<SumComponent<E>> components;
  // Intersection checked against (I+J)^n and redundancy resolved.
  bool verified = false;

  // Targets of the proper components still needed after the redundancy
  // pass; equal to Ass((I+J)^n) when verified.
  std::vector<typename E::PrimeT> irredundant_targets() const;
};

// All components; with verify, checks their intersection equals (I+J)^n
// (VerificationFailure otherwise) and drops redundant components one at a
// time, largest (k, l) first.
template <class E>
PowerDecomposition<E> power_decomposition(const DecompositionTable<E>& a, const DecompositionTable<E>& b,
                                          unsigned n, bool verify = true, Execution exec = Execution::parallel);

template <class E>
std::vector<typename E::PrimeT> min_primes_of_sum(const typename E::PrimeT& p, const typename E::PrimeT& q) {
  return {E::prime_sum(p, q)};
}

// Sorted, duplicate free.
template <class E>
void normalize_primes(std::vector<typename E::PrimeT>& primes);

// Sums P + Q over P in Ass(I^i), Q in Ass(J^j), i, j <= n.
template <class E>
std::vector<typename E::PrimeT> ass_upper_bound(const DecompositionTable<E>& a, const DecompositionTable<E>& b,
                                                unsigned n);

// Sums P + Q over the given stable sets.
template <class E>
std::vector<typename E::PrimeT> ass_stable_set(const std::vector<typename E::PrimeT>& a,
                                               const std::vector<typename E::PrimeT>& b);

// Default search bound: 2 + max generator degree of L.
int default_witness_bound(const Ideal& ideal);

// f with L : f = P, searched among the reduced basis of L : P and then their
// monomial multiples in degree order up to total degree `bound`. A result
// proves P in Ass(R/L); nullopt proves nothing.
std::optional<Polynomial> witness_colon(const Ideal& ideal, const PrimeIdeal& prime, int bound);

constexpr unsigned first_power_associated(unsigned i, unsigned j) { return i + j - 1; }

struct SymbolicPower {
  Ideal ideal;
  Polynomial sat_elem;
  unsigned exponent = 0;
};

// Q^n : sat^inf. Without sat_elem, uses the first variable of Q's block not
// in Q. Throws std::invalid_argument when sat_elem lies in Q or none exists.
SymbolicPower symbolic_power(const PrimeIdeal& prime, unsigned n, std::optional<Polynomial> sat_elem = std::nullopt);

template <class E>
struct AssReport {
  unsigned n = 0;
  Regime regime = E::regime;
  // monomial: exact; general: the witnessed primes only.
  std::vector<typename E::PrimeT> computed_ass;
  std::vector<typename E::PrimeT> upper_bound;
  std::vector<std::pair<typename E::PrimeT, Polynomial>> witnesses;
};

AssReport<MonomialEngine> ass_report(const MonomialTable& a, const MonomialTable& b, unsigned n, int witness_bound);
AssReport<GroebnerEngine> ass_report(const GeneralTable& a, const GeneralTable& b, unsigned n, int witness_bound);

template <class E>
struct PersistenceReport {
  Regime regime = E::regime;
  // ass[n-1]: Ass((I+J)^n) (monomial) or witnessed primes (general).
  std::vector<std::vector<typename E::PrimeT>> ass;
  // ascending[n-1]: Ass((I+J)^(n-1)) within Ass((I+J)^n); true at n = 1.
  std::vector<bool> ascending;
  std::optional<std::vector<bool>> i_normal, j_normal;

  bool persistent() const;
};

PersistenceReport<MonomialEngine> persistence_check(const MonomialIdeal& i, const MonomialIdeal& j, unsigned n_max,
                                                    Execution exec = Execution::parallel);
// Witness mode: candidates are sums of the given primes.
PersistenceReport<GroebnerEngine> persistence_check(const Ideal& i, const Ideal& j,
                                                    const std::vector<PrimeIdeal>& candidates, unsigned n_max,
                                                    int witness_bound);

// Direct computation of Ass((I+J)^n).
PrimeSet ass_of_sum_power(const MonomialIdeal& i, const MonomialIdeal& j, unsigned n);

// Both sides of  cap_k sum_i I_{ik} J_{n-i} = sum_i (cap_k sum_{j>=i} I_{jk}) J_{n-i}
// for a filtration family filtrations[i][k] and a chain chain[i], i = 0..n.
template <class E>
std::pair<typename E::IdealT, typename E::IdealT> intersect_of_sums(
    const std::vector<std::vector<typename E::IdealT>>& filtrations, const std::vector<typename E::IdealT>& chain,
    unsigned n);

}  // namespace idealkit
