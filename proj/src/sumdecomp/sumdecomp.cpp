#include "idealkit/sumdecomp.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>

#include "idealkit/errors.hpp"

namespace idealkit {

std::string_view regime_name(Regime r) { return r == Regime::monomial ? "monomial" : "general"; }

std::string_view block_name(Block b) { return b == Block::x ? "x" : "y"; }

std::uint64_t block_mask(const Ring& ring, Block b) { return b == Block::x ? ring.x_mask() : ring.y_mask(); }

std::string_view source_name(TableSource s) {
  return s == TableSource::computed ? "computed-monomial" : "user-supplied";
}

std::string_view redundancy_name(Redundancy r) {
  switch (r) {
    case Redundancy::needed:
      return "needed";
    case Redundancy::redundant:
      return "redundant";
    case Redundancy::unknown:
      break;
  }
  return "unknown";
}

// --- engines ----------------------------------------------------------------

std::uint64_t GroebnerEngine::support(const IdealT& a) {
  std::uint64_t mask = 0;
  for (const auto& g : a.generators()) mask |= g.support_mask();
  return mask;
}

GroebnerEngine::PrimeT GroebnerEngine::prime_sum(const PrimeT& p, const PrimeT& q) {
  const bool pv = p.certificate == PrimeCertificate::variable_generated;
  const bool qv = q.certificate == PrimeCertificate::variable_generated;
  if (!pv && !qv)
    throw UnsupportedPair("neither " + ideal_string(p.underlying) + " nor " + ideal_string(q.underlying) +
                          " is generated by variables; minimal primes of the sum are not computed");
  auto s = idealkit::sum(p.underlying, q.underlying);
  return {std::move(s), pv && qv ? PrimeCertificate::variable_generated : PrimeCertificate::sum_with_variable_block};
}

std::string GroebnerEngine::ideal_string(const IdealT& a) {
  const auto& basis = a.reduced_basis();
  if (basis.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) out += ", ";
    out += basis[i].to_string();
  }
  return out + ")";
}

std::string GroebnerEngine::prime_string(const Ring&, const PrimeT& p) { return ideal_string(p.underlying); }

// --- tables -----------------------------------------------------------------

template <class E>
void validate(const DecompositionTable<E>& table) {
  if (table.rows.empty()) throw VerificationFailure("decomposition table without rows");
  const auto block = block_mask(*table.ring, table.block);
  if ((E::support(table.base) & ~block) != 0)
    throw VerificationFailure("base ideal uses variables outside the " + std::string(block_name(table.block)) +
                              "-block");
  for (std::size_t k = 0; k < table.width(); ++k) {
    if ((E::support(E::prime_ideal(table.ring, table.primes[k])) & ~block) != 0)
      throw VerificationFailure("prime " + std::to_string(k + 1) + " leaves the " +
                                std::string(block_name(table.block)) + "-block");
  }
  for (std::size_t m = 0; m < table.rows.size(); ++m) {
    const auto& row = table.rows[m];
    if (row.size() != table.width())
      throw VerificationFailure("row " + std::to_string(m) + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(table.width()));
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (m == 0 && !E::is_unit(row[k])) throw VerificationFailure("row 0 must consist of unit ideals");
      if ((E::support(row[k]) & ~block) != 0)
        throw VerificationFailure("entry (" + std::to_string(m) + ", " + std::to_string(k + 1) + ") leaves the " +
                                  std::string(block_name(table.block)) + "-block");
      if constexpr (E::regime == Regime::monomial) {
        if (!row[k].is_unit() && associated_primes(row[k]) != PrimeSet{table.primes[k]})
          throw VerificationFailure("entry (" + std::to_string(m) + ", " + std::to_string(k + 1) +
                                    ") is not primary to its column prime");
      }
    }
    if (m == 0) continue;
    auto meet = table.width() ? E::intersect(row) : E::unit(table.ring);
    if (!E::equal(meet, E::power(table.base, static_cast<unsigned>(m))))
      throw VerificationFailure("row " + std::to_string(m) + " does not intersect to the " + std::to_string(m) +
                                "-th power of the base ideal");
  }
}

template <class E>
DecompositionTable<E> make_table(Block block, typename E::IdealT base, std::vector<typename E::PrimeT> primes,
                                 std::vector<std::vector<typename E::IdealT>> rows, TableSource source) {
  DecompositionTable<E> t{.block = block,
                          .ring = base.ring(),
                          .base = base,
                          .primes = std::move(primes),
                          .rows = {},
                          .associated = {},
                          .source = source,
                          .filtered = false};
  t.rows.emplace_back(t.primes.size(), E::unit(t.ring));
  for (auto& row : rows) t.rows.push_back(std::move(row));
  for (const auto& row : t.rows) {
    std::vector<bool> assoc;
    for (const auto& entry : row) assoc.push_back(!E::is_unit(entry));
    t.associated.push_back(std::move(assoc));
  }
  validate(t);
  return t;
}

MonomialTable monomial_table(const MonomialIdeal& base, Block block, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("table depth must be at least 1");
  std::vector<std::map<VarSet, MonomialIdeal>> by_power;
  std::set<VarSet> primes;
  MonomialIdeal power = base;
  for (unsigned m = 1; m <= depth; ++m) {
    if (m > 1) power = m_product(power, base);
    std::map<VarSet, MonomialIdeal> comps;
    for (auto& c : primary_decomposition(power)) {
      primes.insert(c.radical_support);
      comps.emplace(c.radical_support, std::move(c.component));
    }
    by_power.push_back(std::move(comps));
  }
  std::vector<VarSet> prime_list(primes.begin(), primes.end());
  std::vector<std::vector<MonomialIdeal>> rows;
  for (const auto& comps : by_power) {
    std::vector<MonomialIdeal> row;
    for (const auto& p : prime_list) {
      auto it = comps.find(p);
      row.push_back(it == comps.end() ? MonomialIdeal::unit(base.ring()) : it->second);
    }
    rows.push_back(std::move(row));
  }
  return make_table<MonomialEngine>(block, base, std::move(prime_list), std::move(rows), TableSource::computed);
}

GeneralTable saturation_table(const Ideal& prime, const Polynomial& sat_elem, Block block, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("table depth must be at least 1");
  const auto& ring = prime.ring();
  if (member(sat_elem, prime)) throw std::invalid_argument("saturation element lies in the prime");
  std::vector<PrimeIdeal> primes{PrimeIdeal::from_ideal(prime),
                                 PrimeIdeal::variables(ring, block_mask(*ring, block))};
  std::vector<std::vector<Ideal>> rows;
  for (unsigned m = 1; m <= depth; ++m) {
    auto p = power(prime, m);
    auto sat = saturate(p, sat_elem);
    auto embedded = sum(p, Ideal(ring, {pow(sat_elem, sat.exponent)}));
    rows.push_back({std::move(sat.ideal), std::move(embedded)});
  }
  return make_table<GroebnerEngine>(block, prime, std::move(primes), std::move(rows), TableSource::computed);
}

GeneralTable to_general(const MonomialTable& table) {
  GeneralTable out{.block = table.block,
                   .ring = table.ring,
                   .base = table.base.to_ideal(),
                   .primes = {},
                   .rows = {},
                   .associated = table.associated,
                   .source = table.source,
                   .filtered = table.filtered};
  for (const auto& p : table.primes) out.primes.push_back(PrimeIdeal::variables(table.ring, p.mask()));
  for (const auto& row : table.rows) {
    std::vector<Ideal> r;
    for (const auto& e : row) r.push_back(e.to_ideal());
    out.rows.push_back(std::move(r));
  }
  return out;
}

template <class E>
std::vector<typename E::IdealT> filtrate_column(const std::vector<typename E::IdealT>& column) {
  std::vector<typename E::IdealT> out = column;
  for (std::size_t m = 1; m < out.size(); ++m) {
    const auto& prev = out[m - 1];
    auto& cur = out[m];
    if (E::is_unit(prev)) continue;
    cur = E::is_unit(cur) ? prev : E::intersect({prev, cur});
  }
  return out;
}

template <class E>
DecompositionTable<E> filtrate(const DecompositionTable<E>& table) {
  if (table.filtered) return table;
  DecompositionTable<E> out = table;
  for (std::size_t k = 0; k < out.width(); ++k) {
    std::vector<typename E::IdealT> column;
    for (const auto& row : out.rows) column.push_back(row[k]);
    column = filtrate_column<E>(column);
    for (std::size_t m = 0; m < out.rows.size(); ++m) out.rows[m][k] = std::move(column[m]);
  }
  validate(out);
  out.filtered = true;
  return out;
}

// --- components -------------------------------------------------------------

namespace {

template <class E>
void require_pair(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n) {
  require_same_ring(a.ring, b.ring, "sum decomposition");
  if (a.block == b.block) throw std::invalid_argument("both tables live in the same variable block");
  if (n > a.depth() || n > b.depth())
    throw std::out_of_range("power " + std::to_string(n) + " exceeds the table depth (" +
                            std::to_string(std::min(a.depth(), b.depth())) + ")");
}

template <class E>
SumComponent<E> component_filtered(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n,
                                   std::size_t k, std::size_t l) {
  if (k < 1 || k > a.width() || l < 1 || l > b.width()) throw std::out_of_range("component index out of range");
  SumComponent<E> c{.n = n,
                    .k = k,
                    .l = l,
                    .ideal = E::unit(a.ring),
                    .target = E::prime_sum(a.primes[k - 1], b.primes[l - 1]),
                    .unit = false,
                    .redundancy = Redundancy::unknown};
  std::optional<typename E::IdealT> acc;
  for (unsigned i = 0; i <= n; ++i) {
    const auto& p = a.rows[i][k - 1];
    const auto& q = b.rows[n - i][l - 1];
    if (E::is_unit(p) && E::is_unit(q)) {
      acc.reset();
      c.unit = true;
      break;
    }
    auto term = E::is_unit(p) ? q : E::is_unit(q) ? p : E::product(p, q);
    acc = acc ? E::sum(*acc, term) : term;
  }
  if (acc) {
    c.ideal = std::move(*acc);
    c.unit = E::is_unit(c.ideal);
  }
  return c;
}

}  // namespace

template <class E>
SumComponent<E> component(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n, std::size_t k,
                          std::size_t l) {
  require_pair(a, b, n);
  if (!a.filtered || !b.filtered) return component_filtered(filtrate(a), filtrate(b), n, k, l);
  return component_filtered(a, b, n, k, l);
}

template <class E>
void normalize_primes(std::vector<typename E::PrimeT>& primes) {
  std::sort(primes.begin(), primes.end(), [](const auto& x, const auto& y) { return E::prime_less(x, y); });
  primes.erase(std::unique(primes.begin(), primes.end(), [](const auto& x, const auto& y) { return E::prime_equal(x, y); }),
               primes.end());
}

template <class E>
std::vector<typename E::PrimeT> PowerDecomposition<E>::irredundant_targets() const {
  std::vector<typename E::PrimeT> out;
  for (const auto& c : components)
    if (!c.unit && c.redundancy != Redundancy::redundant) out.push_back(c.target);
  normalize_primes<E>(out);
  return out;
}

template <class E>
PowerDecomposition<E> power_decomposition(const DecompositionTable<E>& a_in, const DecompositionTable<E>& b_in,
                                          unsigned n, bool verify, Execution exec) {
  require_pair(a_in, b_in, n);
  const auto a = filtrate(a_in);
  const auto b = filtrate(b_in);
  const std::size_t r = a.width(), s = b.width();
  PowerDecomposition<E> out;
  out.n = n;
  std::vector<std::optional<SumComponent<E>>> slots(r * s);
  const auto total = static_cast<std::ptrdiff_t>(slots.size());
  if (exec == Execution::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
      try {
        const auto u = static_cast<std::size_t>(idx);
        slots[u] = component_filtered(a, b, n, u / s + 1, u % s + 1);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t u = 0; u < slots.size(); ++u) slots[u] = component_filtered(a, b, n, u / s + 1, u % s + 1);
  }
  for (auto& slot : slots) out.components.push_back(std::move(*slot));
  if (!verify) return out;

  const auto target = E::power(E::sum(a.base, b.base), n);
  auto intersect_proper = [&](const std::vector<std::size_t>& family) {
    std::vector<typename E::IdealT> parts;
    for (auto i : family) parts.push_back(out.components[i].ideal);
    return parts.empty() ? E::unit(a.ring) : E::intersect(parts);
  };
  std::vector<std::size_t> alive;
  for (std::size_t i = 0; i < out.components.size(); ++i)
    if (!out.components[i].unit) alive.push_back(i);
  if (!E::equal(intersect_proper(alive), target))
    throw VerificationFailure("intersection of the components differs from (I+J)^" + std::to_string(n));
  // Necessity only grows as components are dropped, so one pass suffices.
  for (auto it = alive.rbegin(); it != alive.rend();) {
    const std::size_t cand = *it;
    std::vector<std::size_t> rest;
    for (auto i : alive)
      if (i != cand) rest.push_back(i);
    if (E::equal(intersect_proper(rest), target)) {
      out.components[cand].redundancy = Redundancy::redundant;
      alive = std::move(rest);
      it = std::make_reverse_iterator(std::upper_bound(alive.begin(), alive.end(), cand));
    } else {
      out.components[cand].redundancy = Redundancy::needed;
      ++it;
    }
  }
  out.verified = true;
  return out;
}

template <class E>
std::vector<typename E::PrimeT> ass_upper_bound(const DecompositionTable<E>& a, const DecompositionTable<E>& b,
                                                unsigned n) {
  require_pair(a, b, n);
  auto collect = [n](const DecompositionTable<E>& t) {
    std::vector<typename E::PrimeT> out;
    for (std::size_t k = 0; k < t.width(); ++k)
      for (unsigned i = 1; i <= n; ++i)
        if (t.associated[i][k]) {
          out.push_back(t.primes[k]);
          break;
        }
    return out;
  };
  return ass_stable_set<E>(collect(a), collect(b));
}

template <class E>
std::vector<typename E::PrimeT> ass_stable_set(const std::vector<typename E::PrimeT>& a,
                                               const std::vector<typename E::PrimeT>& b) {
  std::vector<typename E::PrimeT> out;
  for (const auto& p : a)
    for (const auto& q : b)
      for (auto& s : min_primes_of_sum<E>(p, q)) out.push_back(std::move(s));
  normalize_primes<E>(out);
  return out;
}

template <class E>
std::pair<typename E::IdealT, typename E::IdealT> intersect_of_sums(
    const std::vector<std::vector<typename E::IdealT>>& filtrations, const std::vector<typename E::IdealT>& chain,
    unsigned n) {
  if (filtrations.size() < n + 1 || chain.size() < n + 1)
    throw std::invalid_argument("intersect_of_sums needs entries for i = 0..n");
  const std::size_t r = filtrations.front().size();
  if (r == 0) throw std::invalid_argument("intersect_of_sums needs at least one column");
  std::vector<typename E::IdealT> left_parts;
  for (std::size_t k = 0; k < r; ++k) {
    std::optional<typename E::IdealT> acc;
    for (unsigned i = 0; i <= n; ++i) {
      auto t = E::product(filtrations[i][k], chain[n - i]);
      acc = acc ? E::sum(*acc, t) : t;
    }
    left_parts.push_back(std::move(*acc));
  }
  std::optional<typename E::IdealT> right;
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<typename E::IdealT> tilde;
    for (std::size_t k = 0; k < r; ++k) {
      auto acc = filtrations[i][k];
      for (unsigned j = i + 1; j <= n; ++j) acc = E::sum(acc, filtrations[j][k]);
      tilde.push_back(std::move(acc));
    }
    auto t = E::product(E::intersect(tilde), chain[n - i]);
    right = right ? E::sum(*right, t) : t;
  }
  return {E::intersect(left_parts), std::move(*right)};
}

// --- witnesses, symbolic powers ---------------------------------------------

int default_witness_bound(const Ideal& ideal) {
  std::int64_t d = 0;
  for (const auto& g : ideal.generators()) d = std::max(d, g.total_degree());
  return static_cast<int>(d) + 2;
}

std::optional<Polynomial> witness_colon(const Ideal& ideal, const PrimeIdeal& prime, int bound) {
  require_same_ring(ideal.ring(), prime.underlying.ring(), "witness_colon");
  const auto& ring = ideal.ring();
  if (ideal.is_monomial() && prime.certificate == PrimeCertificate::variable_generated) {
    auto m = MonomialIdeal::from_ideal(ideal);
    auto w = monomial_witness(*m, VarSet(prime.underlying.variable_mask()), bound);
    if (!w) return std::nullopt;
    return Polynomial::term(ring, *w);
  }
  auto is_witness = [&](const Polynomial& f) {
    return !member(f, ideal) && equal(colon(ideal, f), prime.underlying);
  };
  const auto base = colon(ideal, prime.underlying).reduced_basis();
  for (const auto& f : base)
    if (is_witness(f)) return f;

  // Multiples f*u, ordered by total degree, then generator, then u.
  struct Candidate {
    std::int64_t degree;
    std::size_t gen;
    Monomial u;
  };
  std::vector<Candidate> candidates;
  const std::size_t nv = ring->num_vars();
  std::vector<Monomial> layer{Monomial(nv)};
  for (int d = 1; !layer.empty(); ++d) {
    std::set<Monomial> next;
    for (const auto& m : layer)
      for (std::size_t v = 0; v < nv; ++v) next.insert(m.with(v, m[v] + 1));
    layer.clear();
    bool any = false;
    for (const auto& u : next)
      for (std::size_t g = 0; g < base.size(); ++g) {
        const auto deg = base[g].total_degree() + d;
        if (deg > bound) continue;
        candidates.push_back({deg, g, u});
        any = true;
      }
    if (!any) break;
    layer.assign(next.begin(), next.end());
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Candidate& x, const Candidate& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.gen != y.gen) return x.gen < y.gen;
    return ring->compare(x.u, y.u) == std::strong_ordering::greater;
  });
  for (const auto& c : candidates) {
    auto f = base[c.gen].times_term(c.u, Rational(1));
    if (is_witness(f)) return f;
  }
  return std::nullopt;
}

SymbolicPower symbolic_power(const PrimeIdeal& prime, unsigned n, std::optional<Polynomial> sat_elem) {
  const auto& q = prime.underlying;
  const auto& ring = q.ring();
  if (!sat_elem) {
    std::uint64_t support = GroebnerEngine::support(q);
    std::uint64_t block = (support & ~ring->y_mask()) == 0 ? ring->y_mask()
                          : (support & ~ring->x_mask()) == 0 ? ring->x_mask()
                                                             : ring->x_mask() | ring->y_mask();
    for (std::size_t v = 0; v < ring->num_vars() && !sat_elem; ++v) {
      if (!(block >> v & 1u)) continue;
      auto x = Polynomial::variable(ring, v);
      if (!member(x, q)) sat_elem = x;
    }
    if (!sat_elem) throw std::invalid_argument("every block variable lies in the prime; pass a saturation element");
  } else if (member(*sat_elem, q)) {
    throw std::invalid_argument("saturation element " + sat_elem->to_string() + " lies in the prime");
  }
  auto sat = saturate(power(q, n), *sat_elem);
  return {std::move(sat.ideal), std::move(*sat_elem), sat.exponent};
}

// --- Ass reports, persistence -----------------------------------------------

PrimeSet ass_of_sum_power(const MonomialIdeal& i, const MonomialIdeal& j, unsigned n) {
  return associated_primes(m_power(m_sum(i, j), n));
}

AssReport<MonomialEngine> ass_report(const MonomialTable& a, const MonomialTable& b, unsigned n, int witness_bound) {
  AssReport<MonomialEngine> rep;
  rep.n = n;
  rep.upper_bound = ass_upper_bound(a, b, n);
  const auto power = m_power(m_sum(a.base, b.base), n);
  const auto ass = associated_primes(power);
  rep.computed_ass.assign(ass.begin(), ass.end());
  for (const auto& p : rep.computed_ass)
    if (auto w = monomial_witness(power, p, witness_bound)) rep.witnesses.emplace_back(p, Polynomial::term(a.ring, *w));
  return rep;
}

AssReport<GroebnerEngine> ass_report(const GeneralTable& a, const GeneralTable& b, unsigned n, int witness_bound) {
  AssReport<GroebnerEngine> rep;
  rep.n = n;
  rep.upper_bound = ass_upper_bound(a, b, n);
  const auto power = idealkit::power(sum(a.base, b.base), n);
  for (const auto& p : rep.upper_bound)
    if (auto w = witness_colon(power, p, witness_bound)) {
      rep.computed_ass.push_back(p);
      rep.witnesses.emplace_back(p, std::move(*w));
    }
  return rep;
}

template <class E>
bool PersistenceReport<E>::persistent() const {
  return std::all_of(ascending.begin(), ascending.end(), [](bool b) { return b; });
}

namespace {

template <class E>
std::vector<bool> ascending_steps(const std::vector<std::vector<typename E::PrimeT>>& ass) {
  std::vector<bool> out;
  for (std::size_t n = 0; n < ass.size(); ++n) {
    if (n == 0) {
      out.push_back(true);
      continue;
    }
    const auto& prev = ass[n - 1];
    const auto& cur = ass[n];
    out.push_back(std::all_of(prev.begin(), prev.end(), [&](const auto& p) {
      return std::any_of(cur.begin(), cur.end(), [&](const auto& q) { return E::prime_equal(p, q); });
    }));
  }
  return out;
}

}  // namespace

PersistenceReport<MonomialEngine> persistence_check(const MonomialIdeal& i, const MonomialIdeal& j, unsigned n_max,
                                                    Execution exec) {
  if (n_max < 1) throw std::invalid_argument("persistence_check: n_max must be at least 1");
  PersistenceReport<MonomialEngine> rep;
  const auto powers = ass_of_powers(m_sum(i, j), n_max, 1, exec);
  for (const auto& s : powers.by_power) rep.ass.emplace_back(s.begin(), s.end());
  rep.ascending = ascending_steps<MonomialEngine>(rep.ass);
  rep.i_normal = is_normal_up_to(i, n_max);
  rep.j_normal = is_normal_up_to(j, n_max);
  return rep;
}

PersistenceReport<GroebnerEngine> persistence_check(const Ideal& i, const Ideal& j,
                                                    const std::vector<PrimeIdeal>& candidates, unsigned n_max,
                                                    int witness_bound) {
  if (n_max < 1) throw std::invalid_argument("persistence_check: n_max must be at least 1");
  PersistenceReport<GroebnerEngine> rep;
  const auto s = sum(i, j);
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto power = idealkit::power(s, n);
    std::vector<PrimeIdeal> found;
    for (const auto& p : candidates)
      if (witness_colon(power, p, witness_bound)) found.push_back(p);
    normalize_primes<GroebnerEngine>(found);
    rep.ass.push_back(std::move(found));
  }
  rep.ascending = ascending_steps<GroebnerEngine>(rep.ass);
  return rep;
}

// --- instantiations ---------------------------------------------------------

#define IDEALKIT_INSTANTIATE(E)                                                                                     \
  template void validate<E>(const DecompositionTable<E>&);                                                          \
  template DecompositionTable<E> make_table<E>(Block, E::IdealT, std::vector<E::PrimeT>,                            \
                                               std::vector<std::vector<E::IdealT>>, TableSource);                   \
  template std::vector<E::IdealT> filtrate_column<E>(const std::vector<E::IdealT>&);                               \
  template DecompositionTable<E> filtrate<E>(const DecompositionTable<E>&);                                         \
  template SumComponent<E> component<E>(const DecompositionTable<E>&, const DecompositionTable<E>&, unsigned,       \
                                        std::size_t, std::size_t);                                                  \
  template struct PowerDecomposition<E>;                                                                            \
  template PowerDecomposition<E> power_decomposition<E>(const DecompositionTable<E>&, const DecompositionTable<E>&, \
                                                        unsigned, bool, Execution);                                 \
  template void normalize_primes<E>(std::vector<E::PrimeT>&);                                                       \
  template std::vector<E::PrimeT> ass_upper_bound<E>(const DecompositionTable<E>&, const DecompositionTable<E>&,    \
                                                     unsigned);                                                     \
  template std::vector<E::PrimeT> ass_stable_set<E>(const std::vector<E::PrimeT>&, const std::vector<E::PrimeT>&);  \
  template struct PersistenceReport<E>;                                                                             \
  template std::pair<E::IdealT, E::IdealT> intersect_of_sums<E>(const std::vector<std::vector<E::IdealT>>&,         \
                                                                const std::vector<E::IdealT>&, unsigned);

IDEALKIT_INSTANTIATE(MonomialEngine)
IDEALKIT_INSTANTIATE(GroebnerEngine)

#undef IDEALKIT_INSTANTIATE

}  // namespace idealkit
