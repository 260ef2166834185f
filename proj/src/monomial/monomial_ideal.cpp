#include "idealkit/monomial_ideal.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>
#include <stdexcept>

#include "idealkit/errors.hpp"

namespace idealkit {

// --- VarSet -----------------------------------------------------------------

int VarSet::size() const { return std::popcount(mask_); }

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < 64; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::strong_ordering operator<=>(VarSet a, VarSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.indices() <=> b.indices();
}

std::string VarSet::to_string(const Ring& ring) const {
  std::string out = "(";
  bool first = true;
  for (auto v : indices()) {
    if (!first) out += ", ";
    out += ring.var_name(v);
    first = false;
  }
  return out + ")";
}

std::string to_string(const PrimeSet& primes, const Ring& ring) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : primes) {
    if (!first) out += ", ";
    out += p.to_string(ring);
    first = false;
  }
  return out + "}";
}

// --- min_gens kernels -------------------------------------------------------

namespace {

bool by_degree(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a < b;
}

void sort_unique_by_degree(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), by_degree);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

void sort_canonical(const Ring& ring, std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [&](const Monomial& a, const Monomial& b) {
    return ring.compare(a, b) == std::strong_ordering::greater;
  });
}

// Serial reference: keep a candidate unless an earlier (lower degree) kept
// generator divides it.
std::vector<Monomial> min_gens_serial(std::vector<Monomial> gens) {
  sort_unique_by_degree(gens);
  std::vector<Monomial> kept;
  for (auto& m : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

// OpenMP kernel: each candidate independently tests all earlier candidates.
std::vector<Monomial> min_gens_parallel(std::vector<Monomial> gens) {
  sort_unique_by_degree(gens);
  const auto n = static_cast<std::ptrdiff_t>(gens.size());
  std::vector<char> redundant(gens.size(), 0);
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_cap())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < i; ++j) {
      if (gens[static_cast<std::size_t>(j)].degree() == gens[static_cast<std::size_t>(i)].degree()) break;
      if (gens[static_cast<std::size_t>(j)].divides(gens[static_cast<std::size_t>(i)])) {
        redundant[static_cast<std::size_t>(i)] = 1;
        break;
      }
    }
  }
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!redundant[i]) kept.push_back(std::move(gens[i]));
  return kept;
}

constexpr std::size_t kParallelMinGensThreshold = 512;

}  // namespace

std::vector<Monomial> min_gens(const Ring& ring, std::vector<Monomial> gens, Execution exec) {
  for (const auto& g : gens)
    if (g.size() != ring.num_vars()) throw std::invalid_argument("monomial length does not match ring");
  auto kept = (exec == Execution::parallel && gens.size() >= kParallelMinGensThreshold)
                  ? min_gens_parallel(std::move(gens))
                  : min_gens_serial(std::move(gens));
  sort_canonical(ring, kept);
  return kept;
}

MonomialIdeal min_gens(const RingPtr& ring, std::vector<Monomial> gens, Execution exec) {
  return MonomialIdeal(ring, std::move(gens), exec);
}

// --- MonomialIdeal ----------------------------------------------------------

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators, Execution exec)
    : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("monomial ideal without a ring");
  gens_ = min_gens(*ring_, std::move(generators), exec);
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> minimal, Canonical)
    : ring_(std::move(ring)), gens_(std::move(minimal)) {}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  Monomial one(ring->num_vars());
  return MonomialIdeal(std::move(ring), {std::move(one)}, Canonical{});
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}, Canonical{}); }

MonomialIdeal MonomialIdeal::of_variables(RingPtr ring, VarSet vars) {
  std::vector<Monomial> gens;
  for (auto v : vars.indices()) gens.push_back(Monomial(ring->num_vars()).with(v, 1));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal& ideal) {
  if (!ideal.is_monomial()) return std::nullopt;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.leading_monomial());
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

VarSet MonomialIdeal::support() const {
  std::uint64_t mask = 0;
  for (const auto& g : gens_) mask |= g.support_mask();
  return VarSet(mask);
}

std::int64_t MonomialIdeal::max_degree() const {
  std::int64_t d = -1;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

Ideal MonomialIdeal::to_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::term(ring_, g));
  return Ideal(ring_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += Polynomial::term(ring_, gens_[i]).to_string();
  }
  return out + ")";
}

// --- ideal algebra ----------------------------------------------------------

MonomialIdeal m_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "m_sum");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal m_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "m_product");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal m_power(const MonomialIdeal& a, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (unsigned k = 0; k < n; ++k) result = m_product(result, a);
  return result;
}

MonomialIdeal m_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "m_intersect");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal m_intersect(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersection of an empty family");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = m_intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal m_colon(const MonomialIdeal& a, const Monomial& m) {
  if (m.size() != a.ring()->num_vars()) throw std::invalid_argument("monomial length does not match ring");
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal m_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "m_colon");
  if (b.is_zero()) throw std::domain_error("colon by the zero ideal");
  std::vector<MonomialIdeal> parts;
  for (const auto& h : b.generators()) parts.push_back(m_colon(a, h));
  return m_intersect(parts);
}

bool m_contains(const MonomialIdeal& big, const MonomialIdeal& small) {
  require_same_ring(big.ring(), small.ring(), "m_contains");
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Monomial& g) { return big.contains(g); });
}

// --- decompositions ---------------------------------------------------------

namespace {

// Irreducible ideal (x_i^{b_i} : b_i > 0); a zero entry means "absent".
using Corner = std::vector<Monomial::exponent_type>;

bool corner_contains(const Corner& b, const Monomial& g) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0 && g[i] >= b[i]) return true;
  return false;
}

// Q_b ⊆ Q_c
bool corner_included(const Corner& b, const Corner& c) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0 && (c[i] == 0 || c[i] > b[i])) return false;
  return true;
}

std::uint64_t corner_support(const Corner& b) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

// Incremental computation: the decomposition of (G, g) is obtained from that
// of (G) by splitting every component that misses g along the support of g.
std::vector<Corner> irreducible_corners(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->num_vars();
  std::vector<Monomial> gens = ideal.generators();
  sort_unique_by_degree(gens);
  std::vector<Corner> comps{Corner(n, 0)};
  for (const auto& g : gens) {
    std::vector<Corner> kept, fresh;
    for (auto& b : comps) {
      if (corner_contains(b, g)) {
        kept.push_back(std::move(b));
        continue;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0) continue;
        Corner c = b;
        c[i] = g[i];
        fresh.push_back(std::move(c));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    std::vector<Corner> next = kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool redundant = std::any_of(kept.begin(), kept.end(),
                                   [&](const Corner& k) { return corner_included(k, fresh[a]); });
      for (std::size_t b = 0; b < fresh.size() && !redundant; ++b)
        if (b != a && corner_included(fresh[b], fresh[a])) redundant = true;
      if (!redundant) next.push_back(fresh[a]);
    }
    comps = std::move(next);
  }
  std::sort(comps.begin(), comps.end(), [](const Corner& a, const Corner& b) {
    VarSet sa(corner_support(a)), sb(corner_support(b));
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return comps;
}

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("decomposition of the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("decomposition of the unit ideal");
}

MonomialIdeal corner_ideal(const RingPtr& ring, const Corner& b) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i] > 0) gens.push_back(Monomial(b.size()).with(i, b[i]));
  return MonomialIdeal(ring, std::move(gens));
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::vector<MonomialIdeal> out;
  for (const auto& b : irreducible_corners(ideal)) out.push_back(corner_ideal(ideal.ring(), b));
  return out;
}

std::vector<MonomialPrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  std::map<VarSet, std::vector<MonomialIdeal>> groups;
  for (const auto& b : irreducible_corners(ideal))
    groups[VarSet(corner_support(b))].push_back(corner_ideal(ideal.ring(), b));
  std::vector<MonomialPrimaryComponent> out;
  for (auto& [support, parts] : groups) out.push_back({m_intersect(parts), support});
  return out;
}

PrimeSet associated_primes(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal);
  PrimeSet out;
  for (const auto& b : irreducible_corners(ideal)) out.insert(VarSet(corner_support(b)));
  return out;
}

AssOfPowers ass_of_powers(const MonomialIdeal& ideal, unsigned n_max, unsigned window, Execution exec) {
  if (n_max < 1) throw std::invalid_argument("ass_of_powers: n_max must be at least 1");
  if (window < 1) throw std::invalid_argument("ass_of_powers: window must be at least 1");
  require_proper_nonzero(ideal);
  std::vector<MonomialIdeal> powers{ideal};
  for (unsigned n = 2; n <= n_max; ++n) powers.push_back(m_product(powers.back(), ideal));

  AssOfPowers out;
  out.window = window;
  out.n_max = n_max;
  out.by_power.resize(n_max);
  if (exec == Execution::parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
    for (int n = static_cast<int>(n_max) - 1; n >= 0; --n) {
      try {
        out.by_power[static_cast<std::size_t>(n)] = associated_primes(powers[static_cast<std::size_t>(n)]);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (unsigned n = 0; n < n_max; ++n) out.by_power[n] = associated_primes(powers[n]);
  }
  for (unsigned n = 1; n <= n_max; ++n)
    for (const auto& p : out.by_power[n - 1]) {
      out.stable_estimate.insert(p);
      out.first_power.try_emplace(p, n);
    }
  if (n_max >= window) {
    out.stabilized = true;
    for (unsigned n = n_max - window + 1; n < n_max; ++n)
      if (out.by_power[n - 1] != out.by_power[n_max - 1]) out.stabilized = false;
  }
  return out;
}

std::optional<Monomial> monomial_witness(const MonomialIdeal& ideal, VarSet prime, int bound) {
  const auto& ring = ideal.ring();
  const auto target = MonomialIdeal::of_variables(ring, prime);
  const auto quotient = m_colon(ideal, target);
  auto is_witness = [&](const Monomial& w) { return !ideal.contains(w) && m_colon(ideal, w) == target; };

  std::vector<Monomial> first = quotient.generators();
  std::sort(first.begin(), first.end(), by_degree);
  for (const auto& w : first)
    if (is_witness(w)) return w;

  // Monomial multiples of the quotient generators, in degree order.
  std::vector<Monomial> frontier = first;
  std::vector<Monomial> seen = first;
  std::sort(seen.begin(), seen.end());
  const std::size_t n = ring->num_vars();
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (m.degree() >= bound) continue;
      for (std::size_t v = 0; v < n; ++v) {
        Monomial up = m.with(v, m[v] + 1);
        auto it = std::lower_bound(seen.begin(), seen.end(), up);
        if (it != seen.end() && *it == up) continue;
        seen.insert(it, up);
        next.push_back(std::move(up));
      }
    }
    std::sort(next.begin(), next.end(), by_degree);
    for (const auto& w : next)
      if (is_witness(w)) return w;
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace idealkit
