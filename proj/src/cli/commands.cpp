#include "idealkit/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "idealkit/errors.hpp"
#include "idealkit/identity_suites.hpp"
#include "report_detail.hpp"

namespace idealkit {

namespace detail {

Json ideal_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  const auto as_ideal = ideal.to_ideal();
  for (const auto& g : as_ideal.generators()) out.push_back(g.to_string());
  return out;
}

Json ideal_json(const Ideal& ideal) {
  Json out = Json::array();
  for (const auto& g : ideal.reduced_basis()) out.push_back(g.to_string());
  return out;
}

Json polys_json(const std::vector<Polynomial>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

Json prime_json(const Ring& ring, VarSet prime) {
  Json out = Json::array();
  for (auto v : prime.indices()) out.push_back(ring.var_name(v));
  return out;
}

Json prime_json(const Ring&, const PrimeIdeal& prime) { return ideal_json(prime.underlying); }

void Checks::add(std::string name, bool pass, std::string detail) {
  Json c = Json::object();
  c["name"] = std::move(name);
  c["pass"] = pass;
  if (!detail.empty()) c["detail"] = std::move(detail);
  list.push_back(std::move(c));
  ok = ok && pass;
}

Json Timings::json() const { return entries; }

void Timings::record(const std::string& name, std::chrono::steady_clock::duration d) {
  if (!enabled) return;
  entries[name] = std::chrono::duration<double, std::milli>(d).count();
}

Json assemble(std::string_view command, Json task, std::optional<Regime> regime, Json result, const Checks& checks,
              const Timings& timings) {
  Json report = Json::object();
  report["schema"] = "idealkit-report/1";
  report["command"] = std::string(command);
  report["task"] = std::move(task);
  report["regime"] = regime ? Json(std::string(regime_name(*regime))) : Json(nullptr);
  report["result"] = std::move(result);
  report["checks"] = checks.list;
  report["verdict"] = checks.ok ? "PASS" : "FAIL";
  if (timings.enabled) report["timings_ms"] = timings.json();
  return report;
}

Json task_json(std::string_view command, const ProblemFile& p) {
  auto table_kind = [](const TableSpec& s) {
    switch (s.kind) {
      case TableSpec::Kind::computed:
        return "computed";
      case TableSpec::Kind::explicit_rows:
        return "user-supplied";
      case TableSpec::Kind::saturation:
        return "saturation";
    }
    return "";
  };
  Json t = Json::object();
  t["command"] = std::string(command);
  t["ring"] = p.ring->to_string();
  t["I"] = polys_json(p.i_gens);
  t["J"] = polys_json(p.j_gens);
  t["tables"] = {{"I", table_kind(p.i_table)}, {"J", table_kind(p.j_table)}};
  return t;
}

}  // namespace detail

using namespace detail;

namespace {

template <class F>
auto timed(Timings& timings, const std::string& name, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  if constexpr (std::is_void_v<decltype(f())>) {
    f();
    timings.record(name, std::chrono::steady_clock::now() - start);
  } else {
    auto value = f();
    timings.record(name, std::chrono::steady_clock::now() - start);
    return value;
  }
}

unsigned require_n(const ProblemFile& p, const RunOptions& o, std::string_view command) {
  if (o.n) return *o.n;
  if (p.n) return *p.n;
  throw UsageError(std::string(command) + " needs --n or an 'n:' line in the problem file");
}

template <class E>
Json primes_json(const Ring& ring, const std::vector<typename E::PrimeT>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(prime_json(ring, p));
  return out;
}

Json prime_set_json(const Ring& ring, const PrimeSet& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(prime_json(ring, p));
  return out;
}

template <class E>
Json table_json(const DecompositionTable<E>& t) {
  Json out = Json::object();
  out["block"] = std::string(block_name(t.block));
  out["source"] = std::string(source_name(t.source));
  out["primes"] = primes_json<E>(*t.ring, t.primes);
  Json rows = Json::array();
  for (unsigned m = 1; m <= t.depth(); ++m) {
    Json comps = Json::array();
    for (std::size_t k = 0; k < t.width(); ++k) {
      Json c = Json::object();
      c["k"] = k + 1;
      c["associated"] = static_cast<bool>(t.associated[m][k]);
      c["generators"] = ideal_json(t.rows[m][k]);
      comps.push_back(std::move(c));
    }
    rows.push_back({{"m", m}, {"components", std::move(comps)}});
  }
  out["rows"] = std::move(rows);
  return out;
}

template <class E>
Json component_json(const Ring& ring, const SumComponent<E>& c) {
  Json out = Json::object();
  out["k"] = c.k;
  out["l"] = c.l;
  out["target"] = prime_json(ring, c.target);
  out["unit"] = c.unit;
  out["redundancy"] = std::string(redundancy_name(c.redundancy));
  out["generators"] = ideal_json(c.ideal);
  return out;
}

template <class E>
bool same_primes(std::vector<typename E::PrimeT> a, std::vector<typename E::PrimeT> b) {
  normalize_primes<E>(a);
  normalize_primes<E>(b);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!E::prime_equal(a[i], b[i])) return false;
  return true;
}

// Tables for either regime, chosen by the problem.
struct MonomialTables {
  MonomialTable a, b;
};
struct GeneralTables {
  GeneralTable a, b;
};

MonomialTables monomial_tables(const ProblemFile& p, unsigned depth) {
  return {problem_monomial_table(p, Block::x, depth), problem_monomial_table(p, Block::y, depth)};
}

GeneralTables general_tables(const ProblemFile& p, unsigned depth) {
  try {
    return {problem_general_table(p, Block::x, depth), problem_general_table(p, Block::y, depth)};
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const UnsupportedPair& e) {
    throw UsageError(e.what());
  } catch (const VerificationFailure&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// --- gb ----------------------------------------------------------------------

Json cmd_gb(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  const auto i = p.i(), j = p.j();
  const auto s = sum(i, j);
  timed(timings, "groebner", [&] {
    i.reduced_basis();
    j.reduced_basis();
    s.reduced_basis();
  });
  Json r = Json::object();
  r["order"] = p.ring->order().name();
  r["bases"] = {{"I", ideal_json(i)}, {"J", ideal_json(j)}, {"I+J", ideal_json(s)}};
  if (o.verify) {
    auto joined = i.reduced_basis();
    for (const auto& g : j.reduced_basis()) joined.push_back(g);
    std::sort(joined.begin(), joined.end(), [&](const Polynomial& a, const Polynomial& b) {
      return p.ring->compare(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
    });
    const bool unit = i.is_unit() || j.is_unit();
    checks.add("basis of I+J is the union of the bases of I and J", unit || joined == s.reduced_basis());
  }
  return r;
}

// --- decompose ----------------------------------------------------------------

template <class E>
Json decompose_body(const DecompositionTable<E>& a, const DecompositionTable<E>& b, const RunOptions& o,
                    Checks& checks) {
  Json r = Json::object();
  r["depth"] = a.depth();
  r["I"] = table_json(a);
  r["J"] = table_json(b);
  if (o.verify) {
    for (const auto* t : {&a, &b}) {
      const char* label = t == &a ? "I" : "J";
      try {
        validate(*t);
        checks.add(std::string("table of ") + label + " intersects to the powers of " + label, true);
      } catch (const VerificationFailure& e) {
        checks.add(std::string("table of ") + label + " intersects to the powers of " + label, false, e.what());
      }
    }
  }
  return r;
}

Json cmd_decompose(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  const unsigned depth = o.n.value_or(p.n.value_or(1));
  if (depth < 1) throw UsageError("decompose needs n >= 1");
  if (problem_regime(p) == Regime::monomial) {
    auto t = timed(timings, "tables", [&] { return monomial_tables(p, depth); });
    return decompose_body(t.a, t.b, o, checks);
  }
  auto t = timed(timings, "tables", [&] { return general_tables(p, depth); });
  return decompose_body(t.a, t.b, o, checks);
}

// --- power-decomp ---------------------------------------------------------------

template <class E>
Json power_decomp_body(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n,
                       const RunOptions& o, Checks& checks, Timings& timings) {
  Json r = Json::object();
  r["n"] = n;
  PowerDecomposition<E> d;
  try {
    d = timed(timings, "power_decomposition", [&] { return power_decomposition(a, b, n, o.verify); });
  } catch (const VerificationFailure& e) {
    checks.add("components intersect to (I+J)^n", false, e.what());
    r["components"] = nullptr;
    return r;
  }
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(component_json(*a.ring, c));
  r["components"] = std::move(comps);
  r["verified"] = d.verified;
  const auto targets = d.irredundant_targets();
  r["irredundant_targets"] = primes_json<E>(*a.ring, targets);
  if (o.verify) {
    checks.add("components intersect to (I+J)^n", d.verified);
    if constexpr (E::regime == Regime::monomial) {
      const auto direct = timed(timings, "direct_ass", [&] { return ass_of_sum_power(a.base, b.base, n); });
      const std::vector<VarSet> direct_list(direct.begin(), direct.end());
      checks.add("irredundant targets equal Ass((I+J)^n) computed directly",
                 same_primes<E>(targets, direct_list), "direct: " + to_string(direct, *a.ring));
    }
  }
  return r;
}

Json cmd_power_decomp(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  const unsigned n = require_n(p, o, "power-decomp");
  if (n < 1) throw UsageError("power-decomp needs n >= 1");
  if (problem_regime(p) == Regime::monomial) {
    auto t = timed(timings, "tables", [&] { return monomial_tables(p, n); });
    return power_decomp_body(t.a, t.b, n, o, checks, timings);
  }
  auto t = timed(timings, "tables", [&] { return general_tables(p, n); });
  return power_decomp_body(t.a, t.b, n, o, checks, timings);
}

// --- ass ------------------------------------------------------------------------

template <class E>
Json ass_body(const DecompositionTable<E>& a, const DecompositionTable<E>& b, unsigned n, int bound,
              const RunOptions& o, Checks& checks, Timings& timings) {
  const auto rep = timed(timings, "ass", [&] { return ass_report(a, b, n, bound); });
  const Ring& ring = *a.ring;
  Json r = Json::object();
  r["n"] = n;
  r["exact"] = E::regime == Regime::monomial;
  r["witness_bound"] = bound;
  r["ass"] = primes_json<E>(ring, rep.computed_ass);
  r["upper_bound"] = primes_json<E>(ring, rep.upper_bound);
  Json w = Json::array();
  for (const auto& [prime, f] : rep.witnesses) w.push_back({{"prime", prime_json(ring, prime)}, {"witness", f.to_string()}});
  r["witnesses"] = std::move(w);
  if (o.verify) {
    const bool within = std::all_of(rep.computed_ass.begin(), rep.computed_ass.end(), [&](const auto& p) {
      return std::any_of(rep.upper_bound.begin(), rep.upper_bound.end(),
                         [&](const auto& q) { return E::prime_equal(p, q); });
    });
    checks.add("Ass lies within the candidate bound", within);
    const Ideal pw = [&] {
      if constexpr (E::regime == Regime::monomial) return m_power(m_sum(a.base, b.base), n).to_ideal();
      else return idealkit::power(sum(a.base, b.base), n);
    }();
    bool witnessed = true;
    std::string detail;
    timed(timings, "witness_check", [&] {
      for (const auto& [prime, f] : rep.witnesses) {
        const auto& pi = [&]() -> Ideal {
          if constexpr (E::regime == Regime::monomial) return MonomialIdeal::of_variables(a.ring, prime).to_ideal();
          else return prime.underlying;
        }();
        if (member(f, pw) || !equal(colon(pw, f), pi)) {
          witnessed = false;
          detail = "witness " + f.to_string() + " fails";
        }
      }
    });
    checks.add("every witness f satisfies (I+J)^n : f = P", witnessed, detail);
  }
  return r;
}

int witness_bound_for(const ProblemFile& p, const RunOptions& o, unsigned n) {
  if (o.witness_bound) return *o.witness_bound;
  if (p.witness_bound) return *p.witness_bound;
  std::int64_t d = 0;
  for (const auto* gens : {&p.i_gens, &p.j_gens})
    for (const auto& g : *gens) d = std::max(d, g.total_degree());
  return static_cast<int>(d * n) + 2;
}

Json cmd_ass(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  const unsigned n = require_n(p, o, "ass");
  if (n < 1) throw UsageError("ass needs n >= 1");
  const int bound = witness_bound_for(p, o, n);
  if (problem_regime(p) == Regime::monomial) {
    auto t = timed(timings, "tables", [&] { return monomial_tables(p, n); });
    return ass_body(t.a, t.b, n, bound, o, checks, timings);
  }
  auto t = timed(timings, "tables", [&] { return general_tables(p, n); });
  return ass_body(t.a, t.b, n, bound, o, checks, timings);
}

// --- ass-powers -------------------------------------------------------------------

Json ass_powers_json(const Ring& ring, const AssOfPowers& a) {
  Json by = Json::array();
  for (std::size_t n = 0; n < a.by_power.size(); ++n)
    by.push_back({{"n", n + 1}, {"primes", prime_set_json(ring, a.by_power[n])}});
  Json first = Json::array();
  for (const auto& [prime, n] : a.first_power) first.push_back({{"prime", prime_json(ring, prime)}, {"n", n}});
  return {{"by_power", std::move(by)},
          {"stable_estimate", prime_set_json(ring, a.stable_estimate)},
          {"first_power", std::move(first)},
          {"stabilized", a.stabilized}};
}

Json cmd_ass_powers(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  if (problem_regime(p) != Regime::monomial)
    throw UsageError("ass-powers needs monomial I and J with computed tables");
  const unsigned n_max = o.n_max.value_or(p.n_max.value_or(4));
  const unsigned window = o.window.value_or(p.window.value_or(3));
  if (n_max < 1 || window < 1) throw UsageError("ass-powers needs nmax >= 1 and window >= 1");
  const auto i = *MonomialIdeal::from_ideal(p.i());
  const auto j = *MonomialIdeal::from_ideal(p.j());
  const auto ai = timed(timings, "ass_I", [&] { return ass_of_powers(i, n_max, window); });
  const auto aj = timed(timings, "ass_J", [&] { return ass_of_powers(j, n_max, window); });
  const auto as = timed(timings, "ass_I+J", [&] { return ass_of_powers(m_sum(i, j), n_max, window); });
  const Ring& ring = *p.ring;
  const auto stable = ass_stable_set<MonomialEngine>(
      std::vector<VarSet>(ai.stable_estimate.begin(), ai.stable_estimate.end()),
      std::vector<VarSet>(aj.stable_estimate.begin(), aj.stable_estimate.end()));
  Json r = Json::object();
  r["n_max"] = n_max;
  r["window"] = window;
  r["I"] = ass_powers_json(ring, ai);
  r["J"] = ass_powers_json(ring, aj);
  r["I+J"] = ass_powers_json(ring, as);
  r["stable_set"] = primes_json<MonomialEngine>(ring, stable);
  r["cardinality"] = {{"I", ai.stable_estimate.size()},
                      {"J", aj.stable_estimate.size()},
                      {"product", ai.stable_estimate.size() * aj.stable_estimate.size()},
                      {"stable_set", stable.size()},
                      {"I+J", as.stable_estimate.size()}};
  const bool all_stable = ai.stabilized && aj.stabilized && as.stabilized;
  r["law_checked"] = all_stable;
  if (o.verify && all_stable) {
    checks.add("number of stable primes of I+J is the product of those of I and J",
               as.stable_estimate.size() == ai.stable_estimate.size() * aj.stable_estimate.size());
    checks.add("stable primes of I+J are the sums P+Q",
               same_primes<MonomialEngine>(stable, {as.stable_estimate.begin(), as.stable_estimate.end()}));
  }
  return r;
}

// --- symbolic-power -------------------------------------------------------------------

Json cmd_symbolic_power(const ProblemFile& p, const RunOptions& o, Checks& checks, Timings& timings) {
  const unsigned n = require_n(p, o, "symbolic-power");
  if (n < 1) throw UsageError("symbolic-power needs n >= 1");
  const std::string which = o.ideal.value_or("J");
  if (which != "I" && which != "J") throw UsageError("--ideal must be I or J");
  const auto& spec = which == "I" ? p.i_table : p.j_table;
  const Ideal base = which == "I" ? p.i() : p.j();
  const auto prime = PrimeIdeal::from_ideal(base);
  const auto sp = [&] {
    try {
      return timed(timings, "saturation", [&] { return symbolic_power(prime, n, spec.sat_elem); });
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto ordinary = power(base, n);
  const bool strict = !equal(sp.ideal, ordinary);
  Json r = Json::object();
  r["of"] = which;
  r["n"] = n;
  r["certificate"] = std::string(certificate_name(prime.certificate));
  r["saturation_element"] = sp.sat_elem.to_string();
  r["saturation_exponent"] = sp.exponent;
  r["generators"] = ideal_json(sp.ideal);
  r["strictly_contains_ordinary_power"] = strict;
  if (o.verify) checks.add("symbolic power contains the ordinary power", contains(sp.ideal, ordinary));
  return r;
}

// --- persistence --------------------------------------------------------------------

template <class E>
Json persistence_json(const Ring& ring, const PersistenceReport<E>& rep) {
  Json chain = Json::array();
  for (std::size_t n = 0; n < rep.ass.size(); ++n)
    chain.push_back({{"n", n + 1}, {"primes", primes_json<E>(ring, rep.ass[n])}, {"ascending", static_cast<bool>(rep.ascending[n])}});
  Json r = Json::object();
  r["n_max"] = rep.ass.size();
  r["chain"] = std::move(chain);
  r["persistent"] = rep.persistent();
  auto flags = [](const std::optional<std::vector<bool>>& v) -> Json {
    if (!v) return nullptr;
    Json out = Json::array();
    for (bool b : *v) out.push_back(b);
    return out;
  };
  r["I_normal"] = flags(rep.i_normal);
  r["J_normal"] = flags(rep.j_normal);
  return r;
}

Json cmd_persistence(const ProblemFile& p, const RunOptions& o, Checks&, Timings& timings) {
  const unsigned n_max = o.n_max.value_or(p.n_max.value_or(4));
  if (n_max < 1) throw UsageError("persistence needs nmax >= 1");
  if (problem_regime(p) == Regime::monomial) {
    const auto i = *MonomialIdeal::from_ideal(p.i());
    const auto j = *MonomialIdeal::from_ideal(p.j());
    const auto rep = timed(timings, "persistence", [&] { return persistence_check(i, j, n_max); });
    auto r = persistence_json(*p.ring, rep);
    r["mode"] = "exact";
    return r;
  }
  auto t = timed(timings, "tables", [&] { return general_tables(p, 1); });
  std::vector<PrimeIdeal> candidates;
  try {
    candidates = ass_stable_set<GroebnerEngine>(t.a.primes, t.b.primes);
  } catch (const UnsupportedPair& e) {
    throw UsageError(e.what());
  }
  const int bound = witness_bound_for(p, o, n_max);
  const auto rep =
      timed(timings, "persistence", [&] { return persistence_check(p.i(), p.j(), candidates, n_max, bound); });
  auto r = persistence_json(*p.ring, rep);
  r["mode"] = "witness";
  r["witness_bound"] = bound;
  return r;
}

using CommandFn = Json (*)(const ProblemFile&, const RunOptions&, Checks&, Timings&);

struct CommandEntry {
  const char* name;
  CommandFn fn;
};

constexpr CommandEntry kCommands[] = {
    {"gb", cmd_gb},
    {"decompose", cmd_decompose},
    {"power-decomp", cmd_power_decomp},
    {"ass", cmd_ass},
    {"ass-powers", cmd_ass_powers},
    {"symbolic-power", cmd_symbolic_power},
    {"persistence", cmd_persistence},
};

}  // namespace

std::vector<std::string> problem_commands() {
  std::vector<std::string> out;
  for (const auto& c : kCommands) out.emplace_back(c.name);
  return out;
}

ProblemFile with_order(const ProblemFile& problem, std::string_view order) {
  MonomialOrder parsed;
  try {
    parsed = MonomialOrder::parse(order);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
  auto copy = problem;
  copy.ring = problem.ring->with_order(parsed);
  return parse_problem(print_problem(copy));
}

Json run_problem_command(std::string_view command, const ProblemFile& problem, const RunOptions& options) {
  const auto* entry = std::find_if(std::begin(kCommands), std::end(kCommands),
                                   [&](const CommandEntry& c) { return command == c.name; });
  if (entry == std::end(kCommands)) throw UsageError("unknown command '" + std::string(command) + "'");
  const ProblemFile p = options.order ? with_order(problem, *options.order) : problem;
  Checks checks;
  Timings timings{options.timings};
  Json task = task_json(command, p);
  if (options.n) task["n"] = *options.n;
  else if (p.n) task["n"] = *p.n;
  Json result;
  try {
    result = entry->fn(p, options, checks, timings);
  } catch (const VerificationFailure& e) {
    checks.add("verification", false, e.what());
    result = nullptr;
  }
  return assemble(command, std::move(task), problem_regime(p), std::move(result), checks, timings);
}

Json run_verify_lemmas(const RunOptions& options) {
  std::vector<IdentitySuite> suites;
  if (options.suites.empty()) suites = all_suites();
  for (const auto& name : options.suites) {
    auto s = parse_suite(name);
    if (!s) throw UsageError("unknown suite '" + name + "'");
    suites.push_back(*s);
  }
  Checks checks;
  Timings timings{options.timings};
  Json task = Json::object();
  task["command"] = "verify-lemmas";
  task["seed"] = options.seed;
  task["count"] = options.count;
  task["inject_failure"] = options.inject_failure;
  Json list = Json::array();
  for (auto s : suites) {
    const std::string name(suite_name(s));
    const auto res = timed(timings, name, [&] { return run_suite(s, options.seed, options.count, options.inject_failure); });
    Json failures = Json::array();
    for (const auto& f : res.failures)
      failures.push_back({{"instance", f.instance}, {"seed", f.seed}, {"detail", f.detail}});
    list.push_back({{"suite", name},
                    {"instances", res.instances},
                    {"cases", res.cases},
                    {"passed", res.passed},
                    {"failures", std::move(failures)}});
    checks.add(name + ": " + std::to_string(res.passed) + "/" + std::to_string(res.cases) + " cases hold", res.ok());
  }
  Json result = {{"suites", std::move(list)}};
  return assemble("verify-lemmas", std::move(task), std::nullopt, std::move(result), checks, timings);
}

bool report_passed(const Json& report) { return report.at("verdict") == "PASS"; }

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Outcome execute(const Invocation& inv) {
  Outcome out;
  try {
    Json report;
    if (inv.command == "verify-lemmas") {
      report = run_verify_lemmas(inv.options);
    } else if (inv.command == "examples") {
      report = run_example(inv.target, inv.options);
    } else {
      const auto& names = problem_commands();
      if (std::find(names.begin(), names.end(), inv.command) == names.end())
        throw UsageError("unknown command '" + inv.command + "'");
      if (inv.target.empty()) throw UsageError(inv.command + " needs a problem file");
      const auto text = read_file(inv.target);
      ProblemFile problem;
      try {
        problem = parse_problem(text);
      } catch (const ParseError& e) {
        throw UsageError(inv.target + ":" + e.what());
      }
      report = run_problem_command(inv.command, problem, inv.options);
    }
    out.out = inv.json ? render_json(report) : render_human(report);
    out.exit_code = report_passed(report) ? 0 : 2;
  } catch (const UsageError& e) {
    out.exit_code = 1;
    out.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    out.exit_code = 1;
    out.err = "error: " + inv.command + ": " + e.what() + "\n";
  }
  return out;
}

}  // namespace idealkit
