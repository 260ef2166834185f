#include <filesystem>
#include <fstream>
#include <sstream>

#include "idealkit/commands.hpp"
#include "idealkit/errors.hpp"
#include "report_detail.hpp"

#ifndef IDEALKIT_DATA_DIR
#define IDEALKIT_DATA_DIR "data"
#endif

namespace idealkit {

using namespace detail;

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Built {
  Json result = Json::object();
  Regime regime = Regime::monomial;
  Checks checks;
};

template <class E>
Json components_json(const Ring& ring, const PowerDecomposition<E>& d) {
  Json out = Json::array();
  for (const auto& c : d.components) {
    Json j = Json::object();
    j["k"] = c.k;
    j["l"] = c.l;
    j["target"] = prime_json(ring, c.target);
    j["unit"] = c.unit;
    j["redundancy"] = std::string(redundancy_name(c.redundancy));
    j["generators"] = ideal_json(c.ideal);
    out.push_back(std::move(j));
  }
  return out;
}

template <class E>
Json primes_list(const Ring& ring, const std::vector<typename E::PrimeT>& primes) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(prime_json(ring, p));
  return out;
}

std::string n_label(unsigned n) { return "n = " + std::to_string(n); }

// Mirrored pair: monomial I in x and its image J in y.
Built mirrored_pair(const ProblemFile& p, unsigned n) {
  Built b;
  b.regime = Regime::monomial;
  const auto& ring = *p.ring;
  const auto i = problem_monomial_table(p, Block::x, n);
  const auto j = problem_monomial_table(p, Block::y, n);
  b.result["primes"] = {{"I", primes_list<MonomialEngine>(ring, i.primes)},
                        {"J", primes_list<MonomialEngine>(ring, j.primes)}};
  const bool two_each = i.width() == 2 && j.width() == 2;
  b.checks.add("I and J each have two associated primes", two_each);
  bool single_higher = true;
  for (unsigned m = 2; m <= n; ++m)
    for (const auto* t : {&i, &j}) {
      std::size_t count = 0;
      for (std::size_t k = 0; k < t->width(); ++k) count += t->associated[m][k] ? 1 : 0;
      single_higher = single_higher && count == 1;
    }
  if (n >= 2) b.checks.add("higher powers of I and J have one associated prime", single_higher);
  if (!two_each) return b;

  const auto stable = ass_stable_set<MonomialEngine>(i.primes, j.primes);
  const auto first = ass_of_sum_power(i.base, j.base, 1);
  b.checks.add("I+J has four associated primes, the sums P+Q",
               first.size() == 4 && std::equal(first.begin(), first.end(), stable.begin(), stable.end()));
  const VarSet top = i.primes[1] | j.primes[1];
  b.result["top_prime"] = prime_json(ring, top);

  Json powers = Json::array();
  for (unsigned m = 1; m <= n; ++m) {
    const auto d = power_decomposition(i, j, m, true);
    const auto direct = ass_of_sum_power(i.base, j.base, m);
    const auto targets = d.irredundant_targets();
    Json entry = Json::object();
    entry["n"] = m;
    entry["direct_ass"] = Json::array();
    for (const auto& q : direct) entry["direct_ass"].push_back(prime_json(ring, q));
    entry["irredundant_targets"] = primes_list<MonomialEngine>(ring, targets);
    entry["components"] = components_json(ring, d);
    powers.push_back(std::move(entry));

    b.checks.add(n_label(m) + ": components intersect to (I+J)^n", d.verified);
    b.checks.add(n_label(m) + ": construction and direct decomposition give the same Ass",
                 std::equal(direct.begin(), direct.end(), targets.begin(), targets.end()));
    if (m >= 2) {
      b.checks.add(n_label(m) + ": P2+Q2 is not associated to (I+J)^n", !direct.contains(top));
      const auto& c22 = d.components.back();
      b.checks.add(n_label(m) + ": component (2,2) is redundant",
                   c22.k == 2 && c22.l == 2 && c22.redundancy == Redundancy::redundant);
    }
  }
  b.result["powers"] = std::move(powers);
  return b;
}

// Monomial I in x with an explicit table, J the prime of the curve
// (t^3, t^4, t^5) in y with its saturation table.
Built curve_example(const ProblemFile& p, unsigned n) {
  Built b;
  b.regime = Regime::general;
  const auto& ring = p.ring;
  const auto i = problem_general_table(p, Block::x, n);
  const auto j = problem_general_table(p, Block::y, n);
  b.result["primes"] = {{"I", primes_list<GroebnerEngine>(*ring, i.primes)},
                        {"J", primes_list<GroebnerEngine>(*ring, j.primes)}};

  const auto t_ring = Ring::make({"t"}, {});
  const auto t = Polynomial::variable(t_ring, 0);
  std::map<std::string, Polynomial> param;
  const int exps[] = {3, 4, 5};
  for (std::size_t v = 0; v < ring->num_y() && v < 3; ++v)
    param.emplace(ring->var_name(ring->num_x() + v), pow(t, exps[v]));
  bool vanish = ring->num_y() == 3;
  if (vanish)
    for (const auto& g : p.j_gens) vanish = vanish && substitute(g, param, t_ring).is_zero();
  b.checks.add("generators of J vanish on (t^3, t^4, t^5)", vanish);

  const auto q = PrimeIdeal::assumed(p.j());
  const auto sym = symbolic_power(q, 2, p.j_table.sat_elem);
  const auto square = power(p.j(), 2);
  b.result["symbolic_square"] = {{"saturation_element", sym.sat_elem.to_string()},
                                 {"saturation_exponent", sym.exponent},
                                 {"generators", ideal_json(sym.ideal)}};
  b.checks.add("second symbolic power of J strictly contains J^2",
               contains(sym.ideal, square) && !equal(sym.ideal, square));

  const auto d = power_decomposition(i, j, n, true);
  b.result["n"] = n;
  b.result["components"] = components_json(*ring, d);
  b.checks.add(n_label(n) + ": components intersect to (I+J)^n", d.verified);
  bool all_needed = true;
  std::size_t proper = 0;
  for (const auto& c : d.components) {
    if (c.unit) continue;
    ++proper;
    all_needed = all_needed && c.redundancy == Redundancy::needed;
  }
  b.checks.add(n_label(n) + ": dropping any proper component breaks the equality", all_needed,
               std::to_string(proper) + " proper components");

  const auto stable = ass_stable_set<GroebnerEngine>(i.primes, j.primes);
  b.result["stable_set"] = primes_list<GroebnerEngine>(*ring, stable);
  b.checks.add("stable candidate set has four primes", stable.size() == 4);

  const auto bound = p.witness_bound.value_or(default_witness_bound(power(sum(p.i(), p.j()), n)));
  const auto rep = ass_report(i, j, n, bound);
  Json w = Json::array();
  const auto pw = power(sum(p.i(), p.j()), n);
  bool verified = true;
  for (const auto& [prime, f] : rep.witnesses) {
    w.push_back({{"prime", prime_json(*ring, prime)}, {"witness", f.to_string()}});
    verified = verified && !member(f, pw) && equal(colon(pw, f), prime.underlying);
  }
  b.result["upper_bound"] = primes_list<GroebnerEngine>(*ring, rep.upper_bound);
  b.result["witnesses"] = std::move(w);
  b.checks.add(n_label(n) + ": every candidate prime has a verified witness",
               verified && rep.witnesses.size() == rep.upper_bound.size());
  return b;
}

std::string first_difference(const Json& expected, const Json& actual) {
  const auto patch = Json::diff(expected, actual);
  if (patch.empty()) return {};
  return "differs at " + patch.front().value("path", std::string("/"));
}

}  // namespace

Json run_example(std::string_view name, const RunOptions& options) {
  if (name != "ex1" && name != "ex2") throw UsageError("unknown example '" + std::string(name) + "' (ex1 or ex2)");
  const fs::path data = options.data_dir.empty() ? fs::path(IDEALKIT_DATA_DIR) : fs::path(options.data_dir);
  const auto problem_path = data / "problems" / (std::string(name) + ".txt");
  ProblemFile p;
  try {
    p = parse_problem(slurp(problem_path));
  } catch (const ParseError& e) {
    throw UsageError(problem_path.string() + ":" + e.what());
  }
  const unsigned n = options.n.value_or(p.n.value_or(1));
  if (n < 1) throw UsageError("examples need n >= 1");

  Timings timings{options.timings};
  const auto start = std::chrono::steady_clock::now();
  Built built;
  try {
    built = name == "ex2" ? mirrored_pair(p, n) : curve_example(p, n);
  } catch (const VerificationFailure& e) {
    built.checks.add("verification", false, e.what());
    built.result = nullptr;
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  timings.record("example", std::chrono::steady_clock::now() - start);

  Json task = task_json("examples run", p);
  task["example"] = std::string(name);
  task["n"] = n;
  const Json core =
      assemble("examples run", task, built.regime, built.result, built.checks, Timings{});

  const auto golden = data / "golden" / (std::string(name) + "_n" + std::to_string(n) + ".json");
  if (options.update_golden) {
    std::ofstream out(golden, std::ios::binary);
    if (!out) throw UsageError("cannot write " + golden.string());
    out << render_json(core);
    built.checks.add("golden file written", true, golden.filename().string());
  } else if (!fs::exists(golden)) {
    built.checks.add("report matches the golden file", false,
                     golden.filename().string() + " is missing; rerun with --update-golden");
  } else {
    const auto expected = Json::parse(slurp(golden));
    const auto diff = first_difference(expected, core);
    built.checks.add("report matches the golden file", diff.empty(), diff.empty() ? golden.filename().string() : diff);
  }
  return assemble("examples run", std::move(task), built.regime, std::move(built.result), built.checks, timings);
}

}  // namespace idealkit
