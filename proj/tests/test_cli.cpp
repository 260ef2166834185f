#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "idealkit/commands.hpp"
#include "idealkit/errors.hpp"
#include "idealkit/identity_suites.hpp"
#include "idealkit/random.hpp"

using namespace idealkit;
namespace fs = std::filesystem;

namespace {

const std::string kData = IDEALKIT_TEST_DATA_DIR;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / ("idealkit_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto path = temp_dir() / name;
  std::ofstream(path) << text;
  return path;
}

RunOptions with_data() {
  RunOptions o;
  o.data_dir = kData;
  return o;
}

Outcome run(std::string command, std::string target, RunOptions o = with_data(), bool json = true) {
  return execute({std::move(command), std::move(target), std::move(o), json});
}

std::vector<std::string> strings(const Json& a) {
  std::vector<std::string> out;
  for (const auto& e : a) out.push_back(e.get<std::string>());
  return out;
}

const std::string kMinimal = "ring x1 | y1\nI: x1\nJ: y1\n";

}  // namespace

TEST_CASE("minimal problem parses") {
  const auto p = parse_problem(kMinimal);
  CHECK(p.ring->num_x() == 1);
  CHECK(p.ring->order() == MonomialOrder::grevlex());
  REQUIRE(p.i_gens.size() == 1);
  CHECK(p.i_gens[0].to_string() == "x1");
  CHECK(p.j_gens[0].to_string() == "y1");
  CHECK(problem_regime(p) == Regime::monomial);
}

TEST_CASE("block violations point at the offending variable") {
  try {
    parse_problem("ring x1 x2 | y1 y2\nI: x1^2\nJ: y1 + y2*x1, y2\n");
    FAIL("expected a block violation");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 12);
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_problem("ring x1 | y1\nI: y1\nJ: y1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring x1 | y1\nI: x1\nJ: y1\ntable J saturate x1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring x1 | y1\nI: x1\nJ: y1\nprime I 1: y1\n"), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
  struct Case {
    std::string text;
    std::size_t line, column;
  };
  const std::vector<Case> cases = {
      {"I: x1\n", 1, 1},
      {"ring x1 y1\nI: x1\nJ: y1\n", 1, 11},
      {"ring x1 | y1 order sideways\nI: x1\nJ: y1\n", 1, 20},
      {"ring x1 | y1\nI x1\nJ: y1\n", 2, 5},
      {"ring x1 | y1\nI: x1\nJ: y1\nfoo: 3\n", 4, 1},
      {"ring x1 | y1\nI: x1\nJ: y1\nn: three\n", 4, 4},
      {"ring x1 | y1\n\n# comment\nI: x1 +* 2\nJ: y1\n", 4, 0},
      {"ring x1 | y1\nI: x1\n", 3, 1},
      {"ring x1 | y1\nI: x1\nJ: y1\ncomponent I 0 1: x1\n", 4, 13},
      {"ring x1 | y1\nI: x1\nJ: y1\nprime I 2: x1\n", 5, 1},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    try {
      parse_problem(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == c.line);
      if (c.column) CHECK(e.column() == c.column);
      CHECK(e.column() >= 1);
    }
  }
}

TEST_CASE("parser is total on random input") {
  Rng rng(7);
  const std::string alphabet = "ringxyIJ|:,^*+-/0123456789 \n#ptablecomponentsaturate";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text = trial % 2 ? "ring x1 x2 | y1 y2\n" : "";
    const auto len = rng.uniform(0, 60);
    for (std::int64_t i = 0; i < len; ++i)
      text += alphabet[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(alphabet.size()) - 1))];
    try {
      parse_problem(text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
    } catch (const std::exception& e) {
      FAIL("non-parse exception: " << e.what() << " on\n" << text);
    }
  }
}

TEST_CASE("mirrored pair fixture parses to its ideals") {
  const auto p = parse_problem(slurp(fs::path(kData) / "problems/ex2.txt"));
  CHECK(p.ring->to_string() == "x1 x2 x3 | y1 y2 y3 order grevlex");
  std::vector<std::string> i, j;
  for (const auto& g : p.i_gens) i.push_back(g.to_string());
  for (const auto& g : p.j_gens) j.push_back(g.to_string());
  CHECK(i == std::vector<std::string>{"x1^4", "x1^3*x2", "x1^2*x2^2*x3", "x1*x2^3", "x2^4"});
  CHECK(j == std::vector<std::string>{"y1^4", "y1^3*y2", "y1^2*y2^2*y3", "y1*y2^3", "y2^4"});
  CHECK(p.n == 3u);
  CHECK(problem_regime(p) == Regime::monomial);
}

TEST_CASE("curve fixture parses with its tables") {
  const auto p = parse_problem(slurp(fs::path(kData) / "problems/ex1.txt"));
  CHECK(p.i_table.kind == TableSpec::Kind::explicit_rows);
  CHECK(p.i_table.primes.size() == 2);
  CHECK(p.i_table.components.size() == 4);
  CHECK(p.j_table.kind == TableSpec::Kind::saturation);
  CHECK(p.j_table.sat_elem->to_string() == "y1");
  CHECK(p.j_gens.size() == 3);
  CHECK(problem_regime(p) == Regime::general);
  const auto t = problem_general_table(p, Block::x, 2);
  CHECK(t.width() == 2);
  CHECK(t.source == TableSource::user_supplied);
  CHECK_THROWS_AS(problem_general_table(p, Block::x, 3), std::out_of_range);
}

TEST_CASE("print and parse round-trip") {
  for (const char* name : {"ex1", "ex2"}) {
    const auto p = parse_problem(slurp(fs::path(kData) / "problems" / (std::string(name) + ".txt")));
    CHECK(parse_problem(print_problem(p)) == p);
  }
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ring = Ring::make({"x1", "x2"}, {"y1", "y2", "y3"},
                                 trial % 3 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex());
    ProblemFile p;
    p.ring = ring;
    RandomPolyShape xs{.var_mask = ring->x_mask(), .max_terms = 3, .max_degree = 3, .max_coefficient = 5,
                       .allow_constant = true};
    RandomPolyShape ys = xs;
    ys.var_mask = ring->y_mask();
    for (int g = 0; g < 3; ++g) {
      p.i_gens.push_back(random_polynomial(rng, ring, xs));
      p.j_gens.push_back(random_polynomial(rng, ring, ys));
    }
    if (trial % 2) p.n = static_cast<unsigned>(trial);
    if (trial % 5 == 0) {
      p.j_table.kind = TableSpec::Kind::saturation;
      p.j_table.sat_elem = Polynomial::variable(ring, 2);
    }
    if (trial % 7 == 0) {
      p.i_table.kind = TableSpec::Kind::explicit_rows;
      p.i_table.primes[1] = {Polynomial::variable(ring, 0)};
      p.i_table.components[{1, 1}] = {random_polynomial(rng, ring, xs)};
    }
    CAPTURE(print_problem(p));
    CHECK(parse_problem(print_problem(p)) == p);
  }
}

TEST_CASE("ass of (x1) + (y1)") {
  const auto path = write_temp("minimal.txt", kMinimal);
  RunOptions o;
  o.n = 1;
  const auto out = run("ass", path.string(), o);
  REQUIRE(out.exit_code == 0);
  const auto report = Json::parse(out.out);
  REQUIRE(report["result"]["ass"].size() == 1);
  CHECK(strings(report["result"]["ass"][0]) == std::vector<std::string>{"x1", "y1"});
  CHECK(report["regime"] == "monomial");
}

TEST_CASE("power-decomp on the mirrored pair") {
  RunOptions o;
  o.n = 2;
  const auto out = run("power-decomp", kData + "/problems/ex2.txt", o);
  REQUIRE(out.exit_code == 0);
  const auto report = Json::parse(out.out);
  const auto& comps = report["result"]["components"];
  REQUIRE(comps.size() == 4);
  int redundant = 0;
  for (const auto& c : comps) redundant += c["redundancy"] == "redundant";
  CHECK(redundant == 1);
  CHECK(comps[3]["redundancy"] == "redundant");
  CHECK(report["verdict"] == "PASS");
}

TEST_CASE("every problem command runs on both fixtures") {
  for (const auto& command : problem_commands()) {
    for (const char* file : {"ex1", "ex2"}) {
      CAPTURE(command);
      CAPTURE(file);
      RunOptions o;
      o.n = command == "symbolic-power" ? 2 : 1;
      o.n_max = 2;
      const auto out = run(command, kData + "/problems/" + file + ".txt", o);
      if (command == "ass-powers" && std::string(file) == "ex1") {
        CHECK(out.exit_code == 1);
        CHECK(out.out.empty());
        continue;
      }
      CHECK(out.exit_code == 0);
      CHECK(out.err.empty());
    }
  }
}

TEST_CASE("examples reproduce their golden reports") {
  RunOptions o = with_data();
  o.n = 3;
  const auto ex2 = run("examples", "ex2", o);
  CHECK(ex2.exit_code == 0);
  const auto report = Json::parse(ex2.out);
  CHECK(report["verdict"] == "PASS");
  CHECK(report["checks"].back()["name"] == "report matches the golden file");
  const auto ex1 = run("examples", "ex1");
  CHECK(ex1.exit_code == 0);
  o.n = 7;
  const auto missing = run("examples", "ex2", o);
  CHECK(missing.exit_code == 2);
  CHECK(run("examples", "ex9").exit_code == 1);
}

TEST_CASE("golden drift is detected") {
  const auto dir = temp_dir() / "data";
  fs::create_directories(dir / "golden");
  fs::copy(fs::path(kData) / "problems", dir / "problems",
           fs::copy_options::recursive | fs::copy_options::overwrite_existing);
  auto golden = Json::parse(slurp(fs::path(kData) / "golden/ex2_n3.json"));
  golden["result"]["powers"][1]["components"][3]["redundancy"] = "needed";
  std::ofstream(dir / "golden/ex2_n3.json") << golden.dump(2);
  RunOptions o;
  o.data_dir = dir.string();
  const auto drift = run("examples", "ex2", o);
  CHECK(drift.exit_code == 2);
  CHECK(drift.out.find("/result/powers/1/components/3/redundancy") != std::string::npos);
  o.update_golden = true;
  CHECK(run("examples", "ex2", o).exit_code == 0);
  o.update_golden = false;
  CHECK(run("examples", "ex2", o).exit_code == 0);
}

TEST_CASE("exit codes") {
  const auto minimal = write_temp("minimal.txt", kMinimal).string();
  SUBCASE("usage errors print no report") {
    for (const auto& out : {run("frobnicate", minimal), run("power-decomp", minimal), run("ass", "/nonexistent.txt"),
                            run("gb", write_temp("bad.txt", "ring x1 | y1\nI: y1\nJ: y1\n").string())}) {
      CHECK(out.exit_code == 1);
      CHECK(out.out.empty());
      CHECK(!out.err.empty());
    }
    RunOptions o;
    o.order = "sideways";
    CHECK(run("gb", minimal, o).exit_code == 1);
    RunOptions s;
    s.suites = {"no-such-suite"};
    CHECK(run("verify-lemmas", "", s).exit_code == 1);
  }
  SUBCASE("general ideals without a table") {
    const auto general = write_temp("general.txt", "ring x1 x2 | y1 y2\nI: x1^2 - x2\nJ: y1\n").string();
    RunOptions o;
    o.n = 1;
    const auto out = run("power-decomp", general, o);
    CHECK(out.exit_code == 1);
    CHECK(out.err.find("not monomial") != std::string::npos);
    CHECK(run("gb", general).exit_code == 0);
  }
  SUBCASE("a wrong supplied table is a verification failure") {
    const auto wrong = write_temp("wrong.txt",
                                  "ring x1 x2 | y1\nI: x1^2, x1*x2\nJ: y1\nprime I 1: x1\ncomponent I 1 1: x1^2\n")
                           .string();
    RunOptions o;
    o.n = 1;
    const auto out = run("power-decomp", wrong, o);
    CHECK(out.exit_code == 2);
    const auto report = Json::parse(out.out);
    CHECK(report["verdict"] == "FAIL");
    CHECK(report["result"].is_null());
  }
}

TEST_CASE("reports are deterministic") {
  RunOptions o;
  o.n = 2;
  o.n_max = 3;
  for (const char* command : {"gb", "decompose", "power-decomp", "ass", "ass-powers", "persistence"}) {
    CAPTURE(command);
    const auto a = run(command, kData + "/problems/ex2.txt", o);
    const auto b = run(command, kData + "/problems/ex2.txt", o);
    CHECK(a.out == b.out);
    CHECK(run(command, kData + "/problems/ex2.txt", o, false).out ==
          run(command, kData + "/problems/ex2.txt", o, false).out);
  }
  RunOptions v;
  v.seed = 5;
  v.count = 4;
  CHECK(run("verify-lemmas", "", v).out == run("verify-lemmas", "", v).out);
}

TEST_CASE("human output renders the same tree") {
  RunOptions o;
  o.n = 2;
  const auto json = Json::parse(run("power-decomp", kData + "/problems/ex2.txt", o).out);
  const auto human = run("power-decomp", kData + "/problems/ex2.txt", o, false).out;
  CHECK(human.find("verdict: PASS") != std::string::npos);
  for (const auto& c : json["checks"]) CHECK(human.find(c["name"].get<std::string>()) != std::string::npos);
  CHECK(human.find("target: (x1, x2, x3, y1, y2, y3)") != std::string::npos);
  CHECK(render_human(json) == human);
}

TEST_CASE("order override") {
  const auto path = write_temp("order.txt", "ring x1 x2 | y1 order grevlex\nI: x1^2 - x2^3, x1*x2\nJ: y1\n").string();
  RunOptions o;
  o.order = "lex";
  const auto report = Json::parse(run("gb", path, o).out);
  CHECK(report["result"]["order"] == "lex");
  CHECK(report["task"]["ring"] == "x1 x2 | y1 order lex");
  CHECK(report["verdict"] == "PASS");
  const auto p = with_order(parse_problem(slurp(path)), "lex");
  CHECK(p.ring->order() == MonomialOrder::lex());
}

TEST_CASE("identity suites") {
  SUBCASE("count 0 is an empty pass") {
    RunOptions o;
    o.count = 0;
    const auto out = run("verify-lemmas", "", o);
    CHECK(out.exit_code == 0);
    const auto report = Json::parse(out.out);
    for (const auto& s : report["result"]["suites"]) CHECK(s["cases"] == 0);
  }
  SUBCASE("seed 0, 25 sum-intersection instances") {
    const auto r = run_suite(IdentitySuite::sum_intersection, 0, 25);
    CHECK(r.cases == 25);
    CHECK(r.passed == 25);
  }
  SUBCASE("all suites at seed 0") {
    for (auto s : all_suites()) {
      CAPTURE(suite_name(s));
      const auto r = run_suite(s, 0, 25);
      CHECK(r.ok());
      CHECK(r.cases == (s == IdentitySuite::power_of_sum ? 75u : 25u));
    }
  }
  SUBCASE("injected failures are reported with seeds") {
    RunOptions o;
    o.count = 3;
    o.inject_failure = true;
    const auto out = run("verify-lemmas", "", o);
    CHECK(out.exit_code == 2);
    const auto report = Json::parse(out.out);
    for (const auto& s : report["result"]["suites"]) {
      CHECK(s["passed"] == 0);
      REQUIRE(s["failures"].size() == s["cases"].get<std::size_t>());
      const auto& f = s["failures"][0];
      CHECK(f["seed"] == instance_seed(0, f["instance"].get<std::uint64_t>()));
      CHECK(!f["detail"].get<std::string>().empty());
    }
  }
  SUBCASE("suite names") {
    for (auto s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
    CHECK(!parse_suite("nope"));
  }
}

TEST_CASE("timings only on request") {
  RunOptions o;
  o.n = 1;
  const auto plain = Json::parse(run("ass", kData + "/problems/ex2.txt", o).out);
  CHECK(!plain.contains("timings_ms"));
  o.timings = true;
  const auto timed = Json::parse(run("ass", kData + "/problems/ex2.txt", o).out);
  CHECK(timed.contains("timings_ms"));
}
