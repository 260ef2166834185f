#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "idealkit/commands.hpp"

int main(int argc, char** argv) {
  using idealkit::Invocation;

  CLI::App app{"idealkit: decompositions and associated primes of powers of I + J"};
  app.require_subcommand(1);
  Invocation inv;
  auto& o = inv.options;

  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", inv.json, "Print the report as JSON");
    cmd->add_flag("--verify,!--no-verify", o.verify, "Verify results exactly (default on)");
    cmd->add_flag("--timings", o.timings, "Add wall-clock timings to the report");
  };
  auto problem_opts = [&](CLI::App* cmd) {
    cmd->add_option("problem", inv.target, "Problem file")->required();
    cmd->add_option("--n", o.n, "Power of I + J");
    cmd->add_option("--nmax", o.n_max, "Largest power examined");
    cmd->add_option("--order", o.order, "Monomial order: lex, grevlex, elim<k>");
    cmd->add_option("--window", o.window, "Powers with constant Ass before calling it stable");
    cmd->add_option("--witness-bound", o.witness_bound, "Degree bound for witness search");
    common(cmd);
  };

  const std::map<std::string, std::string> about = {
      {"gb", "Reduced Groebner bases of I, J and I + J"},
      {"decompose", "Decomposition tables of the powers of I and J"},
      {"power-decomp", "Primary components of (I + J)^n and their redundancy"},
      {"ass", "Associated primes of (I + J)^n with witnesses"},
      {"ass-powers", "Ass of successive powers and the stable sets"},
      {"symbolic-power", "Symbolic power of I or J by saturation"},
      {"persistence", "Ass chains of (I + J)^n and normality of I and J"},
  };
  for (const auto& name : idealkit::problem_commands()) {
    auto* cmd = app.add_subcommand(name, about.at(name));
    problem_opts(cmd);
    if (name == "symbolic-power") cmd->add_option("--ideal", o.ideal, "I or J (default J)");
    cmd->callback([&inv, name] { inv.command = name; });
  }

  auto* identities = app.add_subcommand("verify-lemmas", "Randomized identity suites");
  identities->add_option("--seed", o.seed, "Base seed");
  identities->add_option("--count", o.count, "Instances per suite");
  identities->add_option("--suite", o.suites, "Suites to run (default all)");
  identities->add_flag("--inject-failure", o.inject_failure, "Break every identity on purpose");
  common(identities);
  identities->callback([&] { inv.command = "verify-lemmas"; });

  auto* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  auto* run = examples->add_subcommand("run", "Reproduce an example and compare with its golden report");
  run->add_option("name", inv.target, "ex1 or ex2")->required();
  run->add_option("--n", o.n, "Power of I + J");
  run->add_flag("--update-golden", o.update_golden, "Rewrite the golden report");
  run->add_option("--data-dir", o.data_dir, "Directory holding problems/ and golden/");
  common(run);
  run->callback([&] { inv.command = "examples"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const auto outcome = idealkit::execute(inv);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
