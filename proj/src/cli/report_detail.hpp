#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "idealkit/commands.hpp"

// Helpers shared by the report builders.
namespace idealkit::detail {

Json ideal_json(const MonomialIdeal& ideal);
// Reduced basis.
Json ideal_json(const Ideal& ideal);
Json polys_json(const std::vector<Polynomial>& gens);
Json prime_json(const Ring& ring, VarSet prime);
Json prime_json(const Ring& ring, const PrimeIdeal& prime);

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void add(std::string name, bool pass, std::string detail = {});
};

struct Timings {
  bool enabled = false;
  Json entries = Json::object();

  void record(const std::string& name, std::chrono::steady_clock::duration d);
  Json json() const;
};

Json assemble(std::string_view command, Json task, std::optional<Regime> regime, Json result, const Checks& checks,
              const Timings& timings);
Json task_json(std::string_view command, const ProblemFile& problem);

}  // namespace idealkit::detail
