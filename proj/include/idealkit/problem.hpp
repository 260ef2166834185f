#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealkit/ideal.hpp"
#include "idealkit/sumdecomp.hpp"

namespace idealkit {

// How the decomposition table of I or J is obtained.
//   computed:   primary decompositions of the monomial powers
//   explicit:   `prime` and `component` lines
//   saturation: `table J saturate <element>` for a prime ideal
struct TableSpec {
  enum class Kind { computed, explicit_rows, saturation };
  Kind kind = Kind::computed;
  std::map<std::size_t, std::vector<Polynomial>> primes;                                  // k -> gens
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> components;  // (m, k) -> gens
  std::optional<Polynomial> sat_elem;

  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

// Problem file:
//   ring x1 x2 x3 | y1 y2 y3 order grevlex
//   I: <polynomial list over the x-block>
//   J: <polynomial list over the y-block>
// optionally followed by
//   prime I|J <k>: <list>
//   component I|J <m> <k>: <list>
//   table I|J computed
//   table I|J saturate <polynomial>
//   n: <int>   nmax: <int>   window: <int>   witness-bound: <int>
// Blank lines and lines starting with '#' are ignored.
struct ProblemFile {
  RingPtr ring;
  std::vector<Polynomial> i_gens, j_gens;
  TableSpec i_table, j_table;
  std::optional<unsigned> n, n_max, window;
  std::optional<int> witness_bound;

  Ideal i() const { return Ideal(ring, i_gens); }
  Ideal j() const { return Ideal(ring, j_gens); }
  bool monomial_inputs() const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

// Throws ParseError with a 1-based line and column.
ProblemFile parse_problem(std::string_view text);
std::string print_problem(const ProblemFile& problem);

// Tables built from the problem, to the given depth. Throws
// std::invalid_argument when the regime cannot be served (general ideals
// without an explicit or saturation table) and VerificationFailure when a
// supplied table is not a decomposition.
MonomialTable problem_monomial_table(const ProblemFile& problem, Block block, unsigned depth);
GeneralTable problem_general_table(const ProblemFile& problem, Block block, unsigned depth);

// monomial when both ideals are monomial and both tables are computed.
Regime problem_regime(const ProblemFile& problem);

}  // namespace idealkit
