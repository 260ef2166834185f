#include "idealkit/problem.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "idealkit/errors.hpp"
#include "idealkit/poly_io.hpp"

namespace idealkit {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

// Whitespace-separated words with their 0-based offsets.
std::vector<std::pair<std::string_view, std::size_t>> words(std::string_view s, std::size_t base = 0) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t pos = 0;
  while (true) {
    pos = skip_space(s, pos);
    if (pos >= s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    out.emplace_back(s.substr(pos, end - pos), base + pos);
    pos = end;
  }
  return out;
}

unsigned parse_natural(std::string_view word, std::size_t line, std::size_t column, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + std::string(word) + "'",
                     line, column);
  return value;
}

Block parse_block(std::string_view word, std::size_t line, std::size_t column) {
  if (word == "I") return Block::x;
  if (word == "J") return Block::y;
  throw ParseError("expected I or J, got '" + std::string(word) + "'", line, column);
}

// Column of the first occurrence of a variable name in the line.
std::size_t find_variable(std::string_view text, std::string_view name, std::size_t from) {
  for (std::size_t pos = text.find(name, from); pos != std::string_view::npos; pos = text.find(name, pos + 1)) {
    const bool left = pos == 0 || !is_ident(text[pos - 1]);
    const bool right = pos + name.size() >= text.size() || !is_ident(text[pos + name.size()]);
    if (left && right) return pos + 1;
  }
  return from + 1;
}

void require_block(const std::vector<Polynomial>& gens, const Ring& ring, Block block, const Line& line,
                   std::size_t list_start) {
  const std::uint64_t allowed = block_mask(ring, block);
  for (const auto& g : gens) {
    const std::uint64_t bad = g.support_mask() & ~allowed;
    if (!bad) continue;
    const auto var = static_cast<std::size_t>(std::countr_zero(bad));
    const auto& name = ring.var_name(var);
    throw ParseError("variable " + name + " is not in the " + std::string(block_name(block)) +
                         "-block; " + (block == Block::x ? "I" : "J") + " must use only " +
                         std::string(block_name(block)) + "-variables",
                     line.number, find_variable(line.text, name, list_start));
  }
}

RingPtr parse_ring(const Line& line) {
  auto ws = words(line.text);
  std::vector<std::string> xs, ys;
  std::optional<MonomialOrder> order;
  int part = 0;  // 0: x names, 1: y names, 2: after 'order'
  for (std::size_t i = 1; i < ws.size(); ++i) {
    const auto [w, off] = ws[i];
    if (part == 2) {
      if (order) throw ParseError("unexpected text after the order", line.number, off + 1);
      try {
        order = MonomialOrder::parse(w);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), line.number, off + 1);
      }
      continue;
    }
    if (w == "|") {
      if (part != 0) throw ParseError("second '|' in ring declaration", line.number, off + 1);
      part = 1;
    } else if (w == "order") {
      if (part != 1) throw ParseError("ring declaration needs 'x-variables | y-variables' before 'order'",
                                      line.number, off + 1);
      part = 2;
    } else {
      if (!std::all_of(w.begin(), w.end(), is_ident) || std::isdigit(static_cast<unsigned char>(w[0])))
        throw ParseError("invalid variable name '" + std::string(w) + "'", line.number, off + 1);
      (part == 0 ? xs : ys).emplace_back(w);
    }
  }
  if (part == 0) throw ParseError("ring declaration needs '|' between the blocks", line.number, line.text.size() + 1);
  if (part == 2 && !order) throw ParseError("missing order name", line.number, line.text.size() + 1);
  try {
    return Ring::make(std::move(xs), std::move(ys), order.value_or(MonomialOrder::grevlex()));
  } catch (const std::exception& e) {
    throw ParseError(e.what(), line.number, 1);
  }
}

std::string join(const std::vector<Polynomial>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].to_string();
  }
  return out;
}

}  // namespace

bool ProblemFile::monomial_inputs() const {
  auto mono = [](const std::vector<Polynomial>& gens) {
    return std::all_of(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_monomial(); });
  };
  return mono(i_gens) && mono(j_gens);
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  const bool rings = (a.ring && b.ring) ? *a.ring == *b.ring : a.ring == b.ring;
  return rings && a.i_gens == b.i_gens && a.j_gens == b.j_gens && a.i_table == b.i_table &&
         a.j_table == b.j_table && a.n == b.n && a.n_max == b.n_max && a.window == b.window &&
         a.witness_bound == b.witness_bound;
}

ProblemFile parse_problem(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    const auto first = skip_space(line, 0);
    if (first < line.size() && line[first] != '#') lines.push_back({number, line});
    start = end + 1;
  }

  ProblemFile p;
  bool have_i = false, have_j = false;
  for (const auto& line : lines) {
    const auto ws = words(line.text);
    const auto [head, head_off] = ws.front();
    if (!p.ring) {
      if (head != "ring") throw ParseError("the first line must declare the ring", line.number, head_off + 1);
      p.ring = parse_ring(line);
      continue;
    }
    if (head == "ring") throw ParseError("duplicate ring declaration", line.number, head_off + 1);

    const auto colon = line.text.find(':');
    if (head == "table") {
      if (ws.size() < 3) throw ParseError("expected 'table I|J computed' or 'table I|J saturate <element>'",
                                          line.number, line.text.size() + 1);
      const Block block = parse_block(ws[1].first, line.number, ws[1].second + 1);
      auto& spec = block == Block::x ? p.i_table : p.j_table;
      if (spec.kind != TableSpec::Kind::computed || spec.sat_elem)
        throw ParseError("table kind declared twice", line.number, head_off + 1);
      if (ws[2].first == "computed") {
        if (ws.size() != 3) throw ParseError("unexpected text after 'computed'", line.number, ws[3].second + 1);
      } else if (ws[2].first == "saturate") {
        if (ws.size() < 4) throw ParseError("missing saturation element", line.number, line.text.size() + 1);
        const std::size_t at = ws[3].second;
        auto f = parse_polynomial(line.text.substr(at), p.ring, line.number, at);
        require_block({f}, *p.ring, block, line, at);
        spec.kind = TableSpec::Kind::saturation;
        spec.sat_elem = std::move(f);
      } else {
        throw ParseError("unknown table kind '" + std::string(ws[2].first) + "'", line.number, ws[2].second + 1);
      }
      continue;
    }
    if (colon == std::string_view::npos) throw ParseError("expected ':'", line.number, line.text.size() + 1);
    const auto key = line.text.substr(0, colon);
    const auto kw = words(key);
    if (kw.empty()) throw ParseError("missing key before ':'", line.number, colon + 1);
    const auto value = line.text.substr(colon + 1);
    const std::size_t value_off = colon + 1;
    const auto name = kw[0].first;

    if (name == "I" || name == "J") {
      if (kw.size() != 1) throw ParseError("unexpected text before ':'", line.number, kw[1].second + 1);
      const Block block = name == "I" ? Block::x : Block::y;
      bool& seen = block == Block::x ? have_i : have_j;
      if (seen) throw ParseError("duplicate " + std::string(name) + " line", line.number, kw[0].second + 1);
      seen = true;
      auto gens = parse_polynomial_list(value, p.ring, line.number, value_off);
      require_block(gens, *p.ring, block, line, value_off);
      (block == Block::x ? p.i_gens : p.j_gens) = std::move(gens);
    } else if (name == "prime" || name == "component") {
      const std::size_t expected = name == "prime" ? 3 : 4;
      if (kw.size() != expected)
        throw ParseError(name == "prime" ? "expected 'prime I|J <k>:'" : "expected 'component I|J <m> <k>:'",
                         line.number, kw[0].second + 1);
      const Block block = parse_block(kw[1].first, line.number, kw[1].second + 1);
      auto& spec = block == Block::x ? p.i_table : p.j_table;
      if (spec.kind == TableSpec::Kind::saturation)
        throw ParseError("explicit rows conflict with the saturation table", line.number, kw[0].second + 1);
      spec.kind = TableSpec::Kind::explicit_rows;
      auto gens = parse_polynomial_list(value, p.ring, line.number, value_off);
      require_block(gens, *p.ring, block, line, value_off);
      if (name == "prime") {
        const auto k = parse_natural(kw[2].first, line.number, kw[2].second + 1, "the prime index");
        if (k == 0) throw ParseError("prime indices start at 1", line.number, kw[2].second + 1);
        if (!spec.primes.emplace(k, std::move(gens)).second)
          throw ParseError("duplicate prime " + std::to_string(k), line.number, kw[2].second + 1);
      } else {
        const auto m = parse_natural(kw[2].first, line.number, kw[2].second + 1, "the power");
        const auto k = parse_natural(kw[3].first, line.number, kw[3].second + 1, "the prime index");
        if (m == 0) throw ParseError("row 0 is always the unit ideal; rows start at 1", line.number, kw[2].second + 1);
        if (k == 0) throw ParseError("prime indices start at 1", line.number, kw[3].second + 1);
        if (!spec.components.emplace(std::pair<std::size_t, std::size_t>{m, k}, std::move(gens)).second)
          throw ParseError("duplicate component", line.number, kw[0].second + 1);
      }
    } else if (name == "n" || name == "nmax" || name == "window" || name == "witness-bound") {
      if (kw.size() != 1) throw ParseError("unexpected text before ':'", line.number, kw[1].second + 1);
      const auto vw = words(value, value_off);
      if (vw.size() != 1) throw ParseError("expected a single integer", line.number, value_off + 1);
      const unsigned v = parse_natural(vw[0].first, line.number, vw[0].second + 1, std::string(name).c_str());
      auto set = [&](auto& slot, auto val) {
        if (slot) throw ParseError("duplicate " + std::string(name) + " line", line.number, kw[0].second + 1);
        slot = val;
      };
      if (name == "n") set(p.n, v);
      else if (name == "nmax") set(p.n_max, v);
      else if (name == "window") set(p.window, v);
      else set(p.witness_bound, static_cast<int>(v));
    } else {
      throw ParseError("unknown directive '" + std::string(name) + "'", line.number, kw[0].second + 1);
    }
  }
  const std::size_t end_line = number;
  if (!p.ring) throw ParseError("missing ring declaration", end_line, 1);
  if (!have_i) throw ParseError("missing I line", end_line, 1);
  if (!have_j) throw ParseError("missing J line", end_line, 1);
  for (const auto* spec : {&p.i_table, &p.j_table}) {
    if (spec->kind != TableSpec::Kind::explicit_rows) continue;
    const char* which = spec == &p.i_table ? "I" : "J";
    if (spec->primes.empty()) throw ParseError(std::string("explicit table for ") + which + " has no primes", end_line, 1);
    if (spec->primes.rbegin()->first != spec->primes.size())
      throw ParseError(std::string("primes of ") + which + " must be numbered 1..r", end_line, 1);
  }
  return p;
}

std::string print_problem(const ProblemFile& p) {
  std::ostringstream out;
  out << "ring " << p.ring->to_string() << "\n";
  out << "I: " << join(p.i_gens) << "\n";
  out << "J: " << join(p.j_gens) << "\n";
  for (const auto& [label, spec] : {std::pair{"I", &p.i_table}, std::pair{"J", &p.j_table}}) {
    switch (spec->kind) {
      case TableSpec::Kind::computed:
        break;
      case TableSpec::Kind::saturation:
        out << "table " << label << " saturate " << spec->sat_elem->to_string() << "\n";
        break;
      case TableSpec::Kind::explicit_rows:
        for (const auto& [k, gens] : spec->primes) out << "prime " << label << " " << k << ": " << join(gens) << "\n";
        for (const auto& [mk, gens] : spec->components)
          out << "component " << label << " " << mk.first << " " << mk.second << ": " << join(gens) << "\n";
        break;
    }
  }
  if (p.n) out << "n: " << *p.n << "\n";
  if (p.n_max) out << "nmax: " << *p.n_max << "\n";
  if (p.window) out << "window: " << *p.window << "\n";
  if (p.witness_bound) out << "witness-bound: " << *p.witness_bound << "\n";
  return out.str();
}

Regime problem_regime(const ProblemFile& p) {
  return p.monomial_inputs() && p.i_table.kind == TableSpec::Kind::computed &&
                 p.j_table.kind == TableSpec::Kind::computed
             ? Regime::monomial
             : Regime::general;
}

MonomialTable problem_monomial_table(const ProblemFile& p, Block block, unsigned depth) {
  const auto& spec = block == Block::x ? p.i_table : p.j_table;
  if (spec.kind != TableSpec::Kind::computed)
    throw std::invalid_argument("the monomial regime needs computed tables");
  auto m = MonomialIdeal::from_ideal(block == Block::x ? p.i() : p.j());
  if (!m) throw std::invalid_argument("the monomial regime needs monomial ideals");
  return monomial_table(*m, block, depth);
}

GeneralTable problem_general_table(const ProblemFile& p, Block block, unsigned depth) {
  const auto& spec = block == Block::x ? p.i_table : p.j_table;
  const char* label = block == Block::x ? "I" : "J";
  const Ideal base = block == Block::x ? p.i() : p.j();
  switch (spec.kind) {
    case TableSpec::Kind::computed: {
      auto m = MonomialIdeal::from_ideal(base);
      if (!m)
        throw std::invalid_argument(std::string(label) +
                                    " is not monomial; supply its table with 'prime'/'component' lines or "
                                    "'table " + label + " saturate <element>'");
      return to_general(monomial_table(*m, block, depth));
    }
    case TableSpec::Kind::saturation:
      return saturation_table(base, *spec.sat_elem, block, depth);
    case TableSpec::Kind::explicit_rows:
      break;
  }
  std::size_t table_depth = 0;
  for (const auto& [mk, _] : spec.components) table_depth = std::max(table_depth, mk.first);
  if (depth > table_depth)
    throw std::out_of_range("power " + std::to_string(depth) + " exceeds the depth of the supplied " + label +
                            " table (" + std::to_string(table_depth) + ")");
  std::vector<PrimeIdeal> primes;
  for (const auto& [k, gens] : spec.primes) primes.push_back(PrimeIdeal::from_ideal(Ideal(p.ring, gens)));
  std::vector<std::vector<Ideal>> rows;
  for (std::size_t m = 1; m <= depth; ++m) {
    std::vector<Ideal> row;
    for (std::size_t k = 1; k <= primes.size(); ++k) {
      auto it = spec.components.find({m, k});
      if (it == spec.components.end())
        throw std::invalid_argument("supplied " + std::string(label) + " table lacks component " + std::to_string(m) +
                                    " " + std::to_string(k));
      row.emplace_back(p.ring, it->second);
    }
    rows.push_back(std::move(row));
  }
  return make_table<GroebnerEngine>(block, base, std::move(primes), std::move(rows), TableSource::user_supplied);
}

}  // namespace idealkit
