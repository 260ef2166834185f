#include "idealkit/ring.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "idealkit/errors.hpp"

namespace idealkit {

namespace {

// Graded reverse lexicographic comparison on variables [begin, end).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin,
                                   std::size_t end) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  const std::size_t n = a.size();
  switch (order.kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case OrderKind::grevlex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    case OrderKind::block_elimination: {
      const std::size_t k = std::min(order.eliminated, n);
      if (auto c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::block_elimination:
      return "elim" + std::to_string(eliminated);
  }
  return "grevlex";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  std::string_view digits;
  if (text.starts_with("elim")) {
    digits = text.substr(4);
  } else if (text.starts_with("block-elimination(") && text.ends_with(")")) {
    digits = text.substr(18, text.size() - 19);
  } else {
    throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
  }
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw std::invalid_argument("bad elimination block size in '" + std::string(text) + "'");
  return block_elimination(k);
}

Ring::Ring(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
           MonomialOrder order)
    : num_x_(x_vars.size()), order_(order) {
  names_ = std::move(x_vars);
  names_.insert(names_.end(), std::make_move_iterator(y_vars.begin()),
                std::make_move_iterator(y_vars.end()));
  if (names_.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  if (order_.kind == OrderKind::block_elimination && order_.eliminated > names_.size())
    throw std::invalid_argument("elimination block larger than the variable count");
}

RingPtr Ring::make(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
                   MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(x_vars), std::move(y_vars), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

RingPtr Ring::with_order(MonomialOrder order) const {
  std::vector<std::string> x(names_.begin(), names_.begin() + static_cast<std::ptrdiff_t>(num_x_));
  std::vector<std::string> y(names_.begin() + static_cast<std::ptrdiff_t>(num_x_), names_.end());
  return make(std::move(x), std::move(y), order);
}

std::uint64_t Ring::x_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < num_x_ && i < 64; ++i) m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t Ring::y_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = num_x_; i < names_.size() && i < 64; ++i) m |= std::uint64_t{1} << i;
  return m;
}

std::string Ring::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_x_; ++i) out += (i ? " " : "") + names_[i];
  out += num_x_ ? " |" : "|";
  for (std::size_t i = num_x_; i < names_.size(); ++i) out += " " + names_[i];
  out += " order " + order_.name();
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what) {
  if (!same_ring(a, b)) throw RingMismatch(std::string(what) + ": operands live in different rings");
}

}  // namespace idealkit
