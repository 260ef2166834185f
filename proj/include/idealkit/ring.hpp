#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealkit/monomial.hpp"

namespace idealkit {

enum class OrderKind { lex, grevlex, block_elimination };

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  // Number of leading variables eliminated; only meaningful for block_elimination.
  std::size_t eliminated = 0;

  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder block_elimination(std::size_t k) {
    return {OrderKind::block_elimination, k};
  }

  // True when total degree is compared first.
  bool degree_compatible() const { return kind == OrderKind::grevlex; }

  std::string name() const;
  // Accepts "lex", "grevlex", "elim<k>" / "block-elimination(<k>)".
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Named variables split into an x-block and a y-block, plus a monomial order.
// The full ring is the polynomial ring over the rationals in all variables.
class Ring {
 public:
  Ring(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
       MonomialOrder order = MonomialOrder::grevlex());

  static RingPtr make(std::vector<std::string> x_vars, std::vector<std::string> y_vars,
                      MonomialOrder order = MonomialOrder::grevlex());

  std::size_t num_vars() const { return names_.size(); }
  std::size_t num_x() const { return num_x_; }
  std::size_t num_y() const { return names_.size() - num_x_; }
  bool is_x(std::size_t var) const { return var < num_x_; }
  bool is_y(std::size_t var) const { return var >= num_x_ && var < names_.size(); }

  const std::string& var_name(std::size_t var) const { return names_.at(var); }
  const std::vector<std::string>& var_names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  const MonomialOrder& order() const { return order_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return compare_monomials(a, b, order_);
  }

  RingPtr with_order(MonomialOrder order) const;

  // Bitmask of the x-block (resp. y-block) variables.
  std::uint64_t x_mask() const;
  std::uint64_t y_mask() const;

  // "x1 x2 | y1 y2 order grevlex"
  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.num_x_ == b.num_x_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t num_x_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
// Throws RingMismatch unless both rings are equal.
void require_same_ring(const RingPtr& a, const RingPtr& b, std::string_view what);

}  // namespace idealkit
