#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace idealkit {

// Exponent vector of fixed length (one entry per ring variable).
class Monomial {
 public:
  using exponent_type = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<exponent_type> exps);
  Monomial(std::initializer_list<exponent_type> exps)
      : Monomial(std::vector<exponent_type>(exps)) {}

  std::size_t size() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  std::span<const exponent_type> exponents() const { return exps_; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial with(std::size_t i, exponent_type e) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // Support as a bitmask; only valid for rings with at most 64 variables.
  std::uint64_t support_mask() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; throws std::domain_error when b does not divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  // Componentwise max(a - b, 0), i.e. a / gcd(a, b).
  friend Monomial colon(const Monomial& a, const Monomial& b);

  // Lexicographic on the raw exponent vector; used for containers only,
  // never as a monomial order.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<exponent_type> exps_;
  std::int64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace idealkit
