#include "idealkit/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace idealkit {

namespace {

void require_same_length(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials of different length");
}

}  // namespace

Monomial::Monomial(std::vector<exponent_type> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::with(std::size_t i, exponent_type e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Monomial out = *this;
  out.degree_ += e - out.exps_.at(i);
  out.exps_[i] = e;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::domain_error("monomial division is not exact");
  Monomial out = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_length(a, b);
  std::vector<Monomial::exponent_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i] - b.exps_[i], 0);
  return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace idealkit
