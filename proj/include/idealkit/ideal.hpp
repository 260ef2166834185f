#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealkit/polynomial.hpp"
#include "idealkit/ring.hpp"

namespace idealkit {

// Finitely generated ideal of the ring. Zero generators are dropped on
// construction; the remaining generator order is kept for printing. The
// reduced Groebner basis under the ring order is computed on first use and
// shared between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  static Ideal of_variables(RingPtr ring, std::uint64_t var_mask);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced basis, sorted by ascending leading monomial.
  const std::vector<Polynomial>& reduced_basis() const;
  bool has_cached_basis() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  // All generators are single terms.
  bool is_monomial() const;
  // Nonzero iff every generator is a single variable (coefficient ignored);
  // returns the variable mask, 0 otherwise.
  std::uint64_t variable_mask() const;

  // Same generators in the same variables under another order.
  Ideal reordered(const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct BasisCache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    bool ready = false;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<BasisCache> cache_;
};

// How a prime's primality is known.
enum class PrimeCertificate { variable_generated, assumed_prime, sum_with_variable_block };

std::string_view certificate_name(PrimeCertificate c);

struct PrimeIdeal {
  Ideal underlying;
  PrimeCertificate certificate;

  // Validates the variable-generated certificate.
  static PrimeIdeal variables(RingPtr ring, std::uint64_t var_mask);
  static PrimeIdeal assumed(Ideal ideal);
  static PrimeIdeal from_ideal(Ideal ideal);  // variable-generated if possible, else assumed
};

// Canonical equality key for a prime (printed reduced basis).
std::string prime_key(const PrimeIdeal& p);

// --- Groebner engine --------------------------------------------------------

// Reduced Groebner basis of the generators under the ring's order.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const RingPtr& ring);
// Reduced basis under `order`; the returned polynomials live in the ring
// with that order.
std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order);

// Fully reduced normal form of f modulo a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

bool member(const Polynomial& f, const Ideal& ideal);
bool contains(const Ideal& big, const Ideal& small);
bool equal(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& ideal, unsigned n);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

// Generators of ideal ∩ K[remaining variables], returned in the same ring.
Ideal eliminate(const Ideal& ideal, std::uint64_t var_mask);
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& vars);

// ideal : f. Throws std::domain_error when f is zero.
Ideal colon(const Ideal& ideal, const Polynomial& f);
// ideal : other. Throws std::domain_error when other is the zero ideal.
Ideal colon(const Ideal& ideal, const Ideal& other);

struct Saturation {
  Ideal ideal;
  // Least M with ideal : f^M = ideal : f^(M+1).
  unsigned exponent;
};
Saturation saturate(const Ideal& ideal, const Polynomial& f);

}  // namespace idealkit
