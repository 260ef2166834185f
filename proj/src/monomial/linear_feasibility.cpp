#include "idealkit/linear_feasibility.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace idealkit {

namespace {

// Scales so the first nonzero coefficient has absolute value 1. Returns
// false when all coefficients vanish.
bool normalize(LinearConstraint& c) {
  auto it = std::find_if(c.coefficients.begin(), c.coefficients.end(),
                         [](const Rational& q) { return sgn(q) != 0; });
  if (it == c.coefficients.end()) return false;
  Rational scale = abs(*it);
  if (scale != 1) {
    for (auto& q : c.coefficients) q /= scale;
    c.bound /= scale;
  }
  return true;
}

// Constant constraint 0 (<|<=) bound.
bool trivially_satisfied(const LinearConstraint& c) {
  return c.strict ? sgn(c.bound) > 0 : sgn(c.bound) >= 0;
}

// Keeps the tightest constraint for each coefficient vector. Returns false
// when a constant constraint is violated.
bool canonicalize(std::vector<LinearConstraint>& system) {
  std::map<std::vector<Rational>, LinearConstraint> tightest;
  for (auto& c : system) {
    if (!normalize(c)) {
      if (!trivially_satisfied(c)) return false;
      continue;
    }
    auto [it, inserted] = tightest.try_emplace(c.coefficients, c);
    if (inserted) continue;
    auto& best = it->second;
    if (c.bound < best.bound || (c.bound == best.bound && c.strict)) best = c;
  }
  system.clear();
  for (auto& [_, c] : tightest) system.push_back(std::move(c));
  return true;
}

}  // namespace

bool fm_feasible(std::vector<LinearConstraint> system, std::size_t num_vars) {
  for (const auto& c : system)
    if (c.coefficients.size() != num_vars) throw std::invalid_argument("constraint has wrong arity");
  std::vector<bool> eliminated(num_vars, false);
  for (std::size_t round = 0; round < num_vars; ++round) {
    if (!canonicalize(system)) return false;
    // Pick the variable producing the fewest combined constraints.
    std::size_t best = num_vars;
    std::size_t best_cost = 0;
    for (std::size_t v = 0; v < num_vars; ++v) {
      if (eliminated[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& c : system) {
        if (sgn(c.coefficients[v]) > 0) ++pos;
        if (sgn(c.coefficients[v]) < 0) ++neg;
      }
      const std::size_t cost = pos * neg;
      if (best == num_vars || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    eliminated[best] = true;
    std::vector<LinearConstraint> pos, neg, next;
    for (auto& c : system) {
      const int s = sgn(c.coefficients[best]);
      if (s > 0) pos.push_back(std::move(c));
      else if (s < 0) neg.push_back(std::move(c));
      else next.push_back(std::move(c));
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        const Rational wp = -n.coefficients[best];
        const Rational wn = p.coefficients[best];
        LinearConstraint combined;
        combined.coefficients.resize(num_vars);
        for (std::size_t v = 0; v < num_vars; ++v)
          combined.coefficients[v] = wp * p.coefficients[v] + wn * n.coefficients[v];
        combined.coefficients[best] = 0;
        combined.bound = wp * p.bound + wn * n.bound;
        combined.strict = p.strict || n.strict;
        next.push_back(std::move(combined));
      }
    }
    system = std::move(next);
  }
  return canonicalize(system);
}

}  // namespace idealkit
