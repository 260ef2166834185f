#pragma once

#include <vector>

#include "idealkit/polynomial.hpp"

namespace idealkit {

// coefficients . x  <=  bound   (or  <  when strict)
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational bound;
  bool strict = false;
};

// Exact feasibility of a system of linear inequalities over the rationals by
// Fourier-Motzkin elimination.
bool fm_feasible(std::vector<LinearConstraint> system, std::size_t num_vars);

}  // namespace idealkit
