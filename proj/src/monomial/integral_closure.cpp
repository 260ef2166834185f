#include <algorithm>
#include <functional>
#include <stdexcept>

#include "idealkit/linear_feasibility.hpp"
#include "idealkit/monomial_ideal.hpp"

namespace idealkit {

// m is outside the Newton polyhedron iff some a >= 0 satisfies a.g >= 1 for
// every generator g and a.m < 1 (separating hyperplane; the polyhedron is
// closed upward so its supporting normals are nonnegative). Variables
// outside the generators' support can be fixed to a_i = 0.
bool integral_closure_member(const Monomial& m, const MonomialIdeal& ideal) {
  if (m.size() != ideal.ring()->num_vars()) throw std::invalid_argument("monomial length does not match ring");
  if (ideal.is_zero()) return false;
  if (ideal.contains(m)) return true;
  const auto vars = ideal.support().indices();
  const std::size_t d = vars.size();
  std::vector<LinearConstraint> system;
  for (std::size_t k = 0; k < d; ++k) {
    LinearConstraint c;
    c.coefficients.assign(d, 0);
    c.coefficients[k] = -1;
    c.bound = 0;
    system.push_back(std::move(c));
  }
  for (const auto& g : ideal.generators()) {
    LinearConstraint c;
    c.coefficients.resize(d);
    for (std::size_t k = 0; k < d; ++k) c.coefficients[k] = -g[vars[k]];
    c.bound = -1;
    system.push_back(std::move(c));
  }
  LinearConstraint below;
  below.coefficients.resize(d);
  for (std::size_t k = 0; k < d; ++k) below.coefficients[k] = m[vars[k]];
  below.bound = 1;
  below.strict = true;
  system.push_back(std::move(below));
  return !fm_feasible(std::move(system), d);
}

namespace {

void enumerate_up_to(const std::vector<std::size_t>& vars, std::size_t pos, Monomial current,
                     std::int64_t remaining, const std::function<bool(const Monomial&)>& visit,
                     bool& stop) {
  if (stop) return;
  if (pos == vars.size()) {
    if (!visit(current)) stop = true;
    return;
  }
  for (std::int64_t e = 0; e <= remaining && !stop; ++e)
    enumerate_up_to(vars, pos + 1, current.with(vars[pos], static_cast<Monomial::exponent_type>(e)),
                    remaining - e, visit, stop);
}

}  // namespace

std::vector<bool> is_normal_up_to(const MonomialIdeal& ideal, unsigned n_max) {
  if (n_max < 1) throw std::invalid_argument("is_normal_up_to: n_max must be at least 1");
  std::vector<bool> out;
  const auto vars = ideal.support().indices();
  MonomialIdeal power = MonomialIdeal::unit(ideal.ring());
  for (unsigned n = 1; n <= n_max; ++n) {
    power = m_product(power, ideal);
    if (power.is_zero() || power.is_unit()) {
      out.push_back(true);
      continue;
    }
    // A minimal generator u of the closure sits above a point p of the
    // Newton polyhedron with u_i < p_i + 1, so deg u <= maxdeg + #vars - 1.
    const std::int64_t bound = power.max_degree() + static_cast<std::int64_t>(vars.size()) - 1;
    bool closed = true;
    bool stop = false;
    enumerate_up_to(vars, 0, Monomial(ideal.ring()->num_vars()), bound,
                    [&](const Monomial& m) {
                      if (!power.contains(m) && integral_closure_member(m, power)) {
                        closed = false;
                        return false;
                      }
                      return true;
                    },
                    stop);
    out.push_back(closed);
  }
  return out;
}

}  // namespace idealkit
