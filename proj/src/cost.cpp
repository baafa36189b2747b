#include "reach/cost.hpp"

#include <cmath>

namespace reach {

SetPtr reach_at_time(SetPtr x0, const Dynamics& dyn, double t) {
  if (!dyn.deterministic()) {
    throw std::invalid_argument("reach_at_time: input must be deterministic");
  }
  return make_affine_image(mat_exp(dyn.a, t), std::move(x0),
                           phi1(dyn.a, t) * dyn.fixed_u());
}

double crossing_time(const std::vector<HalfSpace>& inv, SetPtr x0,
                     const Dynamics& dyn, double horizon,
                     CrossingSearchParams params) {
  if (params.discretization < 2) {
    throw std::invalid_argument("crossing_time: discretization must be >= 2");
  }
  const double coarse = horizon / params.discretization;

  int i = 0;
  for (;; ++i) {
    const double t = coarse * i;
    if (t > horizon + 1e-12) {
      return horizon;  // never violated within the horizon
    }
    if (!satisfies(*reach_at_time(x0, dyn, t), inv)) break;
  }
  if (i <= 1) return 0.0;

  const double t1 = coarse * (i - 1);
  const double fine = coarse / params.discretization;
  int k = 0;
  while (satisfies(*reach_at_time(x0, dyn, t1 + fine * k), inv)) ++k;
  return t1 + fine * k;
}

CostEstimate flow_cost(const SymbolicState& s, const HybridAutomaton& ha,
                       const ReachParams& p) {
  const Location& loc = ha.location(s.loc);
  Dynamics dyn = loc.dynamics;
  if (!dyn.deterministic()) {
    // Center of the input set's axis-aligned hull.
    const auto& u = *std::get<SetInput>(dyn.input).set;
    const int n = u.dim();
    Vector center(n);
    for (int i = 0; i < n; ++i) {
      Vector e = Vector::Zero(n);
      e(i) = 1.0;
      center(i) = 0.5 * (u.support(e) - u.support(-e));
    }
    dyn.input = FixedInput{center};
  }

  const double t = crossing_time(loc.invariant, s.set, dyn, p.time_horizon);
  const long n_steps = p.steps();
  long j = static_cast<long>(std::ceil(t / p.step - 1e-12));
  if (j < 0) j = 0;
  if (j > n_steps) j = n_steps;

  CostEstimate c;
  c.j = j;
  c.flow_cost = j * static_cast<long>(p.directions.dirs.size());
  c.jump_cost = j;
  return c;
}

}  // namespace reach
