#pragma once

#include "reach/postc.hpp"

namespace reach {

/// Exact reachable set at time t for deterministic dynamics
/// xdot = A x + u: e^{At} X0 shifted by phi1(A, t) u, as a lazy
/// support-function composite. Throws for set-valued inputs.
SetPtr reach_at_time(SetPtr x0, const Dynamics& dyn, double t);

struct CrossingSearchParams {
  int discretization = 10;
};

/// Widening-narrowing search for the invariant crossing time: a coarse
/// sweep at T/discretization followed by a refinement pass a decade
/// finer from the last satisfying coarse point. Returns an upper bound
/// on the crossing time; 0 when the violation shows up by the first
/// coarse step; T when the invariant holds over the whole horizon.
double crossing_time(const std::vector<HalfSpace>& inv, SetPtr x0,
                     const Dynamics& dyn, double horizon,
                     CrossingSearchParams params = {});

struct CostEstimate {
  long j = 0;          // invariant-respecting prefix length estimate
  long flow_cost = 0;  // j * |D|
  long jump_cost = 0;  // j
};

/// Cheap pre-computation of the continuous/discrete post costs of a
/// symbolic state. Set-valued inputs fall back to the center dynamics;
/// the estimate steers load balancing only, never truncation.
CostEstimate flow_cost(const SymbolicState& s, const HybridAutomaton& ha,
                       const ReachParams& p);

}  // namespace reach
