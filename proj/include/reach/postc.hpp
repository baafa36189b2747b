#pragma once

#include <map>
#include <memory>

#include "reach/automaton.hpp"

namespace reach {

struct ReachParams {
  double time_horizon = 10.0;
  double step = 1e-2;
  TemplateDirections directions;

  int steps() const {
    const int n = static_cast<int>(std::lround(time_horizon / step));
    return n < 1 ? 1 : n;
  }
};

/// Time discretization of one location's dynamics: the step matrix, the
/// per-step input/error bloating set and the initial over-approximation.
struct DiscretizedDynamics {
  Matrix phi;       // e^{A tau}
  SetPtr w;         // tau * U (+) ball(beta)
  SetPtr omega0;    // hull(X0, phi X0 (+) tau U (+) ball(alpha))
};

DiscretizedDynamics discretize(const Dynamics& dyn, SetPtr x0, double tau);

/// Per-location pieces of the discretization that do not depend on the
/// start set; engines build this once per run.
struct LocationCache {
  Matrix phi;
  Matrix phi_t;
  SetPtr tau_u;      // tau * U as a support composite
  double norm_a;     // infinity norm of A
  double sup_u;      // max +/- axis support of U
  double remainder;  // e^{tau |A|} - 1 - tau |A|
};

using DiscretizationCache = std::map<int, LocationCache>;

DiscretizationCache build_cache(const HybridAutomaton& ha, double tau);

/// Flowpipe: the emitted template polytopes Omega_0..Omega_j of one
/// continuous post. Directions hold the template followed by the
/// location's invariant normals; per-omega bounds rows carry the
/// recurrence values for the template followed by the constant
/// invariant offsets (pure tightening).
struct Flowpipe {
  int loc = 0;
  std::shared_ptr<const TemplateDirections> dirs;
  size_t template_size = 0;  // leading entries of each bounds row
  std::vector<std::vector<double>> bounds;
  long support_samples = 0;

  size_t size() const { return bounds.size(); }
  bool empty() const { return bounds.empty(); }
  TemplatePolytope omega(size_t i) const { return {dirs, bounds[i]}; }
};

/// The per-state prelude of a flowpipe computation: discretizes, sweeps
/// the invariant-facing directions to find the longest prefix
/// Omega_0..Omega_j satisfying the location invariant, and fixes the
/// emitted length. Direction tasks then fill in one template direction
/// each; assemble() glues the rows together.
class FlowpipePlan {
 public:
  FlowpipePlan(const SymbolicState& s, const HybridAutomaton& ha,
               const ReachParams& p, const DiscretizationCache* cache = nullptr);

  int emit_count() const { return emit_; }
  int loc() const { return loc_; }
  size_t template_size() const { return p_->directions.dirs.size(); }

  /// Support-value sequence of one template direction over the emitted
  /// prefix (emit_count() values). Thread-safe against itself.
  std::vector<double> direction_sequence(size_t dir_index) const;

  /// Build the flowpipe out of per-direction sequences (ordered as the
  /// template); counts support samples as |D| * emit_count().
  Flowpipe assemble(std::vector<std::vector<double>> sequences) const;

 private:
  const HybridAutomaton* ha_;
  const ReachParams* p_;
  int loc_ = 0;
  int emit_ = 0;
  DiscretizedDynamics dd_;
  Matrix phi_t_;
  std::shared_ptr<TemplateDirections> emitted_dirs_;
  std::vector<double> inv_offsets_;
};

/// The whole continuous-post operator. Empty start sets and start sets
/// violating the invariant produce an empty flowpipe.
Flowpipe compute_flowpipe(const SymbolicState& s, const HybridAutomaton& ha,
                          const ReachParams& p,
                          const DiscretizationCache* cache = nullptr);

/// 2D vertex cycles of every emitted omega, for plotting; empty slices
/// are skipped.
std::vector<std::vector<Point2>> flowpipe_template_union(
    const Flowpipe& f, std::pair<int, int> axes);

}  // namespace reach
