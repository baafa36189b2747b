#pragma once

#include <optional>

#include "reach/postc.hpp"

namespace reach {

/// Ascending indices i with satisfies(Omega_i, guard) under the
/// per-constraint support test (sound, possibly over-inclusive).
std::vector<int> guard_hits(const Flowpipe& f, const Transition& t);

/// Intersect one emitted omega with the guard, apply the assignment
/// map, hull the image over the template and tighten with the target
/// invariant. Empty intersection -> nullopt. The returned polytope's
/// directions are the template followed by the target invariant
/// normals.
std::optional<TemplatePolytope> apply_jump(
    const Flowpipe& f, size_t omega_index, const Transition& t,
    std::shared_ptr<const TemplateDirections> tmpl, const HybridAutomaton& ha);

/// One discrete-post successor: the symbolic state, its polytope (the
/// bounds rows are compared across engines), and provenance.
struct Successor {
  int transition_index = -1;
  SymbolicState state;
  std::shared_ptr<const TemplateDirections> dirs;
  std::vector<double> bounds;
};

/// One atomic jump task: the guard test plus intersection, map and
/// template hull for a single omega. nullopt when the omega misses the
/// guard or the intersection is empty. The bounds cover the template
/// only (no invariant rows yet).
std::optional<std::vector<double>> jump_task(const Flowpipe& f,
                                             size_t omega_index,
                                             const Transition& t,
                                             const TemplateDirections& tmpl);

/// Turn the nonempty pieces of one transition into successors:
/// aggregate merges them by per-direction max into at most one
/// successor, otherwise each piece stands alone. Tightens with the
/// target invariant and drops successors that fail its test.
std::vector<Successor> finalize_pieces(
    int transition_index, const Transition& t, const HybridAutomaton& ha,
    std::shared_ptr<const TemplateDirections> tmpl,
    std::vector<std::vector<double>> pieces, bool aggregate);

struct PostDResult {
  std::vector<Successor> successors;
  long jump_tasks = 0;  // emitted omega count per transition considered
};

/// Discrete post of a whole flowpipe. With aggregate on (default) the
/// nonempty images of one transition merge into a single successor by
/// per-direction max; with aggregate off every nonempty image becomes
/// its own successor. Successors failing the target invariant test (or
/// empty after tightening) are dropped.
PostDResult post_d(const Flowpipe& f, const HybridAutomaton& ha,
                   std::shared_ptr<const TemplateDirections> tmpl,
                   bool aggregate);

}  // namespace reach
