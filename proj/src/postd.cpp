#include "reach/postd.hpp"

#include <algorithm>

namespace reach {

std::vector<int> guard_hits(const Flowpipe& f, const Transition& t) {
  std::vector<int> hits;
  for (size_t i = 0; i < f.size(); ++i) {
    if (hpoly_satisfies(f.omega(i).constraints(), t.guard)) {
      hits.push_back(static_cast<int>(i));
    }
  }
  return hits;
}

namespace {

// Image template bounds of M (omega ∩ guard) + v, or nullopt when the
// intersection is infeasible.
std::optional<std::vector<double>> image_bounds(
    const Flowpipe& f, size_t omega_index, const Transition& t,
    const TemplateDirections& tmpl) {
  HPoly p = poly_intersect(f.omega(omega_index), t.guard);
  std::vector<double> bounds;
  bounds.reserve(tmpl.dirs.size());
  const Matrix mt = t.map.m.transpose();
  for (const auto& d : tmpl.dirs) {
    auto s = hpoly_support(p, mt * d);
    if (!s) return std::nullopt;  // empty piece
    bounds.push_back(*s + d.dot(t.map.v));
  }
  return bounds;
}

std::optional<Successor> make_successor(
    int transition_index, const Transition& t, const HybridAutomaton& ha,
    std::shared_ptr<const TemplateDirections> tmpl, std::vector<double> bounds) {
  const auto& inv = ha.location(t.target).invariant;

  // Drop successors whose hull misses the target invariant.
  HPoly hull;
  for (size_t i = 0; i < tmpl->dirs.size(); ++i) {
    hull.push_back({tmpl->dirs[i], bounds[i]});
  }
  if (!hpoly_satisfies(hull, inv)) return std::nullopt;

  auto dirs = std::make_shared<TemplateDirections>(*tmpl);
  for (const auto& h : inv) {
    dirs->dirs.push_back(h.normal);
    bounds.push_back(h.offset);
  }
  HPoly full;
  for (size_t i = 0; i < dirs->dirs.size(); ++i) {
    full.push_back({dirs->dirs[i], bounds[i]});
  }
  if (hpoly_empty(full)) return std::nullopt;  // per-constraint test gap

  Successor s;
  s.transition_index = transition_index;
  s.state = SymbolicState{t.target, make_polytope(full)};
  s.dirs = std::move(dirs);
  s.bounds = std::move(bounds);
  return s;
}

}  // namespace

std::optional<std::vector<double>> jump_task(const Flowpipe& f,
                                             size_t omega_index,
                                             const Transition& t,
                                             const TemplateDirections& tmpl) {
  if (!hpoly_satisfies(f.omega(omega_index).constraints(), t.guard)) {
    return std::nullopt;
  }
  return image_bounds(f, omega_index, t, tmpl);
}

std::vector<Successor> finalize_pieces(
    int transition_index, const Transition& t, const HybridAutomaton& ha,
    std::shared_ptr<const TemplateDirections> tmpl,
    std::vector<std::vector<double>> pieces, bool aggregate) {
  std::vector<Successor> out;
  if (pieces.empty()) return out;
  if (aggregate) {
    std::vector<double> merged = std::move(pieces.front());
    for (size_t k = 1; k < pieces.size(); ++k) {
      for (size_t d = 0; d < merged.size(); ++d) {
        merged[d] = std::max(merged[d], pieces[k][d]);
      }
    }
    if (auto s = make_successor(transition_index, t, ha, tmpl, std::move(merged))) {
      out.push_back(std::move(*s));
    }
  } else {
    for (auto& b : pieces) {
      if (auto s = make_successor(transition_index, t, ha, tmpl, std::move(b))) {
        out.push_back(std::move(*s));
      }
    }
  }
  return out;
}

std::optional<TemplatePolytope> apply_jump(
    const Flowpipe& f, size_t omega_index, const Transition& t,
    std::shared_ptr<const TemplateDirections> tmpl, const HybridAutomaton& ha) {
  auto bounds = image_bounds(f, omega_index, t, *tmpl);
  if (!bounds) return std::nullopt;
  auto dirs = std::make_shared<TemplateDirections>(*tmpl);
  for (const auto& h : ha.location(t.target).invariant) {
    dirs->dirs.push_back(h.normal);
    bounds->push_back(h.offset);
  }
  return TemplatePolytope{std::move(dirs), std::move(*bounds)};
}

PostDResult post_d(const Flowpipe& f, const HybridAutomaton& ha,
                   std::shared_ptr<const TemplateDirections> tmpl,
                   bool aggregate) {
  PostDResult out;
  for (int ti : ha.outgoing(f.loc)) {
    const Transition& t = ha.transitions[ti];
    out.jump_tasks += static_cast<long>(f.size());
    std::vector<std::vector<double>> pieces;
    for (size_t i = 0; i < f.size(); ++i) {
      auto b = jump_task(f, i, t, *tmpl);
      if (b) pieces.push_back(std::move(*b));
    }
    auto succ = finalize_pieces(ti, t, ha, tmpl, std::move(pieces), aggregate);
    for (auto& s : succ) out.successors.push_back(std::move(s));
  }
  return out;
}

}  // namespace reach
