#include "reach/automaton.hpp"

#include <set>

namespace reach {

const Location& HybridAutomaton::location(int id) const {
  for (const auto& l : locations) {
    if (l.id == id) return l;
  }
  throw SemanticError("unknown location id " + std::to_string(id));
}

bool HybridAutomaton::has_location(int id) const {
  for (const auto& l : locations) {
    if (l.id == id) return true;
  }
  return false;
}

std::vector<int> HybridAutomaton::outgoing(int loc) const {
  std::vector<int> out;
  for (size_t i = 0; i < transitions.size(); ++i) {
    if (transitions[i].source == loc) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace {

// Guard/invariant intersection probe. Both are half-space lists and may
// be unbounded, so the feasibility LP runs inside a large bounding box.
bool constraints_intersect(const std::vector<HalfSpace>& a,
                           const std::vector<HalfSpace>& b, int n) {
  HPoly p;
  p.insert(p.end(), a.begin(), a.end());
  p.insert(p.end(), b.begin(), b.end());
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    p.push_back({e, 1e9});
    p.push_back({-e, 1e9});
  }
  return !hpoly_empty(p);
}

}  // namespace

void HybridAutomaton::validate() const {
  if (dimension <= 0) throw SemanticError("dimension must be positive");
  if (!variables.empty() && static_cast<int>(variables.size()) != dimension) {
    throw SemanticError("variable list does not match dimension");
  }
  if (locations.empty()) throw SemanticError("automaton has no locations");

  std::set<int> ids;
  for (const auto& l : locations) {
    if (!ids.insert(l.id).second) {
      throw SemanticError("duplicate location id " + std::to_string(l.id));
    }
    if (l.dynamics.a.rows() != dimension || l.dynamics.a.cols() != dimension) {
      throw SemanticError("location " + std::to_string(l.id) +
                          ": flow matrix dimension mismatch");
    }
    if (!l.dynamics.a.allFinite()) {
      throw SemanticError("location " + std::to_string(l.id) +
                          ": non-finite flow matrix");
    }
    if (l.dynamics.deterministic()) {
      if (l.dynamics.fixed_u().size() != dimension) {
        throw SemanticError("location " + std::to_string(l.id) +
                            ": input vector dimension mismatch");
      }
    } else if (std::get<SetInput>(l.dynamics.input).set->dim() != dimension) {
      throw SemanticError("location " + std::to_string(l.id) +
                          ": input set dimension mismatch");
    }
    for (const auto& h : l.invariant) {
      if (h.normal.size() != dimension) {
        throw SemanticError("location " + std::to_string(l.id) +
                            ": invariant dimension mismatch");
      }
    }
  }

  for (const auto& t : transitions) {
    if (!has_location(t.source) || !has_location(t.target)) {
      throw SemanticError("transition references unknown location");
    }
    if (t.map.m.rows() != dimension || t.map.m.cols() != dimension ||
        t.map.v.size() != dimension) {
      throw SemanticError("transition map dimension mismatch");
    }
    for (const auto& h : t.guard) {
      if (h.normal.size() != dimension) {
        throw SemanticError("transition guard dimension mismatch");
      }
    }
    if (!constraints_intersect(t.guard, location(t.source).invariant, dimension)) {
      throw SemanticError("transition guard misses the source invariant");
    }
    if (!constraints_intersect(t.guard, location(t.target).invariant, dimension)) {
      throw SemanticError("transition guard misses the target invariant");
    }
  }

  if (!has_location(init.loc)) throw SemanticError("init location does not exist");
  if (!init.set) throw SemanticError("init set missing");
  if (init.set->dim() != dimension) throw SemanticError("init set dimension mismatch");
  if (!satisfies(*init.set, location(init.loc).invariant)) {
    throw SemanticError("init set violates the initial location invariant");
  }
}

}  // namespace reach
