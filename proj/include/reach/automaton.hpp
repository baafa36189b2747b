#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reach/geometry.hpp"

namespace reach {

struct FixedInput {
  Vector u;
};

struct SetInput {
  SetPtr set;
};

/// xdot = A x + input, input either a fixed vector or a compact convex set.
struct Dynamics {
  Matrix a;
  std::variant<FixedInput, SetInput> input;

  bool deterministic() const { return std::holds_alternative<FixedInput>(input); }
  const Vector& fixed_u() const { return std::get<FixedInput>(input).u; }
};

struct Location {
  int id = 0;
  std::string name;
  Dynamics dynamics;
  std::vector<HalfSpace> invariant;
  std::string tag;  // benchmark metadata ("target", "unsafe"), empty otherwise
};

struct AssignmentMap {
  Matrix m;
  Vector v;  // x -> M x + v
};

struct Transition {
  int source = 0;
  int target = 0;
  std::vector<HalfSpace> guard;
  AssignmentMap map;
};

struct SymbolicState {
  int loc = 0;
  SetPtr set;
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class HybridAutomaton {
 public:
  int dimension = 0;
  std::vector<std::string> variables;
  std::vector<Location> locations;
  std::vector<Transition> transitions;
  SymbolicState init;

  const Location& location(int id) const;
  bool has_location(int id) const;
  /// Indices into `transitions` of the outgoing transitions of `loc`.
  std::vector<int> outgoing(int loc) const;

  /// Enforces the structural invariants: unique location ids, matching
  /// dimensions everywhere, existing endpoints, init inside its
  /// invariant, and no transition whose guard misses the source or
  /// target invariant. Throws SemanticError.
  void validate() const;
};

}  // namespace reach
