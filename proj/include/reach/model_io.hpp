#pragma once

#include <string>

#include "reach/automaton.hpp"

namespace reach {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

/// Parse the line-oriented model format (see docs/model.ebnf). Rejects
/// trailing garbage; the returned automaton is validated.
HybridAutomaton parse_model(const std::string& text);

/// Serialize in the same format. parse_model(render(ha)) reproduces the
/// automaton field by field (the init set is rendered as its bounding box).
std::string render(const HybridAutomaton& ha);

}  // namespace reach
