#pragma once

#include <string>
#include <vector>

#include "reach/automaton.hpp"

namespace reach {

/// Grid cells for the navigation family: '0'..'7' are desired-velocity
/// direction codes (code k -> v_d = (sin(k*pi/4), cos(k*pi/4))),
/// 'T' marks the target cell and 'U' the unsafe cell (both with
/// v_d = 0). Rows run top to bottom; cells are unit squares.
using NavGrid = std::vector<std::string>;

/// Default A matrix for navigation: stable coupling keeping velocities
/// bounded.
Matrix nav_default_matrix();

/// The default grid used for the nav:N command-line models: target in
/// the top-right corner, unsafe in the bottom-left, the bottom row
/// flowing east, the right column flowing north, everything else
/// drifting northeast.
NavGrid nav_default_grid(int n);

/// 4-variable (x, y, vx, vy) automaton over an N x M grid of unit
/// cells: xdot = vx, ydot = vy, vdot = A(v - v_d). Transitions connect
/// 4-adjacent cells with the shared facet as guard and identity maps.
HybridAutomaton gen_navigation(const NavGrid& grid, const Matrix& a);

/// Ball under gravity: variables (x, v), xdot = v, vdot = -9.81,
/// invariant x >= 0, bounce map v -> -0.75 v guarded by x <= 0, v <= 0,
/// init x in [10, 10.2], v = 0.
HybridAutomaton gen_bouncing_ball();

/// Counterclockwise rotation split at the x = 0 plane: two locations
/// with the same dynamics and mirrored invariants. Both transitions sit
/// across the plane: one re-enters location 1 on its boundary (the
/// cheap state of each exploration level), the other continues into
/// location 2 (the expensive one).
HybridAutomaton gen_circle();

/// Two-location switched oscillator: stable focus dynamics with
/// location-dependent constant input, switching on the x = 0 plane.
HybridAutomaton gen_oscillator();

}  // namespace reach
