#include "reach/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

namespace reach {

namespace {

Vector vec(std::initializer_list<double> vals) {
  Vector v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return v;
}

HalfSpace axis_le(int dim, int axis, double bound) {
  Vector n = Vector::Zero(dim);
  n(axis) = 1.0;
  return {n, bound};
}

HalfSpace axis_ge(int dim, int axis, double bound) {
  Vector n = Vector::Zero(dim);
  n(axis) = -1.0;
  return {n, -bound};
}

}  // namespace

Matrix nav_default_matrix() {
  Matrix a(2, 2);
  a << -1.2, 0.1, 0.1, -1.2;
  return a;
}

NavGrid nav_default_grid(int n) {
  if (n < 1) throw std::invalid_argument("nav grid size must be >= 1");
  NavGrid rows(n, std::string(n, '1'));
  for (int c = 0; c < n; ++c) rows[n - 1][c] = '2';  // bottom row east
  for (int r = 0; r < n; ++r) rows[r][n - 1] = '0';  // right column north
  rows[0][n - 1] = 'T';
  rows[n - 1][0] = n > 1 ? 'U' : '2';
  return rows;
}

HybridAutomaton gen_navigation(const NavGrid& grid, const Matrix& a) {
  if (grid.empty()) throw std::invalid_argument("navigation: empty grid");
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid[0].size());
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("navigation: grid is not rectangular");
    }
  }
  if (a.rows() != 2 || a.cols() != 2) {
    throw std::invalid_argument("navigation: A must be 2x2");
  }

  HybridAutomaton ha;
  ha.dimension = 4;
  ha.variables = {"x", "y", "vx", "vy"};

  Matrix a4 = Matrix::Zero(4, 4);
  a4(0, 2) = 1.0;  // xdot = vx
  a4(1, 3) = 1.0;  // ydot = vy
  a4.block<2, 2>(2, 2) = a;

  auto cell_id = [&](int r, int c) { return r * cols + c + 1; };

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const char code = grid[r][c];
      Vector vd = vec({0, 0});
      std::string tag;
      if (code == 'T') {
        tag = "target";
      } else if (code == 'U') {
        tag = "unsafe";
      } else if (code >= '0' && code <= '7') {
        const double ang = (code - '0') * M_PI / 4.0;
        vd = vec({std::sin(ang), std::cos(ang)});
      } else {
        throw std::invalid_argument("navigation: bad cell code");
      }

      Location loc;
      loc.id = cell_id(r, c);
      loc.name = "cell_" + std::to_string(loc.id);
      loc.tag = tag;
      loc.dynamics.a = a4;
      Vector u = Vector::Zero(4);
      u.tail<2>() = -(a * vd);  // vdot = A v - A v_d
      loc.dynamics.input = FixedInput{u};

      const double x0 = c, x1 = c + 1;
      const double y0 = rows - 1 - r, y1 = rows - r;
      loc.invariant = {axis_ge(4, 0, x0), axis_le(4, 0, x1),
                       axis_ge(4, 1, y0), axis_le(4, 1, y1)};
      ha.locations.push_back(std::move(loc));
    }
  }

  auto add_transition = [&](int from_r, int from_c, int to_r, int to_c,
                            HalfSpace facet) {
    Transition tr;
    tr.source = cell_id(from_r, from_c);
    tr.target = cell_id(to_r, to_c);
    tr.guard = {std::move(facet)};
    tr.map.m = Matrix::Identity(4, 4);
    tr.map.v = Vector::Zero(4);
    ha.transitions.push_back(std::move(tr));
  };

  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {  // east/west pair across x = c+1
        add_transition(r, c, r, c + 1, axis_ge(4, 0, c + 1));
        add_transition(r, c + 1, r, c, axis_le(4, 0, c + 1));
      }
      if (r + 1 < rows) {  // south/north pair across y = rows-1-r
        const double plane = rows - 1 - r;
        add_transition(r, c, r + 1, c, axis_le(4, 1, plane));
        add_transition(r + 1, c, r, c, axis_ge(4, 1, plane));
      }
    }
  }

  // Init: second cell of the bottom row (or the single cell), a position
  // box inside the cell with a small velocity box around zero.
  const int init_c = cols > 1 ? 1 : 0;
  ha.init.loc = cell_id(rows - 1, init_c);
  ha.init.set = make_box(vec({init_c + 0.2, 0.2, -0.1, -0.1}),
                         vec({init_c + 0.8, 0.8, 0.1, 0.1}));
  ha.validate();
  return ha;
}

HybridAutomaton gen_bouncing_ball() {
  HybridAutomaton ha;
  ha.dimension = 2;
  ha.variables = {"x", "v"};

  Location loc;
  loc.id = 1;
  loc.name = "falling";
  loc.dynamics.a = Matrix::Zero(2, 2);
  loc.dynamics.a(0, 1) = 1.0;  // xdot = v
  loc.dynamics.input = FixedInput{vec({0.0, -9.81})};
  loc.invariant = {axis_ge(2, 0, 0.0)};  // x >= 0
  ha.locations.push_back(std::move(loc));

  Transition bounce;
  bounce.source = 1;
  bounce.target = 1;
  bounce.guard = {axis_le(2, 0, 0.0), axis_le(2, 1, 0.0)};  // x <= 0, v <= 0
  bounce.map.m = Matrix::Identity(2, 2);
  bounce.map.m(1, 1) = -0.75;
  bounce.map.v = Vector::Zero(2);
  ha.transitions.push_back(std::move(bounce));

  ha.init.loc = 1;
  ha.init.set = make_box(vec({10.0, 0.0}), vec({10.2, 0.0}));
  ha.validate();
  return ha;
}

HybridAutomaton gen_circle() {
  HybridAutomaton ha;
  ha.dimension = 2;
  ha.variables = {"x", "y"};

  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;  // xdot = -y, ydot = x

  Location right;
  right.id = 1;
  right.name = "right";
  right.dynamics.a = rot;
  right.dynamics.input = FixedInput{Vector::Zero(2)};
  right.invariant = {axis_ge(2, 0, 0.0)};  // x >= 0
  ha.locations.push_back(right);

  Location left;
  left.id = 2;
  left.name = "left";
  left.dynamics.a = rot;
  left.dynamics.input = FixedInput{Vector::Zero(2)};
  left.invariant = {axis_le(2, 0, 0.0)};  // x <= 0
  ha.locations.push_back(left);

  // Both transitions fire where the flow leaves the right half-plane.
  // The self-loop re-enters location 1 on the boundary face; its short
  // flowpipe is the cheap unit of work at every exploration level,
  // while the crossing into location 2 seeds the expensive one.
  Transition stay;
  stay.source = 1;
  stay.target = 1;
  stay.guard = {axis_le(2, 0, 0.0)};  // x <= 0
  stay.map.m = Matrix::Identity(2, 2);
  stay.map.v = Vector::Zero(2);
  ha.transitions.push_back(std::move(stay));

  Transition cross;
  cross.source = 1;
  cross.target = 2;
  cross.guard = {axis_le(2, 0, 0.0)};
  cross.map.m = Matrix::Identity(2, 2);
  cross.map.v = Vector::Zero(2);
  ha.transitions.push_back(std::move(cross));

  ha.init.loc = 1;
  ha.init.set = make_box(vec({0.2, -0.05}), vec({0.3, 0.05}));
  ha.validate();
  return ha;
}

HybridAutomaton gen_oscillator() {
  HybridAutomaton ha;
  ha.dimension = 2;
  ha.variables = {"x", "y"};

  Matrix a(2, 2);
  a << -1, -4, 4, -1;  // stable focus

  Location pos;
  pos.id = 1;
  pos.name = "up";
  pos.dynamics.a = a;
  pos.dynamics.input = FixedInput{vec({0.0, 1.0})};
  pos.invariant = {axis_ge(2, 0, 0.0)};  // x >= 0
  ha.locations.push_back(pos);

  Location neg;
  neg.id = 2;
  neg.name = "down";
  neg.dynamics.a = a;
  neg.dynamics.input = FixedInput{vec({0.0, -1.0})};
  neg.invariant = {axis_le(2, 0, 0.0)};  // x <= 0
  ha.locations.push_back(neg);

  Transition t12;
  t12.source = 1;
  t12.target = 2;
  t12.guard = {axis_le(2, 0, 0.0)};
  t12.map.m = Matrix::Identity(2, 2);
  t12.map.v = Vector::Zero(2);
  ha.transitions.push_back(std::move(t12));

  Transition t21;
  t21.source = 2;
  t21.target = 1;
  t21.guard = {axis_ge(2, 0, 0.0)};
  t21.map.m = Matrix::Identity(2, 2);
  t21.map.v = Vector::Zero(2);
  ha.transitions.push_back(std::move(t21));

  ha.init.loc = 1;
  ha.init.set = make_box(vec({0.2, -0.05}), vec({0.3, 0.05}));
  ha.validate();
  return ha;
}

}  // namespace reach
