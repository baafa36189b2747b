#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reach/numerics.hpp"

namespace reach {

/// Comparison slack for the per-constraint satisfaction test; prevents
/// spurious flowpipe truncation from rounding.
inline constexpr double kSatTol = 1e-9;

/// Half-space normal . x <= offset.
struct HalfSpace {
  Vector normal;
  double offset = 0.0;
};

using HPoly = std::vector<HalfSpace>;

/// A compact convex set exposed through its support-function oracle.
/// Values are immutable after construction and safe to share across
/// threads.
class ConvexSet {
 public:
  virtual ~ConvexSet() = default;
  virtual int dim() const = 0;
  /// sup{ dir . x : x in set }.
  virtual double support(const Vector& dir) const = 0;
};

using SetPtr = std::shared_ptr<const ConvexSet>;

SetPtr make_box(const Vector& lower, const Vector& upper);
SetPtr make_ball(const Vector& center, double radius);
SetPtr make_point(const Vector& p);
/// Validates on construction: nonempty and bounded (lp probes in the
/// +/- axis directions).
SetPtr make_polytope(HPoly constraints);
SetPtr make_affine_image(const Matrix& m, SetPtr base, const Vector& shift);
SetPtr make_minkowski_sum(SetPtr a, SetPtr b);
SetPtr make_hull_pair(SetPtr a, SetPtr b);

double support(const ConvexSet& s, const Vector& dir);

/// Support of a raw constraint list without the nonempty/bounded
/// construction guarantee. Infeasible -> nullopt; unbounded throws.
std::optional<double> hpoly_support(const HPoly& p, const Vector& dir);
bool hpoly_empty(const HPoly& p);

struct TemplateDirections {
  std::vector<Vector> dirs;  // nonempty, pairwise distinct
};

TemplateDirections box_directions(int n);
TemplateDirections oct_directions(int n);
TemplateDirections uniform_directions_2d(int k);

struct TemplatePolytope {
  std::shared_ptr<const TemplateDirections> dirs;
  std::vector<double> bounds;  // one per direction

  HPoly constraints() const;
};

/// Outer approximation: bounds_i = support(set, dir_i).
TemplatePolytope template_hull(const ConvexSet& s, std::shared_ptr<const TemplateDirections> dirs);

/// Per-constraint satisfaction test: true iff -support(set, -n_i) <=
/// b_i + kSatTol for every constraint (nonempty intersection with each
/// half-space individually; for multi-constraint sets this is necessary
/// but not sufficient for intersection with the conjunction, which it
/// deliberately over-approximates).
bool satisfies(const ConvexSet& s, std::span<const HalfSpace> inv);

/// Same test evaluated against a raw H-polytope (LP-backed supports).
/// An empty polytope satisfies nothing.
bool hpoly_satisfies(const HPoly& p, std::span<const HalfSpace> inv);

/// Conjunction of a template polytope with extra half-spaces. The result
/// may be empty; probe with hpoly_empty.
HPoly poly_intersect(const TemplatePolytope& p, std::span<const HalfSpace> g);

using Point2 = std::pair<double, double>;

/// Counterclockwise vertex cycle of the 2D projection onto axes (i, j),
/// built from support argmax samples around the circle, so every vertex
/// lies on the true projection boundary. Empty polytope -> nullopt.
std::optional<std::vector<Point2>> project_vertices_2d(const HPoly& p,
                                                       std::pair<int, int> axes,
                                                       int samples = 64);

}  // namespace reach
