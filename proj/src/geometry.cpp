#include "reach/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reach {

namespace {

class BoxSet final : public ConvexSet {
 public:
  BoxSet(Vector lo, Vector hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  int dim() const override { return static_cast<int>(lo_.size()); }
  double support(const Vector& dir) const override {
    double s = 0.0;
    for (Eigen::Index i = 0; i < dir.size(); ++i) {
      s += dir(i) >= 0.0 ? dir(i) * hi_(i) : dir(i) * lo_(i);
    }
    return s;
  }

 private:
  Vector lo_, hi_;
};

class BallSet final : public ConvexSet {
 public:
  BallSet(Vector c, double r) : c_(std::move(c)), r_(r) {}
  int dim() const override { return static_cast<int>(c_.size()); }
  double support(const Vector& dir) const override {
    return dir.dot(c_) + r_ * dir.norm();
  }

 private:
  Vector c_;
  double r_;
};

class PolytopeSet final : public ConvexSet {
 public:
  explicit PolytopeSet(HPoly cons) : cons_(std::move(cons)) {}
  int dim() const override { return static_cast<int>(cons_.front().normal.size()); }
  double support(const Vector& dir) const override {
    auto s = hpoly_support(cons_, dir);
    if (!s) {
      throw std::runtime_error("polytope support: infeasible constraint system");
    }
    return *s;
  }

 private:
  HPoly cons_;
};

class AffineImageSet final : public ConvexSet {
 public:
  AffineImageSet(Matrix m, SetPtr base, Vector shift)
      : m_(std::move(m)), base_(std::move(base)), shift_(std::move(shift)) {}
  int dim() const override { return static_cast<int>(m_.rows()); }
  double support(const Vector& dir) const override {
    return base_->support(m_.transpose() * dir) + dir.dot(shift_);
  }

 private:
  Matrix m_;
  SetPtr base_;
  Vector shift_;
};

class MinkowskiSumSet final : public ConvexSet {
 public:
  MinkowskiSumSet(SetPtr a, SetPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  int dim() const override { return a_->dim(); }
  double support(const Vector& dir) const override {
    return a_->support(dir) + b_->support(dir);
  }

 private:
  SetPtr a_, b_;
};

class ConvexHullPairSet final : public ConvexSet {
 public:
  ConvexHullPairSet(SetPtr a, SetPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  int dim() const override { return a_->dim(); }
  double support(const Vector& dir) const override {
    return std::max(a_->support(dir), b_->support(dir));
  }

 private:
  SetPtr a_, b_;
};

}  // namespace

SetPtr make_box(const Vector& lower, const Vector& upper) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("box: dimension mismatch");
  }
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (lower(i) > upper(i)) {
      throw std::invalid_argument("box: lower bound exceeds upper bound");
    }
  }
  return std::make_shared<BoxSet>(lower, upper);
}

SetPtr make_ball(const Vector& center, double radius) {
  if (radius < 0.0) {
    throw std::invalid_argument("ball: negative radius");
  }
  return std::make_shared<BallSet>(center, radius);
}

SetPtr make_point(const Vector& p) { return make_box(p, p); }

SetPtr make_polytope(HPoly constraints) {
  if (constraints.empty()) {
    throw std::invalid_argument("polytope: empty constraint list");
  }
  const Eigen::Index n = constraints.front().normal.size();
  for (const auto& h : constraints) {
    if (h.normal.size() != n || h.normal.cwiseAbs().maxCoeff() == 0.0) {
      throw std::invalid_argument("polytope: bad constraint normal");
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    for (double sign : {1.0, -1.0}) {
      e(i) = sign;
      auto s = hpoly_support(constraints, e);  // throws when unbounded
      if (!s) {
        throw std::invalid_argument("polytope: empty feasible region");
      }
    }
  }
  return std::make_shared<PolytopeSet>(std::move(constraints));
}

SetPtr make_affine_image(const Matrix& m, SetPtr base, const Vector& shift) {
  if (m.cols() != base->dim() || m.rows() != shift.size()) {
    throw std::invalid_argument("affine image: dimension mismatch");
  }
  return std::make_shared<AffineImageSet>(m, std::move(base), shift);
}

SetPtr make_minkowski_sum(SetPtr a, SetPtr b) {
  if (a->dim() != b->dim()) {
    throw std::invalid_argument("minkowski sum: dimension mismatch");
  }
  return std::make_shared<MinkowskiSumSet>(std::move(a), std::move(b));
}

SetPtr make_hull_pair(SetPtr a, SetPtr b) {
  if (a->dim() != b->dim()) {
    throw std::invalid_argument("hull: dimension mismatch");
  }
  return std::make_shared<ConvexHullPairSet>(std::move(a), std::move(b));
}

double support(const ConvexSet& s, const Vector& dir) {
  if (dir.size() != s.dim()) {
    throw std::invalid_argument("support: dimension mismatch");
  }
  return s.support(dir);
}

std::optional<double> hpoly_support(const HPoly& p, const Vector& dir) {
  LinearProgram lp;
  lp.objective = dir;
  lp.constraints.reserve(p.size());
  for (const auto& h : p) {
    lp.constraints.emplace_back(h.normal, h.offset);
  }
  auto r = lp_max(lp);
  switch (r.status) {
    case LpStatus::Optimal:
      return r.value;
    case LpStatus::Infeasible:
      return std::nullopt;
    default:
      throw std::runtime_error("hpoly_support: unbounded in requested direction");
  }
}

bool hpoly_empty(const HPoly& p) {
  if (p.empty()) return false;  // whole space
  LinearProgram lp;
  lp.objective = Vector::Zero(p.front().normal.size());
  for (const auto& h : p) {
    lp.constraints.emplace_back(h.normal, h.offset);
  }
  return lp_max(lp).status == LpStatus::Infeasible;
}

TemplateDirections box_directions(int n) {
  TemplateDirections d;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    d.dirs.push_back(e);
    d.dirs.push_back(-e);
  }
  return d;
}

TemplateDirections oct_directions(int n) {
  TemplateDirections d = box_directions(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          Vector v = Vector::Zero(n);
          v(i) = si;
          v(j) = sj;
          d.dirs.push_back(v);
        }
      }
    }
  }
  return d;
}

TemplateDirections uniform_directions_2d(int k) {
  if (k < 3) {
    throw std::invalid_argument("uniform directions: need k >= 3");
  }
  TemplateDirections d;
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * M_PI * i / k;
    Vector v(2);
    v << std::cos(a), std::sin(a);
    d.dirs.push_back(v);
  }
  return d;
}

HPoly TemplatePolytope::constraints() const {
  HPoly p;
  p.reserve(bounds.size());
  for (size_t i = 0; i < bounds.size(); ++i) {
    p.push_back({dirs->dirs[i], bounds[i]});
  }
  return p;
}

TemplatePolytope template_hull(const ConvexSet& s,
                               std::shared_ptr<const TemplateDirections> dirs) {
  TemplatePolytope tp;
  tp.dirs = dirs;
  tp.bounds.reserve(dirs->dirs.size());
  for (const auto& d : dirs->dirs) {
    tp.bounds.push_back(support(s, d));
  }
  return tp;
}

bool satisfies(const ConvexSet& s, std::span<const HalfSpace> inv) {
  for (const auto& h : inv) {
    if (-support(s, -h.normal) > h.offset + kSatTol) {
      return false;
    }
  }
  return true;
}

bool hpoly_satisfies(const HPoly& p, std::span<const HalfSpace> inv) {
  for (const auto& h : inv) {
    auto s = hpoly_support(p, -h.normal);
    if (!s) return false;  // empty set intersects nothing
    if (-*s > h.offset + kSatTol) return false;
  }
  return true;
}

HPoly poly_intersect(const TemplatePolytope& p, std::span<const HalfSpace> g) {
  HPoly out = p.constraints();
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::optional<std::vector<Point2>> project_vertices_2d(const HPoly& p,
                                                       std::pair<int, int> axes,
                                                       int samples) {
  if (p.empty()) {
    throw std::invalid_argument("project_vertices_2d: unconstrained polytope");
  }
  const Eigen::Index n = p.front().normal.size();
  const auto [ax, ay] = axes;
  if (ax < 0 || ay < 0 || ax >= n || ay >= n || ax == ay) {
    throw std::invalid_argument("project_vertices_2d: bad axes");
  }
  LinearProgram lp;
  lp.objective = Vector::Zero(n);
  for (const auto& h : p) {
    lp.constraints.emplace_back(h.normal, h.offset);
  }

  std::vector<Point2> pts;
  for (int k = 0; k < samples; ++k) {
    const double a = 2.0 * M_PI * k / samples;
    lp.objective.setZero();
    lp.objective(ax) = std::cos(a);
    lp.objective(ay) = std::sin(a);
    auto r = lp_max(lp);
    if (r.status == LpStatus::Infeasible) {
      return std::nullopt;
    }
    if (r.status != LpStatus::Optimal) {
      throw std::runtime_error("project_vertices_2d: unbounded polytope");
    }
    pts.emplace_back(r.point(ax), r.point(ay));
  }

  // Convex hull (monotone chain) with strict turns, so collinear and
  // duplicate samples collapse to true vertices.
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return std::abs(a.first - b.first) < 1e-12 &&
                                 std::abs(a.second - b.second) < 1e-12;
                        }),
            pts.end());
  if (pts.size() <= 2) {
    return pts;  // point or segment projection
  }
  auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<Point2> hull(2 * pts.size());
  size_t k = 0;
  for (const auto& pt : pts) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 1e-12) --k;
    hull[k++] = pt;
  }
  const size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 1e-12) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace reach
