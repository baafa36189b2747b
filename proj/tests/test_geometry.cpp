#include <doctest.h>

#include <cmath>
#include <random>

#include "reach/geometry.hpp"
#include "support/oracles.hpp"

using namespace reach;
using namespace reach::testing;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

HalfSpace hs2(double a, double b, double c) { return {vec2(a, b), c}; }

// Dense boundary sample of box + ball Minkowski sum.
double minkowski_sampling_oracle(const Vector& lo, const Vector& hi,
                                 double radius, const Vector& dir) {
  double best = -1e300;
  for (int cx = 0; cx < 2; ++cx) {
    for (int cy = 0; cy < 2; ++cy) {
      Vector corner = vec2(cx ? hi(0) : lo(0), cy ? hi(1) : lo(1));
      for (int k = 0; k < 4096; ++k) {
        const double a = 2.0 * M_PI * k / 4096;
        Vector p = corner + radius * vec2(std::cos(a), std::sin(a));
        best = std::max(best, dir.dot(p));
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("box support") {
  auto b = make_box(vec2(-1, -1), vec2(1, 1));
  CHECK(support(*b, vec2(1, 0)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(support(*b, vec2(-1, 2)) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("ball support is radius for unit directions") {
  auto b = make_ball(vec2(0, 0), 0.75);
  CHECK(support(*b, vec2(0, 1)) == doctest::Approx(0.75).epsilon(1e-15));
  const double s = std::sqrt(0.5);
  CHECK(support(*b, vec2(s, s)) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("minkowski sum of box and ball") {
  auto sum = make_minkowski_sum(make_box(vec2(-1, -1), vec2(1, 1)),
                                make_ball(vec2(0, 0), 0.5));
  const double got = support(*sum, vec2(0, 1));
  CHECK(got == doctest::Approx(1.5).epsilon(1e-12));
  const double oracle =
      minkowski_sampling_oracle(vec2(-1, -1), vec2(1, 1), 0.5, vec2(0, 1));
  CHECK(std::abs(got - oracle) < 1e-5);
}

TEST_CASE("support calculus: sum adds, hull maxes") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto a = make_box(vec2(-0.5, 0.1), vec2(0.3, 0.9));
  auto b = make_ball(vec2(0.2, -0.4), 0.3);
  auto sum = make_minkowski_sum(a, b);
  auto hull = make_hull_pair(a, b);
  for (int k = 0; k < 50; ++k) {
    Vector d = vec2(dist(rng), dist(rng));
    if (d.norm() < 1e-6) continue;
    CHECK(support(*sum, d) == support(*a, d) + support(*b, d));
    CHECK(support(*hull, d) == std::max(support(*a, d), support(*b, d)));
  }
}

TEST_CASE("affine image support") {
  Matrix rot(2, 2);
  const double th = 0.3;
  rot << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
  auto img = make_affine_image(rot, make_ball(vec2(0, 0), 1.0), vec2(2, 0));
  // rotated unit ball is still the unit ball; shifted by (2,0)
  CHECK(support(*img, vec2(1, 0)) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(support(*img, vec2(0, -1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polytope construction validates") {
  CHECK_THROWS(make_polytope({hs2(1, 0, -1), hs2(-1, 0, -1)}));    // empty
  CHECK_THROWS(make_polytope({hs2(1, 0, 1), hs2(-1, 0, 1)}));      // unbounded in y
  CHECK_NOTHROW(make_polytope({hs2(1, 0, 1), hs2(-1, 0, 1), hs2(0, 1, 1), hs2(0, -1, 1)}));
}

TEST_CASE("template_hull of unit ball with box directions") {
  auto dirs = std::make_shared<TemplateDirections>(box_directions(2));
  auto tp = template_hull(*make_ball(vec2(0, 0), 1.0), dirs);
  for (double b : tp.bounds) CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("template_hull of a box with its own facet normals is the box") {
  auto dirs = std::make_shared<TemplateDirections>(box_directions(2));
  auto box = make_box(vec2(-0.3, 0.2), vec2(0.4, 0.8));
  auto tp = template_hull(*box, dirs);
  CHECK(tp.bounds[0] == doctest::Approx(0.4));
  CHECK(tp.bounds[1] == doctest::Approx(0.3));
  CHECK(tp.bounds[2] == doctest::Approx(0.8));
  CHECK(tp.bounds[3] == doctest::Approx(-0.2));
}

TEST_CASE("template_hull contains the vertices of a random polytope") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int it = 0; it < 10; ++it) {
    std::vector<std::pair<Vector, double>> cons;
    HPoly hp;
    for (int i = 0; i < 2; ++i) {
      Vector e = Vector::Zero(2);
      e(i) = 1;
      for (double s : {1.0, -1.0}) {
        cons.emplace_back(s * e, 1.0 + 0.3 * dist(rng));
        hp.push_back({cons.back().first, cons.back().second});
      }
    }
    for (int k = 0; k < 2; ++k) {
      Vector n = vec2(dist(rng), dist(rng));
      if (n.norm() < 1e-3) continue;
      cons.emplace_back(n, 0.7);
      hp.push_back({n, 0.7});
    }
    auto verts = polytope_vertices_oracle(cons);
    if (verts.empty()) continue;
    auto poly = make_polytope(hp);
    auto dirs = std::make_shared<TemplateDirections>(oct_directions(2));
    auto tp = template_hull(*poly, dirs);
    for (const auto& v : verts) {
      for (size_t i = 0; i < tp.bounds.size(); ++i) {
        CHECK(tp.dirs->dirs[i].dot(v) <= tp.bounds[i] + 1e-9);
      }
    }
  }
}

TEST_CASE("template refinement by doubling reproduces coarse bounds") {
  auto set = make_hull_pair(make_box(vec2(-0.5, -0.2), vec2(0.8, 0.4)),
                            make_ball(vec2(0.1, 0.3), 0.6));
  auto coarse = std::make_shared<TemplateDirections>(uniform_directions_2d(8));
  auto fine = std::make_shared<TemplateDirections>(uniform_directions_2d(16));
  auto tc = template_hull(*set, coarse);
  auto tf = template_hull(*set, fine);
  for (size_t i = 0; i < tc.bounds.size(); ++i) {
    CHECK(tf.bounds[2 * i] == tc.bounds[i]);  // every other fine dir is coarse
  }
}

TEST_CASE("satisfies examples") {
  auto box = make_box(vec2(0, 0), vec2(1, 1));
  std::vector<HalfSpace> ok{hs2(1, 0, 2)};
  std::vector<HalfSpace> bad{hs2(1, 0, -0.5)};
  CHECK(satisfies(*box, ok));
  CHECK_FALSE(satisfies(*box, bad));

  auto ball = make_ball(vec2(2, 0), 1.0);
  std::vector<HalfSpace> touch{hs2(1, 0, 1.5), hs2(0, 1, 0)};
  CHECK(satisfies(*ball, touch));
}

TEST_CASE("satisfies agrees with dense sampling (no false negatives)") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int it = 0; it < 40; ++it) {
    Vector c = vec2(dist(rng), dist(rng));
    const double r = 0.2 + 0.4 * std::abs(dist(rng));
    auto ball = make_ball(c, r);
    std::vector<HalfSpace> inv{hs2(dist(rng), dist(rng), dist(rng))};
    if (inv[0].normal.norm() < 1e-3) continue;
    bool sample_hit = false;
    for (int k = 0; k < 720 && !sample_hit; ++k) {
      const double a = 2.0 * M_PI * k / 720;
      for (double rho : {0.0, 0.5 * r, r}) {
        Vector p = c + rho * vec2(std::cos(a), std::sin(a));
        if (inv[0].normal.dot(p) <= inv[0].offset) sample_hit = true;
      }
    }
    if (sample_hit) CHECK(satisfies(*ball, inv));  // never a false negative
  }
}

TEST_CASE("poly_intersect box slice") {
  auto dirs = std::make_shared<TemplateDirections>(box_directions(2));
  auto tp = template_hull(*make_box(vec2(0, 0), vec2(1, 1)), dirs);
  std::vector<HalfSpace> g{hs2(-1, 0, -0.5)};  // x >= 0.5
  auto cut = poly_intersect(tp, g);
  CHECK_FALSE(hpoly_empty(cut));
  CHECK(*hpoly_support(cut, vec2(-1, 0)) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(*hpoly_support(cut, vec2(1, 0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("poly_intersect detects emptiness") {
  auto dirs = std::make_shared<TemplateDirections>(box_directions(2));
  auto tp = template_hull(*make_box(vec2(0, 0), vec2(1, 1)), dirs);
  std::vector<HalfSpace> g{hs2(-1, 0, -2)};  // x >= 2
  CHECK(hpoly_empty(poly_intersect(tp, g)));
}

TEST_CASE("poly_intersect triangle matches vertex oracle") {
  auto dirs = std::make_shared<TemplateDirections>(box_directions(2));
  auto tp = template_hull(*make_box(vec2(0, 0), vec2(1, 1)), dirs);
  std::vector<HalfSpace> g{hs2(1, 1, 1)};  // x + y <= 1
  auto tri = poly_intersect(tp, g);
  std::vector<std::pair<Vector, double>> cons;
  for (const auto& h : tri) cons.emplace_back(h.normal, h.offset);
  auto verts = polytope_vertices_oracle(cons);
  REQUIRE(verts.size() == 3);
  for (const auto& v : verts) {
    const bool corner = (v - vec2(0, 0)).norm() < 1e-9 ||
                        (v - vec2(1, 0)).norm() < 1e-9 ||
                        (v - vec2(0, 1)).norm() < 1e-9;
    CHECK(corner);
  }
}

TEST_CASE("project_vertices_2d of a 4d box") {
  HPoly p;
  for (int i = 0; i < 4; ++i) {
    Vector e = Vector::Zero(4);
    e(i) = 1;
    p.push_back({e, 1.0});
    p.push_back({-e, 0.0});
  }
  auto poly = project_vertices_2d(p, {0, 1});
  REQUIRE(poly.has_value());
  REQUIRE(poly->size() == 4);
  // counterclockwise cycle starting at (0,0)
  CHECK(poly->at(0) == Point2{0, 0});
  CHECK(poly->at(1) == Point2{1, 0});
  CHECK(poly->at(2) == Point2{1, 1});
  CHECK(poly->at(3) == Point2{0, 1});
}

TEST_CASE("project_vertices_2d recovers a unit octagon") {
  auto dirs = std::make_shared<TemplateDirections>(uniform_directions_2d(8));
  TemplatePolytope tp;
  tp.dirs = dirs;
  tp.bounds.assign(8, 1.0);
  auto poly = project_vertices_2d(tp.constraints(), {0, 1}, 64);
  REQUIRE(poly.has_value());
  CHECK(poly->size() == 8);
  for (const auto& [x, y] : *poly) {
    // every vertex on the octagon boundary: max_i dir_i . v == 1
    double m = -1e300;
    for (const auto& d : dirs->dirs) m = std::max(m, d(0) * x + d(1) * y);
    CHECK(m == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("project_vertices_2d of an empty polytope") {
  HPoly p{hs2(1, 0, -1), hs2(-1, 0, -1)};
  CHECK_FALSE(project_vertices_2d(p, {0, 1}).has_value());
}

TEST_CASE("template_hull containment of dense samples") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto set = make_minkowski_sum(make_box(vec2(-0.4, -0.1), vec2(0.2, 0.5)),
                                make_ball(vec2(0.1, 0.0), 0.25));
  auto dirs = std::make_shared<TemplateDirections>(uniform_directions_2d(12));
  auto tp = template_hull(*set, dirs);
  for (int k = 0; k < 500; ++k) {
    // sample a point of the sum: box point + ball point
    Vector b = vec2(-0.4 + 0.6 * std::abs(dist(rng)), -0.1 + 0.6 * std::abs(dist(rng)));
    const double a = M_PI * dist(rng);
    const double rho = 0.25 * std::abs(dist(rng));
    Vector p = b + vec2(0.1 + rho * std::cos(a), rho * std::sin(a));
    for (size_t i = 0; i < tp.bounds.size(); ++i) {
      CHECK(tp.dirs->dirs[i].dot(p) <= tp.bounds[i] + 1e-9);
    }
  }
}
