#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "burgers_lab/lie_algebra.hpp"
#include "burgers_lab/sym_group.hpp"

using namespace burgers_lab;

namespace {

GroupElement random_element(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  GroupElement g;
  do {
    g.a = unif(rng);
    g.b = unif(rng);
    g.c = unif(rng);
    g.d = unif(rng);
  } while (g.a * g.d - g.b * g.c < 0.1);
  g.angle = unif(rng);
  g.reflect = (rng() & 1u) != 0;
  g.m1 = unif(rng);
  g.m2 = unif(rng);
  g.n1 = unif(rng);
  g.n2 = unif(rng);
  return g.normalized();
}

Point random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  return Point(unif(rng), unif(rng), unif(rng));
}

bool act_matches(const GroupElement& lhs, const GroupElement& g1, const GroupElement& g2,
                 std::mt19937_64& rng) {
  for (int k = 0; k < 10; ++k) {
    Point p = random_point(rng);
    Vec2 w{std::uniform_real_distribution<double>(-1, 1)(rng),
           std::uniform_real_distribution<double>(-1, 1)(rng)};
    std::pair<Point, Vec2> via_two, via_one;
    try {
      via_two = act_point(g1, act_point(g2, p, w).first,
                          act_point(g2, p, w).second);
      via_one = act_point(lhs, p, w);
    } catch (const Error&) {
      continue;  // chart boundary; skip the sample
    }
    if (std::abs(via_two.first.t - via_one.first.t) > 1e-9 ||
        std::abs(via_two.first.x - via_one.first.x) > 1e-9 ||
        std::abs(via_two.first.y - via_one.first.y) > 1e-9 ||
        std::abs(via_two.second.u - via_one.second.u) > 1e-9 ||
        std::abs(via_two.second.v - via_one.second.v) > 1e-9)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("identity fixes points; mirror flips x and u") {
  Point p(0, 1, 2);
  Vec2 w{3, 4};
  auto [q, wq] = act_point(identity_element(), p, w);
  CHECK(q.x == doctest::Approx(1.0));
  CHECK(wq.u == doctest::Approx(3.0));

  auto [qm, wm] = act_point(mirror_element(), p, w);
  CHECK(qm.t == doctest::Approx(0.0));
  CHECK(qm.x == doctest::Approx(-1.0));
  CHECK(qm.y == doctest::Approx(2.0));
  CHECK(wm.u == doctest::Approx(-3.0));
  CHECK(wm.v == doctest::Approx(4.0));
}

TEST_CASE("pure boost transforms the rest state") {
  GroupElement g;
  g.m1 = 1.0;
  auto [q, w] = act_point(g, Point(2, 0, 0), Vec2{0, 0});
  CHECK(q.t == doctest::Approx(2.0));
  CHECK(q.x == doctest::Approx(2.0));
  CHECK(q.y == doctest::Approx(0.0));
  CHECK(w.u == doctest::Approx(1.0));
  CHECK(w.v == doctest::Approx(0.0));
}

TEST_CASE("chart boundary raises") {
  GroupElement g;
  g.a = 0;
  g.b = -1;
  g.c = 1;
  g.d = 0;  // t~ = -1/t
  CHECK_THROWS_AS(act_point(g, Point(0, 0, 0), Vec2{0, 0}), Error);
}

TEST_CASE("flows reproduce the one-parameter subgroups") {
  // time shift
  GroupElement g = flow({"Pt", 0.7});
  auto [q, w] = act_point(g, Point(1, 2, 3), Vec2{0.5, -0.5});
  CHECK(q.t == doctest::Approx(1.7));
  CHECK(q.x == doctest::Approx(2.0));
  CHECK(w.u == doctest::Approx(0.5));

  // scaling flow: t -> e^{2e} t, x -> e^e x, u -> e^{-e} u
  double e = 0.3;
  g = flow({"D", e});
  std::tie(q, w) = act_point(g, Point(1, 2, 3), Vec2{0.5, -0.5});
  CHECK(q.t == doctest::Approx(std::exp(2 * e)));
  CHECK(q.x == doctest::Approx(2 * std::exp(e)));
  CHECK(q.y == doctest::Approx(3 * std::exp(e)));
  CHECK(w.u == doctest::Approx(0.5 * std::exp(-e)));

  // projective flow: t -> t/(1 - e t)
  g = flow({"Pi", 0.25});
  std::tie(q, w) = act_point(g, Point(1, 0, 0), Vec2{0, 0});
  CHECK(q.t == doctest::Approx(1.0 / (1.0 - 0.25)));

  // rotation
  g = flow({"J", M_PI / 2});
  std::tie(q, w) = act_point(g, Point(0, 1, 0), Vec2{1, 0});
  CHECK(q.x == doctest::Approx(0.0));
  CHECK(q.y == doctest::Approx(1.0));
  CHECK(w.u == doctest::Approx(0.0));
  CHECK(w.v == doctest::Approx(1.0));

  // boost along x
  g = flow({"Gx", 0.4});
  std::tie(q, w) = act_point(g, Point(2, 0, 0), Vec2{0, 0});
  CHECK(q.x == doctest::Approx(0.8));
  CHECK(w.u == doctest::Approx(0.4));
}

TEST_CASE("translations compose additively; mirror is an involution") {
  GroupElement t1 = flow({"Pt", 0.3}), t2 = flow({"Pt", 0.5});
  CHECK(compose(t1, t2).approx_equal(flow({"Pt", 0.8})));
  CHECK(compose(mirror_element(), mirror_element()).approx_equal(identity_element()));
}

TEST_CASE("scaling and time shift compose through the projective action") {
  double e = 0.45, dt = 0.6;
  GroupElement g = compose(flow({"D", e}), flow({"Pt", dt}));
  auto [q, w] = act_point(g, Point(1, 1, 0), Vec2{0, 0});
  (void)w;
  CHECK(q.t == doctest::Approx(std::exp(2 * e) * (1 + dt)));
  CHECK(q.x == doctest::Approx(std::exp(e)));
}

TEST_CASE("composition matches nested action on random elements") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    GroupElement g1 = random_element(rng), g2 = random_element(rng);
    GroupElement g12 = compose(g1, g2);
    CHECK(act_matches(g12, g1, g2, rng));
  }
}

TEST_CASE("associativity and inverse laws") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    GroupElement a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK(compose(compose(a, b), c).approx_equal(compose(a, compose(b, c)), 1e-9));
    CHECK(compose(inverse(a), a).approx_equal(identity_element(), 1e-9));
    CHECK(compose(a, inverse(a)).approx_equal(identity_element(), 1e-9));
  }
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(3);
  GroupElement g = random_element(rng);
  GroupElement back = group_element_from_json(group_element_to_json(g));
  CHECK(back.approx_equal(g));
  CHECK_THROWS_AS(group_element_from_json(nlohmann::json{{"bogus", 1}}), Error);
}

TEST_CASE("act_field: stationary shear is fixed by time translations") {
  SpaceTimeField shear = make_analytic_field(
      [](const Point& p) { return Vec2{p.y, 0.0}; },
      [](const Point&) {
        Jet1 j;
        j.uy = 1;
        return j;
      },
      [](const Point&) { return Jet2{}; });
  SpaceTimeField moved = act_field(flow({"Pt", 1.0}), shear);
  Point p(0.4, 0.3, -0.7);
  CHECK(moved.eval(p).u == doctest::Approx(p.y));
  CHECK(moved.eval(p).v == doctest::Approx(0.0));
}

TEST_CASE("act_field: boost applied to the rest state gives a constant field") {
  SpaceTimeField zero = make_analytic_field([](const Point&) { return Vec2{0, 0}; },
                                            [](const Point&) { return Jet1{}; },
                                            [](const Point&) { return Jet2{}; });
  SpaceTimeField moved = act_field(flow({"Gx", 1.0}), zero);
  Point p(0.7, -0.2, 0.5);
  CHECK(moved.eval(p).u == doctest::Approx(1.0));
  CHECK(moved.eval(p).v == doctest::Approx(0.0));
  Jet1 j = moved.d1(p);
  CHECK(j.ut == doctest::Approx(0.0));
  CHECK(j.ux == doctest::Approx(0.0));
}

TEST_CASE("act_field derivatives agree with finite differences") {
  // a non-solution smooth field keeps the chain rule honest
  auto eval = [](const Point& p) {
    return Vec2{std::sin(p.x + 0.5 * p.y) * std::exp(-p.t), std::cos(p.x - p.y) + p.t * p.x};
  };
  auto d1 = [](const Point& p) {
    Jet1 j;
    double e = std::exp(-p.t), s = std::sin(p.x + 0.5 * p.y), c = std::cos(p.x + 0.5 * p.y);
    j.ut = -s * e;
    j.ux = c * e;
    j.uy = 0.5 * c * e;
    j.vt = p.x;
    j.vx = std::sin(p.y - p.x) + p.t;
    j.vy = -std::sin(p.y - p.x);
    return j;
  };
  auto d2 = [](const Point& p) {
    Jet2 j;
    double e = std::exp(-p.t), s = std::sin(p.x + 0.5 * p.y);
    double cc = std::cos(p.x - p.y);
    j.uxx = -s * e;
    j.uxy = -0.5 * s * e;
    j.uyy = -0.25 * s * e;
    j.vxx = -cc;
    j.vxy = cc;
    j.vyy = -cc;
    return j;
  };
  SpaceTimeField f = make_analytic_field(eval, d1, d2);
  std::mt19937_64 rng(19);
  GroupElement g = random_element(rng);
  SpaceTimeField moved = act_field(g, f);
  Point q(0.8, 0.35, -0.55);
  if (!moved.is_singular(q)) {
    for (MultiIndex mi : {MultiIndex::t(), MultiIndex::x(), MultiIndex::y(), MultiIndex::xx(),
                          MultiIndex::xy(), MultiIndex::yy()}) {
      double ana = moved.deriv(q, Component::u, mi);
      double num = fd_derivative(moved, q, Component::u, mi, 5e-3);
      CHECK(ana == doctest::Approx(num).epsilon(5e-5));
      ana = moved.deriv(q, Component::v, mi);
      num = fd_derivative(moved, q, Component::v, mi, 5e-3);
      CHECK(ana == doctest::Approx(num).epsilon(5e-5));
    }
  }
}

TEST_CASE("flow derivative matches the characteristic of each generator") {
  // field u = y, v = 0 (a solution); compare d/de of the flow action at e = 0
  SpaceTimeField shear = make_analytic_field(
      [](const Point& p) { return Vec2{p.y, 0.0}; },
      [](const Point&) {
        Jet1 j;
        j.uy = 1;
        return j;
      },
      [](const Point&) { return Jet2{}; });
  const double h = 1e-4;
  for (const auto& name : basis_names()) {
    VectorFieldG V = basis_element(name);
    Point p(0.3, 0.4, 0.6);
    Vec2 plus = act_field(flow({name, h}), shear).eval(p);
    Vec2 minus = act_field(flow({name, -h}), shear).eval(p);
    Vec2 numeric{(plus.u - minus.u) / (2 * h), (plus.v - minus.v) / (2 * h)};
    Vec2 q = apply_to_field(V, shear, p);
    CHECK(numeric.u == doctest::Approx(q.u).epsilon(1e-6));
    CHECK(numeric.v == doctest::Approx(q.v).epsilon(1e-6));
  }
}
