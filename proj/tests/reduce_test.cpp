#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "burgers_lab/catalog.hpp"
#include "burgers_lab/reduce.hpp"
#include "burgers_lab/verify.hpp"

using namespace burgers_lab;

namespace {

// w affine in (z1, z2)
ReducedSolution linear_w(const std::string& ansatz, double param, double a1, double b1,
                         double a2, double b2, int t_sign = +1) {
  ReducedSolution rs;
  rs.ansatz = ansatz;
  rs.param = param;
  rs.t_sign = t_sign;
  rs.samples = default_sample_box(ansatz);
  rs.w = [a1, b1, a2, b2](int i, double z1, double z2, int d1, int d2) -> double {
    double a = i == 1 ? a1 : a2, b = i == 1 ? b1 : b2;
    if (d1 == 0 && d2 == 0) return a * z1 + b * z2;
    if (d1 == 1 && d2 == 0) return a;
    if (d1 == 0 && d2 == 1) return b;
    return 0.0;
  };
  return rs;
}

ReducedSolution smooth_nonsolution(const std::string& ansatz, double param, int t_sign = +1) {
  ReducedSolution rs;
  rs.ansatz = ansatz;
  rs.param = param;
  rs.t_sign = t_sign;
  rs.samples = default_sample_box(ansatz);
  if (ansatz_is_ode(ansatz)) {
    rs.phi = [](int i, double om, int k) -> double {
      double amp = i == 1 ? 0.4 : 0.3;
      switch (k) {
        case 0: return amp * std::sin(om) + 0.2;
        case 1: return amp * std::cos(om);
        default: return -amp * std::sin(om);
      }
    };
  } else {
    rs.w = [](int i, double z1, double z2, int d1, int d2) -> double {
      double amp = i == 1 ? 0.4 : 0.3;
      double ph = i == 1 ? 0.0 : 0.7;
      double arg = z1 + 0.8 * z2 + ph;
      double f = amp * std::sin(arg);
      int order = d1 + d2;
      double scale = std::pow(0.8, d2);
      if (order == 0) return f + 0.1;
      if (order == 1) return amp * std::cos(arg) * scale;
      return -f * scale;
    };
  }
  return rs;
}

void check_positive(const ReducedSolution& rs, double tol = 1e-8) {
  ConsistencyReport rep = consistency_check(rs, tol);
  INFO("ansatz ", rs.ansatz, " param ", rs.param, " reduced ", rep.max_reduced, " full ",
       rep.max_full);
  CHECK(rep.reduced_pass);
  CHECK(rep.full_pass);
  CHECK(rep.consistent);
  CHECK(rep.samples > 0);
}

void check_negative(const ReducedSolution& rs) {
  ConsistencyReport rep = consistency_check(rs, 1e-8);
  INFO("ansatz ", rs.ansatz, " reduced ", rep.max_reduced, " full ", rep.max_full);
  CHECK_FALSE(rep.reduced_pass);
  CHECK(rep.max_full > 1e-4);
  CHECK(rep.consistent);
}

HeatSolution2D radial_hc_phi() {
  return superpose({{1.0, product2d(heat_polynomial(0), heat_polynomial(0))},
                    {1.0, gaussian2d(-0.5, 0.0, 0.0)}});
}

}  // namespace

TEST_CASE("reconstruct reproduces the ansatz displays") {
  // 1.8 with zero profile
  ReducedSolution rs18 = constant_reduced("1.8", 0, 0, 0);
  SpaceTimeField f = reconstruct(rs18);
  CHECK(f.eval(Point(0.3, 0.4, 0.5)).u == doctest::Approx(0.0));

  // 2.6 with zero profile: the planar rotation display
  ReducedSolution rs26 = constant_reduced("2.6", 1.0, 0, 0);
  f = reconstruct(rs26);
  double t = 0.7, x = 0.4, y = -0.2;
  Vec2 w = f.eval(Point(t, x, y));
  CHECK(w.u == doctest::Approx((t * x - y) / (t * t + 1)).epsilon(1e-12));
  CHECK(w.v == doctest::Approx((x + t * y) / (t * t + 1)).epsilon(1e-12));

  // 1.6 with zero profile is NOT a reduced solution: residual -1/z2^3
  ReducedSolution rs16 = constant_reduced("1.6", 0, 0, 0);
  auto [r1, r2] = reduced_residual(rs16, 0.5, 1.2);
  CHECK(r1 == doctest::Approx(-1.0 / std::pow(1.2, 3)));
  CHECK(r2 == doctest::Approx(0.0));
  f = reconstruct(rs16);
  w = f.eval(Point(0.5, 0.6, 0.8));
  double r2d = 0.6 * 0.6 + 0.8 * 0.8;
  CHECK(w.u == doctest::Approx(0.6 / r2d));
  CHECK(w.v == doctest::Approx(0.8 / r2d));
  auto [fr1, fr2] = burgers_residual_at(f, Point(0.5, 0.6, 0.8));
  CHECK(std::abs(fr1) + std::abs(fr2) > 1e-3);
}

TEST_CASE("reconstructed fields expose correct analytic derivatives") {
  // exercised through a profile with nontrivial dependence on both z's
  for (const std::string& a :
       {std::string("1.1"), std::string("1.3"), std::string("1.4"), std::string("1.5"),
        std::string("1.6"), std::string("1.7"), std::string("2.1"), std::string("2.2"),
        std::string("2.5"), std::string("2.6")}) {
    double param = (a == "1.1" || a == "1.5" || a == "2.6") ? 1.0 : 0.5;
    ReducedSolution rs = smooth_nonsolution(a, param);
    SpaceTimeField f = reconstruct(rs);
    SampleBox b = rs.samples;
    Point p = section_point(rs, 0.6 * b.z1_lo + 0.4 * b.z1_hi, 0.3 * b.z2_lo + 0.7 * b.z2_hi);
    Point q(p.t + 0.05, p.x + 0.03, p.y + 0.02);
    if (f.is_singular(q)) continue;
    for (Component c : {Component::u, Component::v})
      for (MultiIndex mi : {MultiIndex::t(), MultiIndex::x(), MultiIndex::y(), MultiIndex::xx(),
                            MultiIndex::xy(), MultiIndex::yy()}) {
        double ana = f.deriv(q, c, mi);
        double num = fd_derivative(f, q, c, mi, 2e-3);
        INFO("ansatz ", a, " mi ", mi.dt, mi.dx, mi.dy);
        CHECK(std::abs(ana - num) < 2e-5 * std::max(1.0, std::abs(ana)));
      }
  }
}

TEST_CASE("ansatz 1.1: stationary positive controls") {
  // constants solve the kappa = 0 system
  ReducedSolution c = constant_reduced("1.1", 0.0, 0.4, -0.2);
  check_positive(c);

  // pullback of the stationary profile u = 6x/y^2
  FamilyInstance db = darboux_family(HeatSolution1D{});
  ReducedSolution rs = pullback_reduced(db.field, "1.1", 0.0);
  rs.samples = {-0.8, 0.8, 0.6, 1.8};
  check_positive(rs);

  // steady harmonic profile 3 + x^2 - y^2 via the linearizing substitution
  HeatSolution2D phi = superpose({{3.0, product2d(heat_polynomial(0), heat_polynomial(0))},
                                  {1.0, product2d(heat_polynomial(2), heat_polynomial(0))},
                                  {-1.0, product2d(heat_polynomial(0), heat_polynomial(2))}});
  FamilyInstance hc = hopf_cole_2d(phi, Box{0.0, 1.0, -0.5, 0.5, -0.5, 0.5, 3, 5, 5});
  ReducedSolution rs2 = pullback_reduced(hc.field, "1.1", 0.0);
  rs2.samples = {-0.45, 0.45, -0.45, 0.45};
  check_positive(rs2);
  // this control sits in the linearizable subset: reduced constraint vanishes
  CHECK(std::abs(reduced_constraint(rs2, 0.2, -0.1)) < 1e-9);

  check_negative(smooth_nonsolution("1.1", 0.0));
  check_negative(smooth_nonsolution("1.1", 1.0));
}

TEST_CASE("ansatz 1.1 kappa = 1: rotation-invariant stationary control") {
  ReducedSolution rs22 = integrate_reduced_ode("2.2", 0.0, 0.5, 2.0, 1.0, {0.3, 0.1, 0.2, -0.1});
  SpaceTimeField f22 = reconstruct(rs22);
  ReducedSolution rs = pullback_reduced(f22, "1.1", 1.0);
  rs.samples = {0.45, 1.1, 0.45, 1.1};
  check_positive(rs);
}

TEST_CASE("ansatz 1.2 controls") {
  // u = c, v = t + g(x) with g from the first reduced equation
  double cc = 1.3, A = 0.6;
  ReducedSolution rs;
  rs.ansatz = "1.2";
  rs.samples = default_sample_box("1.2");
  rs.w = [cc, A](int i, double z1, double, int d1, int d2) -> double {
    if (i == 1) return (d1 == 0 && d2 == 0) ? cc : 0.0;
    if (d2 > 0) return 0.0;
    double e = std::exp(cc * z1);
    if (d1 == 0) return -z1 / cc + (A / cc) * e;
    if (d1 == 1) return -1.0 / cc + A * e;
    return A * cc * e;
  };
  check_positive(rs);

  // u = -2/x, v = t + x^2/6
  ReducedSolution rs2;
  rs2.ansatz = "1.2";
  rs2.samples = {0.4, 1.6, -1.0, 1.0};
  rs2.w = [](int i, double z1, double, int d1, int d2) -> double {
    if (d2 > 0) return 0.0;
    if (i == 1) {
      if (d1 == 0) return -2.0 / z1;
      if (d1 == 1) return 2.0 / (z1 * z1);
      return -4.0 / (z1 * z1 * z1);
    }
    if (d1 == 0) return z1 * z1 / 6.0;
    if (d1 == 1) return z1 / 3.0;
    return 1.0 / 3.0;
  };
  check_positive(rs2);
  check_negative(smooth_nonsolution("1.2", 0.0));
}

TEST_CASE("ansatz 1.3 controls for both settings and both time branches") {
  for (double kappa : {0.0, 1.0}) {
    ReducedSolution pos = linear_w("1.3", kappa, 0.5, kappa, -kappa, 0.5, +1);
    check_positive(pos);
    ReducedSolution neg_branch = linear_w("1.3", kappa, -0.5, -kappa, kappa, -0.5, -1);
    check_positive(neg_branch);
    check_negative(smooth_nonsolution("1.3", kappa));
  }
  // scaling-invariant stationary pullback (kappa = 0)
  FamilyInstance st = stationary_similarity(0, 2.0, 1.0, 0.5);
  ReducedSolution rs = pullback_reduced(st.field, "1.3", 0.0);
  rs.samples = {0.8, 1.9, 0.8, 1.9};
  check_positive(rs);
}

TEST_CASE("ansatz 1.4 controls across kappa") {
  for (double kappa : {0.0, 1.0, 2.0}) {
    check_positive(linear_w("1.4", kappa, 0.0, kappa - 1.0, 1.0 - kappa, 0.0));
    check_positive(linear_w("1.4", kappa, 0.0, kappa + 1.0, -(kappa + 1.0), 0.0));
    check_negative(smooth_nonsolution("1.4", kappa));
  }
  // elliptic-rotation invariant profile from the 2.4 integration
  ReducedSolution rs24 = integrate_reduced_ode("2.4", 0.0, 0.5, 2.0, 1.0, {0.2, 0.0, 0.3, 0.1});
  SpaceTimeField f24 = reconstruct(rs24);
  for (double kappa : {0.0, 1.5}) {
    ReducedSolution rs = pullback_reduced(f24, "1.4", kappa);
    rs.samples = {0.45, 1.1, 0.45, 1.1};
    check_positive(rs);
  }
}

TEST_CASE("ansatz 1.5 controls") {
  for (double mu : {1.0, 2.5}) {
    check_positive(constant_reduced("1.5", mu, -mu, 0.0));
    check_negative(smooth_nonsolution("1.5", mu));
  }
  ReducedSolution rs25 =
      integrate_reduced_ode("2.5", 0.0, -1.2, 1.2, 0.0, {0.4, 0.1, -0.2, 0.3});
  SpaceTimeField f25 = reconstruct(rs25);
  for (double mu : {0.5, 1.0}) {
    ReducedSolution rs = pullback_reduced(f25, "1.5", mu);
    rs.samples = {-0.7, 0.7, -0.9, 0.9};
    check_positive(rs);
  }
}

TEST_CASE("ansatz 1.6 controls") {
  // radial linearizable profiles
  FamilyInstance hc = hopf_cole_2d(radial_hc_phi());
  ReducedSolution rs = pullback_reduced(hc.field, "1.6", 0.0);
  rs.samples = {0.25, 0.9, 0.5, 1.6};
  check_positive(rs);

  HeatSolution2D phi2 = superpose({{2.0, product2d(heat_polynomial(0), heat_polynomial(0))},
                                   {1.0, product2d(heat_polynomial(2), heat_polynomial(0))},
                                   {1.0, product2d(heat_polynomial(0), heat_polynomial(2))}});
  FamilyInstance hc2 = hopf_cole_2d(phi2, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 3, 5, 5});
  ReducedSolution rs2 = pullback_reduced(hc2.field, "1.6", 0.0);
  rs2.samples = {0.25, 0.9, 0.5, 1.6};
  check_positive(rs2);

  FamilyInstance hc3 = hopf_cole_2d(
      superpose({{1.0, product2d(heat_polynomial(0), heat_polynomial(0))},
                 {2.0, gaussian2d(-0.8, 0.0, 0.0)}}));
  ReducedSolution rs3 = pullback_reduced(hc3.field, "1.6", 0.0);
  rs3.samples = {0.25, 0.9, 0.5, 1.6};
  check_positive(rs3);

  check_negative(smooth_nonsolution("1.6", 0.0));
}

TEST_CASE("ansatz 1.7 controls") {
  check_positive(constant_reduced("1.7", 0.0, 0.0, 0.0));
  for (double eps : {1.0, -2.0}) {
    ReducedSolution rs;
    rs.ansatz = "1.7";
    rs.samples = default_sample_box("1.7");
    rs.w = [eps](int i, double z1, double, int d1, int d2) -> double {
      if (d2 > 0) return 0.0;
      double s = std::sin(2 * z1), c = std::cos(2 * z1);
      double scale = std::pow(2.0, d1);
      double base;
      if (i == 1) base = (d1 == 0) ? -s : (d1 == 1 ? -c : s);
      else base = (d1 == 0) ? -c : (d1 == 1 ? s : c);
      return eps * scale * base;
    };
    check_positive(rs);
    // the linearizability constraint w2_2 + 2 = 2 here (w2 is z2-free)
    CHECK(reduced_constraint(rs, 0.3, 0.1) == doctest::Approx(2.0));
  }
  check_negative(smooth_nonsolution("1.7", 0.0));
}

TEST_CASE("ansatz 1.8 controls and linearization") {
  check_positive(constant_reduced("1.8", 0.0, 0.7, -0.4));

  HeatSolution1D th1 =
      superpose({{0.5, heat_exp_mode(1.0, +1)}, {0.5, heat_exp_mode(1.0, -1)}});
  HeatSolution1D th2 = superpose({{1.0, heat_polynomial(1)}, {0.5, heat_gaussian(-0.3, 0.2)}});
  ReducedSolution rs = hopf_cole_18(th1, th2);
  check_positive(rs);
  check_negative(smooth_nonsolution("1.8", 0.0));

  // conserved current divergence vanishes on solutions
  for (double z1 : {0.2, 0.5, 0.9})
    for (double z2 : {-0.8, 0.1, 0.7})
      CHECK(std::abs(conserved_divergence_18(rs, z1, z2)) < 1e-8);

  // constraint: w2 constant flags the linearizable intersection
  ReducedSolution flat = hopf_cole_18(th1, th1 * 2.0);
  CHECK(std::abs(reduced_constraint(flat, 0.4, 0.3)) < 1e-12);
}

TEST_CASE("linearize_18 round trip") {
  // start from profiles built out of heat atoms, so the target is known
  HeatSolution1D th1 =
      superpose({{0.5, heat_exp_mode(1.0, +1)}, {0.5, heat_exp_mode(1.0, -1)}});
  HeatSolution1D th2 = superpose({{1.0, heat_polynomial(2)}, {1.0, heat_gaussian(-0.4, 0.0)}});
  ReducedSolution rs = hopf_cole_18(th1, th2);
  Linearized18 lin = linearize_18(rs);

  // the gauge-fixed theta1 solves the heat equation
  for (double z1 : {0.3, 0.6, 0.9})
    for (double z2 : {-0.6, 0.2, 0.8}) {
      double lhs = lin.theta(1, z1, z2, 1, 0);
      double rhs = lin.theta(1, z1, z2, 0, 2);
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
      lhs = lin.theta(2, z1, z2, 1, 0);
      rhs = lin.theta(2, z1, z2, 0, 2);
      CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
    }

  // round trip: back to the invariant profile
  ReducedSolution back = hopf_cole_18(
      [&lin](double z1, double z2, int dt, int dq) { return lin.theta(1, z1, z2, dt, dq); },
      [&lin](double z1, double z2, int dt, int dq) { return lin.theta(2, z1, z2, dt, dq); });
  for (double z1 : {0.2, 0.5, 0.8})
    for (double z2 : {-0.7, 0.0, 0.6}) {
      CHECK(back.w(1, z1, z2, 0, 0) ==
            doctest::Approx(rs.w(1, z1, z2, 0, 0)).epsilon(1e-8));
      CHECK(back.w(2, z1, z2, 0, 0) ==
            doctest::Approx(rs.w(2, z1, z2, 0, 0)).epsilon(1e-8));
    }

  // theta1 recovered from w1 = -2 tanh z2 is proportional to cosh z2
  ReducedSolution kink;
  kink.ansatz = "1.8";
  kink.samples = default_sample_box("1.8");
  kink.w = [](int i, double, double z2, int d1, int d2) -> double {
    if (i == 2) return 0.0;
    if (d1 > 0) return 0.0;
    double t_ = std::tanh(z2), s2 = 1 - t_ * t_;
    if (d2 == 0) return -2 * t_;
    if (d2 == 1) return -2 * s2;
    if (d2 == 2) return 4 * t_ * s2;
    return 4 * s2 * s2 - 8 * t_ * t_ * s2;
  };
  Linearized18 k = linearize_18(kink);
  double ratio = k.theta(1, 0.4, 0.5, 0, 0) / std::cosh(0.5);
  for (double z2 : {-0.5, 0.1, 0.9})
    CHECK(k.theta(1, 0.7, z2, 0, 0) / std::cosh(z2) == doctest::Approx(ratio).epsilon(1e-8));
}

TEST_CASE("ODE ansatz controls") {
  // 2.1, kappa = 0: phi = (-2, 2 tan w) solves the system and the constraint
  ReducedSolution tan21;
  tan21.ansatz = "2.1";
  tan21.param = 0.0;
  tan21.samples = {0.3, 1.2, 0, 0};
  tan21.phi = [](int i, double om, int k) -> double {
    if (i == 1) return k == 0 ? -2.0 : 0.0;
    double t_ = std::tan(om), s = 1 + t_ * t_;
    if (k == 0) return 2 * t_;
    if (k == 1) return 2 * s;
    return 4 * t_ * s;
  };
  check_positive(tan21);
  CHECK(std::abs(reduced_constraint(tan21, 0.7)) < 1e-12);

  // stationary-similarity pullback, kappa = 0
  FamilyInstance st = stationary_similarity(0, 0.5, 1.0, 0.3,
                                            Box{0.0, 1.0, 0.3, 2.5, 0.3, 2.5, 3, 6, 6});
  ReducedSolution rs21 = pullback_reduced(st.field, "2.1", 0.0);
  rs21.samples = {0.35, 1.15, 0, 0};
  check_positive(rs21);

  // integrated profiles for the remaining systems (and kappa > 0)
  check_positive(integrate_reduced_ode("2.1", 1.0, 0.2, 1.3, 0.7, {0.3, 0.2, -0.1, 0.4}));
  check_positive(integrate_reduced_ode("2.2", 0.0, 0.5, 2.0, 1.0, {0.5, -0.2, 0.3, 0.1}));
  check_positive(integrate_reduced_ode("2.3", 0.0, 0.5, 2.0, 1.0, {0.2, 0.1, -0.3, 0.2}));
  check_positive(integrate_reduced_ode("2.4", 0.0, 0.5, 2.0, 1.0, {-0.2, 0.3, 0.1, 0.2}));
  check_positive(integrate_reduced_ode("2.5", 0.7, -1.2, 1.2, 0.0, {0.3, -0.1, 0.2, 0.2}));

  // closed forms: 2.3 and 2.4 profiles from the affine catalog solutions
  ReducedSolution rs23;
  rs23.ansatz = "2.3";
  rs23.samples = {0.6, 1.8, 0, 0};
  rs23.phi = [](int i, double om, int k) -> double {
    if (i == 2) return 0.0;
    if (k == 0) return om / 2 - 1.0 / om;
    if (k == 1) return 0.5 + 1.0 / (om * om);
    return -2.0 / (om * om * om);
  };
  check_positive(rs23);

  ReducedSolution rs24;
  rs24.ansatz = "2.4";
  rs24.samples = {0.6, 1.8, 0, 0};
  rs24.phi = [](int i, double om, int k) -> double {
    if (i == 1) {
      if (k == 0) return -1.0 / om;
      if (k == 1) return 1.0 / (om * om);
      return -2.0 / (om * om * om);
    }
    if (k == 0) return om;
    return k == 1 ? 1.0 : 0.0;
  };
  check_positive(rs24);

  // 2.5: constants (-mu, 0); 2.6: any constants
  for (double mu : {0.0, 1.0, 2.0}) check_positive(constant_reduced("2.5", mu, -mu, 0.0));
  for (double mu : {0.5, 1.0, 3.0}) check_positive(constant_reduced("2.6", mu, 0.4, -0.7));

  for (const std::string& a : {std::string("2.1"), std::string("2.2"), std::string("2.3"),
                               std::string("2.4"), std::string("2.5"), std::string("2.6")})
    check_negative(smooth_nonsolution(a, a == "2.6" ? 1.0 : 0.0));
}

TEST_CASE("reduced constraints") {
  // 2.6 never satisfies the constraint
  ReducedSolution c26 = constant_reduced("2.6", 1.0, 0.3, 0.4);
  CHECK(reduced_constraint(c26, 0.5) == doctest::Approx(1.0));

  // 1.8 with constant w2
  ReducedSolution c18 = constant_reduced("1.8", 0.0, 0.5, 0.9);
  CHECK(reduced_constraint(c18, 0.5, 0.3) == doctest::Approx(0.0));

  // 2.5 display: phi2_w + 2
  ReducedSolution c25 = constant_reduced("2.5", 1.0, -1.0, 0.0);
  CHECK(reduced_constraint(c25, 0.2) == doctest::Approx(2.0));
}

TEST_CASE("parameter domains are enforced") {
  CHECK_THROWS_AS(consistency_check(constant_reduced("1.1", 0.5, 0, 0)), Error);
  CHECK_THROWS_AS(consistency_check(constant_reduced("1.5", -1.0, 0, 0)), Error);
  CHECK_THROWS_AS(consistency_check(constant_reduced("2.6", 0.0, 0, 0)), Error);
  CHECK_THROWS_AS(reduced_residual(constant_reduced("1.3", -0.5, 0, 0), 0, 0), Error);
}

TEST_CASE("catalog invariance pulls back to reduced solutions") {
  struct Case {
    std::string family;
    int set;
    std::string ansatz;
    SampleBox box;
  };
  // declared subalgebra -> matching ansatz
  FamilyInstance rot = affine_general({{{0.0, 1.0}, {-1.0, 0.0}}}, {0.0, 0.0});
  ReducedSolution r26 = pullback_reduced(rot.field, "2.6", 1.0);
  r26.samples = {-0.8, 0.8, 0, 0};
  check_positive(r26);

  HeatSolution1D th1 =
      superpose({{0.5, heat_exp_mode(1.0, +1)}, {0.5, heat_exp_mode(1.0, -1)}});
  FamilyInstance si = shift_invariant(th1, heat_polynomial(1));
  ReducedSolution r18 = pullback_reduced(si.field, "1.8");
  r18.samples = {0.1, 0.9, -0.8, 0.8};
  check_positive(r18);

  FamilyInstance hj = hj_family({}, +1);
  ReducedSolution r13 = pullback_reduced(hj.field, "1.3", 0.0);
  r13.samples = {-0.8, 0.8, -0.8, 0.8};
  check_positive(r13);

  FamilyInstance db = darboux_family(HeatSolution1D{});
  ReducedSolution r21 = pullback_reduced(db.field, "2.1", 0.0);
  r21.samples = {0.35, 1.15, 0, 0};
  check_positive(r21);
}
