#include "burgers_lab/sym_group.hpp"

#include <cmath>

namespace burgers_lab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_angle(double th) {
  th = std::fmod(th, kTwoPi);
  if (th < 0) th += kTwoPi;
  if (th > kTwoPi - 1e-15) th = 0.0;
  return th;
}

struct Mat2 {
  double m11, m12, m21, m22;
  void apply(double x, double y, double& ox, double& oy) const {
    ox = m11 * x + m12 * y;
    oy = m21 * x + m22 * y;
  }
};

Mat2 orth(const GroupElement& g) {
  double cth = std::cos(g.angle), sth = std::sin(g.angle);
  double s = g.reflect ? -1.0 : 1.0;
  return {cth, -sth * s, sth, cth * s};
}

}  // namespace

void GroupElement::orthogonal(double& o11, double& o12, double& o21, double& o22) const {
  Mat2 O = orth(*this);
  o11 = O.m11;
  o12 = O.m12;
  o21 = O.m21;
  o22 = O.m22;
}

GroupElement GroupElement::normalized() const {
  GroupElement g = *this;
  double det = g.a * g.d - g.b * g.c;
  if (!(det > 0)) fail(Errc::parameter_out_of_domain, "ad - bc must be positive");
  double s = std::sqrt(det);
  g.a /= s;
  g.b /= s;
  g.c /= s;
  g.d /= s;
  // Sign convention: first nonzero of (a,b,c,d) positive. Flipping the sign
  // of A must flip O as well to keep the same transformation.
  double lead = g.a != 0 ? g.a : (g.b != 0 ? g.b : (g.c != 0 ? g.c : g.d));
  if (lead < 0) {
    g.a = -g.a;
    g.b = -g.b;
    g.c = -g.c;
    g.d = -g.d;
    g.angle += std::acos(-1.0);
  }
  g.angle = wrap_angle(g.angle);
  return g;
}

bool GroupElement::approx_equal(const GroupElement& o, double tol) const {
  GroupElement p = normalized(), q = o.normalized();
  double da = std::abs(p.angle - q.angle);
  da = std::min(da, kTwoPi - da);
  return std::abs(p.a - q.a) < tol && std::abs(p.b - q.b) < tol &&
         std::abs(p.c - q.c) < tol && std::abs(p.d - q.d) < tol && da < tol &&
         p.reflect == q.reflect && std::abs(p.m1 - q.m1) < tol &&
         std::abs(p.m2 - q.m2) < tol && std::abs(p.n1 - q.n1) < tol &&
         std::abs(p.n2 - q.n2) < tol;
}

GroupElement identity_element() { return GroupElement{}; }

GroupElement mirror_element() {
  GroupElement g;
  g.angle = std::acos(-1.0);
  g.reflect = true;  // R(pi) * diag(1,-1) = diag(-1,1)
  return g;
}

GroupElement flow(const FlowParam& f) {
  GroupElement g;
  double e = f.epsilon;
  if (!std::isfinite(e)) fail(Errc::parameter_out_of_domain, "flow parameter must be finite");
  if (f.generator == "Pt") g.b = e;
  else if (f.generator == "D") { g.a = std::exp(e); g.d = std::exp(-e); }
  else if (f.generator == "Pi") g.c = -e;
  else if (f.generator == "J") g.angle = wrap_angle(e);
  else if (f.generator == "Px") g.n1 = e;
  else if (f.generator == "Py") g.n2 = e;
  else if (f.generator == "Gx") g.m1 = e;
  else if (f.generator == "Gy") g.m2 = e;
  else fail(Errc::config_error, "unknown generator " + f.generator);
  return g;
}

GroupElement compose(const GroupElement& g1r, const GroupElement& g2r) {
  GroupElement g1 = g1r.normalized(), g2 = g2r.normalized();
  GroupElement g;
  g.a = g1.a * g2.a + g1.b * g2.c;
  g.b = g1.a * g2.b + g1.b * g2.d;
  g.c = g1.c * g2.a + g1.d * g2.c;
  g.d = g1.c * g2.b + g1.d * g2.d;
  g.angle = g1.angle + (g1.reflect ? -g2.angle : g2.angle);
  g.reflect = g1.reflect != g2.reflect;
  Mat2 O1 = orth(g1);
  double om1, om2, on1, on2;
  O1.apply(g2.m1, g2.m2, om1, om2);
  O1.apply(g2.n1, g2.n2, on1, on2);
  g.m1 = g1.m1 + g1.d * om1 - g1.c * on1;
  g.m2 = g1.m2 + g1.d * om2 - g1.c * on2;
  g.n1 = g1.n1 - g1.b * om1 + g1.a * on1;
  g.n2 = g1.n2 - g1.b * om2 + g1.a * on2;
  return g.normalized();
}

GroupElement inverse(const GroupElement& gr) {
  GroupElement g = gr.normalized();
  GroupElement h;
  h.a = g.d;
  h.b = -g.b;
  h.c = -g.c;
  h.d = g.a;
  h.angle = g.reflect ? g.angle : -g.angle;  // O^T
  h.reflect = g.reflect;
  Mat2 Ot = orth(h);
  double om1, om2, on1, on2;
  Ot.apply(g.m1, g.m2, om1, om2);
  Ot.apply(g.n1, g.n2, on1, on2);
  // Solve compose(h, g) = identity for the boost/shift of h.
  h.m1 = -(h.d * om1 - h.c * on1);
  h.m2 = -(h.d * om2 - h.c * on2);
  h.n1 = -(-h.b * om1 + h.a * on1);
  h.n2 = -(-h.b * om2 + h.a * on2);
  return h.normalized();
}

std::pair<Point, Vec2> act_point(const GroupElement& gr, const Point& p, const Vec2& uv) {
  GroupElement g = gr.normalized();
  double den = g.c * p.t + g.d;
  if (den == 0.0) fail(Errc::denominator_vanishes, "c*t + d vanished");
  Mat2 O = orth(g);
  double tt = (g.a * p.t + g.b) / den;
  double ox, oy, ou, ov;
  O.apply(p.x, p.y, ox, oy);
  O.apply(uv.u, uv.v, ou, ov);
  Point q(tt, ox / den + tt * g.m1 + g.n1, oy / den + tt * g.m2 + g.n2);
  Vec2 w{den * ou - g.c * ox + g.m1, den * ov - g.c * oy + g.m2};
  return {q, w};
}

namespace {

class ActedKernel final : public FieldKernel {
 public:
  ActedKernel(GroupElement g, SpaceTimeField src)
      : g_(g.normalized()), h_(inverse(g)), src_(std::move(src)), Og_(orth(g_)), Oh_(orth(h_)) {}

  Vec2 eval(const Point& q) const override {
    Point p = pullback(q);
    Vec2 w = src_.eval(p);
    return push_value(p, w);
  }

  bool singular(const Point& q) const override {
    double den_h = h_.c * q.t + h_.d;
    if (std::abs(den_h) < 1e-9 * std::max(1.0, std::abs(q.t))) return true;
    return src_.is_singular(pullback(q));
  }

  bool has_analytic_derivatives() const override {
    return src_.derivative_mode() == DerivativeMode::analytic;
  }

  Jet1 d1(const Point& q) const override {
    Point p = pullback(q);
    Vec2 w = src_.eval(p);
    Jet1 j = src_.d1(p);
    double den_h = h_.c * q.t + h_.d;
    double den_g = g_.c * p.t + g_.d;
    double tprime = 1.0 / (den_h * den_h);  // dt/dt~ of the pullback
    // d(x,y)/d(x~,y~) = Oh / den_h ; d(x,y)/dt~ = -c_h Oh (x~,y~)/den_h^2 + m_h/den_h^2
    double sxx = Oh_.m11 / den_h, sxy = Oh_.m12 / den_h;
    double syx = Oh_.m21 / den_h, syy = Oh_.m22 / den_h;
    double ohx, ohy;
    Oh_.apply(q.x, q.y, ohx, ohy);
    double xt = (-h_.c * ohx + h_.m1) / (den_h * den_h);
    double yt = (-h_.c * ohy + h_.m2) / (den_h * den_h);

    // value rule: (u~,v~) = den_g(t) Og w - c_g Og (x,y) + m_g at p(q)
    double owu, owv;
    Jet1 out;
    // d/dx~
    {
      double wux = j.ux * sxx + j.uy * syx;
      double wvx = j.vx * sxx + j.vy * syx;
      Og_.apply(wux, wvx, owu, owv);
      double oxx, oxy;
      Og_.apply(sxx, syx, oxx, oxy);
      out.ux = den_g * owu - g_.c * oxx;
      out.vx = den_g * owv - g_.c * oxy;
    }
    // d/dy~
    {
      double wuy = j.ux * sxy + j.uy * syy;
      double wvy = j.vx * sxy + j.vy * syy;
      Og_.apply(wuy, wvy, owu, owv);
      double oyx, oyy;
      Og_.apply(sxy, syy, oyx, oyy);
      out.uy = den_g * owu - g_.c * oyx;
      out.vy = den_g * owv - g_.c * oyy;
    }
    // d/dt~
    {
      double wut = j.ut * tprime + j.ux * xt + j.uy * yt;
      double wvt = j.vt * tprime + j.vx * xt + j.vy * yt;
      Og_.apply(wut, wvt, owu, owv);
      double owu0, owv0;
      Og_.apply(w.u, w.v, owu0, owv0);
      double oxt, oyt;
      Og_.apply(xt, yt, oxt, oyt);
      out.ut = g_.c * tprime * owu0 + den_g * owu - g_.c * oxt;
      out.vt = g_.c * tprime * owv0 + den_g * owv - g_.c * oyt;
    }
    return out;
  }

  Jet2 d2_space(const Point& q) const override {
    Point p = pullback(q);
    Jet2 H = src_.d2_space(p);
    double den_h = h_.c * q.t + h_.d;
    double den_g = g_.c * p.t + g_.d;
    double sxx = Oh_.m11 / den_h, sxy = Oh_.m12 / den_h;
    double syx = Oh_.m21 / den_h, syy = Oh_.m22 / den_h;
    // The pullback is affine in (x~,y~) at fixed t~, so only the quadratic
    // contraction of the source Hessian appears.
    auto contract = [&](double hxx, double hxy, double hyy, double ax, double ay, double bx,
                        double by) {
      return hxx * ax * bx + hxy * (ax * by + ay * bx) + hyy * ay * by;
    };
    Jet2 out;
    double cu, cv, ou, ov;
    cu = contract(H.uxx, H.uxy, H.uyy, sxx, syx, sxx, syx);
    cv = contract(H.vxx, H.vxy, H.vyy, sxx, syx, sxx, syx);
    Og_.apply(cu, cv, ou, ov);
    out.uxx = den_g * ou;
    out.vxx = den_g * ov;
    cu = contract(H.uxx, H.uxy, H.uyy, sxx, syx, sxy, syy);
    cv = contract(H.vxx, H.vxy, H.vyy, sxx, syx, sxy, syy);
    Og_.apply(cu, cv, ou, ov);
    out.uxy = den_g * ou;
    out.vxy = den_g * ov;
    cu = contract(H.uxx, H.uxy, H.uyy, sxy, syy, sxy, syy);
    cv = contract(H.vxx, H.vxy, H.vyy, sxy, syy, sxy, syy);
    Og_.apply(cu, cv, ou, ov);
    out.uyy = den_g * ou;
    out.vyy = den_g * ov;
    return out;
  }

 private:
  Point pullback(const Point& q) const {
    double den_h = h_.c * q.t + h_.d;
    if (den_h == 0.0) fail(Errc::denominator_vanishes, "pullback chart boundary");
    double t = (h_.a * q.t + h_.b) / den_h;
    double ox, oy;
    Oh_.apply(q.x, q.y, ox, oy);
    return Point(t, ox / den_h + t * h_.m1 + h_.n1, oy / den_h + t * h_.m2 + h_.n2);
  }
  Vec2 push_value(const Point& p, const Vec2& w) const {
    double den_g = g_.c * p.t + g_.d;
    double ou, ov, ox, oy;
    Og_.apply(w.u, w.v, ou, ov);
    Og_.apply(p.x, p.y, ox, oy);
    return Vec2{den_g * ou - g_.c * ox + g_.m1, den_g * ov - g_.c * oy + g_.m2};
  }

  GroupElement g_, h_;
  SpaceTimeField src_;
  Mat2 Og_, Oh_;
};

}  // namespace

SpaceTimeField act_field(const GroupElement& g, const SpaceTimeField& field) {
  return SpaceTimeField(std::make_shared<ActedKernel>(g, field));
}

nlohmann::json group_element_to_json(const GroupElement& gr) {
  GroupElement g = gr.normalized();
  nlohmann::json j;
  j["sl2"] = {g.a, g.b, g.c, g.d};
  j["angle"] = g.angle;
  j["reflect"] = g.reflect;
  j["boost"] = {g.m1, g.m2};
  j["shift"] = {g.n1, g.n2};
  return j;
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  GroupElement g;
  if (j.contains("sl2")) {
    auto a = j.at("sl2");
    if (!a.is_array() || a.size() != 4) fail(Errc::config_error, "sl2 must have 4 entries");
    g.a = a[0];
    g.b = a[1];
    g.c = a[2];
    g.d = a[3];
  }
  g.angle = j.value("angle", 0.0);
  g.reflect = j.value("reflect", false);
  if (j.contains("boost")) {
    g.m1 = j.at("boost").at(0);
    g.m2 = j.at("boost").at(1);
  }
  if (j.contains("shift")) {
    g.n1 = j.at("shift").at(0);
    g.n2 = j.at("shift").at(1);
  }
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "sl2" && key != "angle" && key != "reflect" && key != "boost" && key != "shift")
      fail(Errc::config_error, "unknown group element key " + key);
  }
  return g.normalized();
}

}  // namespace burgers_lab
