#include "burgers_lab/reduce.hpp"

#include <cmath>

#include "burgers_lab/hermite.hpp"
#include "burgers_lab/verify.hpp"

namespace burgers_lab {

namespace {

// value, gradient and spatial Hessian of a scalar ingredient of an ansatz
struct Jet3 {
  double f = 0, ft = 0, fx = 0, fy = 0, fxx = 0, fxy = 0, fyy = 0;
  Jet3 operator+(const Jet3& o) const {
    return {f + o.f, ft + o.ft, fx + o.fx, fy + o.fy, fxx + o.fxx, fxy + o.fxy, fyy + o.fyy};
  }
  Jet3 operator-(const Jet3& o) const {
    return {f - o.f, ft - o.ft, fx - o.fx, fy - o.fy, fxx - o.fxx, fxy - o.fxy, fyy - o.fyy};
  }
  Jet3 operator*(double c) const {
    return {f * c, ft * c, fx * c, fy * c, fxx * c, fxy * c, fyy * c};
  }
};

// x/r and y/r
Jet3 jet_xr(double x, double y) {
  double r = std::hypot(x, y), r3 = r * r * r, r5 = r3 * r * r;
  return {x / r, 0, y * y / r3,          -x * y / r3,
          -3 * x * y * y / r5, y * (2 * x * x - y * y) / r5, -x / r3 + 3 * x * y * y / r5};
}
Jet3 jet_yr(double x, double y) {
  Jet3 j = jet_xr(y, x);  // swap roles, then swap the x/y derivative slots
  return {j.f, 0, j.fy, j.fx, j.fyy, j.fxy, j.fxx};
}
// x/r^2 and y/r^2
Jet3 jet_xr2(double x, double y) {
  double r2 = x * x + y * y, r4 = r2 * r2, r6 = r4 * r2;
  return {x / r2,
          0,
          (y * y - x * x) / r4,
          -2 * x * y / r4,
          2 * x * (x * x - 3 * y * y) / r6,
          2 * y * (3 * x * x - y * y) / r6,
          -2 * x * (x * x - 3 * y * y) / r6};
}
Jet3 jet_yr2(double x, double y) {
  Jet3 j = jet_xr2(y, x);
  return {j.f, 0, j.fy, j.fx, j.fyy, j.fxy, j.fxx};
}
// r itself
Jet3 jet_r(double x, double y) {
  double r = std::hypot(x, y), r3 = r * r * r;
  return {r, 0, x / r, y / r, y * y / r3, -x * y / r3, x * x / r3};
}
// atan(y/x), principal branch, x > 0
Jet3 jet_angle(double x, double y) {
  double r2 = x * x + y * y, r4 = r2 * r2;
  return {std::atan2(y, x), 0, -y / r2,          x / r2,
          2 * x * y / r4,   (y * y - x * x) / r4, -2 * x * y / r4};
}
// log r
Jet3 jet_logr(double x, double y) {
  double r2 = x * x + y * y, r4 = r2 * r2;
  return {0.5 * std::log(r2), 0,
          x / r2,            y / r2,
          (y * y - x * x) / r4, -2 * x * y / r4, (x * x - y * y) / r4};
}

struct Ingredients {
  Jet3 M[2][2];
  Jet3 p[2];
  Jet3 z[2];
};

struct AnsatzDef {
  std::string id;
  bool is_ode;
  bool has_param;
};

const std::vector<AnsatzDef>& ansatz_defs() {
  static const std::vector<AnsatzDef> defs = {
      {"1.1", false, true},  {"1.2", false, false}, {"1.3", false, true},
      {"1.4", false, true},  {"1.5", false, true},  {"1.6", false, false},
      {"1.7", false, false}, {"1.8", false, false}, {"2.1", true, true},
      {"2.2", true, false},  {"2.3", true, false},  {"2.4", true, false},
      {"2.5", true, true},   {"2.6", true, true},
  };
  return defs;
}

const AnsatzDef& ansatz_def(const std::string& id) {
  for (const auto& d : ansatz_defs())
    if (d.id == id) return d;
  fail(Errc::config_error, "unknown ansatz " + id);
}

bool point_singular(const std::string& a, double param, int t_sign, const Point& p) {
  (void)param;
  if (a == "1.3" || a == "2.3") {
    if (t_sign > 0 ? p.t < 1e-9 : p.t > -1e-9) return true;
  }
  if (a == "1.6" || a == "2.2" || a == "2.3" || a == "2.4") {
    if (std::hypot(p.x, p.y) < 1e-9) return true;
  }
  if (a == "2.1") {
    if (p.x < 1e-9 || std::hypot(p.x, p.y) < 1e-9) return true;  // principal branch
  }
  return false;
}

Ingredients ansatz_ingredients(const std::string& a, double param, int t_sign, const Point& pt) {
  const double t = pt.t, x = pt.x, y = pt.y;
  Ingredients g;
  auto rot_M = [&](double amp, double amp_t, double tau, double tau_t) {
    double c = std::cos(tau), s = std::sin(tau);
    g.M[0][0] = {amp * c, amp_t * c - amp * s * tau_t};
    g.M[0][1] = {-amp * s, -amp_t * s - amp * c * tau_t};
    g.M[1][0] = {amp * s, amp_t * s + amp * c * tau_t};
    g.M[1][1] = {amp * c, amp_t * c - amp * s * tau_t};
  };

  if (a == "1.1") {
    double kap = param, tau = kap * t;
    rot_M(1.0, 0.0, tau, kap);
    g.p[0] = Jet3{-kap * y, 0, 0, -kap};
    g.p[1] = Jet3{kap * x, 0, kap, 0};
    double c = std::cos(tau), s = std::sin(tau);
    g.z[0] = Jet3{x * c + y * s, kap * (-x * s + y * c), c, s};
    g.z[1] = Jet3{-x * s + y * c, -kap * (x * c + y * s), -s, c};
  } else if (a == "1.2") {
    g.M[0][0] = g.M[1][1] = Jet3{1.0};
    g.p[1] = Jet3{t, 1};
    g.z[0] = Jet3{x, 0, 1, 0};
    g.z[1] = Jet3{y - 0.5 * t * t, -t, 0, 1};
  } else if (a == "1.3") {
    double kap = param;
    double at = t_sign * t;
    double amp = 1.0 / std::sqrt(at), amp_t = -0.5 * amp / t;
    double tau = kap * std::log(at), tau_t = kap / t;
    rot_M(amp, amp_t, tau, tau_t);
    g.p[0] = Jet3{x / (2 * t) - kap * y / t, -x / (2 * t * t) + kap * y / (t * t), 1 / (2 * t),
                  -kap / t};
    g.p[1] = Jet3{y / (2 * t) + kap * x / t, -y / (2 * t * t) - kap * x / (t * t), kap / t,
                  1 / (2 * t)};
    double c = std::cos(tau), s = std::sin(tau);
    g.z[0] = Jet3{amp * (x * c + y * s), amp_t * (x * c + y * s) + amp * (-x * s + y * c) * tau_t,
                  amp * c, amp * s};
    g.z[1] = Jet3{amp * (-x * s + y * c), amp_t * (-x * s + y * c) - amp * (x * c + y * s) * tau_t,
                  -amp * s, amp * c};
  } else if (a == "1.4") {
    double kap = param, S = t * t + 1;
    double amp = 1.0 / std::sqrt(S), amp_t = -t * amp / S;
    double tau = kap * std::atan(t), tau_t = kap / S;
    rot_M(amp, amp_t, tau, tau_t);
    g.p[0] = Jet3{(t * x - kap * y) / S, x / S - 2 * t * (t * x - kap * y) / (S * S), t / S,
                  -kap / S};
    g.p[1] = Jet3{(t * y + kap * x) / S, y / S - 2 * t * (t * y + kap * x) / (S * S), kap / S,
                  t / S};
    double c = std::cos(tau), s = std::sin(tau);
    g.z[0] = Jet3{amp * (x * c + y * s), amp_t * (x * c + y * s) + amp * (-x * s + y * c) * tau_t,
                  amp * c, amp * s};
    g.z[1] = Jet3{amp * (-x * s + y * c), amp_t * (-x * s + y * c) - amp * (x * c + y * s) * tau_t,
                  -amp * s, amp * c};
  } else if (a == "1.5") {
    double mu = param, S = t * t + 1, S2 = S * S;
    g.M[0][0] = g.M[1][1] = Jet3{t / S, (1 - t * t) / S2};
    g.M[0][1] = Jet3{1 / S, -2 * t / S2};
    g.M[1][0] = Jet3{-1 / S, 2 * t / S2};
    g.p[0] = Jet3{(t * (x + mu) - y) / S, (x + mu) / S - 2 * t * (t * (x + mu) - y) / S2, t / S,
                  -1 / S};
    g.p[1] = Jet3{(t * y + x - mu) / S, y / S - 2 * t * (t * y + x - mu) / S2, 1 / S, t / S};
    g.z[0] = Jet3{(t * x - y) / S - mu * std::atan(t),
                  x / S - 2 * t * (t * x - y) / S2 - mu / S, t / S, -1 / S};
    g.z[1] = Jet3{(x + t * y) / S, y / S - 2 * t * (x + t * y) / S2, 1 / S, t / S};
  } else if (a == "1.6") {
    g.M[0][0] = g.M[1][1] = jet_xr(x, y);
    g.M[0][1] = jet_yr(x, y) * -1.0;
    g.M[1][0] = jet_yr(x, y);
    g.p[0] = jet_xr2(x, y);
    g.p[1] = jet_yr2(x, y);
    g.z[0] = Jet3{t, 1};
    g.z[1] = jet_r(x, y);
  } else if (a == "1.7" || a == "2.5") {
    double mu = (a == "2.5") ? param : 0.0;
    double S = t * t + 1, S2 = S * S;
    g.M[0][0] = g.M[1][1] = Jet3{1 / S, -2 * t / S2};
    g.M[0][1] = Jet3{-t / S, -(1 - t * t) / S2};
    g.M[1][0] = Jet3{t / S, (1 - t * t) / S2};
    if (a == "1.7") {
      g.p[0] = Jet3{(t * x - y) / S, x / S - 2 * t * (t * x - y) / S2, t / S, -1 / S};
      g.p[1] = Jet3{(x + t * y) / S, y / S - 2 * t * (x + t * y) / S2, 1 / S, t / S};
      g.z[0] = Jet3{std::atan(t), 1 / S};
      g.z[1] = Jet3{(x + t * y) / S, y / S - 2 * t * (x + t * y) / S2, 1 / S, t / S};
    } else {
      g.p[0] = Jet3{(t * x - y + mu) / S, x / S - 2 * t * (t * x - y + mu) / S2, t / S, -1 / S};
      g.p[1] = Jet3{(x + t * y + mu * t) / S, (y + mu) / S - 2 * t * (x + t * y + mu * t) / S2,
                    1 / S, t / S};
      g.z[0] = Jet3{(x + t * y) / S - mu * std::atan(t),
                    y / S - 2 * t * (x + t * y) / S2 - mu / S, 1 / S, t / S};
    }
  } else if (a == "1.8") {
    g.M[0][0] = g.M[1][1] = Jet3{1.0};
    g.z[0] = Jet3{t, 1};
    g.z[1] = Jet3{x, 0, 1, 0};
  } else if (a == "2.1") {
    double kap = param;
    g.M[0][0] = g.M[1][1] = jet_xr2(x, y);
    g.M[0][1] = jet_yr2(x, y) * -1.0;
    g.M[1][0] = jet_yr2(x, y);
    g.z[0] = jet_angle(x, y) - jet_logr(x, y) * kap;
  } else if (a == "2.2") {
    g.M[0][0] = g.M[1][1] = jet_xr(x, y);
    g.M[0][1] = jet_yr(x, y) * -1.0;
    g.M[1][0] = jet_yr(x, y);
    g.p[0] = jet_xr2(x, y);
    g.p[1] = jet_yr2(x, y);
    g.z[0] = jet_r(x, y);
  } else if (a == "2.3") {
    double at = t_sign * t;
    double amp = 1.0 / std::sqrt(at), amp_t = -0.5 * amp / t;
    Jet3 xr = jet_xr(x, y), yr = jet_yr(x, y), rr = jet_r(x, y);
    auto scale = [&](const Jet3& m) {
      Jet3 r = m * amp;
      r.ft = amp_t * m.f;
      return r;
    };
    g.M[0][0] = g.M[1][1] = scale(xr);
    g.M[0][1] = scale(yr) * -1.0;
    g.M[1][0] = scale(yr);
    g.p[0] = jet_xr2(x, y) + Jet3{x / (2 * t), -x / (2 * t * t), 1 / (2 * t), 0};
    g.p[1] = jet_yr2(x, y) + Jet3{y / (2 * t), -y / (2 * t * t), 0, 1 / (2 * t)};
    g.z[0] = scale(rr);
  } else if (a == "2.4") {
    double S = t * t + 1;
    double amp = 1.0 / std::sqrt(S), amp_t = -t * amp / S;
    Jet3 xr = jet_xr(x, y), yr = jet_yr(x, y), rr = jet_r(x, y);
    auto scale = [&](const Jet3& m) {
      Jet3 r = m * amp;
      r.ft = amp_t * m.f;
      return r;
    };
    g.M[0][0] = g.M[1][1] = scale(xr);
    g.M[0][1] = scale(yr) * -1.0;
    g.M[1][0] = scale(yr);
    g.p[0] = jet_xr2(x, y) + Jet3{t * x / S, x * (1 - t * t) / (S * S), t / S, 0};
    g.p[1] = jet_yr2(x, y) + Jet3{t * y / S, y * (1 - t * t) / (S * S), 0, t / S};
    g.z[0] = scale(rr);
  } else if (a == "2.6") {
    double mu = param, P = t * t + mu, P2 = P * P;
    g.M[0][0] = g.M[1][1] = Jet3{t / P, (mu - t * t) / P2};
    g.M[0][1] = Jet3{-mu / P, 2 * mu * t / P2};
    g.M[1][0] = Jet3{1 / P, -2 * t / P2};
    g.p[0] = Jet3{(t * x - mu * y) / P, x / P - 2 * t * (t * x - mu * y) / P2, t / P, -mu / P};
    g.p[1] = Jet3{(x + t * y) / P, y / P - 2 * t * (x + t * y) / P2, 1 / P, t / P};
    g.z[0] = Jet3{t, 1};
  } else {
    fail(Errc::config_error, "unknown ansatz " + a);
  }
  return g;
}

// w-derivative accessor used by the reconstruction; for ODE ansatzes
// z2-derivatives vanish.
struct WAccess {
  const ReducedSolution* rs;
  double operator()(int i, double z1, double z2, int d1, int d2) const {
    if (rs->is_ode()) {
      if (d2 > 0) return 0.0;
      return rs->phi(i, z1, d1);
    }
    return rs->w(i, z1, z2, d1, d2);
  }
};

class ReconstructKernel final : public FieldKernel {
 public:
  explicit ReconstructKernel(ReducedSolution rs) : rs_(std::move(rs)) {}

  Vec2 eval(const Point& p) const override {
    Ingredients g = ing(p);
    WAccess W{&rs_};
    double w1 = W(1, g.z[0].f, g.z[1].f, 0, 0), w2 = W(2, g.z[0].f, g.z[1].f, 0, 0);
    return {g.M[0][0].f * w1 + g.M[0][1].f * w2 + g.p[0].f,
            g.M[1][0].f * w1 + g.M[1][1].f * w2 + g.p[1].f};
  }

  bool singular(const Point& p) const override {
    return point_singular(rs_.ansatz, rs_.param, rs_.t_sign, p);
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    Ingredients g = ing(p);
    WAccess W{&rs_};
    double z1 = g.z[0].f, z2 = g.z[1].f;
    double w[2] = {W(1, z1, z2, 0, 0), W(2, z1, z2, 0, 0)};
    double w1d[2] = {W(1, z1, z2, 1, 0), W(2, z1, z2, 1, 0)};
    double w2d[2] = {W(1, z1, z2, 0, 1), W(2, z1, z2, 0, 1)};
    auto comp = [&](int c, int alpha) {  // alpha: 0=t 1=x 2=y
      auto pick = [&](const Jet3& j) { return alpha == 0 ? j.ft : (alpha == 1 ? j.fx : j.fy); };
      double acc = pick(g.p[c]);
      for (int jx = 0; jx < 2; ++jx) {
        double chain = w1d[jx] * pick(g.z[0]) + w2d[jx] * pick(g.z[1]);
        acc += pick(g.M[c][jx]) * w[jx] + g.M[c][jx].f * chain;
      }
      return acc;
    };
    Jet1 out;
    out.ut = comp(0, 0);
    out.ux = comp(0, 1);
    out.uy = comp(0, 2);
    out.vt = comp(1, 0);
    out.vx = comp(1, 1);
    out.vy = comp(1, 2);
    return out;
  }

  Jet2 d2_space(const Point& p) const override {
    Ingredients g = ing(p);
    WAccess W{&rs_};
    double z1 = g.z[0].f, z2 = g.z[1].f;
    double w[2] = {W(1, z1, z2, 0, 0), W(2, z1, z2, 0, 0)};
    double w1d[2] = {W(1, z1, z2, 1, 0), W(2, z1, z2, 1, 0)};
    double w2d[2] = {W(1, z1, z2, 0, 1), W(2, z1, z2, 0, 1)};
    bool need11 = std::abs(g.z[0].fx) + std::abs(g.z[0].fy) > 0;
    bool need22 = std::abs(g.z[1].fx) + std::abs(g.z[1].fy) > 0;
    double w11[2] = {0, 0}, w12[2] = {0, 0}, w22[2] = {0, 0};
    for (int jx = 0; jx < 2; ++jx) {
      if (need11) w11[jx] = W(jx + 1, z1, z2, 2, 0);
      if (need11 && need22) w12[jx] = W(jx + 1, z1, z2, 1, 1);
      if (need22) w22[jx] = W(jx + 1, z1, z2, 0, 2);
    }
    auto comp = [&](int c, int alpha, int beta) {  // alpha,beta in {1,2} ~ x,y
      auto pick1 = [&](const Jet3& j, int k) { return k == 1 ? j.fx : j.fy; };
      auto pick2 = [&](const Jet3& j) {
        if (alpha == 1 && beta == 1) return j.fxx;
        if (alpha == 2 && beta == 2) return j.fyy;
        return j.fxy;
      };
      double acc = pick2(g.p[c]);
      for (int jx = 0; jx < 2; ++jx) {
        double za = pick1(g.z[0], alpha), zb = pick1(g.z[0], beta);
        double ya = pick1(g.z[1], alpha), yb = pick1(g.z[1], beta);
        double chain_a = w1d[jx] * za + w2d[jx] * ya;
        double chain_b = w1d[jx] * zb + w2d[jx] * yb;
        acc += pick2(g.M[c][jx]) * w[jx];
        acc += pick1(g.M[c][jx], alpha) * chain_b + pick1(g.M[c][jx], beta) * chain_a;
        double quad = w11[jx] * za * zb + w12[jx] * (za * yb + zb * ya) + w22[jx] * ya * yb;
        double lin = w1d[jx] * pick2(g.z[0]) + w2d[jx] * pick2(g.z[1]);
        acc += g.M[c][jx].f * (quad + lin);
      }
      return acc;
    };
    Jet2 out;
    out.uxx = comp(0, 1, 1);
    out.uxy = comp(0, 1, 2);
    out.uyy = comp(0, 2, 2);
    out.vxx = comp(1, 1, 1);
    out.vxy = comp(1, 1, 2);
    out.vyy = comp(1, 2, 2);
    return out;
  }

 private:
  Ingredients ing(const Point& p) const {
    if (point_singular(rs_.ansatz, rs_.param, rs_.t_sign, p))
      fail(Errc::singular_point, "ansatz " + rs_.ansatz + " singular at point");
    return ansatz_ingredients(rs_.ansatz, rs_.param, rs_.t_sign, p);
  }
  ReducedSolution rs_;
};

}  // namespace

void validate_reduced(const ReducedSolution& rs) {
  const AnsatzDef& def = ansatz_def(rs.ansatz);
  if (def.is_ode && !rs.phi) fail(Errc::config_error, "ODE ansatz needs phi");
  if (!def.is_ode && !rs.w) fail(Errc::config_error, "PDE ansatz needs w");
  double k = rs.param;
  if (rs.ansatz == "1.1" && !(k == 0.0 || k == 1.0))
    fail(Errc::parameter_out_of_domain, "1.1 needs kappa in {0,1}");
  if ((rs.ansatz == "1.3" || rs.ansatz == "1.4" || rs.ansatz == "2.1" || rs.ansatz == "2.5") &&
      k < 0)
    fail(Errc::parameter_out_of_domain, rs.ansatz + " needs a nonnegative parameter");
  if ((rs.ansatz == "1.5" || rs.ansatz == "2.6") && !(k > 0))
    fail(Errc::parameter_out_of_domain, rs.ansatz + " needs a positive parameter");
  if (rs.t_sign != 1 && rs.t_sign != -1) fail(Errc::config_error, "t_sign must be +-1");
}

bool ansatz_is_ode(const std::string& ansatz) { return ansatz_def(ansatz).is_ode; }

const std::vector<std::string>& ansatz_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : ansatz_defs()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

SampleBox default_sample_box(const std::string& a) {
  if (a == "1.6") return {0.25, 1.0, 0.6, 1.8};
  if (a == "1.7") return {-0.6, 0.6, -1.0, 1.0};
  if (a == "1.8") return {0.1, 1.0, -1.0, 1.0};
  if (a == "1.1") return {-1.0, 1.0, 0.5, 2.0};
  if (a == "2.1") return {0.3, 1.2, 0, 0};
  if (a == "2.2" || a == "2.3" || a == "2.4") return {0.6, 1.8, 0, 0};
  if (a == "2.5") return {-1.0, 1.0, 0, 0};
  if (a == "2.6") return {-1.0, 1.0, 0, 0};
  return {-1.0, 1.0, -1.0, 1.0};
}

Point section_point(const ReducedSolution& rs, double z1, double z2) {
  const std::string& a = rs.ansatz;
  if (a == "1.1" || a == "1.2" || a == "1.4") return Point(0, z1, z2);
  if (a == "1.3") return Point(rs.t_sign, z1, z2);
  if (a == "1.5") return Point(0, z2, -z1);
  if (a == "1.6" || a == "1.8") return Point(z1, z2, 0);
  if (a == "1.7") {
    double t = std::tan(z1);
    return Point(t, z2 * (t * t + 1), 0);
  }
  if (a == "2.1") return Point(0, std::cos(z1), std::sin(z1));
  if (a == "2.2" || a == "2.4" || a == "2.5") return Point(0, z1, 0);
  if (a == "2.3") return Point(rs.t_sign, z1, 0);
  if (a == "2.6") return Point(z1, 0, 0);
  fail(Errc::config_error, "unknown ansatz " + a);
}

SpaceTimeField reconstruct(const ReducedSolution& rs) {
  validate_reduced(rs);
  return SpaceTimeField(std::make_shared<ReconstructKernel>(rs));
}

std::pair<double, double> reduced_residual(const ReducedSolution& rs, double z1, double z2) {
  validate_reduced(rs);
  const std::string& a = rs.ansatz;
  if (!rs.is_ode()) {
    auto W = [&](int i, int d1, int d2) { return rs.w(i, z1, z2, d1, d2); };
    double w1 = W(1, 0, 0), w2 = W(2, 0, 0);
    double w1_1 = W(1, 1, 0), w1_2 = W(1, 0, 1), w2_1 = W(2, 1, 0), w2_2 = W(2, 0, 1);
    double w1_11 = W(1, 2, 0), w1_22 = W(1, 0, 2), w2_11 = W(2, 2, 0), w2_22 = W(2, 0, 2);
    if (a == "1.6" || a == "1.7" || a == "1.8") {
      double F1 = 0, F2 = 0;
      if (a == "1.6") {
        if (std::abs(z2) < 1e-12) fail(Errc::singular_point, "1.6 needs z2 != 0");
        F1 = -w2 * w2 / z2 - 1.0 / (z2 * z2 * z2);
        F2 = w1 * w2 / z2 + 2.0 * w2 / (z2 * z2);
      } else if (a == "1.7") {
        F1 = -2.0 * w2;
        F2 = 2.0 * w1;
      }
      return {w1_1 + w1 * w1_2 - w1_22 + F1, w2_1 + w1 * w2_2 - w2_22 + F2};
    }
    // grouped systems 1.1-1.5
    double kt = 0, alpha = 0, beta = 0;
    if (a == "1.1") { kt = rs.param; alpha = -rs.param; }
    else if (a == "1.2") { beta = 1.0; }
    else if (a == "1.3") { kt = rs.param * rs.t_sign; alpha = -(rs.param * rs.param + 0.25); }
    else if (a == "1.4") { kt = rs.param; alpha = 1.0 - rs.param * rs.param; }
    else if (a == "1.5") { kt = 1.0; beta = 2.0 * rs.param; }
    double r1 = w1 * w1_1 + w2 * w1_2 - w1_11 - w1_22 - 2 * kt * w2 + alpha * z1;
    double r2 = w1 * w2_1 + w2 * w2_2 - w2_11 - w2_22 + 2 * kt * w1 + alpha * z2 + beta;
    return {r1, r2};
  }
  double om = z1;
  auto P = [&](int i, int k) { return rs.phi(i, om, k); };
  double f1 = P(1, 0), f2 = P(2, 0), f1p = P(1, 1), f2p = P(2, 1), f1pp = P(1, 2),
         f2pp = P(2, 2);
  if (a == "2.1") {
    double kap = rs.param;
    double pre = f2 - kap * f1 - 2 * kap, k2 = kap * kap + 1;
    return {pre * f1p - k2 * f1pp + 2 * f2p - f1 * f1 - f2 * f2, pre * f2p - k2 * f2pp - 2 * f1p};
  }
  if (a == "2.2" || a == "2.3" || a == "2.4") {
    if (std::abs(om) < 1e-12) fail(Errc::singular_point, "omega must not vanish");
    double extra = a == "2.3" ? -om / 4 : (a == "2.4" ? om : 0.0);
    return {f1 * f1p - f1pp - f2 * f2 / om - 1.0 / (om * om * om) + extra,
            f1 * f2p - f2pp + f1 * f2 / om + 2.0 * f2 / (om * om)};
  }
  if (a == "2.5")
    return {f1 * f1p - f1pp - 2 * f2, f1 * f2p - f2pp + 2 * f1 + 2 * rs.param};
  // 2.6
  return {f1p, f2p};
}

double reduced_constraint(const ReducedSolution& rs, double z1, double z2) {
  validate_reduced(rs);
  const std::string& a = rs.ansatz;
  if (!rs.is_ode()) {
    double w1_2 = rs.w(1, z1, z2, 0, 1), w2_1 = rs.w(2, z1, z2, 1, 0);
    if (a == "1.1") return w1_2 - w2_1 - 2 * rs.param;
    if (a == "1.2") return w1_2 - w2_1;
    if (a == "1.3") return w1_2 - w2_1 - 2 * rs.param * rs.t_sign;
    if (a == "1.4") return w1_2 - w2_1 - 2 * rs.param;
    if (a == "1.5") return w1_2 - w2_1 - 2;
    if (a == "1.6") return z2 * rs.w(2, z1, z2, 0, 1) + rs.w(2, z1, z2, 0, 0);
    if (a == "1.7") return rs.w(2, z1, z2, 0, 1) + 2;
    return rs.w(2, z1, z2, 0, 1);  // 1.8
  }
  double om = z1;
  if (a == "2.1") return rs.phi(1, om, 1) + rs.param * rs.phi(2, om, 1);
  if (a == "2.2" || a == "2.3" || a == "2.4") return om * rs.phi(2, om, 1) + rs.phi(2, om, 0);
  if (a == "2.5") return rs.phi(2, om, 1) + 2;
  return 1.0;  // 2.6: never satisfied
}

double conserved_divergence_18(const ReducedSolution& rs, double z1, double z2) {
  if (rs.ansatz != "1.8") fail(Errc::config_error, "conserved current applies to ansatz 1.8");
  double w1_1 = rs.w(1, z1, z2, 1, 0), w1 = rs.w(1, z1, z2, 0, 0);
  double w1_2 = rs.w(1, z1, z2, 0, 1), w1_22 = rs.w(1, z1, z2, 0, 2);
  return w1_1 + w1 * w1_2 - w1_22;
}

nlohmann::json ConsistencyReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["max_reduced_residual"] = max_reduced;
  j["max_full_residual"] = max_full;
  j["reduced_pass"] = reduced_pass;
  j["full_pass"] = full_pass;
  j["consistent"] = consistent;
  j["samples"] = samples;
  j["tolerance"] = tolerance;
  return j;
}

ConsistencyReport consistency_check(const ReducedSolution& rs, double tol, int n) {
  validate_reduced(rs);
  SpaceTimeField field = reconstruct(rs);
  ConsistencyReport rep;
  rep.tolerance = tol;
  const SampleBox& b = rs.samples;
  bool ode = rs.is_ode();
  for (int i = 0; i < n; ++i) {
    double z1 = b.z1_lo + (b.z1_hi - b.z1_lo) * (i + 0.5) / n;
    int m = ode ? 1 : n;
    for (int j = 0; j < m; ++j) {
      double z2 = ode ? 0.0 : b.z2_lo + (b.z2_hi - b.z2_lo) * (j + 0.5) / n;
      auto [r1, r2] = reduced_residual(rs, z1, z2);
      rep.max_reduced = std::max({rep.max_reduced, std::abs(r1), std::abs(r2)});
      Point p = section_point(rs, z1, z2);
      if (field.is_singular(p)) continue;
      auto [f1, f2] = burgers_residual_at(field, p);
      rep.max_full = std::max({rep.max_full, std::abs(f1), std::abs(f2)});
      ++rep.samples;
    }
  }
  rep.reduced_pass = rep.max_reduced <= tol;
  rep.full_pass = rep.max_full <= tol;
  rep.consistent = (rep.reduced_pass == rep.full_pass);
  return rep;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0) fail(Errc::quadrature_failure, "adaptive Simpson recursion exhausted");
  if (std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12) {
  if (a == b) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

}  // namespace

Linearized18 linearize_18(const ReducedSolution& rs) {
  if (rs.ansatz != "1.8") fail(Errc::config_error, "linearize_18 applies to ansatz 1.8");
  validate_reduced(rs);
  double q0 = 0.5 * (rs.samples.z2_lo + rs.samples.z2_hi);
  double p0 = 0.5 * (rs.samples.z1_lo + rs.samples.z1_hi);
  WFun w = rs.w;
  auto hfun = [w, q0](double z1) {
    return 0.5 * w(1, z1, q0, 0, 1) - 0.25 * std::pow(w(1, z1, q0, 0, 0), 2);
  };
  auto theta = [w, q0, p0, hfun](int i, double z1, double z2, int dt, int dq) -> double {
    if (dt > 1 || dq > 3) fail(Errc::config_error, "linearize_18 supports dt<=1, dq<=3");
    double I = integrate([&](double s) { return w(1, z1, s, 0, 0); }, q0, z2);
    double H = integrate(hfun, p0, z1);
    double th = std::exp(-0.5 * I - H);
    double w1 = w(1, z1, z2, 0, 0);
    auto th_q = [&](int n) {  // pure z2-derivatives of theta1
      if (n == 0) return th;
      if (n == 1) return -0.5 * w1 * th;
      double w1_2 = w(1, z1, z2, 0, 1);
      if (n == 2) return (0.25 * w1 * w1 - 0.5 * w1_2) * th;
      double w1_22 = w(1, z1, z2, 0, 2);
      return (0.5 * w1 * w1_2 - 0.5 * w1_22) * th +
             (0.25 * w1 * w1 - 0.5 * w1_2) * (-0.5 * w1 * th);
    };
    double E1 = 0;
    if (dt == 1)
      E1 = -0.5 * integrate([&](double s) { return w(1, z1, s, 1, 0); }, q0, z2) - hfun(z1);
    if (i == 1) {
      if (dt == 0) return th_q(dq);
      // dt == 1
      if (dq == 0) return E1 * th;
      double E12 = -0.5 * w(1, z1, z2, 1, 0);
      if (dq == 1) return E12 * th + E1 * th_q(1);
      double E122 = -0.5 * w(1, z1, z2, 1, 1);
      return E122 * th + 2 * E12 * th_q(1) + E1 * th_q(2);
    }
    // theta2 = w2 * theta1 via Leibniz
    if (dt == 0) {
      double acc = 0;
      static const double binom3[4][4] = {{1}, {1, 1}, {1, 2, 1}, {1, 3, 3, 1}};
      for (int k = 0; k <= dq; ++k) acc += binom3[dq][k] * w(2, z1, z2, 0, k) * th_q(dq - k);
      return acc;
    }
    // dt == 1, dq <= 1 needed in practice
    double t1_t = E1 * th;
    if (dq == 0) return w(2, z1, z2, 1, 0) * th + w(2, z1, z2, 0, 0) * t1_t;
    double E12 = -0.5 * w(1, z1, z2, 1, 0);
    double t1_tq = E12 * th + E1 * th_q(1);
    return w(2, z1, z2, 1, 1) * th + w(2, z1, z2, 1, 0) * th_q(1) +
           w(2, z1, z2, 0, 1) * t1_t + w(2, z1, z2, 0, 0) * t1_tq;
  };
  return Linearized18{theta, p0, q0};
}

ReducedSolution hopf_cole_18(const ThetaFun& theta1, const ThetaFun& theta2) {
  ReducedSolution rs;
  rs.ansatz = "1.8";
  rs.samples = default_sample_box("1.8");
  rs.w = [theta1, theta2](int i, double z1, double z2, int d1, int d2) -> double {
    // ratio derivatives of r = N/A with A = theta1
    auto A = [&](int a, int b) { return theta1(z1, z2, a, b); };
    auto N = [&](int a, int b) {
      return i == 1 ? -2.0 * theta1(z1, z2, a, b + 1) : theta2(z1, z2, a, b);
    };
    double a0 = A(0, 0);
    if (std::abs(a0) < 1e-300) fail(Errc::zero_denominator, "theta1 vanished");
    double r = N(0, 0) / a0;
    if (d1 == 0 && d2 == 0) return r;
    double rq = (N(0, 1) - r * A(0, 1)) / a0;
    if (d1 == 0 && d2 == 1) return rq;
    double rt = (N(1, 0) - r * A(1, 0)) / a0;
    if (d1 == 1 && d2 == 0) return rt;
    double rqq = (N(0, 2) - 2 * rq * A(0, 1) - r * A(0, 2)) / a0;
    if (d1 == 0 && d2 == 2) return rqq;
    if (d1 == 1 && d2 == 1)
      return (N(1, 1) - rt * A(0, 1) - rq * A(1, 0) - r * A(1, 1)) / a0;
    if (d1 == 0 && d2 == 3)
      return (N(0, 3) - 3 * rqq * A(0, 1) - 3 * rq * A(0, 2) - r * A(0, 3)) / a0;
    if (d1 == 2 && d2 == 0) {
      double rtt = (N(2, 0) - 2 * rt * A(1, 0) - r * A(2, 0)) / a0;
      return rtt;
    }
    fail(Errc::config_error, "unsupported w derivative order");
  };
  return rs;
}

ReducedSolution hopf_cole_18(const HeatSolution1D& theta1, const HeatSolution1D& theta2) {
  auto t1 = [theta1](double z1, double z2, int dt, int dq) {
    return theta1.deriv(z1, z2, dt, dq);
  };
  auto t2 = [theta2](double z1, double z2, int dt, int dq) {
    return theta2.deriv(z1, z2, dt, dq);
  };
  return hopf_cole_18(ThetaFun(t1), ThetaFun(t2));
}

ReducedSolution pullback_reduced(const SpaceTimeField& field, const std::string& ansatz,
                                 double param, int t_sign) {
  const AnsatzDef& def = ansatz_def(ansatz);
  ReducedSolution rs;
  rs.ansatz = ansatz;
  rs.param = param;
  rs.t_sign = t_sign;
  rs.samples = default_sample_box(ansatz);
  auto value = [field, ansatz, param, t_sign](int i, double z1, double z2) -> double {
    ReducedSolution probe;  // only carries the geometry
    probe.ansatz = ansatz;
    probe.param = param;
    probe.t_sign = t_sign;
    Point p = section_point(probe, z1, z2);
    Ingredients g = ansatz_ingredients(ansatz, param, t_sign, p);
    Vec2 uv = field.eval(p);
    double r0 = uv.u - g.p[0].f, r1 = uv.v - g.p[1].f;
    double det = g.M[0][0].f * g.M[1][1].f - g.M[0][1].f * g.M[1][0].f;
    if (std::abs(det) < 1e-12) fail(Errc::singular_point, "ansatz matrix singular");
    double w1 = (g.M[1][1].f * r0 - g.M[0][1].f * r1) / det;
    double w2 = (-g.M[1][0].f * r0 + g.M[0][0].f * r1) / det;
    return i == 1 ? w1 : w2;
  };
  // 4th-order finite differences in the reduced variables
  auto fd = [value](int i, double z1, double z2, int d1, int d2) -> double {
    const double h = 1e-3;
    const double o1[4] = {-2, -1, 1, 2}, w1c[4] = {1. / 12, -8. / 12, 8. / 12, -1. / 12};
    const double o2[5] = {-2, -1, 0, 1, 2}, w2c[5] = {-1. / 12, 16. / 12, -30. / 12, 16. / 12,
                                                      -1. / 12};
    auto once = [&](const std::function<double(double, double)>& f, int dz, int order, double a,
                    double b) -> double {
      double acc = 0;
      if (order == 1) {
        for (int k = 0; k < 4; ++k)
          acc += w1c[k] * (dz == 1 ? f(a + o1[k] * h, b) : f(a, b + o1[k] * h));
        return acc / h;
      }
      for (int k = 0; k < 5; ++k)
        acc += w2c[k] * (dz == 1 ? f(a + o2[k] * h, b) : f(a, b + o2[k] * h));
      return acc / (h * h);
    };
    std::function<double(double, double)> base = [&](double a, double b) {
      return value(i, a, b);
    };
    if (d1 == 0 && d2 == 0) return base(z1, z2);
    if (d1 > 0 && d2 == 0) return once(base, 1, d1, z1, z2);
    if (d1 == 0 && d2 > 0) return once(base, 2, d2, z1, z2);
    // mixed (1,1)
    auto dz2 = [&](double a, double b) { return once(base, 2, 1, a, b); };
    return once(dz2, 1, 1, z1, z2);
  };
  if (def.is_ode) {
    rs.phi = [fd](int i, double omega, int k) { return fd(i, omega, 0.0, k, 0); };
  } else {
    rs.w = fd;
  }
  return rs;
}

ReducedSolution integrate_reduced_ode(const std::string& ansatz, double param, double lo,
                                      double hi, double omega0, const std::array<double, 4>& ic) {
  if (!ansatz_is_ode(ansatz) || ansatz == "2.6")
    fail(Errc::config_error, "integrate_reduced_ode covers 2.1-2.5");
  auto rhs = [ansatz, param](double om, const std::array<double, 4>& s) -> std::array<double, 4> {
    double f1 = s[0], d1 = s[1], f2 = s[2], d2 = s[3];
    double a1 = 0, a2 = 0;
    if (ansatz == "2.1") {
      double kap = param, pre = f2 - kap * f1 - 2 * kap, k2 = kap * kap + 1;
      a1 = (pre * d1 + 2 * d2 - f1 * f1 - f2 * f2) / k2;
      a2 = (pre * d2 - 2 * d1) / k2;
    } else if (ansatz == "2.2" || ansatz == "2.3" || ansatz == "2.4") {
      double extra = ansatz == "2.3" ? -om / 4 : (ansatz == "2.4" ? om : 0.0);
      a1 = f1 * d1 - f2 * f2 / om - 1.0 / (om * om * om) + extra;
      a2 = f1 * d2 + f1 * f2 / om + 2.0 * f2 / (om * om);
    } else {  // 2.5
      a1 = f1 * d1 - 2 * f2;
      a2 = f1 * d2 + 2 * f1 + 2 * param;
    }
    return {d1, a1, d2, a2};
  };
  const double h = 1e-3;
  int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / h)));
  double hh = (hi - lo) / n;
  auto step = [&](double om, std::array<double, 4>& s, double dh) {
    auto add = [](const std::array<double, 4>& a, const std::array<double, 4>& b, double c) {
      std::array<double, 4> r;
      for (int i = 0; i < 4; ++i) r[i] = a[i] + c * b[i];
      return r;
    };
    auto k1 = rhs(om, s);
    auto k2 = rhs(om + dh / 2, add(s, k1, dh / 2));
    auto k3 = rhs(om + dh / 2, add(s, k2, dh / 2));
    auto k4 = rhs(om + dh, add(s, k3, dh));
    for (int i = 0; i < 4; ++i) s[i] += dh / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  };
  auto table = std::make_shared<std::vector<std::array<double, 4>>>(n + 1);
  int i0 = std::clamp(static_cast<int>(std::lround((omega0 - lo) / hh)), 0, n);
  std::array<double, 4> s = ic;
  double znode = lo + i0 * hh;
  if (std::abs(znode - omega0) > 1e-15) step(omega0, s, znode - omega0);
  (*table)[i0] = s;
  auto sf = s;
  for (int i = i0; i < n; ++i) {
    step(lo + i * hh, sf, hh);
    (*table)[i + 1] = sf;
  }
  sf = s;
  for (int i = i0; i > 0; --i) {
    step(lo + i * hh, sf, -hh);
    (*table)[i - 1] = sf;
  }
  ReducedSolution rs;
  rs.ansatz = ansatz;
  rs.param = param;
  rs.samples = {lo + 0.02 * (hi - lo), hi - 0.02 * (hi - lo), 0, 0};
  rs.phi = [table, lo, hi, hh, rhs, n](int i, double om, int k) -> double {
    if (om < lo - 1e-12 || om > hi + 1e-12)
      fail(Errc::config_error, "omega outside integrated range");
    om = std::clamp(om, lo, hi);
    int idx = std::min(static_cast<int>((om - lo) / hh), n - 1);
    double za = lo + idx * hh, zb = za + hh;
    const auto& sa = (*table)[idx];
    const auto& sb = (*table)[idx + 1];
    auto ra = rhs(za, sa), rb = rhs(zb, sb);
    int c = (i == 1) ? 0 : 2;
    QuinticHermite q{sa[c], sa[c + 1], ra[c + 1], sb[c], sb[c + 1], rb[c + 1], hh};
    double t = (om - za) / hh;
    if (k == 0) return q.value(t);
    if (k == 1) return q.slope(t);
    // second derivative from the system itself
    QuinticHermite q1{sa[0], sa[1], ra[1], sb[0], sb[1], rb[1], hh};
    QuinticHermite q2{sa[2], sa[3], ra[3], sb[2], sb[3], rb[3], hh};
    std::array<double, 4> st{q1.value(t), q1.slope(t), q2.value(t), q2.slope(t)};
    return rhs(om, st)[c + 1];
  };
  return rs;
}

ReducedSolution constant_reduced(const std::string& ansatz, double param, double c1, double c2) {
  ReducedSolution rs;
  rs.ansatz = ansatz;
  rs.param = param;
  rs.samples = default_sample_box(ansatz);
  if (ansatz_is_ode(ansatz)) {
    rs.phi = [c1, c2](int i, double, int k) { return k == 0 ? (i == 1 ? c1 : c2) : 0.0; };
  } else {
    rs.w = [c1, c2](int i, double, double, int d1, int d2) {
      return (d1 == 0 && d2 == 0) ? (i == 1 ? c1 : c2) : 0.0;
    };
  }
  return rs;
}

}  // namespace burgers_lab
