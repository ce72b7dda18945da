#include "burgers_lab/catalog.hpp"

#include <cmath>

namespace burgers_lab {

namespace {

constexpr double kSqrt6 = 2.4494897427831780981972840747059;

// --- small jet helpers ------------------------------------------------------

// Accessor of mixed derivatives of a scalar function of (t, q).
using Acc2 = std::function<double(int dt, int dq)>;
// Accessor of mixed derivatives of a scalar function of (t, x, y).
using Acc3 = std::function<double(int dt, int dx, int dy)>;

// Jet of r = N / A in two variables, to third order in q and first in t.
struct Jet1D {
  double f, ft, fq, fqq, fqqq, ftq;
};

Jet1D ratio_jet2(const Acc2& N, const Acc2& A) {
  Jet1D r;
  double a = A(0, 0);
  r.f = N(0, 0) / a;
  r.ft = (N(1, 0) - r.f * A(1, 0)) / a;
  r.fq = (N(0, 1) - r.f * A(0, 1)) / a;
  r.fqq = (N(0, 2) - 2 * r.fq * A(0, 1) - r.f * A(0, 2)) / a;
  r.fqqq = (N(0, 3) - 3 * r.fqq * A(0, 1) - 3 * r.fq * A(0, 2) - r.f * A(0, 3)) / a;
  r.ftq = (N(1, 1) - r.ft * A(0, 1) - r.fq * A(1, 0) - r.f * A(1, 1)) / a;
  return r;
}

// Jet of r = N / A in (t,x,y): value, gradient, spatial Hessian.
struct Jet3D {
  double f, ft, fx, fy, fxx, fxy, fyy;
};

Jet3D ratio_jet3(const Acc3& N, const Acc3& A) {
  Jet3D r;
  double a = A(0, 0, 0);
  r.f = N(0, 0, 0) / a;
  r.ft = (N(1, 0, 0) - r.f * A(1, 0, 0)) / a;
  r.fx = (N(0, 1, 0) - r.f * A(0, 1, 0)) / a;
  r.fy = (N(0, 0, 1) - r.f * A(0, 0, 1)) / a;
  r.fxx = (N(0, 2, 0) - 2 * r.fx * A(0, 1, 0) - r.f * A(0, 2, 0)) / a;
  r.fyy = (N(0, 0, 2) - 2 * r.fy * A(0, 0, 1) - r.f * A(0, 0, 2)) / a;
  r.fxy = (N(0, 1, 1) - r.fx * A(0, 0, 1) - r.fy * A(0, 1, 0) - r.f * A(0, 1, 1)) / a;
  return r;
}

void certify_nonvanishing(const Box& box, const std::function<double(const Point&)>& f,
                          const std::string& what) {
  int n = 9;
  double sign = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        Point p(box.t0 + (box.t1 - box.t0) * i / n, box.x0 + (box.x1 - box.x0) * j / n,
                box.y0 + (box.y1 - box.y0) * k / n);
        double v = f(p);
        if (!std::isfinite(v) || std::abs(v) < 1e-10)
          fail(Errc::zero_denominator, what + " vanishes on the declared box");
        double s = v > 0 ? 1.0 : -1.0;
        if (sign == 0.0) sign = s;
        else if (sign != s)
          fail(Errc::zero_denominator, what + " changes sign on the declared box");
      }
}

}  // namespace

Grid Box::grid(std::function<bool(const Point&)> mask) const {
  return Grid(Grid::linspace(t0, t1, nt), Grid::linspace(x0, x1, nx),
              Grid::linspace(y0, y1, ny), std::move(mask));
}

Grid FamilyInstance::grid() const {
  const SpaceTimeField f = field;
  return meta.box.grid([f](const Point& p) { return f.is_singular(p); });
}

// --- hopf_cole_2d -----------------------------------------------------------

namespace {

class HopfCole2DKernel final : public FieldKernel {
 public:
  explicit HopfCole2DKernel(HeatSolution2D phi) : phi_(std::move(phi)) {}

  Vec2 eval(const Point& p) const override {
    double f = phi_.eval(p.t, p.x, p.y);
    return {-2.0 * phi_.deriv(p.t, p.x, p.y, 0, 1, 0) / f,
            -2.0 * phi_.deriv(p.t, p.x, p.y, 0, 0, 1) / f};
  }

  bool singular(const Point& p) const override {
    if (phi_.singular(p.t)) return true;
    return std::abs(phi_.eval(p.t, p.x, p.y)) < 1e-12;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    auto [lx, ly] = log_jets(p);
    return {-2 * lx.ft, -2 * lx.fx, -2 * lx.fy, -2 * ly.ft, -2 * ly.fx, -2 * ly.fy};
  }

  Jet2 d2_space(const Point& p) const override {
    auto [lx, ly] = log_jets(p);
    return {-2 * lx.fxx, -2 * lx.fxy, -2 * lx.fyy, -2 * ly.fxx, -2 * ly.fxy, -2 * ly.fyy};
  }

 private:
  std::pair<Jet3D, Jet3D> log_jets(const Point& p) const {
    Acc3 A = [&](int a, int b, int c) { return phi_.deriv(p.t, p.x, p.y, a, b, c); };
    Acc3 Nx = [&](int a, int b, int c) { return phi_.deriv(p.t, p.x, p.y, a, b + 1, c); };
    Acc3 Ny = [&](int a, int b, int c) { return phi_.deriv(p.t, p.x, p.y, a, b, c + 1); };
    return {ratio_jet3(Nx, A), ratio_jet3(Ny, A)};
  }

  HeatSolution2D phi_;
};

}  // namespace

FamilyInstance hopf_cole_2d(const HeatSolution2D& phi, const Box& box) {
  certify_nonvanishing(box, [&](const Point& p) { return phi.eval(p.t, p.x, p.y); },
                       "hopf_cole_2d: phi");
  FamilyInstance inst{SpaceTimeField(std::make_shared<HopfCole2DKernel>(phi)), {}};
  inst.meta.family_id = "hopf_cole_2d";
  inst.meta.description = "irrotational pair driven by a positive 2D heat solution";
  inst.meta.flags.irrotational = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance hopf_cole_2d(const HeatSolution2D& phi) {
  return hopf_cole_2d(phi, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

// --- shift_invariant / affine_in_y / affine_in_x ----------------------------

namespace {

// u = -2 A_x / A, v = (u y) _x-style profiles built from 1D heat data in (t,x):
//   mode 0 (shift_invariant): u = -2 A_q/A,  v = B/A
//   mode 1 (affine_in_y):     u = -2 A_q/A,  v = u_q y + (B/A)_q
class HeatPairKernel final : public FieldKernel {
 public:
  HeatPairKernel(HeatSolution1D A, HeatSolution1D B, int mode)
      : A_(std::move(A)), B_(std::move(B)), mode_(mode) {}

  Vec2 eval(const Point& p) const override {
    auto [w, g] = jets(p);
    if (mode_ == 0) return {w.f, g.f};
    return {w.f, w.fq * p.y + g.fq};
  }

  bool singular(const Point& p) const override {
    if (A_.singular(p.t) || B_.singular(p.t)) return true;
    return std::abs(A_.eval(p.t, p.x)) < 1e-12;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    auto [w, g] = jets(p);
    if (mode_ == 0) return {w.ft, w.fq, 0.0, g.ft, g.fq, 0.0};
    return {w.ft, w.fq, 0.0, w.ftq * p.y + g.ftq, w.fqq * p.y + g.fqq, w.fq};
  }

  Jet2 d2_space(const Point& p) const override {
    auto [w, g] = jets(p);
    if (mode_ == 0) return {w.fqq, 0.0, 0.0, g.fqq, 0.0, 0.0};
    return {w.fqq, 0.0, 0.0, w.fqqq * p.y + g.fqqq, w.fqq, 0.0};
  }

 private:
  std::pair<Jet1D, Jet1D> jets(const Point& p) const {
    Acc2 A = [&](int a, int b) { return A_.deriv(p.t, p.x, a, b); };
    Acc2 Nq = [&](int a, int b) { return -2.0 * A_.deriv(p.t, p.x, a, b + 1); };
    Acc2 NB = [&](int a, int b) { return B_.deriv(p.t, p.x, a, b); };
    return {ratio_jet2(Nq, A), ratio_jet2(NB, A)};
  }

  HeatSolution1D A_, B_;
  int mode_;
};

// (t,x,y,u,v) -> (t,y,x,v,u) conjugation of a kernel.
class PermuteXYKernel final : public FieldKernel {
 public:
  explicit PermuteXYKernel(SpaceTimeField base) : base_(std::move(base)) {}
  Vec2 eval(const Point& p) const override {
    Vec2 w = base_.eval(swap(p));
    return {w.v, w.u};
  }
  bool singular(const Point& p) const override { return base_.is_singular(swap(p)); }
  bool has_analytic_derivatives() const override {
    return base_.derivative_mode() == DerivativeMode::analytic;
  }
  Jet1 d1(const Point& p) const override {
    Jet1 j = base_.d1(swap(p));
    return {j.vt, j.vy, j.vx, j.ut, j.uy, j.ux};
  }
  Jet2 d2_space(const Point& p) const override {
    Jet2 j = base_.d2_space(swap(p));
    return {j.vyy, j.vxy, j.vxx, j.uyy, j.uxy, j.uxx};
  }

 private:
  static Point swap(const Point& p) { return Point(p.t, p.y, p.x); }
  SpaceTimeField base_;
};

}  // namespace

FamilyInstance shift_invariant(const HeatSolution1D& theta1, const HeatSolution1D& theta2,
                               const Box& box) {
  certify_nonvanishing(box, [&](const Point& p) { return theta1.eval(p.t, p.x); },
                       "shift_invariant: theta1");
  FamilyInstance inst{SpaceTimeField(std::make_shared<HeatPairKernel>(theta1, theta2, 0)), {}};
  inst.meta.family_id = "shift_invariant";
  inst.meta.description = "y-independent pair from two 1D heat solutions";
  inst.meta.invariance = "g1.8";
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance shift_invariant(const HeatSolution1D& theta1, const HeatSolution1D& theta2) {
  return shift_invariant(theta1, theta2, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

FamilyInstance affine_in_y_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0,
                                  const Box& box) {
  certify_nonvanishing(box, [&](const Point& p) { return theta1.eval(p.t, p.x); },
                       "affine_in_y_family: theta1");
  FamilyInstance inst{SpaceTimeField(std::make_shared<HeatPairKernel>(theta1, theta0, 1)), {}};
  inst.meta.family_id = "affine_in_y";
  inst.meta.description = "v affine in y; u_x = v_y pair from two 1D heat solutions";
  inst.meta.flags.gradient_pair = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance affine_in_y_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0) {
  return affine_in_y_family(theta1, theta0, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

FamilyInstance affine_in_x_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0,
                                  const Box& box) {
  Box sbox = box;
  std::swap(sbox.x0, sbox.y0);
  std::swap(sbox.x1, sbox.y1);
  std::swap(sbox.nx, sbox.ny);
  FamilyInstance base = affine_in_y_family(theta1, theta0, sbox);
  FamilyInstance inst{SpaceTimeField(std::make_shared<PermuteXYKernel>(base.field)), {}};
  inst.meta = base.meta;
  inst.meta.family_id = "affine_in_x";
  inst.meta.description = "u affine in x; (x,u)<->(y,v) permutation of affine_in_y";
  inst.meta.box = box;
  return inst;
}

FamilyInstance affine_in_x_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0) {
  return affine_in_x_family(theta1, theta0, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

// --- stationary_similarity ---------------------------------------------------

namespace {

// psi(omega) and psi'(omega) for the integrated second-order equation
// S^2 psi'' + (c+4) omega S psi' - A psi = 0, S = 1 + omega^2, c in {0,-2}.
struct PsiEval {
  int c;  // phi2 value
  double A, C1, C2;

  std::pair<double, double> base(double w) const {
    double S = 1 + w * w;
    double zeta = std::atan(w);
    if (c == 0) {
      if (A == 0.0) return {C1 + C2 * (zeta + w / S), 2 * C2 / (S * S)};
      if (A == 1.0)
        return {(C1 * w + C2 * (w * zeta + 1)) / std::sqrt(S),
                (C1 + C2 * zeta) / std::pow(S, 1.5)};
      if (A > 1.0) {
        double al = std::sqrt(A - 1.0);
        double em = std::exp(-al * zeta), ep = std::exp(al * zeta);
        return {(C1 * (w - al) * em + C2 * (w + al) * ep) / std::sqrt(S),
                A * (C1 * em + C2 * ep) / std::pow(S, 1.5)};
      }
      double be = std::sqrt(1.0 - A);
      double cs = std::cos(be * zeta), sn = std::sin(be * zeta);
      return {(C1 * (w * cs - be * sn) + C2 * (w * sn + be * cs)) / std::sqrt(S),
              A * (C1 * cs + C2 * sn) / std::pow(S, 1.5)};
    }
    // c == -2
    if (A == 0.0) return {C1 + C2 * zeta, C2 / S};
    if (A > 0.0) {
      double al = std::sqrt(A);
      double em = std::exp(-al * zeta), ep = std::exp(al * zeta);
      return {C1 * em + C2 * ep, al * (-C1 * em + C2 * ep) / S};
    }
    double be = std::sqrt(-A);
    double cs = std::cos(be * zeta), sn = std::sin(be * zeta);
    return {C1 * cs + C2 * sn, be * (-C1 * sn + C2 * cs) / S};
  }

  // psi, psi', psi'', psi''' (higher orders from the equation itself)
  std::array<double, 4> jet(double w) const {
    auto [p0, p1] = base(w);
    double S = 1 + w * w;
    double k = c + 4.0;
    double p2 = (A * p0 - k * w * S * p1) / (S * S);
    double p3 = (A * p1 - 4 * w * S * p2 - k * ((S + 2 * w * w) * p1 + w * S * p2)) / (S * S);
    return {p0, p1, p2, p3};
  }
};

class StationarySimilarityKernel final : public FieldKernel {
 public:
  StationarySimilarityKernel(int phi2, double A, double C1, double C2)
      : psi_{phi2, A, C1, C2}, phi2_(phi2) {}

  Vec2 eval(const Point& p) const override {
    auto [f, f1, f2] = phi1_jet(p.x / p.y);
    (void)f1;
    (void)f2;
    return {f / p.y, phi2_ / p.y};
  }

  bool singular(const Point& p) const override {
    if (std::abs(p.y) < 1e-9) return true;
    return std::abs(psi_.base(p.x / p.y).first) < 1e-10;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    double w = p.x / p.y, y = p.y;
    auto [f, f1, f2] = phi1_jet(w);
    (void)f2;
    Jet1 j;
    j.ut = 0;
    j.ux = f1 / (y * y);
    j.uy = -(f1 * w + f) / (y * y);
    j.vt = 0;
    j.vx = 0;
    j.vy = -phi2_ / (y * y);
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    double w = p.x / p.y, y = p.y, y3 = y * y * y;
    auto [f, f1, f2] = phi1_jet(w);
    Jet2 j;
    j.uxx = f2 / y3;
    j.uxy = -(f2 * w + 2 * f1) / y3;
    j.uyy = (f2 * w * w + 4 * f1 * w + 2 * f) / y3;
    j.vxx = 0;
    j.vxy = 0;
    j.vyy = 2 * phi2_ / y3;
    return j;
  }

 private:
  // phi1 = -2 S psi'/psi and its first two derivatives
  std::array<double, 3> phi1_jet(double w) const {
    auto pj = psi_.jet(w);
    double S = 1 + w * w;
    double q = pj[1] / pj[0];
    double q1 = pj[2] / pj[0] - q * q;
    double q2 = pj[3] / pj[0] - q * pj[2] / pj[0] - 2 * q * q1;
    return {-2 * S * q, -2 * (2 * w * q + S * q1), -2 * (2 * q + 4 * w * q1 + S * q2)};
  }

  PsiEval psi_;
  double phi2_;
};

}  // namespace

double stationary_psi(int phi2, double A, double C1, double C2, double omega) {
  return PsiEval{phi2, A, C1, C2}.base(omega).first;
}

double stationary_psi_poly(int phi2, int beta, double C1, double C2, double omega) {
  // P = sum (-1)^i binom(beta,2i) w^(beta-2i), Q likewise over odd entries
  auto binom = [](int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  double P = 0, Q = 0;
  double sgn = 1;
  for (int i = 0; 2 * i <= beta; ++i, sgn = -sgn) {
    P += sgn * binom(beta, 2 * i) * std::pow(omega, beta - 2 * i);
    if (2 * i + 1 <= beta) Q += sgn * binom(beta, 2 * i + 1) * std::pow(omega, beta - 2 * i - 1);
  }
  double S = 1 + omega * omega;
  if (phi2 == 0)
    return (C1 * (omega * P - beta * Q) + C2 * (omega * Q + beta * P)) /
           std::pow(S, (beta + 1) / 2.0);
  return (C1 * P + C2 * Q) / std::pow(S, beta / 2.0);
}

FamilyInstance stationary_similarity(int phi2, double A, double C1, double C2, const Box& box) {
  if (phi2 != 0 && phi2 != -2) fail(Errc::invalid_case, "phi2 must be 0 or -2");
  if (C1 == 0.0 && C2 == 0.0) fail(Errc::invalid_case, "(C1,C2) must not vanish");
  PsiEval psi{phi2, A, C1, C2};
  certify_nonvanishing(box, [&](const Point& p) { return psi.base(p.x / p.y).first; },
                       "stationary_similarity: psi");
  FamilyInstance inst{
      SpaceTimeField(std::make_shared<StationarySimilarityKernel>(phi2, A, C1, C2)), {}};
  inst.meta.family_id = "stationary_similarity";
  inst.meta.description = "stationary fields u = phi1(x/y)/y, v = phi2/y";
  inst.meta.flags.v_zero = (phi2 == 0);
  inst.meta.invariance = "g2.1";
  inst.meta.invariance_params = {0.0};
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance stationary_similarity(int phi2, double A, double C1, double C2) {
  return stationary_similarity(phi2, A, C1, C2, Box{0.0, 1.0, 0.7, 2.2, 0.7, 2.2, 3, 6, 6});
}

// --- affine families ---------------------------------------------------------

namespace {

class AffineGeneralKernel final : public FieldKernel {
 public:
  AffineGeneralKernel(std::array<std::array<double, 2>, 2> C, std::array<double, 2> b0)
      : C_(C), b_(b0) {}

  Vec2 eval(const Point& p) const override {
    auto [a11, a12, a21, a22] = inv(p.t);
    double rx = p.x + b_[0], ry = p.y + b_[1];
    return {a11 * rx + a12 * ry, a21 * rx + a22 * ry};
  }

  bool singular(const Point& p) const override {
    double det = (p.t + C_[0][0]) * (p.t + C_[1][1]) - C_[0][1] * C_[1][0];
    return std::abs(det) < 1e-9 * std::max(1.0, p.t * p.t);
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    auto [a11, a12, a21, a22] = inv(p.t);
    double rx = p.x + b_[0], ry = p.y + b_[1];
    double u = a11 * rx + a12 * ry, v = a21 * rx + a22 * ry;
    // dA/dt = -A^2, so d(u,v)/dt = -A (u,v)
    Jet1 j;
    j.ut = -(a11 * u + a12 * v);
    j.vt = -(a21 * u + a22 * v);
    j.ux = a11;
    j.uy = a12;
    j.vx = a21;
    j.vy = a22;
    return j;
  }

  Jet2 d2_space(const Point&) const override { return {}; }

 private:
  std::array<double, 4> inv(double t) const {
    double m11 = t + C_[0][0], m12 = C_[0][1], m21 = C_[1][0], m22 = t + C_[1][1];
    double det = m11 * m22 - m12 * m21;
    if (std::abs(det) < 1e-12) fail(Errc::singular_time, "det(tE + C) vanished");
    return {m22 / det, -m12 / det, -m21 / det, m11 / det};
  }

  std::array<std::array<double, 2>, 2> C_;
  std::array<double, 2> b_;
};

}  // namespace

FamilyInstance affine_general(const std::array<std::array<double, 2>, 2>& C,
                              const std::array<double, 2>& b0, const Box& box) {
  FamilyInstance inst{SpaceTimeField(std::make_shared<AffineGeneralKernel>(C, b0)), {}};
  inst.meta.family_id = "affine_general";
  inst.meta.description = "fields affine in (x,y) with invertible coefficient matrix";
  inst.meta.flags.irrotational = (C[0][1] == C[1][0]);
  inst.meta.flags.gradient_pair = (C[0][0] == C[1][1]);
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  // the planar-rotation matrix case reproduces the g2.6 invariant fields
  if (C[0][0] == 0.0 && C[1][1] == 0.0 && C[1][0] == -1.0 && C[0][1] > 0.0) {
    inst.meta.invariance = "g2.6";
    inst.meta.invariance_params = {C[0][1]};
  }
  return inst;
}

FamilyInstance affine_general(const std::array<std::array<double, 2>, 2>& C,
                              const std::array<double, 2>& b0) {
  return affine_general(C, b0, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

FamilyInstance affine_degenerate(DegenerateKind kind, double c1, double c2, const Box& box) {
  FamilyInstance inst;
  inst.meta.family_id = "affine_degenerate";
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  switch (kind) {
    case DegenerateKind::trace_nonzero: {
      inst.field = make_analytic_field(
          [c1](const Point& p) { return Vec2{(p.x + c1 * p.y) / p.t, 0.0}; },
          [c1](const Point& p) {
            Jet1 j;
            j.ut = -(p.x + c1 * p.y) / (p.t * p.t);
            j.ux = 1.0 / p.t;
            j.uy = c1 / p.t;
            return j;
          },
          [](const Point&) { return Jet2{}; },
          [](const Point& p) { return std::abs(p.t) < 1e-9; });
      inst.meta.description = "degenerate affine fields u = (x + c1 y)/t, v = 0";
      inst.meta.flags.v_zero = true;
      inst.meta.flags.irrotational = (c1 == 0.0);
      break;
    }
    case DegenerateKind::nilpotent: {
      inst.field = make_analytic_field([](const Point& p) { return Vec2{p.y, 0.0}; },
                                       [](const Point&) {
                                         Jet1 j;
                                         j.uy = 1.0;
                                         return j;
                                       },
                                       [](const Point&) { return Jet2{}; });
      inst.meta.description = "stationary shear u = y, v = 0";
      inst.meta.flags.v_zero = true;
      break;
    }
    case DegenerateKind::constant: {
      inst.field = make_analytic_field(
          [c1, c2](const Point&) { return Vec2{c1, c2}; },
          [](const Point&) { return Jet1{}; }, [](const Point&) { return Jet2{}; });
      inst.meta.description = "constant fields";
      inst.meta.flags.irrotational = true;
      inst.meta.flags.gradient_pair = true;
      inst.meta.flags.divergence_free = true;
      inst.meta.flags.v_zero = (c2 == 0.0);
      break;
    }
  }
  return inst;
}

FamilyInstance affine_degenerate(DegenerateKind kind, double c1, double c2) {
  Box box = (kind == DegenerateKind::trace_nonzero) ? Box{0.5, 2.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}
                                                    : Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6};
  return affine_degenerate(kind, c1, c2, box);
}

// --- ns_common ---------------------------------------------------------------

namespace {

class NsCommonKernel final : public FieldKernel {
 public:
  NsCommonKernel(double a0, double angle, HeatSolution1D theta)
      : a0_(a0), a1_(std::sin(angle)), a2_(std::cos(angle)), theta_(std::move(theta)) {}

  Vec2 eval(const Point& p) const override {
    double w = th(p, 0, 0);
    return {a1_ * w + a0_, a2_ * w};
  }

  bool singular(const Point& p) const override { return theta_.singular(p.t); }
  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    double wt = th(p, 1, 0) - a0_ * th(p, 0, 1);
    double wz = th(p, 0, 1);
    Jet1 j;
    j.ut = a1_ * wt;
    j.ux = a1_ * wz * a2_;
    j.uy = a1_ * wz * -a1_;
    j.vt = a2_ * wt;
    j.vx = a2_ * wz * a2_;
    j.vy = a2_ * wz * -a1_;
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    double wzz = th(p, 0, 2);
    Jet2 j;
    j.uxx = a1_ * wzz * a2_ * a2_;
    j.uxy = a1_ * wzz * a2_ * -a1_;
    j.uyy = a1_ * wzz * a1_ * a1_;
    j.vxx = a2_ * wzz * a2_ * a2_;
    j.vxy = a2_ * wzz * a2_ * -a1_;
    j.vyy = a2_ * wzz * a1_ * a1_;
    return j;
  }

 private:
  double th(const Point& p, int dt, int dq) const {
    double z = a2_ * p.x - a1_ * p.y;
    return theta_.deriv(p.t, z - a0_ * p.t, dt, dq);
  }

  double a0_, a1_, a2_;
  HeatSolution1D theta_;
};

}  // namespace

FamilyInstance ns_common(double a0, double angle, const HeatSolution1D& theta, const Box& box) {
  FamilyInstance inst{SpaceTimeField(std::make_shared<NsCommonKernel>(a0, angle, theta)), {}};
  inst.meta.family_id = "ns_common";
  inst.meta.description = "divergence-free pair prolongable to constant-pressure flow";
  inst.meta.flags.divergence_free = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance ns_common(double a0, double angle, const HeatSolution1D& theta) {
  return ns_common(a0, angle, theta, Box{0.25, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6});
}

// --- potential_reduction -----------------------------------------------------

namespace {

// theta(omega), theta'(omega) for
// w S^2 theta'' + S (3 w^2 + 2 sig w - 1) theta' - 2 sig theta = 0.
struct ThetaEval {
  double sig, C1, C2;

  std::pair<double, double> base(double w) const {
    double S = 1 + w * w, zeta = std::atan(w), rS = std::sqrt(S), s32 = S * rS;
    if (sig == 1.0 || sig == -1.0) {
      double e = std::exp(-sig * zeta);
      double g = C1 * (w - sig) + C2 * (zeta * (w - sig) + 1);
      double gp = C1 + C2 * ((w - sig) / S + zeta);
      return {e * g / rS, e * (gp * S - g * (w + sig)) / s32};
    }
    if (std::abs(sig) > 1.0) {
      double rt = std::sqrt(sig * sig - 1.0);
      double n1 = sig + rt, n2 = sig - rt;
      double e1 = std::exp(-n1 * zeta), e2 = std::exp(-n2 * zeta);
      return {(C1 * e1 * (w - n1) + C2 * e2 * (w - n2)) / rS,
              ((1 + n1 * n1) * C1 * e1 + (1 + n2 * n2) * C2 * e2) / s32};
    }
    double mu = std::sqrt(1.0 - sig * sig);
    double e = std::exp(-sig * zeta), cs = std::cos(mu * zeta), sn = std::sin(mu * zeta);
    double th = e * (C1 * ((w - sig) * cs - mu * sn) + C2 * ((w - sig) * sn + mu * cs)) / rS;
    double dth = 2 * sig * e * (C1 * (sig * cs + mu * sn) + C2 * (sig * sn - mu * cs)) / s32;
    return {th, dth};
  }

  std::array<double, 4> jet(double w) const {
    auto [t0, t1] = base(w);
    double S = 1 + w * w;
    double c = 3 * w * w + 2 * sig * w - 1;
    double t2 = (2 * sig * t0 - S * c * t1) / (w * S * S);
    double t3 = -((S * S + 4 * w * w * S + S * c) * t2 +
                  (2 * w * c + S * (6 * w + 2 * sig) - 2 * sig) * t1) /
                (w * S * S);
    return {t0, t1, t2, t3};
  }
};

class PotentialReductionKernel final : public FieldKernel {
 public:
  PotentialReductionKernel(double sig, double C1, double C2) : th_{sig, C1, C2}, sig_(sig) {}

  Vec2 eval(const Point& p) const override {
    auto [f, f1, f2] = phiw_jet(p.x / p.y);
    (void)f1;
    (void)f2;
    return {-(p.x / (p.y * p.y)) * f, f / p.y + 2 * sig_ / p.x};
  }

  bool singular(const Point& p) const override {
    if (std::abs(p.y) < 1e-9 || std::abs(p.x) < 1e-9) return true;
    return std::abs(th_.base(p.x / p.y).first) < 1e-10;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    double w = p.x / p.y, y2 = p.y * p.y;
    auto [f, f1, f2] = phiw_jet(w);
    (void)f2;
    Jet1 j;
    j.ux = -(f + w * f1) / y2;
    j.uy = (2 * w * f + w * w * f1) / y2;
    j.vx = f1 / y2 - 2 * sig_ / (p.x * p.x);
    j.vy = -(w * f1 + f) / y2;
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    double w = p.x / p.y, y3 = p.y * p.y * p.y;
    auto [f, f1, f2] = phiw_jet(w);
    Jet2 j;
    j.uxx = -(2 * f1 + w * f2) / y3;
    j.uxy = (2 * f + 4 * w * f1 + w * w * f2) / y3;
    j.uyy = -(6 * w * f + 6 * w * w * f1 + w * w * w * f2) / y3;
    j.vxx = f2 / y3 + 4 * sig_ / (p.x * p.x * p.x);
    j.vxy = -(w * f2 + 2 * f1) / y3;
    j.vyy = (2 * f + 4 * w * f1 + w * w * f2) / y3;
    return j;
  }

 private:
  // phi_w = S theta'/(w theta) and two derivatives
  std::array<double, 3> phiw_jet(double w) const {
    if (sig_ == 0.0) return {0.0, 0.0, 0.0};  // theta' = 0: trivial profile
    auto tj = th_.jet(w);
    double S = 1 + w * w;
    double q = tj[1] / tj[0];
    double q1 = tj[2] / tj[0] - q * q;
    double q2 = tj[3] / tj[0] - q * tj[2] / tj[0] - 2 * q * q1;
    double f1v = S / w, f1p = (w * w - 1) / (w * w), f1pp = 2 / (w * w * w);
    return {f1v * q, f1p * q + f1v * q1, f1pp * q + 2 * f1p * q1 + f1v * q2};
  }

  ThetaEval th_;
  double sig_;
};

}  // namespace

FamilyInstance potential_reduction(double sigma, double C1, double C2, const Box& box) {
  ThetaEval th{sigma, C1, C2};
  if (sigma != 0.0)
    certify_nonvanishing(box, [&](const Point& p) { return th.base(p.x / p.y).first; },
                         "potential_reduction: theta");
  FamilyInstance inst{SpaceTimeField(std::make_shared<PotentialReductionKernel>(sigma, C1, C2)),
                      {}};
  inst.meta.family_id = "potential_reduction";
  inst.meta.description = "stationary u_x = v_y fields from the scaling reduction";
  inst.meta.flags.gradient_pair = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  return inst;
}

FamilyInstance potential_reduction(double sigma, double C1, double C2) {
  return potential_reduction(sigma, C1, C2, Box{0.0, 1.0, 1.4, 2.8, 0.4, 1.2, 3, 6, 6});
}

// --- hj_family ---------------------------------------------------------------

namespace {

class HjKernel final : public FieldKernel {
 public:
  HjKernel(std::vector<std::complex<double>> F, int branch) : F_(std::move(F)), branch_(branch) {
    while (F_.size() < 4) F_.push_back(0.0);
  }

  Vec2 eval(const Point& p) const override {
    auto a = root(p);
    return {-a.imag(), a.real()};
  }

  bool singular(const Point& p) const override {
    try {
      auto a = root(p);
      ComplexRootProblem pr = problem(p);
      return std::abs(-std::complex<double>(0, 1) * pr.t + pr.F_aa(a)) < 1e-6;
    } catch (const Error&) {
      return true;
    }
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    auto a = root(p);
    ComplexRootProblem pr = problem(p);
    std::complex<double> i(0, 1);
    std::complex<double> Ga = -i * pr.t + pr.F_aa(a);
    std::complex<double> ax = -1.0 / Ga, ay = -i / Ga, at = i * a / Ga;
    Jet1 j;
    j.ut = -at.imag();
    j.ux = -ax.imag();
    j.uy = -ay.imag();
    j.vt = at.real();
    j.vx = ax.real();
    j.vy = ay.real();
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    auto a = root(p);
    ComplexRootProblem pr = problem(p);
    std::complex<double> i(0, 1);
    std::complex<double> Ga = -i * pr.t + pr.F_aa(a);
    std::complex<double> G3 = Ga * Ga * Ga;
    std::complex<double> f3 = F_aaa(a);
    std::complex<double> axx = -f3 / G3, ayy = f3 / G3, axy = -i * f3 / G3;
    Jet2 j;
    j.uxx = -axx.imag();
    j.uxy = -axy.imag();
    j.uyy = -ayy.imag();
    j.vxx = axx.real();
    j.vxy = axy.real();
    j.vyy = ayy.real();
    return j;
  }

 private:
  ComplexRootProblem problem(const Point& p) const {
    return ComplexRootProblem{F_, p.t, {p.x, p.y}};
  }

  std::complex<double> F_aaa(const std::complex<double>& a) const {
    std::complex<double> r = 0.0;
    for (int k = static_cast<int>(F_.size()) - 1; k >= 3; --k)
      r = r * a + F_[k] * double(k) * double(k - 1) * double(k - 2);
    return r;
  }

  std::complex<double> root(const Point& p) const {
    ComplexRootProblem pr = problem(p);
    std::complex<double> i(0, 1);
    int deg = 0;
    for (int k = static_cast<int>(F_.size()) - 1; k >= 0; --k)
      if (F_[k] != 0.0) {
        deg = k;
        break;
      }
    std::complex<double> seed;
    if (deg <= 2) {
      // linear implicit equation: a (2 f2 - i t) = -(z + f1)
      std::complex<double> den = 2.0 * F_[2] - i * pr.t;
      if (std::abs(den) < 1e-14) fail(Errc::jacobian_singular, "degenerate linear problem");
      return -(pr.z + F_[1]) / den;
    }
    if (deg == 3) seed = hj_cubic_seed(pr, branch_);
    else seed = 0.0;
    return hj_root(pr, seed);
  }

  std::vector<std::complex<double>> F_;
  int branch_;
};

}  // namespace

FamilyInstance hj_family(const std::vector<std::complex<double>>& F_coeffs, int branch,
                         const Box& box) {
  if (F_coeffs.size() > 7) fail(Errc::invalid_case, "deg F must be <= 6");
  FamilyInstance inst{SpaceTimeField(std::make_shared<HjKernel>(F_coeffs, branch)), {}};
  inst.meta.family_id = "hj_family";
  inst.meta.description = "harmonic u_x = v_y fields from a complex slope equation";
  inst.meta.flags.gradient_pair = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  bool zero = true;
  for (const auto& c : F_coeffs)
    if (c != 0.0) zero = false;
  if (zero) {
    inst.meta.invariance = "g1.3";
    inst.meta.invariance_params = {0.0};
  }
  return inst;
}

FamilyInstance hj_family(const std::vector<std::complex<double>>& F_coeffs, int branch) {
  return hj_family(F_coeffs, branch, Box{0.5, 2.0, 0.2, 1.2, 0.3, 1.3, 4, 6, 6});
}

// --- weierstrass_family ------------------------------------------------------

namespace {

class WeierstrassKernel final : public FieldKernel {
 public:
  WeierstrassKernel(double C1, double C2, double C3, std::optional<LameSolution> phi)
      : wp_(C1), c2_(C2), c3_(C3), phi_(std::move(phi)) {}

  Vec2 eval(const Point& p) const override {
    double z = zeta(p.y);
    double u = wp_.eval(z).first * p.x;
    if (phi_) u += std::exp(c3_ * p.t) * phi_->eval(z);
    return {u, 0.0};
  }

  bool singular(const Point& p) const override {
    return wp_.pole_distance(zeta(p.y)) < 1e-3;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    double z = zeta(p.y);
    auto [wp, dwp] = wp_.eval(z);
    Jet1 j;
    j.ux = wp;
    j.uy = dwp * p.x / kSqrt6;
    if (phi_) {
      double e = std::exp(c3_ * p.t);
      j.ut = c3_ * e * phi_->eval(z);
      j.uy += e * phi_->deriv(z) / kSqrt6;
    }
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    double z = zeta(p.y);
    auto [wp, dwp] = wp_.eval(z);
    Jet2 j;
    j.uxy = dwp / kSqrt6;
    j.uyy = wp * wp * p.x;  // wp'' = 6 wp^2 divided by the squared scaling
    if (phi_) j.uyy += std::exp(c3_ * p.t) * phi_->d2(z) / 6.0;
    return j;
  }

 private:
  double zeta(double y) const { return y / kSqrt6 + c2_; }

  WeierstrassP wp_;
  double c2_, c3_;
  std::optional<LameSolution> phi_;
};

}  // namespace

FamilyInstance weierstrass_family(double C1, double C2, double C3,
                                  std::optional<std::pair<double, double>> lame_ic,
                                  const Box& box) {
  double z_lo = box.y0 / kSqrt6 + C2, z_hi = box.y1 / kSqrt6 + C2;
  std::optional<LameSolution> phi;
  if (lame_ic)
    phi.emplace(lame_solve(C1, C3, z_lo - 0.05, z_hi + 0.05, 0.5 * (z_lo + z_hi),
                           lame_ic->first, lame_ic->second));
  bool has_phi = phi.has_value();
  FamilyInstance inst{
      SpaceTimeField(std::make_shared<WeierstrassKernel>(C1, C2, C3, std::move(phi))), {}};
  inst.meta.family_id = "weierstrass_family";
  inst.meta.description = "v = 0 fields with elliptic similarity profile in y";
  inst.meta.flags.v_zero = true;
  inst.meta.tolerance = has_phi ? 1e-7 : 1e-8;
  inst.meta.box = box;
  if (!has_phi && C3 == 0.0) {
    inst.meta.invariance = "g2.1";
    inst.meta.invariance_params = {0.0};
  }
  return inst;
}

FamilyInstance weierstrass_family(double C1, double C2, double C3,
                                  std::optional<std::pair<double, double>> lame_ic) {
  return weierstrass_family(C1, C2, C3, lame_ic, Box{0.0, 1.0, -1.0, 1.0, 0.7, 2.1, 3, 5, 7});
}

// --- darboux_family ----------------------------------------------------------

namespace {

class DarbouxKernel final : public FieldKernel {
 public:
  explicit DarbouxKernel(HeatSolution1D theta) : theta_(std::move(theta)) {}

  Vec2 eval(const Point& p) const override {
    return {6.0 * p.x / (p.y * p.y) + w0(p, 0, 0), 0.0};
  }

  bool singular(const Point& p) const override {
    return std::abs(p.y) < 1e-9 || theta_.singular(p.t);
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    Jet1 j;
    j.ut = w0(p, 1, 0);
    j.ux = 6.0 / (p.y * p.y);
    j.uy = -12.0 * p.x / (p.y * p.y * p.y) + w0(p, 0, 1);
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    Jet2 j;
    j.uxy = -12.0 / (p.y * p.y * p.y);
    j.uyy = 36.0 * p.x / (p.y * p.y * p.y * p.y) + w0(p, 0, 2);
    return j;
  }

 private:
  double w0(const Point& p, int dt, int dy) const {
    if (theta_.empty()) return 0.0;
    return darboux_dt_deriv(theta_, p.t, p.y, dt, dy);
  }

  HeatSolution1D theta_;
};

}  // namespace

FamilyInstance darboux_family(const HeatSolution1D& theta, const Box& box) {
  FamilyInstance inst{SpaceTimeField(std::make_shared<DarbouxKernel>(theta)), {}};
  inst.meta.family_id = "darboux_family";
  inst.meta.description = "v = 0 fields u = 6x/y^2 + transformed heat profile";
  inst.meta.flags.v_zero = true;
  inst.meta.tolerance = 1e-10;
  inst.meta.box = box;
  if (theta.empty()) {
    inst.meta.invariance = "g2.1";
    inst.meta.invariance_params = {0.0};
  }
  return inst;
}

FamilyInstance darboux_family(const HeatSolution1D& theta) {
  return darboux_family(theta, Box{0.25, 1.25, -1.0, 1.0, 0.5, 2.0, 4, 6, 6});
}

// --- heun_family ---------------------------------------------------------------

namespace {

class HeunFamilyKernel final : public FieldKernel {
 public:
  HeunFamilyKernel(int branch, double nu, double C1, double C2, double z_min)
      : s_(branch >= 0 ? 1.0 : -1.0), nu_(nu), c1_(C1), c2_(C2),
        lam_(3.0 + s_ * std::sqrt(6.0)), K_(12.0 * (4.0 + s_ * std::sqrt(6.0))),
        B_(18.0 + 8.0 * s_ * std::sqrt(6.0)), C_(10.0 * lam_),
        heun_(heun_params(), z_min, 0.0) {}

  HeunParams heun_params() const {
    double r6 = std::sqrt(6.0);
    HeunParams p;
    p.alpha = 2.5 * lam_;
    p.beta = -0.5;
    p.gamma = -5.0;
    p.delta = 0.625 * lam_ * (4.0 * nu_ + 1.0);
    p.eta = -2.5 * lam_ * nu_ - 59.0 / 8.0 - s_ * 29.0 / 8.0 * r6;
    return p;
  }

  Vec2 eval(const Point& p) const override { return {w1(p, 0, 0) * p.x + w0val(p, 0), 0.0}; }

  bool singular(const Point& p) const override {
    if (std::abs(p.t) < 1e-9) return true;
    double D = p.y * p.y + C_ * p.t;
    if (std::abs(D) < 1e-9) return true;
    return -p.y * p.y / (C_ * p.t) > 1.0 - 2e-3;
  }

  bool has_analytic_derivatives() const override { return true; }

  Jet1 d1(const Point& p) const override {
    Jet1 j;
    j.ut = w1(p, 1, 0) * p.x + w0val(p, 1);
    j.ux = w1(p, 0, 0);
    j.uy = w1(p, 0, 1) * p.x + w0val(p, 2);
    return j;
  }

  Jet2 d2_space(const Point& p) const override {
    Jet2 j;
    j.uxy = w1(p, 0, 1);
    j.uyy = w1(p, 0, 2) * p.x + w0val(p, 3);
    return j;
  }

 private:
  // x-coefficient K (y^2 + B t) / (y^2 + C t)^2 and derivatives
  double w1(const Point& p, int dt, int dy) const {
    double N = p.y * p.y + B_ * p.t, D = p.y * p.y + C_ * p.t;
    double D3 = D * D * D;
    if (dt == 0 && dy == 0) return K_ * N / (D * D);
    if (dt == 1) return K_ * (B_ * D - 2.0 * C_ * N) / D3;
    if (dy == 1) return 2.0 * K_ * p.y * (D - 2.0 * N) / D3;
    // dy == 2
    return 2.0 * K_ * (D - 2.0 * N) / D3 - 4.0 * K_ * p.y * p.y / D3 -
           24.0 * K_ * p.y * p.y * (D - 2.0 * N) / (D3 * D);
  }

  // slot: 0 value, 1 d/dt, 2 d/dy, 3 d2/dy2
  double w0val(const Point& p, int slot) const {
    if (c1_ == 0.0 && c2_ == 0.0) return 0.0;
    double t = p.t, y = p.y;
    double at = std::abs(t), rat = std::sqrt(at);
    double D = y * y + C_ * t;
    double P = std::pow(at, nu_ + 1.5);
    double Q = std::exp(-y * y / (4.0 * t));
    double R = c1_ * y + c2_ * rat;
    double S = 1.0 / (D * D);
    double E = P * Q * R * S;
    double z = -y * y / (C_ * t);
    auto [Y, dY] = heun_.eval(z);
    if (slot == 0) return E * Y;
    if (slot == 1) {
      double Pt = (nu_ + 1.5) * P / t;
      double Qt = (y * y / (4.0 * t * t)) * Q;
      double Rt = c2_ * rat / (2.0 * t);
      double St = -2.0 * C_ / (D * D * D);
      double Et = Pt * Q * R * S + P * (Qt * R * S + Q * Rt * S + Q * R * St);
      double zt = y * y / (C_ * t * t);
      return Et * Y + E * dY * zt;
    }
    double Qy = -(y / (2.0 * t)) * Q;
    double Ry = c1_;
    double Sy = -4.0 * y / (D * D * D);
    double Ey = P * (Qy * R * S + Q * Ry * S + Q * R * Sy);
    double zy = -2.0 * y / (C_ * t);
    if (slot == 2) return Ey * Y + E * dY * zy;
    // slot == 3
    double Qyy = (-1.0 / (2.0 * t) + y * y / (4.0 * t * t)) * Q;
    double Syy = -4.0 / (D * D * D) + 24.0 * y * y / (D * D * D * D);
    double Eyy = P * (Qyy * R * S + 2.0 * Qy * Ry * S + 2.0 * Qy * R * Sy + 2.0 * Q * Ry * Sy +
                      Q * R * Syy);
    double zyy = -2.0 / (C_ * t);
    double ddY = heun_.d2(z);
    return Eyy * Y + 2.0 * Ey * dY * zy + E * (ddY * zy * zy + dY * zyy);
  }

  double s_, nu_, c1_, c2_, lam_, K_, B_, C_;
  HeunEval heun_;
};

}  // namespace

FamilyInstance heun_family(int branch, double nu, double C1, double C2, const Box& box) {
  double lam = 3.0 + (branch >= 0 ? 1.0 : -1.0) * std::sqrt(6.0);
  double z_min = 0.0;
  double ymax = std::max(std::abs(box.y0), std::abs(box.y1));
  if (box.t0 > 0) z_min = -(ymax * ymax) / (10.0 * lam * box.t0) * 1.05 - 0.05;
  FamilyInstance inst{
      SpaceTimeField(std::make_shared<HeunFamilyKernel>(branch, nu, C1, C2, z_min)), {}};
  inst.meta.family_id = "heun_family";
  inst.meta.description = "v = 0 similarity family with confluent-Heun correction";
  inst.meta.flags.v_zero = true;
  inst.meta.tolerance = (C1 == 0.0 && C2 == 0.0) ? 1e-7 : 1e-5;
  inst.meta.box = box;
  if (C1 == 0.0 && C2 == 0.0) {
    inst.meta.invariance = "g1.3";
    inst.meta.invariance_params = {0.0};
  }
  return inst;
}

FamilyInstance heun_family(int branch, double nu, double C1, double C2) {
  return heun_family(branch, nu, C1, C2, Box{0.5, 2.0, -1.0, 1.0, 0.5, 2.0, 4, 5, 6});
}

// --- registry ------------------------------------------------------------------

namespace {

nlohmann::json atom_poly(int n, double coeff = 1.0) {
  return {{"kind", "poly"}, {"params", {{"n", n}}}, {"coeff", coeff}};
}
nlohmann::json atom_gauss(double s0, double q0, double coeff = 1.0) {
  return {{"kind", "gauss"}, {"params", {{"s0", s0}, {"q0", q0}}}, {"coeff", coeff}};
}
nlohmann::json atom_exp(double lambda, int sign, double coeff = 1.0) {
  return {{"kind", "exp"}, {"params", {{"lambda", lambda}, {"sign", sign}}}, {"coeff", coeff}};
}

nlohmann::json cosh_mode(double lambda, double coeff = 1.0) {
  return nlohmann::json::array({atom_exp(lambda, +1, 0.5 * coeff), atom_exp(lambda, -1, 0.5 * coeff)});
}

std::array<std::array<double, 2>, 2> mat_from_json(const nlohmann::json& j) {
  return {{{j.at(0).at(0), j.at(0).at(1)}, {j.at(1).at(0), j.at(1).at(1)}}};
}

Box box_from_json(const nlohmann::json& params, const Box& fallback) {
  if (!params.contains("box")) return fallback;
  const auto& b = params.at("box");
  Box box = fallback;
  box.t0 = b.at("t").at(0);
  box.t1 = b.at("t").at(1);
  box.x0 = b.at("x").at(0);
  box.x1 = b.at("x").at(1);
  box.y0 = b.at("y").at(0);
  box.y1 = b.at("y").at(1);
  if (b.contains("n")) {
    box.nt = b.at("n").at(0);
    box.nx = b.at("n").at(1);
    box.ny = b.at("n").at(2);
  }
  return box;
}

FamilyInstance build_hopf_cole(const nlohmann::json& params) {
  FamilyInstance inst =
      hopf_cole_2d(heat2d_from_json(params.at("phi")),
                   box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_shift_invariant(const nlohmann::json& params) {
  FamilyInstance inst = shift_invariant(heat1d_from_json(params.at("theta1")),
                                        heat1d_from_json(params.at("theta2")),
                                        box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_affine_in_y(const nlohmann::json& params) {
  FamilyInstance inst = affine_in_y_family(heat1d_from_json(params.at("theta1")),
                                           heat1d_from_json(params.at("theta0")),
                                           box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_affine_in_x(const nlohmann::json& params) {
  FamilyInstance inst = affine_in_x_family(heat1d_from_json(params.at("theta1")),
                                           heat1d_from_json(params.at("theta0")),
                                           box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_stationary(const nlohmann::json& params) {
  FamilyInstance inst = stationary_similarity(
      params.at("phi2").get<int>(), params.at("A").get<double>(), params.at("C1").get<double>(),
      params.at("C2").get<double>(),
      box_from_json(params, Box{0.0, 1.0, 0.7, 2.2, 0.7, 2.2, 3, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_affine_general(const nlohmann::json& params) {
  std::array<double, 2> b0{0, 0};
  if (params.contains("b0")) b0 = {params.at("b0").at(0), params.at("b0").at(1)};
  FamilyInstance inst = affine_general(mat_from_json(params.at("C")), b0,
                                       box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_affine_degenerate(const nlohmann::json& params) {
  std::string kind = params.at("kind");
  DegenerateKind k = kind == "trace_nonzero" ? DegenerateKind::trace_nonzero
                     : kind == "nilpotent"   ? DegenerateKind::nilpotent
                     : kind == "constant"    ? DegenerateKind::constant
                                             : throw Error(Errc::config_error, "bad kind");
  Box fallback = (k == DegenerateKind::trace_nonzero)
                     ? Box{0.5, 2.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}
                     : Box{0.0, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6};
  FamilyInstance inst = affine_degenerate(k, params.value("c1", 0.0), params.value("c2", 0.0),
                                          box_from_json(params, fallback));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_ns_common(const nlohmann::json& params) {
  FamilyInstance inst = ns_common(params.at("a0").get<double>(), params.at("angle").get<double>(),
                                  heat1d_from_json(params.at("w")),
                                  box_from_json(params, Box{0.25, 1.0, -1.0, 1.0, -1.0, 1.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_potential_reduction(const nlohmann::json& params) {
  FamilyInstance inst = potential_reduction(
      params.at("sigma").get<double>(), params.at("C1").get<double>(),
      params.at("C2").get<double>(),
      box_from_json(params, Box{0.0, 1.0, 1.4, 2.8, 0.4, 1.2, 3, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_hj(const nlohmann::json& params) {
  std::vector<std::complex<double>> F;
  for (const auto& c : params.at("F")) F.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  FamilyInstance inst = hj_family(F, params.value("branch", +1),
                                  box_from_json(params, Box{0.5, 2.0, 0.2, 1.2, 0.3, 1.3, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_weierstrass(const nlohmann::json& params) {
  std::optional<std::pair<double, double>> ic;
  if (params.contains("phi0")) ic = {params.at("phi0").get<double>(), params.at("dphi0").get<double>()};
  FamilyInstance inst = weierstrass_family(
      params.at("C1").get<double>(), params.at("C2").get<double>(), params.at("C3").get<double>(),
      ic, box_from_json(params, Box{0.0, 1.0, -1.0, 1.0, 0.7, 2.1, 3, 5, 7}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_darboux(const nlohmann::json& params) {
  HeatSolution1D theta;
  if (params.contains("theta")) theta = heat1d_from_json(params.at("theta"));
  FamilyInstance inst =
      darboux_family(theta, box_from_json(params, Box{0.25, 1.25, -1.0, 1.0, 0.5, 2.0, 4, 6, 6}));
  inst.meta.params = params;
  return inst;
}

FamilyInstance build_heun(const nlohmann::json& params) {
  FamilyInstance inst = heun_family(params.value("branch", +1), params.value("nu", 0.0),
                                    params.value("C1", 0.0), params.value("C2", 0.0),
                                    box_from_json(params, Box{0.5, 2.0, -1.0, 1.0, 0.5, 2.0, 4, 5, 6}));
  inst.meta.params = params;
  return inst;
}

std::vector<FamilyEntry> build_registry() {
  using J = nlohmann::json;
  std::vector<FamilyEntry> reg;

  reg.push_back(
      {"hopf_cole_2d", "irrotational pair from a positive 2D heat solution", build_hopf_cole,
       {J{{"phi", J::array({J{{"coeff", 1.0}, {"x", J::array({atom_poly(0)})},
                              {"y", J::array({atom_poly(0)})}},
                            J{{"kind", "gauss2d"},
                              {"params", {{"t0", -0.5}, {"x0", 0.0}, {"y0", 0.0}}},
                              {"coeff", 1.0}}})}},
        J{{"phi", J::array({J{{"coeff", 1.0}, {"x", cosh_mode(1.0)},
                              {"y", J::array({atom_poly(0)})}}})}},
        J{{"phi", J::array({J{{"coeff", 1.0}, {"x", J::array({atom_poly(0)})},
                              {"y", J::array({atom_poly(0)})}},
                            J{{"coeff", 0.7}, {"x", cosh_mode(0.3)}, {"y", cosh_mode(0.2)}}})}}}});

  reg.push_back(
      {"shift_invariant", "y-independent pair from two 1D heat solutions", build_shift_invariant,
       {J{{"theta1", J::array({atom_poly(0), atom_exp(1.0, -1)})},
          {"theta2", J::array({atom_exp(1.0, -1)})}},
        J{{"theta1", cosh_mode(1.0)}, {"theta2", J::array({atom_poly(1)})}},
        J{{"theta1", J::array({atom_poly(0, 2.0), atom_gauss(-0.25, 0.0)})},
          {"theta2", J::array({atom_poly(2)})}}}});

  reg.push_back(
      {"affine_in_y", "v affine in y from two 1D heat solutions", build_affine_in_y,
       {J{{"theta1", J::array({atom_poly(0)})}, {"theta0", J::array({atom_poly(1)})}},
        J{{"theta1", cosh_mode(1.0)}, {"theta0", J::array()}},
        J{{"theta1", J::array({atom_poly(0, 2.0), atom_gauss(-0.25, 0.0)})},
          {"theta0", J::array({atom_poly(2)})}}}});

  reg.push_back(
      {"affine_in_x", "u affine in x from two 1D heat solutions", build_affine_in_x,
       {J{{"theta1", J::array({atom_poly(0)})}, {"theta0", J::array({atom_poly(1)})}},
        J{{"theta1", cosh_mode(1.0)}, {"theta0", J::array()}},
        J{{"theta1", J::array({atom_poly(0, 2.0), atom_gauss(-0.25, 0.0)})},
          {"theta0", J::array({atom_poly(2)})}}}});

  reg.push_back({"stationary_similarity", "stationary scaling-invariant fields",
                 build_stationary,
                 {J{{"phi2", 0}, {"A", 2.0}, {"C1", 1.0}, {"C2", 0.5}},
                  J{{"phi2", 0}, {"A", 0.5}, {"C1", 1.0}, {"C2", 0.3}},
                  J{{"phi2", -2}, {"A", -1.0}, {"C1", 1.0}, {"C2", 0.4}}}});

  reg.push_back({"affine_general", "affine fields with invertible matrix", build_affine_general,
                 {J{{"C", J::array({J::array({0.0, 1.0}), J::array({-1.0, 0.0})})}},
                  J{{"C", J::array({J::array({1.0, 0.0}), J::array({0.0, 2.0})})},
                    {"b0", J::array({0.5, 0.0})}},
                  J{{"C", J::array({J::array({1.0, 1.0}), J::array({0.0, 2.0})})},
                    {"b0", J::array({0.0, 0.3})}}}});

  reg.push_back({"affine_degenerate", "degenerate affine fields", build_affine_degenerate,
                 {J{{"kind", "nilpotent"}}, J{{"kind", "trace_nonzero"}, {"c1", 2.0}},
                  J{{"kind", "constant"}, {"c1", 0.7}, {"c2", -0.3}}}});

  reg.push_back(
      {"ns_common", "divergence-free prolongable pairs", build_ns_common,
       {J{{"a0", 0.0}, {"angle", 0.0}, {"w", J::array({atom_poly(0), atom_exp(1.0, -1)})}},
        J{{"a0", 1.0}, {"angle", 0.7853981633974483}, {"w", cosh_mode(0.6)}},
        J{{"a0", 0.5}, {"angle", 1.1}, {"w", J::array({atom_poly(0, 2.0), atom_gauss(-0.5, 0.0)})}}}});

  reg.push_back({"potential_reduction", "stationary u_x = v_y scaling fields",
                 build_potential_reduction,
                 {J{{"sigma", 1.0}, {"C1", 1.0}, {"C2", 0.0}},
                  J{{"sigma", 1.25}, {"C1", 1.0}, {"C2", 0.0},
                    {"box", {{"t", {0.0, 1.0}}, {"x", {2.3, 4.2}}, {"y", {0.45, 1.05}}}}},
                  J{{"sigma", 0.5}, {"C1", 1.0}, {"C2", 0.2}}}});

  reg.push_back({"hj_family", "harmonic gradient-pair fields", build_hj,
                 {J{{"F", J::array()}},
                  J{{"F", J::array({J::array({0.0, 0.0}), J::array({0.0, 0.0}),
                                    J::array({-0.5, 0.0})})}},
                  J{{"F", J::array({J::array({0.0, 0.0}), J::array({0.0, 0.0}),
                                    J::array({0.0, 0.0}), J::array({1.0 / 3.0, 0.0})})},
                    {"branch", 1}}}});

  reg.push_back({"weierstrass_family", "elliptic similarity profile, v = 0", build_weierstrass,
                 {J{{"C1", 0.0}, {"C2", 0.0}, {"C3", 0.0}},
                  J{{"C1", 0.0}, {"C2", 0.0}, {"C3", 0.0}, {"phi0", 1.0}, {"dphi0", 0.5}},
                  J{{"C1", 1.0}, {"C2", 0.0}, {"C3", 0.5}, {"phi0", 1.0}, {"dphi0", 0.0}}}});

  reg.push_back({"darboux_family", "transformed heat correction of 6x/y^2", build_darboux,
                 {J{{"theta", J::array()}}, J{{"theta", J::array({atom_poly(2)})}},
                  J{{"theta", J::array({atom_poly(1, 0.2), atom_gauss(-0.5, 0.3)})}}}});

  reg.push_back({"heun_family", "confluent-Heun similarity family, v = 0", build_heun,
                 {J{{"branch", 1}, {"nu", 0.0}, {"C1", 0.0}, {"C2", 0.0}},
                  J{{"branch", -1}, {"nu", 0.0}, {"C1", 0.0}, {"C2", 0.0}},
                  J{{"branch", 1}, {"nu", 0.0}, {"C1", 1.0}, {"C2", 0.0}}}});

  return reg;
}

}  // namespace

const std::vector<FamilyEntry>& family_registry() {
  static const std::vector<FamilyEntry> reg = build_registry();
  return reg;
}

const FamilyEntry& family_entry(const std::string& id) {
  for (const auto& e : family_registry())
    if (e.id == id) return e;
  fail(Errc::config_error, "unknown family " + id);
}

FamilyInstance build_family(const std::string& id, const nlohmann::json& params) {
  return family_entry(id).build(params);
}

}  // namespace burgers_lab
