#ifndef BURGERS_LAB_HEAT_KIT_HPP
#define BURGERS_LAB_HEAT_KIT_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "burgers_lab/errors.hpp"

#include "json.hpp"

namespace burgers_lab {

// Atoms of the (1+1)-dimensional heat equation theta_s = theta_qq.
// Every atom satisfies the equation exactly, so mixed derivatives reduce to
// pure q-derivatives: d^a_s d^b_q theta = d^(2a+b)_q theta.
struct HeatPoly {
  int n = 0;  // heat polynomial degree, h0=1, h1=q, h2=q^2+2s, ...
};
struct HeatGauss {
  double s0 = 0, q0 = 0;  // (4 pi (s-s0))^(-1/2) exp(-(q-q0)^2 / (4(s-s0)))
};
struct HeatExp {
  double lambda = 1;  // exp(lambda^2 s + sign*lambda q)
  int sign = +1;
};
struct HeatTrig {
  double lambda = 1;  // exp(-lambda^2 s) * sin/cos(lambda q)
  bool use_sin = true;
};

using HeatAtom = std::variant<HeatPoly, HeatGauss, HeatExp, HeatTrig>;

double heat_atom_dq(const HeatAtom& atom, int n, double s, double q);
bool heat_atom_singular(const HeatAtom& atom, double s);

// Linear combination of atoms; closed under superposition.
class HeatSolution1D {
 public:
  HeatSolution1D() = default;
  HeatSolution1D(std::vector<std::pair<double, HeatAtom>> terms) : terms_(std::move(terms)) {}

  double eval(double s, double q) const { return deriv(s, q, 0, 0); }
  // d^ds_s d^dq_q theta
  double deriv(double s, double q, int ds, int dq) const;
  bool singular(double s) const;
  bool empty() const { return terms_.empty(); }

  const std::vector<std::pair<double, HeatAtom>>& terms() const { return terms_; }

  HeatSolution1D operator+(const HeatSolution1D& o) const;
  HeatSolution1D operator*(double c) const;

 private:
  std::vector<std::pair<double, HeatAtom>> terms_;
};

// pre: 0 <= n <= 12
HeatSolution1D heat_polynomial(int n);
HeatSolution1D heat_gaussian(double s0, double q0);
HeatSolution1D heat_exp_mode(double lambda, int sign);
HeatSolution1D heat_trig_mode(double lambda, bool use_sin);
HeatSolution1D superpose(const std::vector<std::pair<double, HeatSolution1D>>& parts);

// Sum of separable products f_k(t,x) g_k(t,y); solves phi_t = phi_xx + phi_yy.
// The 2D Gaussian kernel is the product of two 1D kernels sharing s0.
class HeatSolution2D {
 public:
  HeatSolution2D() = default;
  struct Term {
    double coeff;
    HeatSolution1D fx;  // evaluated at (t, x)
    HeatSolution1D gy;  // evaluated at (t, y)
  };
  explicit HeatSolution2D(std::vector<Term> terms) : terms_(std::move(terms)) {}

  double eval(double t, double x, double y) const { return deriv(t, x, y, 0, 0, 0); }
  double deriv(double t, double x, double y, int dt, int dx, int dy) const;
  bool singular(double t) const;
  const std::vector<Term>& terms() const { return terms_; }

  HeatSolution2D operator+(const HeatSolution2D& o) const;
  HeatSolution2D operator*(double c) const;

 private:
  std::vector<Term> terms_;
};

HeatSolution2D product2d(const HeatSolution1D& fx, const HeatSolution1D& gy, double coeff = 1.0);
HeatSolution2D gaussian2d(double t0, double x0, double y0, double coeff = 1.0);
HeatSolution2D superpose(const std::vector<std::pair<double, HeatSolution2D>>& parts);

// Darboux-transformed profile w0(t,y) = theta_yy - 3 theta_y / y + 3 theta / y^2;
// solves w_t - w_yy + (6/y^2) w = 0 off y = 0.
double darboux_dt(const HeatSolution1D& theta, double t, double y);
double darboux_dt_deriv(const HeatSolution1D& theta, double t, double y, int dt, int dy);

// JSON atom spec: [{"kind":"poly","params":{"n":2},"coeff":1.0}, ...]
HeatSolution1D heat1d_from_json(const nlohmann::json& spec);
// [{"coeff":1.0,"x":[atoms...],"y":[atoms...]}, ...] or {"kind":"gauss2d",...} entries
HeatSolution2D heat2d_from_json(const nlohmann::json& spec);

}  // namespace burgers_lab

#endif
