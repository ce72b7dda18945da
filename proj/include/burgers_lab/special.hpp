#ifndef BURGERS_LAB_SPECIAL_HPP
#define BURGERS_LAB_SPECIAL_HPP

#include <complex>
#include <vector>

#include "burgers_lab/errors.hpp"

namespace burgers_lab {

// Weierstrass elliptic function with invariants (g2, g3) = (0, g3), restricted
// to real arguments off the pole lattice. Evaluated from the Laurent series
// near the origin and continued by the duplication formula.
struct WeierstrassP {
  double g3 = 0;
  explicit WeierstrassP(double g3_) : g3(g3_) {}
  // returns (p, p') with (p')^2 = 4 p^3 - g3
  std::pair<double, double> eval(double z) const;
  // spacing of real poles (infinite for g3 = 0 apart from z = 0)
  double real_pole_spacing() const;
  // distance from z to the nearest real pole
  double pole_distance(double z) const;
};

inline std::pair<double, double> wp(double z, double g3) { return WeierstrassP(g3).eval(z); }

// phi_zz = 6 (C3 + wp(z; 0, C1)) phi integrated over [z_lo, z_hi] from initial
// data at z0; dense output via two-point quintic interpolation with the ODE
// supplying second derivatives.
class LameSolution {
 public:
  LameSolution(double C1, double C3, double z_lo, double z_hi, double z0, double phi0,
               double dphi0, double step = 1e-3);
  double eval(double z) const;
  double deriv(double z) const;
  double d2(double z) const;  // from the ODE
  double d3(double z) const;  // derivative of the ODE
  double C1() const { return c1_; }
  double C3() const { return c3_; }

 private:
  std::pair<double, double> interp(double z) const;
  double c1_, c3_, z_lo_, z_hi_, h_;
  std::vector<double> phi_, dphi_;  // nodes z_lo + i h
  WeierstrassP wp_;
};

LameSolution lame_solve(double C1, double C3, double z_lo, double z_hi, double z0, double phi0,
                        double dphi0);

struct HeunParams {
  double alpha = 0, beta = 0, gamma = 0, delta = 0, eta = 0;
};

// Solution of the confluent Heun Cauchy problem
//   z(z-1) Y'' + (alpha z(z-1) + (beta+1)(z-1) + (gamma+1) z) Y'
//   + 1/2 (alpha(beta+1)(z-1) + alpha(gamma+1) z + 2 delta z
//          + (beta+1)(gamma+1) + 2 eta - 1) Y = 0,
//   Y(0) = 1, Y'(0) = ((2 eta - 1)/(beta+1) + gamma + 1 - alpha)/2,
// on z <= 1 - margin; series expansion near 0 continued by integration.
class HeunEval {
 public:
  // z_min/z_max: range to pre-tabulate (may be empty: z_min = z_max = 0)
  HeunEval(const HeunParams& p, double z_min = 0, double z_max = 0);
  // returns (Y, Y')
  std::pair<double, double> eval(double z) const;
  double d2(double z) const;  // from the ODE
  const HeunParams& params() const { return p_; }
  static double initial_slope(const HeunParams& p);

 private:
  std::pair<double, double> series(double z) const;
  double rhs(double z, double Y, double dY) const;  // Y''
  void build_table(int dir, double z_far);
  std::pair<double, double> integrate_on_demand(double z) const;

  HeunParams p_;
  std::vector<double> coeff_;  // Taylor coefficients at 0
  double h_ = 1e-3;
  // node tables outward from +/- s0 (series handles |z| <= s0)
  static constexpr double s0_ = 0.25;
  std::vector<double> ny_, ndy_;  // nodes z = -s0 - k h
  std::vector<double> py_, pdy_;  // nodes z = +s0 + k h
};

double heun_c(const HeunParams& p, double z);

// Holomorphic implicit problem  z - i a t + F'(a) = 0  for the complex slope a;
// F is a polynomial with complex coefficients F(a) = sum_k coeffs[k] a^k.
struct ComplexRootProblem {
  std::vector<std::complex<double>> F_coeffs;
  double t = 0;
  std::complex<double> z;

  std::complex<double> F_a(const std::complex<double>& a) const;
  std::complex<double> F_aa(const std::complex<double>& a) const;
  std::complex<double> residual(const std::complex<double>& a) const;
};

// Newton iteration; |residual| < 1e-12 or NoConvergence after 100 steps.
std::complex<double> hj_root(const ComplexRootProblem& problem, std::complex<double> seed);

// Seeds for cubic F (F' quadratic): the two explicit roots of
// F''(0)-style quadratic F'(a) - i a t + z = 0; branch selects the +/- root.
std::complex<double> hj_cubic_seed(const ComplexRootProblem& problem, int branch);

}  // namespace burgers_lab

#endif
