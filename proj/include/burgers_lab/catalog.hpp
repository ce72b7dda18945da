#ifndef BURGERS_LAB_CATALOG_HPP
#define BURGERS_LAB_CATALOG_HPP

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "burgers_lab/fields.hpp"
#include "burgers_lab/heat_kit.hpp"
#include "burgers_lab/special.hpp"

#include "json.hpp"

namespace burgers_lab {

// Differential constraints a family satisfies on top of the system itself.
struct ConstraintFlags {
  bool irrotational = false;     // u_y = v_x
  bool gradient_pair = false;    // u_x = v_y
  bool divergence_free = false;  // u_x + v_y = 0
  bool v_zero = false;           // v = 0
};

struct Box {
  double t0 = 0, t1 = 1, x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  int nt = 4, nx = 6, ny = 6;
  Grid grid(std::function<bool(const Point&)> mask = nullptr) const;
};

struct FamilyMeta {
  std::string family_id;
  std::string description;
  ConstraintFlags flags;
  std::string invariance = "-";           // subalgebra id or "-"
  std::vector<double> invariance_params;  // parameters of that subalgebra
  double tolerance = 1e-10;
  Box box;
  nlohmann::json params;
};

struct FamilyInstance {
  SpaceTimeField field;
  FamilyMeta meta;
  Grid grid() const;  // default box masked by the field's singular set
};

// u = -2 phi_x/phi, v = -2 phi_y/phi for a positive 2D heat solution.
FamilyInstance hopf_cole_2d(const HeatSolution2D& phi, const Box& box);
FamilyInstance hopf_cole_2d(const HeatSolution2D& phi);

// y-independent pair u = -2 theta1_x/theta1, v = theta2/theta1.
FamilyInstance shift_invariant(const HeatSolution1D& theta1, const HeatSolution1D& theta2,
                               const Box& box);
FamilyInstance shift_invariant(const HeatSolution1D& theta1, const HeatSolution1D& theta2);

// u = -2 theta1_x/theta1, v = (u y + theta0/theta1)_x; v affine in y.
FamilyInstance affine_in_y_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0,
                                  const Box& box);
FamilyInstance affine_in_y_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0);

// the (x,u) <-> (y,v) permutation of affine_in_y_family
FamilyInstance affine_in_x_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0,
                                  const Box& box);
FamilyInstance affine_in_x_family(const HeatSolution1D& theta1, const HeatSolution1D& theta0);

// Stationary fields u = phi1(x/y)/y, v = phi2/y with phi2 in {0,-2}; phi1
// comes from the quadrature psi of the linearized second-order equation.
FamilyInstance stationary_similarity(int phi2, double A, double C1, double C2, const Box& box);
FamilyInstance stationary_similarity(int phi2, double A, double C1, double C2);

// Alternative closed form of psi for integer beta = sqrt(1-A) (phi2 = 0) or
// beta = sqrt(-A) (phi2 = -2); used to cross-check the trigonometric form.
double stationary_psi_poly(int phi2, int beta, double C1, double C2, double omega);
double stationary_psi(int phi2, double A, double C1, double C2, double omega);

// u-vec = (tE + C)^(-1) (x-vec + b0); masked where det(tE + C) = 0.
FamilyInstance affine_general(const std::array<std::array<double, 2>, 2>& C,
                              const std::array<double, 2>& b0, const Box& box);
FamilyInstance affine_general(const std::array<std::array<double, 2>, 2>& C,
                              const std::array<double, 2>& b0);

enum class DegenerateKind { trace_nonzero, nilpotent, constant };
FamilyInstance affine_degenerate(DegenerateKind kind, double c1, double c2, const Box& box);
FamilyInstance affine_degenerate(DegenerateKind kind, double c1, double c2);

// Divergence-free prolongable pair u = a1 w + a0, v = a2 w with
// (a1, a2) = (sin angle, cos angle), z = a2 x - a1 y, w(t,z) = theta(t, z - a0 t).
FamilyInstance ns_common(double a0, double angle, const HeatSolution1D& theta, const Box& box);
FamilyInstance ns_common(double a0, double angle, const HeatSolution1D& theta);

// u = -(x/y^2) phi_w, v = phi_w / y + 2 sigma / x with phi_w(x/y) from the
// sigma-dependent closed forms; satisfies u_x = v_y.
FamilyInstance potential_reduction(double sigma, double C1, double C2, const Box& box);
FamilyInstance potential_reduction(double sigma, double C1, double C2);

// u = -Im a, v = Re a where a solves z - i a t + F'(a) = 0, z = x + i y.
FamilyInstance hj_family(const std::vector<std::complex<double>>& F_coeffs, int branch,
                         const Box& box);
FamilyInstance hj_family(const std::vector<std::complex<double>>& F_coeffs, int branch);

// u = wp(y/sqrt(6) + C2; 0, C1) x + e^(C3 t) phi(y/sqrt(6) + C2), v = 0; phi
// solves the second-order linear equation phi'' = 6 (C3 + wp) phi.
FamilyInstance weierstrass_family(double C1, double C2, double C3,
                                  std::optional<std::pair<double, double>> lame_ic,
                                  const Box& box);
FamilyInstance weierstrass_family(double C1, double C2, double C3,
                                  std::optional<std::pair<double, double>> lame_ic);

// u = 6x/y^2 + theta_yy - 3 theta_y/y + 3 theta/y^2, v = 0.
FamilyInstance darboux_family(const HeatSolution1D& theta, const Box& box);
FamilyInstance darboux_family(const HeatSolution1D& theta);

// v = 0 similarity family carried by the confluent-Heun profile; branch +/-1.
FamilyInstance heun_family(int branch, double nu, double C1, double C2, const Box& box);
FamilyInstance heun_family(int branch, double nu, double C1, double C2);

// --- registry -------------------------------------------------------------

struct FamilyEntry {
  std::string id;
  std::string description;
  // builds an instance from JSON parameters (schema documented per family)
  FamilyInstance (*build)(const nlohmann::json& params);
  std::vector<nlohmann::json> default_params;  // three representative sets
};

const std::vector<FamilyEntry>& family_registry();
const FamilyEntry& family_entry(const std::string& id);
FamilyInstance build_family(const std::string& id, const nlohmann::json& params);

}  // namespace burgers_lab

#endif
