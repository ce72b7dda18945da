#ifndef BURGERS_LAB_VERIFY_HPP
#define BURGERS_LAB_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "burgers_lab/fields.hpp"

#include "json.hpp"

namespace burgers_lab {

struct ResidualReport {
  // per-equation max/mean absolute residuals over the grid
  std::map<std::string, double> max_abs;
  std::map<std::string, double> mean_abs;
  std::size_t points = 0;
  std::size_t masked = 0;
  double tolerance = 0;
  bool pass = false;

  nlohmann::json to_json() const;
};

// Pointwise residuals R1 = u_t + u u_x + v u_y - u_xx - u_yy (and R2).
std::pair<double, double> burgers_residual_at(const SpaceTimeField& f, const Point& p);
std::pair<double, double> inviscid_residual_at(const SpaceTimeField& f, const Point& p);

ResidualReport burgers_residual(const SpaceTimeField& f, const Grid& grid, double tol = 1e-10);
ResidualReport inviscid_residual(const SpaceTimeField& f, const Grid& grid, double tol = 1e-10);

// R1, R2 and R3 = u_x + v_y, so (u, v, p = const) extends to a constant-
// pressure viscous flow.
ResidualReport ns_prolongation_check(const SpaceTimeField& f, const Grid& grid,
                                     double tol = 1e-10);

// max |u_y - v_x|, |u_x - v_y|, |u_x + v_y|, |v|, |u_xx| over the grid.
ResidualReport constraint_values(const SpaceTimeField& f, const Grid& grid, double tol = 1e-10);

enum class CommonSolutionClass { subset_harmonic_gradient, subset_affine, both, neither };
const char* to_string(CommonSolutionClass c);

// Classification of a common viscid/inviscid solution:
//   subset_harmonic_gradient: Laplacians of u,v and u_x - v_y vanish,
//   subset_affine: all second space derivatives vanish.
// Requires the field to pass both residual checks at `tol`.
CommonSolutionClass common_viscid_inviscid_classify(const SpaceTimeField& f, const Grid& grid,
                                                    double tol = 1e-8);

// Scalar evaluator with derivatives, for potentials.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(std::function<double(const Point&)> eval,
              std::function<double(const Point&, MultiIndex)> deriv)
      : eval_(std::move(eval)), deriv_(std::move(deriv)) {}
  double operator()(const Point& p) const { return eval_(p); }
  double deriv(const Point& p, MultiIndex mi) const { return deriv_(p, mi); }
  bool valid() const { return eval_ != nullptr; }

 private:
  std::function<double(const Point&)> eval_;
  std::function<double(const Point&, MultiIndex)> deriv_;
};

enum class PotentialEquation { eq_half_squares, eq_cross_product, harmonic_pair };

// eq_half_squares:  psi_t + (psi_x^2 + psi_y^2)/2 - psi_xx - psi_yy
// eq_cross_product: psi_t + psi_x psi_y - psi_xx - psi_yy
// harmonic_pair:    {psi_t + psi_x psi_y, psi_xx + psi_yy}
ResidualReport potential_residuals(const ScalarField& psi, const Grid& grid,
                                   PotentialEquation which, double tol = 1e-9);

// Potential from two-segment axis-parallel line integration of (u dx + v dy)
// from `anchor`; psi_t is the exact integral of (u_t dx + v_t dy).
class LineIntegratedPotential {
 public:
  LineIntegratedPotential(SpaceTimeField f, Point anchor, int panels = 64);
  // integrate x-leg then y-leg
  double value(const Point& p) const;
  // integrate y-leg then x-leg (for the path-independence check)
  double value_alt(const Point& p) const;
  double time_derivative(const Point& p) const;
  // residual of the half-squares potential equation, gauge-fixed so the
  // residual vanishes at the anchor for each t
  double gauge_fixed_residual(const Point& p) const;

 private:
  double integrate(const Point& p, bool x_first, bool time_deriv) const;
  SpaceTimeField f_;
  Point anchor_;
  int panels_;
};

}  // namespace burgers_lab

#endif
