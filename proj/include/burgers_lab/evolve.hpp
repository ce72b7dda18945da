#ifndef BURGERS_LAB_EVOLVE_HPP
#define BURGERS_LAB_EVOLVE_HPP

#include <string>
#include <vector>

#include "burgers_lab/fields.hpp"

#include "json.hpp"

namespace burgers_lab {

enum class TimeScheme { euler, rk4 };

struct IbvpSetup {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  int nx = 32, ny = 32;  // cells; nodes are nx+1, ny+1
  double t0 = 0, t_end = 0.1;
  double cfl = 0.2;  // dt = cfl * min(dx,dy)^2
  TimeScheme scheme = TimeScheme::euler;
};

struct EvolveState {
  double t = 0;
  int nx = 0, ny = 0;
  double dx = 0, dy = 0, x0 = 0, y0 = 0;
  std::vector<double> u, v;  // row-major (nx+1) x (ny+1)
  double& at_u(int i, int j) { return u[i * (ny + 1) + j]; }
  double& at_v(int i, int j) { return v[i * (ny + 1) + j]; }
  double at_u(int i, int j) const { return u[i * (ny + 1) + j]; }
  double at_v(int i, int j) const { return v[i * (ny + 1) + j]; }
  Point point(int i, int j) const { return Point(t, x0 + i * dx, y0 + j * dy); }
};

// Initial state sampled from the exact field at t0.
EvolveState initialize(const IbvpSetup& setup, const SpaceTimeField& exact);

// One explicit step: 2nd-order central differences for convection and
// diffusion; boundary rows re-sampled from the exact field at the new time.
// Throws UnstableStep if max|u| grows beyond 1e3 x the initial scale.
void step(EvolveState& state, double dt, const SpaceTimeField& exact, TimeScheme scheme,
          double stability_scale);

// Evolves to setup.t_end and returns the final state.
EvolveState run_ibvp(const IbvpSetup& setup, const SpaceTimeField& exact);

// Max-norm error of the interior against the exact field.
double linf_error(const EvolveState& state, const SpaceTimeField& exact);

struct ConvergenceReport {
  std::vector<double> errors;    // per level
  std::vector<double> orders;    // log2(e_j / e_{j+1})
  bool exact_to_rounding = false;
  nlohmann::json to_json() const;
};

// Runs `levels` grid refinements (nx doubling, dt ~ dx^2) and reports the
// observed convergence order.
ConvergenceReport cross_validate(const SpaceTimeField& exact, const IbvpSetup& base,
                                 int levels);

}  // namespace burgers_lab

#endif
