#include "burgers_lab/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace burgers_lab {

namespace {

// convection + diffusion right-hand side at interior node (i,j)
void rhs_interior(const EvolveState& s, std::vector<double>& ru, std::vector<double>& rv) {
  const int ny1 = s.ny + 1;
  for (int i = 1; i < s.nx; ++i)
    for (int j = 1; j < s.ny; ++j) {
      int k = i * ny1 + j;
      double u = s.u[k], v = s.v[k];
      double ux = (s.u[k + ny1] - s.u[k - ny1]) / (2 * s.dx);
      double uy = (s.u[k + 1] - s.u[k - 1]) / (2 * s.dy);
      double vx = (s.v[k + ny1] - s.v[k - ny1]) / (2 * s.dx);
      double vy = (s.v[k + 1] - s.v[k - 1]) / (2 * s.dy);
      double uxx = (s.u[k + ny1] - 2 * u + s.u[k - ny1]) / (s.dx * s.dx);
      double uyy = (s.u[k + 1] - 2 * u + s.u[k - 1]) / (s.dy * s.dy);
      double vxx = (s.v[k + ny1] - 2 * v + s.v[k - ny1]) / (s.dx * s.dx);
      double vyy = (s.v[k + 1] - 2 * v + s.v[k - 1]) / (s.dy * s.dy);
      ru[k] = -(u * ux + v * uy) + uxx + uyy;
      rv[k] = -(u * vx + v * vy) + vxx + vyy;
    }
}

void set_boundary(EvolveState& s, const SpaceTimeField& exact) {
  for (int i = 0; i <= s.nx; ++i)
    for (int j = 0; j <= s.ny; ++j) {
      if (i != 0 && i != s.nx && j != 0 && j != s.ny) continue;
      Vec2 w = exact.eval(s.point(i, j));
      s.at_u(i, j) = w.u;
      s.at_v(i, j) = w.v;
    }
}

}  // namespace

EvolveState initialize(const IbvpSetup& setup, const SpaceTimeField& exact) {
  EvolveState s;
  s.t = setup.t0;
  s.nx = setup.nx;
  s.ny = setup.ny;
  s.x0 = setup.x0;
  s.y0 = setup.y0;
  s.dx = (setup.x1 - setup.x0) / setup.nx;
  s.dy = (setup.y1 - setup.y0) / setup.ny;
  s.u.assign((setup.nx + 1) * (setup.ny + 1), 0.0);
  s.v.assign((setup.nx + 1) * (setup.ny + 1), 0.0);
  for (int i = 0; i <= s.nx; ++i)
    for (int j = 0; j <= s.ny; ++j) {
      Vec2 w = exact.eval(s.point(i, j));
      s.at_u(i, j) = w.u;
      s.at_v(i, j) = w.v;
    }
  return s;
}

void step(EvolveState& s, double dt, const SpaceTimeField& exact, TimeScheme scheme,
          double stability_scale) {
  const std::size_t n = s.u.size();
  std::vector<double> ru(n, 0.0), rv(n, 0.0);
  if (scheme == TimeScheme::euler) {
    rhs_interior(s, ru, rv);
    for (std::size_t k = 0; k < n; ++k) {
      s.u[k] += dt * ru[k];
      s.v[k] += dt * rv[k];
    }
  } else {
    // classical 4-stage explicit integrator; stages use boundary data at the
    // stage times
    EvolveState tmp = s;
    std::vector<double> au(n), av(n), bu(n), bv(n), cu(n), cv(n), du(n), dv(n);
    rhs_interior(s, au, av);
    tmp.t = s.t + dt / 2;
    for (std::size_t k = 0; k < n; ++k) {
      tmp.u[k] = s.u[k] + dt / 2 * au[k];
      tmp.v[k] = s.v[k] + dt / 2 * av[k];
    }
    set_boundary(tmp, exact);
    rhs_interior(tmp, bu, bv);
    for (std::size_t k = 0; k < n; ++k) {
      tmp.u[k] = s.u[k] + dt / 2 * bu[k];
      tmp.v[k] = s.v[k] + dt / 2 * bv[k];
    }
    set_boundary(tmp, exact);
    rhs_interior(tmp, cu, cv);
    tmp.t = s.t + dt;
    for (std::size_t k = 0; k < n; ++k) {
      tmp.u[k] = s.u[k] + dt * cu[k];
      tmp.v[k] = s.v[k] + dt * cv[k];
    }
    set_boundary(tmp, exact);
    rhs_interior(tmp, du, dv);
    for (std::size_t k = 0; k < n; ++k) {
      s.u[k] += dt / 6 * (au[k] + 2 * bu[k] + 2 * cu[k] + du[k]);
      s.v[k] += dt / 6 * (av[k] + 2 * bv[k] + 2 * cv[k] + dv[k]);
    }
  }
  s.t += dt;
  set_boundary(s, exact);
  double mx = 0;
  for (std::size_t k = 0; k < n; ++k)
    mx = std::max({mx, std::abs(s.u[k]), std::abs(s.v[k])});
  if (mx > 1e3 * stability_scale + 1e3)
    fail(Errc::unstable_step, "solution magnitude grew beyond 1e3 x initial");
}

EvolveState run_ibvp(const IbvpSetup& setup, const SpaceTimeField& exact) {
  EvolveState s = initialize(setup, exact);
  double scale = 0;
  for (double x : s.u) scale = std::max(scale, std::abs(x));
  for (double x : s.v) scale = std::max(scale, std::abs(x));
  double h2 = std::pow(std::min(s.dx, s.dy), 2);
  double dt = setup.cfl * h2;
  int steps = std::max(1, static_cast<int>(std::ceil((setup.t_end - setup.t0) / dt)));
  dt = (setup.t_end - setup.t0) / steps;
  if (dt > h2 / 4 + 1e-15)
    fail(Errc::unstable_step, "time step violates the diffusive stability bound");
  for (int k = 0; k < steps; ++k) step(s, dt, exact, setup.scheme, scale);
  return s;
}

double linf_error(const EvolveState& s, const SpaceTimeField& exact) {
  double err = 0;
  for (int i = 1; i < s.nx; ++i)
    for (int j = 1; j < s.ny; ++j) {
      Vec2 w = exact.eval(s.point(i, j));
      err = std::max({err, std::abs(s.at_u(i, j) - w.u), std::abs(s.at_v(i, j) - w.v)});
    }
  return err;
}

nlohmann::json ConvergenceReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["errors"] = errors;
  if (exact_to_rounding) {
    j["order"] = "exact";
  } else {
    j["orders"] = orders;
  }
  return j;
}

ConvergenceReport cross_validate(const SpaceTimeField& exact, const IbvpSetup& base,
                                 int levels) {
  ConvergenceReport rep;
  double scale = 1.0;
  for (int l = 0; l < levels; ++l) {
    IbvpSetup setup = base;
    setup.nx = base.nx << l;
    setup.ny = base.ny << l;
    setup.cfl = base.cfl;  // dt ~ dx^2 automatically
    EvolveState s = run_ibvp(setup, exact);
    double e = linf_error(s, exact);
    rep.errors.push_back(e);
    if (l == 0) {
      for (double x : s.u) scale = std::max(scale, std::abs(x));
    }
  }
  bool all_tiny = true;
  for (double e : rep.errors)
    if (e > 1e-11 * scale) all_tiny = false;
  rep.exact_to_rounding = all_tiny;
  if (!all_tiny)
    for (std::size_t i = 0; i + 1 < rep.errors.size(); ++i)
      rep.orders.push_back(std::log2(rep.errors[i] / rep.errors[i + 1]));
  return rep;
}

}  // namespace burgers_lab
