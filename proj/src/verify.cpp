#include "burgers_lab/verify.hpp"

#include <cmath>

namespace burgers_lab {

namespace {

struct Accum {
  double maxv = 0, sum = 0;
  std::size_t n = 0;
  void add(double v) {
    v = std::abs(v);
    maxv = std::max(maxv, v);
    sum += v;
    ++n;
  }
};

ResidualReport make_report(const std::map<std::string, Accum>& acc, std::size_t pts,
                           std::size_t masked, double tol) {
  ResidualReport r;
  r.points = pts;
  r.masked = masked;
  r.tolerance = tol;
  double worst = 0;
  for (const auto& [k, a] : acc) {
    r.max_abs[k] = a.maxv;
    r.mean_abs[k] = a.n ? a.sum / a.n : 0.0;
    worst = std::max(worst, a.maxv);
  }
  r.pass = worst <= tol;
  return r;
}

}  // namespace

nlohmann::json ResidualReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "1";
  j["max_abs"] = max_abs;
  j["mean_abs"] = mean_abs;
  j["points"] = points;
  j["masked"] = masked;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j;
}

std::pair<double, double> burgers_residual_at(const SpaceTimeField& f, const Point& p) {
  Vec2 w = f.eval(p);
  Jet1 j = f.d1(p);
  Jet2 h = f.d2_space(p);
  double r1 = j.ut + w.u * j.ux + w.v * j.uy - h.uxx - h.uyy;
  double r2 = j.vt + w.u * j.vx + w.v * j.vy - h.vxx - h.vyy;
  return {r1, r2};
}

std::pair<double, double> inviscid_residual_at(const SpaceTimeField& f, const Point& p) {
  Vec2 w = f.eval(p);
  Jet1 j = f.d1(p);
  double r1 = j.ut + w.u * j.ux + w.v * j.uy;
  double r2 = j.vt + w.u * j.vx + w.v * j.vy;
  return {r1, r2};
}

ResidualReport burgers_residual(const SpaceTimeField& f, const Grid& grid, double tol) {
  std::map<std::string, Accum> acc;
  std::size_t masked = 0, pts = 0;
  for (const Point& p : grid.points()) {
    if (f.is_singular(p)) {
      ++masked;
      continue;
    }
    auto [r1, r2] = burgers_residual_at(f, p);
    acc["R1"].add(r1);
    acc["R2"].add(r2);
    ++pts;
  }
  return make_report(acc, pts, masked + (grid.total_size() - grid.points().size()), tol);
}

ResidualReport inviscid_residual(const SpaceTimeField& f, const Grid& grid, double tol) {
  std::map<std::string, Accum> acc;
  std::size_t masked = 0, pts = 0;
  for (const Point& p : grid.points()) {
    if (f.is_singular(p)) {
      ++masked;
      continue;
    }
    auto [r1, r2] = inviscid_residual_at(f, p);
    acc["R1"].add(r1);
    acc["R2"].add(r2);
    ++pts;
  }
  return make_report(acc, pts, masked + (grid.total_size() - grid.points().size()), tol);
}

ResidualReport ns_prolongation_check(const SpaceTimeField& f, const Grid& grid, double tol) {
  std::map<std::string, Accum> acc;
  std::size_t masked = 0, pts = 0;
  for (const Point& p : grid.points()) {
    if (f.is_singular(p)) {
      ++masked;
      continue;
    }
    auto [r1, r2] = burgers_residual_at(f, p);
    Jet1 j = f.d1(p);
    acc["R1"].add(r1);
    acc["R2"].add(r2);
    acc["R3"].add(j.ux + j.vy);
    ++pts;
  }
  return make_report(acc, pts, masked + (grid.total_size() - grid.points().size()), tol);
}

ResidualReport constraint_values(const SpaceTimeField& f, const Grid& grid, double tol) {
  std::map<std::string, Accum> acc;
  std::size_t masked = 0, pts = 0;
  for (const Point& p : grid.points()) {
    if (f.is_singular(p)) {
      ++masked;
      continue;
    }
    Vec2 w = f.eval(p);
    Jet1 j = f.d1(p);
    Jet2 h = f.d2_space(p);
    acc["uy_minus_vx"].add(j.uy - j.vx);
    acc["ux_minus_vy"].add(j.ux - j.vy);
    acc["ux_plus_vy"].add(j.ux + j.vy);
    acc["v"].add(w.v);
    acc["uxx"].add(h.uxx);
    ++pts;
  }
  return make_report(acc, pts, masked + (grid.total_size() - grid.points().size()), tol);
}

const char* to_string(CommonSolutionClass c) {
  switch (c) {
    case CommonSolutionClass::subset_harmonic_gradient: return "subset_harmonic_gradient";
    case CommonSolutionClass::subset_affine: return "subset_affine";
    case CommonSolutionClass::both: return "both";
    case CommonSolutionClass::neither: return "neither";
  }
  return "?";
}

CommonSolutionClass common_viscid_inviscid_classify(const SpaceTimeField& f, const Grid& grid,
                                                    double tol) {
  ResidualReport visc = burgers_residual(f, grid, tol);
  ResidualReport invisc = inviscid_residual(f, grid, tol);
  if (!visc.pass || !invisc.pass)
    fail(Errc::not_a_common_solution, "field does not solve both systems at tolerance");
  double harm = 0, grad = 0, second = 0;
  for (const Point& p : grid.points()) {
    if (f.is_singular(p)) continue;
    Jet1 j = f.d1(p);
    Jet2 h = f.d2_space(p);
    harm = std::max({harm, std::abs(h.uxx + h.uyy), std::abs(h.vxx + h.vyy)});
    grad = std::max(grad, std::abs(j.ux - j.vy));
    second = std::max({second, std::abs(h.uxx), std::abs(h.uxy), std::abs(h.uyy),
                       std::abs(h.vxx), std::abs(h.vxy), std::abs(h.vyy)});
  }
  bool in_a = harm <= tol && grad <= tol;
  bool in_b = second <= tol;
  if (in_a && in_b) return CommonSolutionClass::both;
  if (in_a) return CommonSolutionClass::subset_harmonic_gradient;
  if (in_b) return CommonSolutionClass::subset_affine;
  return CommonSolutionClass::neither;
}

ResidualReport potential_residuals(const ScalarField& psi, const Grid& grid,
                                   PotentialEquation which, double tol) {
  std::map<std::string, Accum> acc;
  std::size_t pts = 0;
  for (const Point& p : grid.points()) {
    double pt = psi.deriv(p, MultiIndex::t());
    double px = psi.deriv(p, MultiIndex::x());
    double py = psi.deriv(p, MultiIndex::y());
    double pxx = psi.deriv(p, MultiIndex::xx());
    double pyy = psi.deriv(p, MultiIndex::yy());
    switch (which) {
      case PotentialEquation::eq_half_squares:
        acc["residual"].add(pt + 0.5 * px * px + 0.5 * py * py - pxx - pyy);
        break;
      case PotentialEquation::eq_cross_product:
        acc["residual"].add(pt + px * py - pxx - pyy);
        break;
      case PotentialEquation::harmonic_pair:
        acc["transport"].add(pt + px * py);
        acc["laplacian"].add(pxx + pyy);
        break;
    }
    ++pts;
  }
  return make_report(acc, pts, grid.total_size() - pts, tol);
}

LineIntegratedPotential::LineIntegratedPotential(SpaceTimeField f, Point anchor, int panels)
    : f_(std::move(f)), anchor_(anchor), panels_(panels) {}

double LineIntegratedPotential::integrate(const Point& p, bool x_first, bool time_deriv) const {
  // Composite Simpson along two axis-parallel segments.
  auto seg = [&](double a, double b, auto coord_point, Component comp) {
    if (a == b) return 0.0;
    int n = 2 * panels_;
    double h = (b - a) / n, sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      Point q = coord_point(a + i * h);
      double val = time_deriv
                       ? f_.deriv(q, comp, MultiIndex::t())
                       : f_.eval(q, comp);
      double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * val;
    }
    return sum * h / 3.0;
  };
  double t = p.t;
  if (x_first) {
    double leg1 = seg(anchor_.x, p.x, [&](double x) { return Point(t, x, anchor_.y); },
                      Component::u);
    double leg2 = seg(anchor_.y, p.y, [&](double y) { return Point(t, p.x, y); }, Component::v);
    return leg1 + leg2;
  }
  double leg1 = seg(anchor_.y, p.y, [&](double y) { return Point(t, anchor_.x, y); },
                    Component::v);
  double leg2 = seg(anchor_.x, p.x, [&](double x) { return Point(t, x, p.y); }, Component::u);
  return leg1 + leg2;
}

double LineIntegratedPotential::value(const Point& p) const { return integrate(p, true, false); }
double LineIntegratedPotential::value_alt(const Point& p) const {
  return integrate(p, false, false);
}
double LineIntegratedPotential::time_derivative(const Point& p) const {
  return integrate(p, true, true);
}

double LineIntegratedPotential::gauge_fixed_residual(const Point& p) const {
  auto raw = [&](const Point& q) {
    Vec2 w = f_.eval(q);
    Jet1 j = f_.d1(q);
    return time_derivative(q) + 0.5 * w.u * w.u + 0.5 * w.v * w.v - j.ux - j.vy;
  };
  return raw(p) - raw(Point(p.t, anchor_.x, anchor_.y));
}

}  // namespace burgers_lab
