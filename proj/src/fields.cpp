#include "burgers_lab/fields.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>

namespace burgers_lab {

namespace {

Point shifted(const Point& p, MultiIndex axis_unit, double delta) {
  return Point(p.t + axis_unit.dt * delta, p.x + axis_unit.dx * delta,
               p.y + axis_unit.dy * delta);
}

double axis_coord(const Point& p, MultiIndex axis_unit) {
  if (axis_unit.dt) return p.t;
  if (axis_unit.dx) return p.x;
  return p.y;
}

// 4th-order stencils. First derivative uses offsets {-2,-1,1,2},
// second derivative {-2,-1,0,1,2}.
const double kD1Off[4] = {-2, -1, 1, 2};
const double kD1W[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
const double kD2Off[5] = {-2, -1, 0, 1, 2};
const double kD2W[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

void check_step(double h, double scale) {
  if (!(h > 0)) fail(Errc::step_too_small, "step must be positive");
  if (h < 64.0 * std::numeric_limits<double>::epsilon() * scale)
    fail(Errc::step_too_small, "step below 64*eps*scale");
}

struct AxisStencil {
  MultiIndex unit;   // which axis
  int order;         // 1 or 2
  double h;
};

// Evaluates a tensor-product central-difference stencil of g at p.
double apply_stencils(const std::function<double(const Point&)>& g, const Point& p,
                      const std::vector<AxisStencil>& axes, std::size_t k) {
  if (k == axes.size()) return g(p);
  const AxisStencil& s = axes[k];
  double acc = 0.0;
  if (s.order == 1) {
    for (int i = 0; i < 4; ++i)
      acc += kD1W[i] * apply_stencils(g, shifted(p, s.unit, kD1Off[i] * s.h), axes, k + 1);
    return acc / s.h;
  }
  for (int i = 0; i < 5; ++i)
    acc += kD2W[i] * apply_stencils(g, shifted(p, s.unit, kD2Off[i] * s.h), axes, k + 1);
  return acc / (s.h * s.h);
}

void collect_points(const Point& p, const std::vector<AxisStencil>& axes, std::size_t k,
                    std::vector<Point>& out) {
  if (k == axes.size()) {
    out.push_back(p);
    return;
  }
  const AxisStencil& s = axes[k];
  int n = s.order == 1 ? 4 : 5;
  const double* off = s.order == 1 ? kD1Off : kD2Off;
  for (int i = 0; i < n; ++i) collect_points(shifted(p, s.unit, off[i] * s.h), axes, k + 1, out);
}

std::vector<AxisStencil> stencil_plan(const Point& p, MultiIndex mi, double h_or_zero) {
  std::vector<AxisStencil> axes;
  auto add = [&](int d, MultiIndex unit) {
    if (d == 0) return;
    double scale = std::max(1.0, std::abs(axis_coord(p, unit)));
    double h = h_or_zero > 0 ? h_or_zero : 1e-4 * scale;
    check_step(h, scale);
    axes.push_back({unit, d, h});
  };
  add(mi.dt, MultiIndex::t());
  add(mi.dx, MultiIndex::x());
  add(mi.dy, MultiIndex::y());
  return axes;
}

double fd_on(const std::function<double(const Point&)>& g,
             const std::function<bool(const Point&)>& singular, const Point& p,
             MultiIndex mi, double h) {
  if (mi.order() > 2) fail(Errc::degree_too_large, "derivative order above 2");
  auto axes = stencil_plan(p, mi, h);
  if (axes.empty()) return g(p);
  if (singular) {
    std::vector<Point> pts;
    collect_points(p, axes, 0, pts);
    for (const Point& q : pts)
      if (singular(q)) fail(Errc::stencil_hits_singularity, "stencil point in singular set");
    if (singular(p)) fail(Errc::stencil_hits_singularity, "base point in singular set");
  }
  return apply_stencils(g, p, axes, 0);
}

class CallableKernel final : public FieldKernel {
 public:
  CallableKernel(std::function<Vec2(const Point&)> eval,
                 std::function<Jet1(const Point&)> d1, std::function<Jet2(const Point&)> d2,
                 std::function<bool(const Point&)> singular)
      : eval_(std::move(eval)), d1_(std::move(d1)), d2_(std::move(d2)),
        singular_(std::move(singular)) {}

  Vec2 eval(const Point& p) const override { return eval_(p); }
  bool singular(const Point& p) const override { return singular_ && singular_(p); }
  bool has_analytic_derivatives() const override { return d1_ != nullptr; }
  Jet1 d1(const Point& p) const override {
    if (!d1_) return FieldKernel::d1(p);
    return d1_(p);
  }
  Jet2 d2_space(const Point& p) const override {
    if (!d2_) return FieldKernel::d2_space(p);
    return d2_(p);
  }

 private:
  std::function<Vec2(const Point&)> eval_;
  std::function<Jet1(const Point&)> d1_;
  std::function<Jet2(const Point&)> d2_;
  std::function<bool(const Point&)> singular_;
};

class MaskedKernel final : public FieldKernel {
 public:
  MaskedKernel(std::shared_ptr<const FieldKernel> base, std::function<bool(const Point&)> extra)
      : base_(std::move(base)), extra_(std::move(extra)) {}
  Vec2 eval(const Point& p) const override { return base_->eval(p); }
  bool singular(const Point& p) const override {
    return base_->singular(p) || (extra_ && extra_(p));
  }
  bool has_analytic_derivatives() const override { return base_->has_analytic_derivatives(); }
  Jet1 d1(const Point& p) const override { return base_->d1(p); }
  Jet2 d2_space(const Point& p) const override { return base_->d2_space(p); }

 private:
  std::shared_ptr<const FieldKernel> base_;
  std::function<bool(const Point&)> extra_;
};

class FdOnlyKernel final : public FieldKernel {
 public:
  explicit FdOnlyKernel(std::shared_ptr<const FieldKernel> base) : base_(std::move(base)) {}
  Vec2 eval(const Point& p) const override { return base_->eval(p); }
  bool singular(const Point& p) const override { return base_->singular(p); }

 private:
  std::shared_ptr<const FieldKernel> base_;
};

}  // namespace

Jet1 SpaceTimeField::d1(const Point& p) const {
  if (kernel_->has_analytic_derivatives()) return kernel_->d1(p);
  Jet1 j;
  j.ut = deriv(p, Component::u, MultiIndex::t());
  j.ux = deriv(p, Component::u, MultiIndex::x());
  j.uy = deriv(p, Component::u, MultiIndex::y());
  j.vt = deriv(p, Component::v, MultiIndex::t());
  j.vx = deriv(p, Component::v, MultiIndex::x());
  j.vy = deriv(p, Component::v, MultiIndex::y());
  return j;
}

Jet2 SpaceTimeField::d2_space(const Point& p) const {
  if (kernel_->has_analytic_derivatives()) return kernel_->d2_space(p);
  Jet2 j;
  j.uxx = deriv(p, Component::u, MultiIndex::xx());
  j.uxy = deriv(p, Component::u, MultiIndex::xy());
  j.uyy = deriv(p, Component::u, MultiIndex::yy());
  j.vxx = deriv(p, Component::v, MultiIndex::xx());
  j.vxy = deriv(p, Component::v, MultiIndex::xy());
  j.vyy = deriv(p, Component::v, MultiIndex::yy());
  return j;
}

double SpaceTimeField::deriv(const Point& p, Component c, MultiIndex mi) const {
  if (mi.order() > 2) fail(Errc::degree_too_large, "derivative order above 2");
  const bool u = (c == Component::u);
  if (mi.order() == 0) return eval(p, c);

  if (kernel_->has_analytic_derivatives()) {
    if (mi.order() == 1) {
      Jet1 j = kernel_->d1(p);
      if (mi.dt) return u ? j.ut : j.vt;
      if (mi.dx) return u ? j.ux : j.vx;
      return u ? j.uy : j.vy;
    }
    if (mi.dt == 0) {
      Jet2 j = kernel_->d2_space(p);
      if (mi.dx == 2) return u ? j.uxx : j.vxx;
      if (mi.dy == 2) return u ? j.uyy : j.vyy;
      return u ? j.uxy : j.vxy;
    }
    // t-t and mixed t-space second derivatives: finite difference in t of the
    // analytic first derivative.
    MultiIndex rest{0, mi.dx, mi.dy};
    if (mi.dt == 2) rest = MultiIndex{0, 0, 0};
    auto g = [&](const Point& q) {
      Jet1 j = kernel_->d1(q);
      if (mi.dt == 2) return u ? j.ut : j.vt;
      if (rest.dx) return u ? j.ux : j.vx;
      return u ? j.uy : j.vy;
    };
    auto sing = [&](const Point& q) { return kernel_->singular(q); };
    return fd_on(g, sing, p, MultiIndex::t(), 0.0);
  }

  auto g = [&](const Point& q) { return eval(q, c); };
  auto sing = [&](const Point& q) { return kernel_->singular(q); };
  return fd_on(g, sing, p, mi, 0.0);
}

SpaceTimeField with_singular_set(const SpaceTimeField& f,
                                 std::function<bool(const Point&)> singular) {
  return SpaceTimeField(std::make_shared<MaskedKernel>(f.kernel_ptr(), std::move(singular)));
}

SpaceTimeField with_fd_derivatives(const SpaceTimeField& f) {
  return SpaceTimeField(std::make_shared<FdOnlyKernel>(f.kernel_ptr()));
}

SpaceTimeField make_field(std::function<Vec2(const Point&)> eval,
                          std::function<bool(const Point&)> singular) {
  return SpaceTimeField(std::make_shared<CallableKernel>(std::move(eval), nullptr, nullptr,
                                                         std::move(singular)));
}

SpaceTimeField make_analytic_field(std::function<Vec2(const Point&)> eval,
                                   std::function<Jet1(const Point&)> d1,
                                   std::function<Jet2(const Point&)> d2,
                                   std::function<bool(const Point&)> singular) {
  return SpaceTimeField(std::make_shared<CallableKernel>(std::move(eval), std::move(d1),
                                                         std::move(d2), std::move(singular)));
}

double fd_derivative(const SpaceTimeField& field, const Point& p, Component c, MultiIndex mi,
                     double h) {
  if (!(h > 0)) fail(Errc::step_too_small, "step must be positive");
  auto g = [&](const Point& q) { return field.eval(q, c); };
  auto sing = [&](const Point& q) { return field.is_singular(q); };
  return fd_on(g, sing, p, mi, h);
}

double default_fd_step(const Point& p, MultiIndex mi) {
  double coord = 0.0;
  if (mi.dt) coord = p.t;
  else if (mi.dx) coord = p.x;
  else coord = p.y;
  return 1e-4 * std::max(1.0, std::abs(coord));
}

double richardson_order(const SpaceTimeField& field, const Point& p, Component c,
                        MultiIndex mi, double h0) {
  double d1 = fd_derivative(field, p, c, mi, h0);
  double d2 = fd_derivative(field, p, c, mi, h0 / 2);
  double d3 = fd_derivative(field, p, c, mi, h0 / 4);
  double scale = std::max({1.0, std::abs(d1), std::abs(d2), std::abs(d3)});
  double num = std::abs(d1 - d2);
  double den = std::abs(d2 - d3);
  if (num < 1e-13 * scale && den < 1e-13 * scale) return kExactOrder;
  if (den == 0.0) return kExactOrder;
  return std::log2(num / den);
}

Grid::Grid(std::vector<double> t_values, std::vector<double> x_values,
           std::vector<double> y_values, std::function<bool(const Point&)> mask)
    : t_(std::move(t_values)), x_(std::move(x_values)), y_(std::move(y_values)),
      mask_(std::move(mask)) {
  auto check = [](const std::vector<double>& a, const char* name) {
    if (a.size() < 2) fail(Errc::config_error, std::string(name) + " axis needs >= 2 points");
    for (std::size_t i = 1; i < a.size(); ++i)
      if (!(a[i] > a[i - 1]))
        fail(Errc::config_error, std::string(name) + " axis not strictly increasing");
  };
  check(t_, "t");
  check(x_, "x");
  check(y_, "y");
}

std::vector<double> Grid::linspace(double a, double b, int n) {
  if (n < 2) fail(Errc::config_error, "linspace needs n >= 2");
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

std::vector<Point> Grid::points() const {
  std::vector<Point> out;
  out.reserve(total_size());
  for (double t : t_)
    for (double x : x_)
      for (double y : y_) {
        Point p(t, x, y);
        if (!masked(p)) out.push_back(p);
      }
  return out;
}

void write_csv(const std::string& path, const SpaceTimeField& field, const Grid& grid,
               const std::vector<std::pair<double, double>>* residuals) {
  std::ofstream os(path);
  if (!os) fail(Errc::config_error, "cannot open " + path);
  os << "t,x,y,u,v";
  if (residuals) os << ",R1,R2";
  os << "\n";
  char buf[512];
  std::size_t idx = 0;
  for (double t : grid.t_values())
    for (double x : grid.x_values())
      for (double y : grid.y_values()) {
        Point p(t, x, y);
        if (grid.masked(p) || field.is_singular(p)) continue;
        Vec2 w = field.eval(p);
        if (residuals) {
          const auto& r = (*residuals)[idx];
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t, x, y,
                        w.u, w.v, r.first, r.second);
        } else {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", t, x, y, w.u, w.v);
        }
        os << buf;
        ++idx;
      }
}

}  // namespace burgers_lab
