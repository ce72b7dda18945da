#ifndef BURGERS_LAB_FIELDS_HPP
#define BURGERS_LAB_FIELDS_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "burgers_lab/errors.hpp"

namespace burgers_lab {

struct Point {
  double t = 0.0, x = 0.0, y = 0.0;
  Point() = default;
  Point(double t_, double x_, double y_) : t(t_), x(x_), y(y_) {
    if (!std::isfinite(t) || !std::isfinite(x) || !std::isfinite(y))
      fail(Errc::config_error, "non-finite point coordinates");
  }
};

struct Vec2 {
  double u = 0.0, v = 0.0;
};

enum class Component { u, v };

// Differentiation order with respect to (t, x, y); total order <= 2.
struct MultiIndex {
  int dt = 0, dx = 0, dy = 0;
  int order() const { return dt + dx + dy; }
  static MultiIndex t() { return {1, 0, 0}; }
  static MultiIndex x() { return {0, 1, 0}; }
  static MultiIndex y() { return {0, 0, 1}; }
  static MultiIndex tt() { return {2, 0, 0}; }
  static MultiIndex xx() { return {0, 2, 0}; }
  static MultiIndex yy() { return {0, 0, 2}; }
  static MultiIndex tx() { return {1, 1, 0}; }
  static MultiIndex ty() { return {1, 0, 1}; }
  static MultiIndex xy() { return {0, 1, 1}; }
};

enum class DerivativeMode { analytic, finite_difference };

// First derivatives of (u, v) with respect to (t, x, y).
struct Jet1 {
  double ut = 0, ux = 0, uy = 0;
  double vt = 0, vx = 0, vy = 0;
};

// Second spatial derivatives of (u, v).
struct Jet2 {
  double uxx = 0, uxy = 0, uyy = 0;
  double vxx = 0, vxy = 0, vyy = 0;
};

// Immutable evaluation kernel behind a SpaceTimeField. Kernels that provide
// analytic derivatives implement d1/d2_space; the rest fall back to finite
// differences on eval.
class FieldKernel {
 public:
  virtual ~FieldKernel() = default;
  virtual Vec2 eval(const Point& p) const = 0;
  virtual bool singular(const Point&) const { return false; }
  virtual bool has_analytic_derivatives() const { return false; }
  virtual Jet1 d1(const Point&) const {
    fail(Errc::config_error, "kernel has no analytic first derivatives");
  }
  virtual Jet2 d2_space(const Point&) const {
    fail(Errc::config_error, "kernel has no analytic second derivatives");
  }
};

class SpaceTimeField {
 public:
  SpaceTimeField() = default;
  explicit SpaceTimeField(std::shared_ptr<const FieldKernel> kernel)
      : kernel_(std::move(kernel)) {}

  bool valid() const { return kernel_ != nullptr; }
  Vec2 eval(const Point& p) const { return kernel_->eval(p); }
  double eval(const Point& p, Component c) const {
    Vec2 w = kernel_->eval(p);
    return c == Component::u ? w.u : w.v;
  }
  bool is_singular(const Point& p) const { return kernel_->singular(p); }
  DerivativeMode derivative_mode() const {
    return kernel_->has_analytic_derivatives() ? DerivativeMode::analytic
                                               : DerivativeMode::finite_difference;
  }

  Jet1 d1(const Point& p) const;
  Jet2 d2_space(const Point& p) const;

  // Partial derivative of a component; |mi| <= 2. In analytic mode the
  // t-t and t-space second derivatives are finite differences of the
  // analytic first derivatives.
  double deriv(const Point& p, Component c, MultiIndex mi) const;

  const FieldKernel& kernel() const { return *kernel_; }
  std::shared_ptr<const FieldKernel> kernel_ptr() const { return kernel_; }

 private:
  std::shared_ptr<const FieldKernel> kernel_;
};

// Wraps field evaluation with an explicit singular-set predicate.
SpaceTimeField with_singular_set(const SpaceTimeField& f,
                                 std::function<bool(const Point&)> singular);

// Same values as `f` but derivative_mode = finite-difference (drops the
// analytic derivative path). Used to compare the two modes.
SpaceTimeField with_fd_derivatives(const SpaceTimeField& f);

// Field built from plain callables (analytic derivatives optional).
SpaceTimeField make_field(std::function<Vec2(const Point&)> eval,
                          std::function<bool(const Point&)> singular = nullptr);
SpaceTimeField make_analytic_field(std::function<Vec2(const Point&)> eval,
                                   std::function<Jet1(const Point&)> d1,
                                   std::function<Jet2(const Point&)> d2,
                                   std::function<bool(const Point&)> singular = nullptr);

// 4th-order central finite difference of one component of `field`.
// pre: 0 < h, |mi| <= 2, stencil clear of the singular set.
double fd_derivative(const SpaceTimeField& field, const Point& p, Component c,
                     MultiIndex mi, double h);

// Default fd step: 1e-4 * max(1, |coordinate along the differentiated axis|).
double default_fd_step(const Point& p, MultiIndex mi);

// Observed convergence order of the fd stencil from steps h0, h0/2, h0/4.
// Returns +infinity (the "exact" sentinel) when successive differences sit at
// rounding level, e.g. for polynomial fields resolved exactly.
double richardson_order(const SpaceTimeField& field, const Point& p, Component c,
                        MultiIndex mi, double h0);
inline constexpr double kExactOrder = std::numeric_limits<double>::infinity();

class Grid {
 public:
  Grid(std::vector<double> t_values, std::vector<double> x_values,
       std::vector<double> y_values, std::function<bool(const Point&)> mask = nullptr);

  static std::vector<double> linspace(double a, double b, int n);

  const std::vector<double>& t_values() const { return t_; }
  const std::vector<double>& x_values() const { return x_; }
  const std::vector<double>& y_values() const { return y_; }
  bool masked(const Point& p) const { return mask_ && mask_(p); }

  // Unmasked points, row-major over (t, x, y): t slowest, y fastest.
  std::vector<Point> points() const;
  std::size_t total_size() const { return t_.size() * x_.size() * y_.size(); }

 private:
  std::vector<double> t_, x_, y_;
  std::function<bool(const Point&)> mask_;
};

// CSV export, header `t,x,y,u,v` (plus `R1,R2` when residuals are given);
// row-major over (t,x,y); 17 significant digits. Masked points are skipped.
void write_csv(const std::string& path, const SpaceTimeField& field, const Grid& grid,
               const std::vector<std::pair<double, double>>* residuals = nullptr);

}  // namespace burgers_lab

#endif
