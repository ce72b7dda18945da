#include "burgers_lab/special.hpp"

#include "burgers_lab/hermite.hpp"

#include <algorithm>
#include <cmath>

namespace burgers_lab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr int kWpTerms = 16;  // Laurent coefficients c_2..c_K

// real half-period of wp(.; 0, 1): Gamma(1/3)^3 / (4 pi)
double omega1_unit() {
  static const double w = std::pow(std::tgamma(1.0 / 3.0), 3) / (4.0 * kPi);
  return w;
}

// c_2 = 0 (g2 = 0), c_3 = g3/28, c_n = 3/((2n+1)(n-3)) sum c_m c_{n-m}
std::vector<double> wp_series_coeffs(double g3) {
  std::vector<double> c(kWpTerms + 1, 0.0);
  if (kWpTerms >= 3) c[3] = g3 / 28.0;
  for (int n = 4; n <= kWpTerms; ++n) {
    double s = 0.0;
    for (int m = 2; m <= n - 2; ++m) s += c[m] * c[n - m];
    c[n] = 3.0 / ((2.0 * n + 1.0) * (n - 3.0)) * s;
  }
  return c;
}

}  // namespace

double WeierstrassP::real_pole_spacing() const {
  if (g3 == 0.0) return std::numeric_limits<double>::infinity();
  double w1 = omega1_unit() * std::pow(std::abs(g3), -1.0 / 6.0);
  // positive g3: hexagonal lattice meets the real axis every 2 w1;
  // negative g3: the lattice is rotated 30 degrees, spacing 2 sqrt(3) w1.
  return g3 > 0 ? 2.0 * w1 : 2.0 * std::sqrt(3.0) * w1;
}

double WeierstrassP::pole_distance(double z) const {
  double az = std::abs(z);
  double sp = real_pole_spacing();
  if (!std::isfinite(sp)) return az;
  double r = std::fmod(az, sp);
  return std::min(r, sp - r);
}

std::pair<double, double> WeierstrassP::eval(double z) const {
  if (pole_distance(z) < 1e-6) fail(Errc::near_pole, "argument within 1e-6 of a pole");
  double sign = 1.0;
  if (z < 0) {  // wp is even, wp' odd
    z = -z;
    sign = -1.0;
  }
  if (g3 == 0.0) {  // degenerate lattice: wp = z^-2 exactly
    return {1.0 / (z * z), sign * -2.0 / (z * z * z)};
  }
  static thread_local double cached_g3 = std::numeric_limits<double>::quiet_NaN();
  static thread_local std::vector<double> coeffs;
  if (g3 != cached_g3) {
    coeffs = wp_series_coeffs(g3);
    cached_g3 = g3;
  }
  // series radius: nearest complex lattice point sits at 2 w1 for either sign
  double w1 = omega1_unit() * std::pow(std::abs(g3), -1.0 / 6.0);
  double zs = z;
  int doublings = 0;
  while (zs > 0.5 * w1) {  // = 0.25 * (2 w1)
    zs *= 0.5;
    ++doublings;
  }
  double z2 = zs * zs;
  double p = 1.0 / z2, dp = -2.0 / (z2 * zs);
  double zpow = z2;  // z^(2k-2) starting at k = 2
  for (int k = 2; k <= kWpTerms; ++k) {
    p += coeffs[k] * zpow;
    dp += coeffs[k] * (2 * k - 2) * zpow / zs;
    zpow *= z2;
  }
  for (int i = 0; i < doublings; ++i) {
    // duplication with g2 = 0: wp'' = 6 wp^2
    double p3 = p * p * p;
    double q2 = dp * dp;
    double pn = -2.0 * p + 9.0 * p3 * p / q2;
    double qn = -dp + 18.0 * p3 / dp - 54.0 * p3 * p3 / (q2 * dp);
    p = pn;
    dp = qn;
  }
  return {p, sign * dp};
}

LameSolution::LameSolution(double C1, double C3, double z_lo, double z_hi, double z0,
                           double phi0, double dphi0, double step)
    : c1_(C1), c3_(C3), z_lo_(z_lo), z_hi_(z_hi), wp_(C1) {
  if (!(z_lo < z_hi) || !(z0 >= z_lo && z0 <= z_hi))
    fail(Errc::config_error, "bad Lame range");
  int n = std::max(2, static_cast<int>(std::ceil((z_hi - z_lo) / step)));
  h_ = (z_hi - z_lo) / n;
  // range must stay clear of wp poles
  for (int i = 0; i <= n; ++i)
    if (wp_.pole_distance(z_lo + i * h_) < 1e-3)
      fail(Errc::pole_in_range, "wp pole inside Lame range");
  phi_.assign(n + 1, 0.0);
  dphi_.assign(n + 1, 0.0);
  int i0 = static_cast<int>(std::lround((z0 - z_lo) / h_));
  i0 = std::clamp(i0, 0, n);
  // RK4 both directions from the node nearest z0 (shift initial data there
  // by one short RK4 step if z0 is off-node)
  auto f = [&](double z, double y, double dy) {
    return std::make_pair(dy, 6.0 * (c3_ + wp_.eval(z).first) * y);
  };
  auto rk4 = [&](double z, double& y, double& dy, double hh) {
    auto [k1y, k1d] = f(z, y, dy);
    auto [k2y, k2d] = f(z + hh / 2, y + hh / 2 * k1y, dy + hh / 2 * k1d);
    auto [k3y, k3d] = f(z + hh / 2, y + hh / 2 * k2y, dy + hh / 2 * k2d);
    auto [k4y, k4d] = f(z + hh, y + hh * k3y, dy + hh * k3d);
    y += hh / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    dy += hh / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
  };
  double y = phi0, dy = dphi0;
  double znode = z_lo + i0 * h_;
  if (std::abs(znode - z0) > 1e-15) rk4(z0, y, dy, znode - z0);
  phi_[i0] = y;
  dphi_[i0] = dy;
  double yy = y, dyy = dy;
  for (int i = i0; i < n; ++i) {
    rk4(z_lo + i * h_, yy, dyy, h_);
    phi_[i + 1] = yy;
    dphi_[i + 1] = dyy;
  }
  yy = y;
  dyy = dy;
  for (int i = i0; i > 0; --i) {
    rk4(z_lo + i * h_, yy, dyy, -h_);
    phi_[i - 1] = yy;
    dphi_[i - 1] = dyy;
  }
}

std::pair<double, double> LameSolution::interp(double z) const {
  if (z < z_lo_ - 1e-12 || z > z_hi_ + 1e-12)
    fail(Errc::config_error, "Lame query outside range");
  z = std::clamp(z, z_lo_, z_hi_);
  int i = std::min(static_cast<int>((z - z_lo_) / h_), static_cast<int>(phi_.size()) - 2);
  double za = z_lo_ + i * h_, zb = za + h_;
  auto curv = [&](double zz, double yy) { return 6.0 * (c3_ + wp_.eval(zz).first) * yy; };
  QuinticHermite q{phi_[i],     dphi_[i],     curv(za, phi_[i]),
            phi_[i + 1], dphi_[i + 1], curv(zb, phi_[i + 1]),
            h_};
  double t = (z - za) / h_;
  return {q.value(t), q.slope(t)};
}

double LameSolution::eval(double z) const { return interp(z).first; }
double LameSolution::deriv(double z) const { return interp(z).second; }
double LameSolution::d2(double z) const { return 6.0 * (c3_ + wp_.eval(z).first) * eval(z); }
double LameSolution::d3(double z) const {
  auto [p, dp] = wp_.eval(z);
  auto [y, dy] = interp(z);
  return 6.0 * (c3_ + p) * dy + 6.0 * dp * y;
}

LameSolution lame_solve(double C1, double C3, double z_lo, double z_hi, double z0, double phi0,
                        double dphi0) {
  return LameSolution(C1, C3, z_lo, z_hi, z0, phi0, dphi0);
}

double HeunEval::initial_slope(const HeunParams& p) {
  if (p.beta == -1.0) fail(Errc::parameter_pole, "beta = -1");
  return 0.5 * ((2.0 * p.eta - 1.0) / (p.beta + 1.0) + p.gamma + 1.0 - p.alpha);
}

HeunEval::HeunEval(const HeunParams& p, double z_min, double z_max) : p_(p) {
  if (p_.beta == -1.0) fail(Errc::parameter_pole, "beta = -1");
  // Taylor coefficients at z = 0
  const double a1 = p_.beta + p_.gamma + 2.0 - p_.alpha;
  const double b1 = 0.5 * (p_.alpha * (p_.beta + p_.gamma + 2.0) + 2.0 * p_.delta);
  const double b0 = 0.5 * ((p_.beta + 1.0) * (p_.gamma + 1.0) + 2.0 * p_.eta - 1.0 -
                           p_.alpha * (p_.beta + 1.0));
  coeff_.assign(42, 0.0);
  coeff_[0] = 1.0;
  coeff_[1] = initial_slope(p_);
  for (int m = 1; m + 1 < static_cast<int>(coeff_.size()); ++m) {
    double num = (m * (m - 1.0) + a1 * m + b0) * coeff_[m] +
                 (p_.alpha * (m - 1.0) + b1) * coeff_[m - 1];
    coeff_[m + 1] = num / ((m + 1.0) * (m + p_.beta + 1.0));
  }
  if (z_min < -s0_) build_table(-1, z_min);
  if (z_max > s0_) build_table(+1, z_max);
}

std::pair<double, double> HeunEval::series(double z) const {
  double y = 0.0, dy = 0.0;
  for (int n = static_cast<int>(coeff_.size()) - 1; n >= 1; --n) {
    y = y * z + coeff_[n];
    dy = dy * z + n * coeff_[n];
  }
  y = y * z + coeff_[0];
  return {y, dy};
}

double HeunEval::rhs(double z, double Y, double dY) const {
  const double a1 = p_.beta + p_.gamma + 2.0 - p_.alpha;
  const double a0 = -(p_.beta + 1.0);
  const double b1 = 0.5 * (p_.alpha * (p_.beta + p_.gamma + 2.0) + 2.0 * p_.delta);
  const double b0 = 0.5 * ((p_.beta + 1.0) * (p_.gamma + 1.0) + 2.0 * p_.eta - 1.0 -
                           p_.alpha * (p_.beta + 1.0));
  double denom = z * (z - 1.0);
  return -((p_.alpha * z * z + a1 * z + a0) * dY + (b1 * z + b0) * Y) / denom;
}

void HeunEval::build_table(int dir, double z_far) {
  if (dir > 0 && z_far > 1.0 - 1e-3)
    fail(Errc::singular_path, "path reaches the singular point z = 1");
  auto& ty = dir > 0 ? py_ : ny_;
  auto& tdy = dir > 0 ? pdy_ : ndy_;
  double start = dir > 0 ? s0_ : -s0_;
  auto [y, dy] = series(start);
  ty = {y};
  tdy = {dy};
  int n = static_cast<int>(std::ceil(std::abs(z_far - start) / h_)) + 1;
  double hh = dir > 0 ? h_ : -h_;
  for (int i = 0; i < n; ++i) {
    double z = start + i * hh;
    double k1y = dy, k1d = rhs(z, y, dy);
    double k2y = dy + hh / 2 * k1d, k2d = rhs(z + hh / 2, y + hh / 2 * k1y, dy + hh / 2 * k1d);
    double k3y = dy + hh / 2 * k2d, k3d = rhs(z + hh / 2, y + hh / 2 * k2y, dy + hh / 2 * k2d);
    double k4y = dy + hh * k3d, k4d = rhs(z + hh, y + hh * k3y, dy + hh * k3d);
    y += hh / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    dy += hh / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
    ty.push_back(y);
    tdy.push_back(dy);
  }
}

std::pair<double, double> HeunEval::integrate_on_demand(double z) const {
  double start = z > 0 ? s0_ : -s0_;
  auto [y, dy] = series(start);
  int n = std::max(1, static_cast<int>(std::ceil(std::abs(z - start) / h_)));
  double hh = (z - start) / n;
  for (int i = 0; i < n; ++i) {
    double zz = start + i * hh;
    double k1y = dy, k1d = rhs(zz, y, dy);
    double k2y = dy + hh / 2 * k1d,
           k2d = rhs(zz + hh / 2, y + hh / 2 * k1y, dy + hh / 2 * k1d);
    double k3y = dy + hh / 2 * k2d,
           k3d = rhs(zz + hh / 2, y + hh / 2 * k2y, dy + hh / 2 * k2d);
    double k4y = dy + hh * k3d, k4d = rhs(zz + hh, y + hh * k3y, dy + hh * k3d);
    y += hh / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
    dy += hh / 6 * (k1d + 2 * k2d + 2 * k3d + k4d);
  }
  return {y, dy};
}

std::pair<double, double> HeunEval::eval(double z) const {
  if (z > 1.0 - 1e-3) fail(Errc::singular_path, "argument beyond 1 - 1e-3");
  if (std::abs(z) <= s0_ + 1e-15) return series(z);
  const auto& ty = z > 0 ? py_ : ny_;
  const auto& tdy = z > 0 ? pdy_ : ndy_;
  double start = z > 0 ? s0_ : -s0_;
  double dist = std::abs(z - start);
  int i = static_cast<int>(dist / h_);
  if (ty.size() >= 2 && i + 1 < static_cast<int>(ty.size())) {
    double za = start + (z > 0 ? i * h_ : -i * h_);
    double zb = start + (z > 0 ? (i + 1) * h_ : -(i + 1) * h_);
    QuinticHermite q{ty[i],     tdy[i],     rhs(za, ty[i], tdy[i]),
              ty[i + 1], tdy[i + 1], rhs(zb, ty[i + 1], tdy[i + 1]),
              zb - za};
    double t = (z - za) / (zb - za);
    return {q.value(t), q.slope(t)};
  }
  return integrate_on_demand(z);
}

double HeunEval::d2(double z) const {
  auto [y, dy] = eval(z);
  return rhs(z, y, dy);
}

double heun_c(const HeunParams& p, double z) { return HeunEval(p).eval(z).first; }

std::complex<double> ComplexRootProblem::F_a(const std::complex<double>& a) const {
  std::complex<double> r = 0.0;
  for (int k = static_cast<int>(F_coeffs.size()) - 1; k >= 1; --k)
    r = r * a + F_coeffs[k] * double(k);
  return r;
}

std::complex<double> ComplexRootProblem::F_aa(const std::complex<double>& a) const {
  std::complex<double> r = 0.0;
  for (int k = static_cast<int>(F_coeffs.size()) - 1; k >= 2; --k)
    r = r * a + F_coeffs[k] * double(k) * double(k - 1);
  return r;
}

std::complex<double> ComplexRootProblem::residual(const std::complex<double>& a) const {
  return z - std::complex<double>(0.0, 1.0) * a * t + F_a(a);
}

std::complex<double> hj_root(const ComplexRootProblem& problem, std::complex<double> seed) {
  std::complex<double> a = seed;
  const std::complex<double> i(0.0, 1.0);
  for (int it = 0; it < 100; ++it) {
    std::complex<double> r = problem.residual(a);
    if (std::abs(r) < 1e-12) return a;
    std::complex<double> dr = -i * problem.t + problem.F_aa(a);
    if (std::abs(dr) < 1e-14 * std::max(1.0, std::abs(a)))
      fail(Errc::jacobian_singular, "derivative of the implicit equation vanished");
    a -= r / dr;
  }
  if (std::abs(problem.residual(a)) < 1e-12) return a;
  fail(Errc::no_convergence, "Newton did not reach 1e-12 in 100 iterations");
}

std::complex<double> hj_cubic_seed(const ComplexRootProblem& problem, int branch) {
  // F' (a) = 3 f3 a^2 + 2 f2 a + f1; solve 3 f3 a^2 + (2 f2 - i t) a + (f1 + z) = 0
  if (problem.F_coeffs.size() < 4 || problem.F_coeffs[3] == std::complex<double>(0.0))
    fail(Errc::invalid_case, "cubic seed needs deg F = 3");
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> A = 3.0 * problem.F_coeffs[3];
  std::complex<double> B = 2.0 * problem.F_coeffs[2] - i * problem.t;
  std::complex<double> C = (problem.F_coeffs.size() > 1 ? problem.F_coeffs[1] : 0.0) + problem.z;
  std::complex<double> disc = std::sqrt(B * B - 4.0 * A * C);
  return (-B + (branch >= 0 ? disc : -disc)) / (2.0 * A);
}

}  // namespace burgers_lab
