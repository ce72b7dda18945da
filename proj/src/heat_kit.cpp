#include "burgers_lab/heat_kit.hpp"

#include <cmath>

namespace burgers_lab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double heat_poly_value(int n, double s, double q) {
  // h_n = n! sum_k s^k q^(n-2k) / (k! (n-2k)!)
  double sum = 0.0;
  double nfact = 1.0;
  for (int i = 2; i <= n; ++i) nfact *= i;
  for (int k = 0; 2 * k <= n; ++k) {
    double kfact = 1.0, mfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    for (int i = 2; i <= n - 2 * k; ++i) mfact *= i;
    sum += std::pow(s, k) * std::pow(q, n - 2 * k) / (kfact * mfact);
  }
  return nfact * sum;
}

double hermite(int n, double xi) {
  // physicists' Hermite, H_{n+1} = 2 xi H_n - 2 n H_{n-1}
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * xi;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * xi * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double heat_atom_dq(const HeatAtom& atom, int n, double s, double q) {
  if (const auto* p = std::get_if<HeatPoly>(&atom)) {
    if (n > p->n) return 0.0;
    double fall = 1.0;
    for (int i = 0; i < n; ++i) fall *= (p->n - i);
    return fall * heat_poly_value(p->n - n, s, q);
  }
  if (const auto* g = std::get_if<HeatGauss>(&atom)) {
    double tau = s - g->s0;
    if (!(tau > 0)) fail(Errc::singular_at, "heat kernel needs s > s0");
    double rt = 2.0 * std::sqrt(tau);
    double xi = (q - g->q0) / rt;
    double base = std::exp(-xi * xi) / std::sqrt(4.0 * kPi * tau);
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * hermite(n, xi) * base / std::pow(rt, n);
  }
  if (const auto* e = std::get_if<HeatExp>(&atom)) {
    double lam = e->sign >= 0 ? e->lambda : -e->lambda;
    return std::pow(lam, n) * std::exp(e->lambda * e->lambda * s + lam * q);
  }
  const auto& tr = std::get<HeatTrig>(atom);
  double damp = std::exp(-tr.lambda * tr.lambda * s) * std::pow(tr.lambda, n);
  int phase = (tr.use_sin ? 0 : 1) + n;  // sin, cos, -sin, -cos cycle
  switch (phase % 4) {
    case 0: return damp * std::sin(tr.lambda * q);
    case 1: return damp * std::cos(tr.lambda * q);
    case 2: return -damp * std::sin(tr.lambda * q);
    default: return -damp * std::cos(tr.lambda * q);
  }
}

bool heat_atom_singular(const HeatAtom& atom, double s) {
  if (const auto* g = std::get_if<HeatGauss>(&atom)) return !(s > g->s0);
  return false;
}

double HeatSolution1D::deriv(double s, double q, int ds, int dq) const {
  // theta_s = theta_qq holds exactly for every atom
  int n = 2 * ds + dq;
  double sum = 0.0;
  for (const auto& [c, atom] : terms_) sum += c * heat_atom_dq(atom, n, s, q);
  return sum;
}

bool HeatSolution1D::singular(double s) const {
  for (const auto& [c, atom] : terms_) {
    (void)c;
    if (heat_atom_singular(atom, s)) return true;
  }
  return false;
}

HeatSolution1D HeatSolution1D::operator+(const HeatSolution1D& o) const {
  auto t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return HeatSolution1D(std::move(t));
}

HeatSolution1D HeatSolution1D::operator*(double c) const {
  auto t = terms_;
  for (auto& [cc, atom] : t) cc *= c;
  return HeatSolution1D(std::move(t));
}

HeatSolution1D heat_polynomial(int n) {
  if (n < 0 || n > 12) fail(Errc::degree_too_large, "heat polynomial degree outside [0,12]");
  return HeatSolution1D({{1.0, HeatPoly{n}}});
}

HeatSolution1D heat_gaussian(double s0, double q0) {
  return HeatSolution1D({{1.0, HeatGauss{s0, q0}}});
}

HeatSolution1D heat_exp_mode(double lambda, int sign) {
  return HeatSolution1D({{1.0, HeatExp{lambda, sign >= 0 ? +1 : -1}}});
}

HeatSolution1D heat_trig_mode(double lambda, bool use_sin) {
  return HeatSolution1D({{1.0, HeatTrig{lambda, use_sin}}});
}

HeatSolution1D superpose(const std::vector<std::pair<double, HeatSolution1D>>& parts) {
  HeatSolution1D r;
  for (const auto& [c, sol] : parts) r = r + sol * c;
  return r;
}

double HeatSolution2D::deriv(double t, double x, double y, int dt, int dx, int dy) const {
  double sum = 0.0;
  for (const auto& term : terms_) {
    for (int j = 0; j <= dt; ++j) {
      double w = binom(dt, j);
      sum += term.coeff * w * term.fx.deriv(t, x, j, dx) * term.gy.deriv(t, y, dt - j, dy);
    }
  }
  return sum;
}

bool HeatSolution2D::singular(double t) const {
  for (const auto& term : terms_)
    if (term.fx.singular(t) || term.gy.singular(t)) return true;
  return false;
}

HeatSolution2D HeatSolution2D::operator+(const HeatSolution2D& o) const {
  auto t = terms_;
  t.insert(t.end(), o.terms_.begin(), o.terms_.end());
  return HeatSolution2D(std::move(t));
}

HeatSolution2D HeatSolution2D::operator*(double c) const {
  auto t = terms_;
  for (auto& term : t) term.coeff *= c;
  return HeatSolution2D(std::move(t));
}

HeatSolution2D product2d(const HeatSolution1D& fx, const HeatSolution1D& gy, double coeff) {
  return HeatSolution2D({{coeff, fx, gy}});
}

HeatSolution2D gaussian2d(double t0, double x0, double y0, double coeff) {
  return product2d(heat_gaussian(t0, x0), heat_gaussian(t0, y0), coeff);
}

HeatSolution2D superpose(const std::vector<std::pair<double, HeatSolution2D>>& parts) {
  HeatSolution2D r;
  for (const auto& [c, sol] : parts) r = r + sol * c;
  return r;
}

double darboux_dt(const HeatSolution1D& theta, double t, double y) {
  return darboux_dt_deriv(theta, t, y, 0, 0);
}

double darboux_dt_deriv(const HeatSolution1D& theta, double t, double y, int dt, int dy) {
  if (y == 0.0) fail(Errc::singular_at, "Darboux profile singular at y = 0");
  // w0 = theta_yy - 3 theta_y / y + 3 theta / y^2, differentiated by Leibniz
  double sum = theta.deriv(t, y, dt, dy + 2);
  double sign = 1.0, kfact = 1.0;
  for (int k = 0; k <= dy; ++k) {
    if (k > 0) {
      sign = -sign;
      kfact *= k;
    }
    double b = binom(dy, k);
    sum -= 3.0 * b * sign * kfact / std::pow(y, k + 1) * theta.deriv(t, y, dt, 1 + dy - k);
    sum += 3.0 * b * sign * kfact * (k + 1) / std::pow(y, k + 2) * theta.deriv(t, y, dt, dy - k);
  }
  return sum;
}

namespace {

HeatAtom atom_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind");
  const auto& p = j.at("params");
  if (kind == "poly") return HeatPoly{p.at("n").get<int>()};
  if (kind == "gauss") return HeatGauss{p.at("s0").get<double>(), p.at("q0").get<double>()};
  if (kind == "exp") return HeatExp{p.at("lambda").get<double>(), p.value("sign", +1)};
  if (kind == "trig")
    return HeatTrig{p.at("lambda").get<double>(), p.value("phase", "sin") == std::string("sin")};
  fail(Errc::config_error, "unknown heat atom kind " + kind);
}

}  // namespace

HeatSolution1D heat1d_from_json(const nlohmann::json& spec) {
  if (!spec.is_array()) fail(Errc::config_error, "heat 1d spec must be an array of atoms");
  std::vector<std::pair<double, HeatAtom>> terms;
  for (const auto& j : spec) terms.emplace_back(j.value("coeff", 1.0), atom_from_json(j));
  return HeatSolution1D(std::move(terms));
}

HeatSolution2D heat2d_from_json(const nlohmann::json& spec) {
  if (!spec.is_array()) fail(Errc::config_error, "heat 2d spec must be an array of terms");
  std::vector<HeatSolution2D::Term> terms;
  for (const auto& j : spec) {
    double c = j.value("coeff", 1.0);
    if (j.contains("kind") && j.at("kind") == "gauss2d") {
      const auto& p = j.at("params");
      terms.push_back({c, heat_gaussian(p.at("t0").get<double>(), p.at("x0").get<double>()),
                       heat_gaussian(p.at("t0").get<double>(), p.at("y0").get<double>())});
      continue;
    }
    terms.push_back({c, heat1d_from_json(j.at("x")), heat1d_from_json(j.at("y"))});
  }
  return HeatSolution2D(std::move(terms));
}

}  // namespace burgers_lab
