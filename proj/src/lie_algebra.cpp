#include "burgers_lab/lie_algebra.hpp"

#include <cmath>
#include <sstream>

namespace burgers_lab {

void Poly5::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0.0) it = terms_.erase(it);
    else ++it;
  }
}

Poly5 Poly5::constant(double c) {
  Poly5 p;
  p.add_term({0, 0, 0, 0, 0}, c);
  return p;
}

Poly5 Poly5::var(int i) {
  Poly5 p;
  Monomial m{0, 0, 0, 0, 0};
  m[i] = 1;
  p.add_term(m, 1.0);
  return p;
}

void Poly5::add_term(const Monomial& m, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Poly5 Poly5::operator+(const Poly5& o) const {
  Poly5 r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly5 Poly5::operator-(const Poly5& o) const {
  Poly5 r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly5 Poly5::operator*(const Poly5& o) const {
  Poly5 r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int i = 0; i < 5; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly5 Poly5::operator*(double s) const {
  Poly5 r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

Poly5 Poly5::derivative(int i) const {
  Poly5 r;
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

double Poly5::eval(double t, double x, double y, double u, double v) const {
  const double vals[5] = {t, x, y, u, v};
  double s = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < m[i]; ++k) term *= vals[i];
    s += term;
  }
  return s;
}

int Poly5::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, m[0] + m[1] + m[2] + m[3] + m[4]);
  }
  return d;
}

std::string Poly5::str() const {
  if (terms_.empty()) return "0";
  static const char* names[5] = {"t", "x", "y", "u", "v"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    double a = std::abs(c);
    bool has_var = m[0] + m[1] + m[2] + m[3] + m[4] > 0;
    if (a != 1.0 || !has_var) os << a;
    for (int i = 0; i < 5; ++i)
      for (int k = 0; k < m[i]; ++k) os << names[i];
  }
  return os.str();
}

VectorFieldG VectorFieldG::operator+(const VectorFieldG& o) const {
  VectorFieldG r;
  for (int i = 0; i < 5; ++i) r.coeff[i] = coeff[i] + o.coeff[i];
  return r;
}

VectorFieldG VectorFieldG::operator-(const VectorFieldG& o) const {
  VectorFieldG r;
  for (int i = 0; i < 5; ++i) r.coeff[i] = coeff[i] - o.coeff[i];
  return r;
}

VectorFieldG VectorFieldG::operator*(double s) const {
  VectorFieldG r;
  for (int i = 0; i < 5; ++i) r.coeff[i] = coeff[i] * s;
  return r;
}

bool VectorFieldG::is_zero() const {
  for (const auto& p : coeff)
    if (!p.is_zero()) return false;
  return true;
}

std::string VectorFieldG::str() const {
  static const char* slots[5] = {"d_t", "d_x", "d_y", "d_u", "d_v"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    if (coeff[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff[i].str() << ")" << slots[i];
  }
  return first ? "0" : os.str();
}

namespace {

std::array<VectorFieldG, 8> build_basis() {
  const Poly5 one = Poly5::constant(1.0);
  const Poly5 t = Poly5::var(0), x = Poly5::var(1), y = Poly5::var(2);
  const Poly5 u = Poly5::var(3), v = Poly5::var(4);
  std::array<VectorFieldG, 8> b;
  b[Pt].coeff[0] = one;

  b[Dg].coeff[0] = t * 2.0;
  b[Dg].coeff[1] = x;
  b[Dg].coeff[2] = y;
  b[Dg].coeff[3] = u * -1.0;
  b[Dg].coeff[4] = v * -1.0;

  b[Pi].coeff[0] = t * t;
  b[Pi].coeff[1] = t * x;
  b[Pi].coeff[2] = t * y;
  b[Pi].coeff[3] = x - t * u;
  b[Pi].coeff[4] = y - t * v;

  b[Jr].coeff[1] = y * -1.0;
  b[Jr].coeff[2] = x;
  b[Jr].coeff[3] = v * -1.0;
  b[Jr].coeff[4] = u;

  b[Px].coeff[1] = one;
  b[Py].coeff[2] = one;

  b[Gx].coeff[1] = t;
  b[Gx].coeff[3] = one;

  b[Gy].coeff[2] = t;
  b[Gy].coeff[4] = one;
  return b;
}

}  // namespace

const std::array<VectorFieldG, 8>& algebra_basis() {
  static const std::array<VectorFieldG, 8> b = build_basis();
  return b;
}

const std::array<std::string, 8>& basis_names() {
  static const std::array<std::string, 8> n = {"Pt", "D", "Pi", "J", "Px", "Py", "Gx", "Gy"};
  return n;
}

VectorFieldG basis_element(int i) { return algebra_basis()[i]; }

VectorFieldG basis_element(const std::string& name) {
  const auto& names = basis_names();
  for (int i = 0; i < 8; ++i)
    if (names[i] == name) return algebra_basis()[i];
  fail(Errc::config_error, "unknown basis element " + name);
}

VectorFieldG commutator(const VectorFieldG& a, const VectorFieldG& b) {
  VectorFieldG r;
  for (int mu = 0; mu < 5; ++mu) {
    Poly5 c;
    for (int nu = 0; nu < 5; ++nu)
      c = c + a.coeff[nu] * b.coeff[mu].derivative(nu) -
          b.coeff[nu] * a.coeff[mu].derivative(nu);
    if (c.degree() > 2) fail(Errc::degree_overflow, "commutator degree above 2");
    r.coeff[mu] = c;
  }
  return r;
}

std::array<double, 8> coordinates_in_basis(const VectorFieldG& v) {
  auto pick = [&](int comp, Poly5::Monomial m) {
    auto it = v.coeff[comp].terms().find(m);
    return it == v.coeff[comp].terms().end() ? 0.0 : it->second;
  };
  std::array<double, 8> c{};
  c[Pi] = pick(0, {2, 0, 0, 0, 0});
  c[Dg] = pick(0, {1, 0, 0, 0, 0}) / 2.0;
  c[Pt] = pick(0, {0, 0, 0, 0, 0});
  c[Jr] = pick(2, {0, 1, 0, 0, 0});
  c[Gy] = pick(2, {1, 0, 0, 0, 0});
  c[Py] = pick(2, {0, 0, 0, 0, 0});
  c[Gx] = pick(1, {1, 0, 0, 0, 0});
  c[Px] = pick(1, {0, 0, 0, 0, 0});
  VectorFieldG rem = v;
  const auto& basis = algebra_basis();
  for (int i = 0; i < 8; ++i) rem = rem - basis[i] * c[i];
  if (!rem.is_zero()) fail(Errc::config_error, "vector field outside span of basis");
  return c;
}

const CommutationTable& commutation_table() {
  static const CommutationTable table = [] {
    CommutationTable t{};
    const auto& b = algebra_basis();
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) t[i][j] = coordinates_in_basis(commutator(b[i], b[j]));
    return t;
  }();
  return table;
}

double span_residual(const VectorFieldG& v, const std::vector<VectorFieldG>& basis) {
  // Flatten onto the union of (component, monomial) slots and solve the
  // normal equations of the least-squares projection.
  std::map<std::pair<int, Poly5::Monomial>, int> slots;
  auto note = [&](const VectorFieldG& w) {
    for (int comp = 0; comp < 5; ++comp)
      for (const auto& [m, c] : w.coeff[comp].terms()) {
        (void)c;
        slots.emplace(std::make_pair(comp, m), 0);
      }
  };
  note(v);
  for (const auto& w : basis) note(w);
  int n = 0;
  for (auto& [k, idx] : slots) idx = n++;
  auto flatten = [&](const VectorFieldG& w) {
    std::vector<double> col(n, 0.0);
    for (int comp = 0; comp < 5; ++comp)
      for (const auto& [m, c] : w.coeff[comp].terms())
        col[slots.at({comp, m})] = c;
    return col;
  };
  std::vector<std::vector<double>> A;
  for (const auto& w : basis) A.push_back(flatten(w));
  std::vector<double> rhs = flatten(v);
  const int k = static_cast<int>(A.size());
  if (k == 0) {
    double s = 0;
    for (double r : rhs) s += r * r;
    return std::sqrt(s);
  }
  // normal matrix
  std::vector<std::vector<double>> M(k, std::vector<double>(k + 1, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      for (int s = 0; s < n; ++s) M[i][j] += A[i][s] * A[j][s];
    for (int s = 0; s < n; ++s) M[i][k] += A[i][s] * rhs[s];
  }
  // Gaussian elimination with partial pivoting
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    if (std::abs(M[col][col]) < 1e-300) continue;
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      double f = M[r][col] / M[col][col];
      for (int cc = col; cc <= k; ++cc) M[r][cc] -= f * M[col][cc];
    }
  }
  std::vector<double> lambda(k, 0.0);
  for (int i = 0; i < k; ++i)
    if (std::abs(M[i][i]) > 1e-300) lambda[i] = M[i][k] / M[i][i];
  double s2 = 0.0;
  for (int s = 0; s < n; ++s) {
    double r = rhs[s];
    for (int i = 0; i < k; ++i) r -= lambda[i] * A[i][s];
    s2 += r * r;
  }
  return std::sqrt(s2);
}

namespace {

using VF = VectorFieldG;
using P = std::vector<double>;

VF bb(int i) { return algebra_basis()[i]; }

std::vector<VF> mk_g11(const P& p) { return {bb(Pt) + bb(Jr) * p[0]}; }
std::vector<VF> mk_g12(const P&) { return {bb(Pt) + bb(Gy)}; }
std::vector<VF> mk_g13(const P& p) { return {bb(Dg) + bb(Jr) * (2 * p[0])}; }
std::vector<VF> mk_g14(const P& p) { return {bb(Pt) + bb(Pi) + bb(Jr) * p[0]}; }
std::vector<VF> mk_g15(const P& p) {
  return {bb(Pt) + bb(Pi) + bb(Jr) + (bb(Gx) - bb(Py)) * p[0]};
}
std::vector<VF> mk_g16(const P&) { return {bb(Jr)}; }
std::vector<VF> mk_g17(const P&) { return {bb(Gx) - bb(Py)}; }
std::vector<VF> mk_g18(const P&) { return {bb(Py)}; }

std::vector<VF> mk_g21(const P& p) { return {bb(Pt), bb(Dg) + bb(Jr) * p[0]}; }
std::vector<VF> mk_g22(const P&) { return {bb(Pt), bb(Jr)}; }
std::vector<VF> mk_g23(const P&) { return {bb(Dg), bb(Jr)}; }
std::vector<VF> mk_g24(const P&) { return {bb(Pt) + bb(Pi), bb(Jr)}; }
std::vector<VF> mk_g25(const P& p) {
  return {bb(Pt) + bb(Pi) + bb(Jr) + (bb(Gy) + bb(Px)) * p[0], bb(Gx) - bb(Py)};
}
std::vector<VF> mk_g26(const P& p) { return {bb(Gx) - bb(Py), bb(Gy) + bb(Px) * p[0]}; }
std::vector<VF> mk_g27(const P& p) {
  return {bb(Py), bb(Pt) + bb(Gx) * p[0] + bb(Gy) * p[1]};
}
std::vector<VF> mk_g28(const P&) { return {bb(Py), bb(Dg)}; }
std::vector<VF> mk_g29(const P&) { return {bb(Py), bb(Px)}; }
std::vector<VF> mk_g210(const P&) { return {bb(Py), bb(Gy)}; }
std::vector<VF> mk_g211(const P& p) { return {bb(Py), bb(Gx) + bb(Gy) * p[0]}; }
std::vector<VF> mk_g212(const P&) { return {bb(Py), bb(Gy) + bb(Px)}; }

bool dom_none(const P&) { return true; }
bool dom_01(const P& p) { return p.size() == 1 && (p[0] == 0.0 || p[0] == 1.0); }
bool dom_nonneg(const P& p) { return p.size() == 1 && p[0] >= 0.0; }
bool dom_pos(const P& p) { return p.size() == 1 && p[0] > 0.0; }
bool dom_empty(const P& p) { return p.empty(); }
bool dom_g27(const P& p) {
  if (p.size() != 2 || p[0] < 0 || p[1] < 0) return false;
  double s = p[0] * p[0] + p[1] * p[1];
  return s == 0.0 || std::abs(s - 1.0) < 1e-12;
}

std::vector<Subalgebra> build_dim1() {
  std::vector<Subalgebra> v;
  v.push_back({"g1.1", 1, {"kappa"}, "kappa in {0,1}", mk_g11, dom_01,
               {{0.0}, {1.0}}, {"Pt + kappa*J"}});
  v.push_back({"g1.2", 1, {}, "", mk_g12, dom_empty, {{}}, {"Pt + Gy"}});
  v.push_back({"g1.3", 1, {"kappa"}, "kappa >= 0", mk_g13, dom_nonneg,
               {{0.0}, {0.5}, {1.0}, {2.0}, {3.7}}, {"D + 2*kappa*J"}});
  v.push_back({"g1.4", 1, {"kappa"}, "kappa >= 0", mk_g14, dom_nonneg,
               {{0.0}, {0.5}, {1.0}, {2.0}, {3.7}}, {"Pt + Pi + kappa*J"}});
  v.push_back({"g1.5", 1, {"mu"}, "mu > 0", mk_g15, dom_pos,
               {{0.5}, {1.0}, {2.0}, {3.0}, {4.25}}, {"Pt + Pi + J + mu*(Gx - Py)"}});
  v.push_back({"g1.6", 1, {}, "", mk_g16, dom_empty, {{}}, {"J"}});
  v.push_back({"g1.7", 1, {}, "", mk_g17, dom_empty, {{}}, {"Gx - Py"}});
  v.push_back({"g1.8", 1, {}, "", mk_g18, dom_empty, {{}}, {"Py"}});
  return v;
}

std::vector<Subalgebra> build_dim2() {
  std::vector<Subalgebra> v;
  v.push_back({"g2.1", 2, {"kappa"}, "kappa >= 0", mk_g21, dom_nonneg,
               {{0.0}, {0.5}, {1.0}, {2.0}, {3.7}}, {"Pt", "D + kappa*J"}});
  v.push_back({"g2.2", 2, {}, "", mk_g22, dom_empty, {{}}, {"Pt", "J"}});
  v.push_back({"g2.3", 2, {}, "", mk_g23, dom_empty, {{}}, {"D", "J"}});
  v.push_back({"g2.4", 2, {}, "", mk_g24, dom_empty, {{}}, {"Pt + Pi", "J"}});
  v.push_back({"g2.5", 2, {"mu"}, "mu >= 0", mk_g25, dom_nonneg,
               {{0.0}, {0.5}, {1.0}, {2.0}, {3.7}},
               {"Pt + Pi + J + mu*(Gy + Px)", "Gx - Py"}});
  v.push_back({"g2.6", 2, {"mu"}, "mu > 0", mk_g26, dom_pos,
               {{0.5}, {1.0}, {2.0}, {3.0}, {4.25}}, {"Gx - Py", "Gy + mu*Px"}});
  v.push_back({"g2.7", 2, {"mu", "nu"}, "mu,nu >= 0, mu^2+nu^2 in {0,1}", mk_g27, dom_g27,
               {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {std::sqrt(0.5), std::sqrt(0.5)},
                {0.6, 0.8}},
               {"Py", "Pt + mu*Gx + nu*Gy"}});
  v.push_back({"g2.8", 2, {}, "", mk_g28, dom_empty, {{}}, {"Py", "D"}});
  v.push_back({"g2.9", 2, {}, "", mk_g29, dom_empty, {{}}, {"Py", "Px"}});
  v.push_back({"g2.10", 2, {}, "", mk_g210, dom_empty, {{}}, {"Py", "Gy"}});
  v.push_back({"g2.11", 2, {"mu"}, "mu >= 0", mk_g211, dom_nonneg,
               {{0.0}, {0.5}, {1.0}, {2.0}, {3.7}}, {"Py", "Gx + mu*Gy"}});
  v.push_back({"g2.12", 2, {}, "", mk_g212, dom_empty, {{}}, {"Py", "Gy + Px"}});
  return v;
}

}  // namespace

const std::vector<Subalgebra>& subalgebras_dim1() {
  static const std::vector<Subalgebra> v = build_dim1();
  return v;
}

const std::vector<Subalgebra>& subalgebras_dim2() {
  static const std::vector<Subalgebra> v = build_dim2();
  return v;
}

const Subalgebra& subalgebra(const std::string& id) {
  for (const auto& s : subalgebras_dim1())
    if (s.id == id) return s;
  for (const auto& s : subalgebras_dim2())
    if (s.id == id) return s;
  fail(Errc::config_error, "unknown subalgebra " + id);
}

bool basis_closure_check(const std::vector<VectorFieldG>& basis, double tol) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      VectorFieldG c = commutator(basis[i], basis[j]);
      if (span_residual(c, basis) >= tol) return false;
    }
  return true;
}

bool subalgebra_closure_check(const Subalgebra& s, const std::vector<double>& params) {
  if (!s.in_domain(params)) fail(Errc::parameter_out_of_domain, "parameters outside " + s.id);
  return basis_closure_check(s.make_basis(params));
}

Vec2 apply_to_field(const VectorFieldG& V, const SpaceTimeField& field, const Point& p) {
  if (field.is_singular(p)) fail(Errc::singular_point, "point in singular set");
  Vec2 w = field.eval(p);
  Jet1 j = field.d1(p);
  double xi_t = V.coeff[0].eval(p.t, p.x, p.y, w.u, w.v);
  double xi_x = V.coeff[1].eval(p.t, p.x, p.y, w.u, w.v);
  double xi_y = V.coeff[2].eval(p.t, p.x, p.y, w.u, w.v);
  double eta_u = V.coeff[3].eval(p.t, p.x, p.y, w.u, w.v);
  double eta_v = V.coeff[4].eval(p.t, p.x, p.y, w.u, w.v);
  Vec2 q;
  q.u = eta_u - xi_t * j.ut - xi_x * j.ux - xi_y * j.uy;
  q.v = eta_v - xi_t * j.vt - xi_x * j.vx - xi_y * j.vy;
  return q;
}

}  // namespace burgers_lab
