#ifndef BURGERS_LAB_LIE_ALGEBRA_HPP
#define BURGERS_LAB_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "burgers_lab/fields.hpp"

namespace burgers_lab {

// Sparse polynomial in (t, x, y, u, v), degree <= 2 for algebra elements.
// Coefficients stay exact in double for the integer/dyadic data used here.
class Poly5 {
 public:
  using Monomial = std::array<int, 5>;  // exponents of (t, x, y, u, v)

  Poly5() = default;
  static Poly5 constant(double c);
  static Poly5 var(int i);  // 0:t 1:x 2:y 3:u 4:v

  void add_term(const Monomial& m, double c);
  Poly5 operator+(const Poly5& o) const;
  Poly5 operator-(const Poly5& o) const;
  Poly5 operator*(const Poly5& o) const;
  Poly5 operator*(double s) const;
  Poly5 derivative(int i) const;

  double eval(double t, double x, double y, double u, double v) const;
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Poly5& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, double>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::map<Monomial, double> terms_;
  void prune();
};

// First-order differential operator on (t,x,y,u,v)-space:
// xi_t d_t + xi_x d_x + xi_y d_y + eta_u d_u + eta_v d_v.
struct VectorFieldG {
  std::array<Poly5, 5> coeff;  // (xi_t, xi_x, xi_y, eta_u, eta_v)

  VectorFieldG operator+(const VectorFieldG& o) const;
  VectorFieldG operator-(const VectorFieldG& o) const;
  VectorFieldG operator*(double s) const;
  bool operator==(const VectorFieldG& o) const { return coeff == o.coeff; }
  bool is_zero() const;
  std::string str() const;
};

// Basis of the invariance algebra, in the fixed order
// Pt, D, Pi, J, Px, Py, Gx, Gy.
enum Basis : int { Pt = 0, Dg = 1, Pi = 2, Jr = 3, Px = 4, Py = 5, Gx = 6, Gy = 7 };

const std::array<VectorFieldG, 8>& algebra_basis();
const std::array<std::string, 8>& basis_names();
VectorFieldG basis_element(int i);
VectorFieldG basis_element(const std::string& name);

// [a, b] = a(b) - b(a); error if the result degree exceeds 2.
VectorFieldG commutator(const VectorFieldG& a, const VectorFieldG& b);

// Coordinates of V in the basis; throws if V is outside the span
// (coefficients must cancel exactly).
std::array<double, 8> coordinates_in_basis(const VectorFieldG& v);

// table[i][j] = coordinates of [e_i, e_j].
using CommutationTable = std::array<std::array<std::array<double, 8>, 8>, 8>;
const CommutationTable& commutation_table();

// Least-squares distance from V to span{basis}; 0 for exact members.
double span_residual(const VectorFieldG& v, const std::vector<VectorFieldG>& basis);

struct Subalgebra {
  std::string id;          // e.g. "g1.4"
  int dim = 1;
  std::vector<std::string> parameter_names;  // subset of {kappa, mu, nu}
  std::string domain_description;
  // basis for a concrete parameter assignment
  std::vector<VectorFieldG> (*make_basis)(const std::vector<double>& params);
  bool (*in_domain)(const std::vector<double>& params);
  std::vector<std::vector<double>> sample_params;  // admissible samples
  std::vector<std::string> basis_strings;          // human-readable display
};

const std::vector<Subalgebra>& subalgebras_dim1();
const std::vector<Subalgebra>& subalgebras_dim2();
const Subalgebra& subalgebra(const std::string& id);

// true iff all pairwise commutators lie in the span of the basis
// (projection residual < 1e-12).
bool subalgebra_closure_check(const Subalgebra& s, const std::vector<double>& params);
bool basis_closure_check(const std::vector<VectorFieldG>& basis, double tol = 1e-12);

// Value of the characteristic (eta_u - xi.grad u, eta_v - xi.grad v) at p.
Vec2 apply_to_field(const VectorFieldG& V, const SpaceTimeField& field, const Point& p);

}  // namespace burgers_lab

#endif
