#ifndef BURGERS_LAB_SYM_GROUP_HPP
#define BURGERS_LAB_SYM_GROUP_HPP

#include <string>

#include "burgers_lab/fields.hpp"

#include "json.hpp"

namespace burgers_lab {

// Point symmetry of the Burgers system:
//   t~ = (a t + b) / (c t + d),            ad - bc = 1 after normalization,
//   (x~,y~) = O (x,y)/(ct+d) + t~ (m1,m2) + (n1,n2),
//   (u~,v~) = (ct+d) O (u,v) - c O (x,y) + (m1,m2),
// with O = R(angle) * diag(1, -1 if reflect). The (A, O) pair carries a sign
// gauge: (A, O) and (-A, -O) act identically; the canonical representative
// has the first nonzero of (a,b,c,d) positive.
struct GroupElement {
  double a = 1, b = 0, c = 0, d = 1;
  double angle = 0;
  bool reflect = false;
  double m1 = 0, m2 = 0;
  double n1 = 0, n2 = 0;

  void orthogonal(double& o11, double& o12, double& o21, double& o22) const;
  GroupElement normalized() const;
  bool approx_equal(const GroupElement& o, double tol = 1e-10) const;
};

struct FlowParam {
  std::string generator;  // one of Pt, D, Pi, J, Px, Py, Gx, Gy
  double epsilon = 0;
};

GroupElement identity_element();
GroupElement mirror_element();  // (t,x,y,u,v) -> (t,-x,y,-u,v)

// One-parameter subgroup element exp(epsilon * generator).
GroupElement flow(const FlowParam& f);

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

// Action on a point of the extended space. Throws DenominatorVanishes on the
// chart boundary c t + d = 0.
std::pair<Point, Vec2> act_point(const GroupElement& g, const Point& p, const Vec2& uv);

// Push-forward of a solution: graph of the result is g * (graph of field).
// The singular set picks up the pulled-back chart boundary.
SpaceTimeField act_field(const GroupElement& g, const SpaceTimeField& field);

nlohmann::json group_element_to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

}  // namespace burgers_lab

#endif
