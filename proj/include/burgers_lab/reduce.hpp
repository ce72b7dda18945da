#ifndef BURGERS_LAB_REDUCE_HPP
#define BURGERS_LAB_REDUCE_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "burgers_lab/fields.hpp"
#include "burgers_lab/heat_kit.hpp"

#include "json.hpp"

namespace burgers_lab {

// Invariant profile of a reduction ansatz. PDE ansatzes (1.1-1.8) carry
// w^i(z1, z2) with derivatives up to total order 2 (plus z2-order 3 for the
// linearization rounds); ODE ansatzes (2.1-2.6) carry phi^i(omega) with
// derivatives up to order 2.
using WFun = std::function<double(int i, double z1, double z2, int d1, int d2)>;
using PhiFun = std::function<double(int i, double omega, int k)>;

struct SampleBox {
  double z1_lo = -1, z1_hi = 1, z2_lo = -1, z2_hi = 1;
};

struct ReducedSolution {
  std::string ansatz;  // "1.1" .. "1.8", "2.1" .. "2.6"
  double param = 0;    // kappa or mu where the ansatz takes one
  int t_sign = +1;     // branch of |t| for 1.3 and 2.3
  WFun w;              // set for PDE ansatzes
  PhiFun phi;          // set for ODE ansatzes
  SampleBox samples;   // where the profile may be probed

  bool is_ode() const { return ansatz[0] == '2'; }
};

// validates ansatz id and its parameter domain
void validate_reduced(const ReducedSolution& rs);
bool ansatz_is_ode(const std::string& ansatz);
const std::vector<std::string>& ansatz_ids();
SampleBox default_sample_box(const std::string& ansatz);

// Representative spacetime point mapping to reduced coordinates (z1, z2)
// (omega = z1 for ODE ansatzes).
Point section_point(const ReducedSolution& rs, double z1, double z2);

// Field reconstructed from the invariant profile, with analytic derivatives.
SpaceTimeField reconstruct(const ReducedSolution& rs);

// Left-hand sides of the two reduced equations at a reduced point.
std::pair<double, double> reduced_residual(const ReducedSolution& rs, double z1,
                                           double z2 = 0.0);

// Reduced form of the linearizability constraint (identically 1 for 2.6).
double reduced_constraint(const ReducedSolution& rs, double z1, double z2 = 0.0);

// Divergence of the conserved current of the first 1.8 equation:
// D1(w1) + D2((w1)^2/2 - w1_2).
double conserved_divergence_18(const ReducedSolution& rs, double z1, double z2);

struct ConsistencyReport {
  double max_reduced = 0, max_full = 0;
  bool reduced_pass = false, full_pass = false;
  bool consistent = false;  // reduced_pass == full_pass
  std::size_t samples = 0;
  double tolerance = 0;
  nlohmann::json to_json() const;
};

// Compares reduced residuals with full residuals of the reconstructed field
// at matching sample points.
ConsistencyReport consistency_check(const ReducedSolution& rs, double tol = 1e-8, int n = 6);

// Linearization of reduced system 1.8: theta1 = exp(-1/2 int w1 dz2) with the
// z1-dependent gauge fixed so theta1 solves the 1D heat equation; theta2 =
// w2 theta1. Callable as theta(i, z1, z2, dt, dq), i in {1,2}, dt <= 1.
struct Linearized18 {
  std::function<double(int i, double z1, double z2, int dt, int dq)> theta;
  double anchor_z1 = 0, anchor_z2 = 0;
};
Linearized18 linearize_18(const ReducedSolution& rs);

// Inverse substitution w1 = -2 theta1_2/theta1, w2 = theta2/theta1 from two
// callables theta(z1, z2, dt, dq) solving the heat equation.
using ThetaFun = std::function<double(double z1, double z2, int dt, int dq)>;
ReducedSolution hopf_cole_18(const ThetaFun& theta1, const ThetaFun& theta2);
ReducedSolution hopf_cole_18(const HeatSolution1D& theta1, const HeatSolution1D& theta2);

// Invariant profile of an invariant field, extracted by inverting the ansatz
// display at section points; derivatives by finite differences.
ReducedSolution pullback_reduced(const SpaceTimeField& field, const std::string& ansatz,
                                 double param = 0, int t_sign = +1);

// Numerically integrated profile of the reduced ODE systems 2.1-2.5 from
// initial data (phi1, phi1', phi2, phi2') at omega0.
ReducedSolution integrate_reduced_ode(const std::string& ansatz, double param, double lo,
                                      double hi, double omega0,
                                      const std::array<double, 4>& ic);

// Constant profile (valid notably for 2.6 and 1.8).
ReducedSolution constant_reduced(const std::string& ansatz, double param, double c1, double c2);

}  // namespace burgers_lab

#endif
