#ifndef BURGERS_LAB_HERMITE_HPP
#define BURGERS_LAB_HERMITE_HPP

namespace burgers_lab {

// Two-point quintic Hermite element on [0,1]: endpoint values, first and
// second derivatives (derivatives given with respect to the physical
// variable; h is the interval length).
struct QuinticHermite {
  double f0, d0, s0, f1, d1, s1, h;

  double value(double t) const {
    double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    double phi0 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
    double phi1 = t - 6 * t3 + 8 * t4 - 3 * t5;
    double phi2 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
    double psi0 = 10 * t3 - 15 * t4 + 6 * t5;
    double psi1 = -4 * t3 + 7 * t4 - 3 * t5;
    double psi2 = 0.5 * t3 - t4 + 0.5 * t5;
    return f0 * phi0 + h * d0 * phi1 + h * h * s0 * phi2 + f1 * psi0 + h * d1 * psi1 +
           h * h * s1 * psi2;
  }

  double slope(double t) const {
    double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    double dphi0 = -30 * t2 + 60 * t3 - 30 * t4;
    double dphi1 = 1 - 18 * t2 + 32 * t3 - 15 * t4;
    double dphi2 = t - 4.5 * t2 + 6 * t3 - 2.5 * t4;
    double dpsi0 = 30 * t2 - 60 * t3 + 30 * t4;
    double dpsi1 = -12 * t2 + 28 * t3 - 15 * t4;
    double dpsi2 = 1.5 * t2 - 4 * t3 + 2.5 * t4;
    return (f0 * dphi0 + h * d0 * dphi1 + h * h * s0 * dphi2 + f1 * dpsi0 + h * d1 * dpsi1 +
            h * h * s1 * dpsi2) /
           h;
  }
};

}  // namespace burgers_lab

#endif
