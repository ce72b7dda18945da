#ifndef BURGERS_LAB_ERRORS_HPP
#define BURGERS_LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace burgers_lab {

enum class Errc {
  stencil_hits_singularity,
  step_too_small,
  degree_overflow,
  degree_too_large,
  parameter_out_of_domain,
  denominator_vanishes,
  zero_denominator,
  singular_at,
  near_pole,
  pole_in_range,
  singular_path,
  parameter_pole,
  no_convergence,
  jacobian_singular,
  singular_point,
  singular_time,
  invalid_case,
  case_boundary,
  quadrature_failure,
  unstable_step,
  not_a_common_solution,
  config_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::stencil_hits_singularity: return "StencilHitsSingularity";
    case Errc::step_too_small: return "StepTooSmall";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::parameter_out_of_domain: return "ParameterOutOfDomain";
    case Errc::denominator_vanishes: return "DenominatorVanishes";
    case Errc::zero_denominator: return "ZeroDenominator";
    case Errc::singular_at: return "SingularAt";
    case Errc::near_pole: return "NearPole";
    case Errc::pole_in_range: return "PoleInRange";
    case Errc::singular_path: return "SingularPath";
    case Errc::parameter_pole: return "ParameterPole";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::jacobian_singular: return "JacobianSingular";
    case Errc::singular_point: return "SingularPoint";
    case Errc::singular_time: return "SingularTime";
    case Errc::invalid_case: return "InvalidCase";
    case Errc::case_boundary: return "CaseBoundary";
    case Errc::quadrature_failure: return "QuadratureFailure";
    case Errc::unstable_step: return "UnstableStep";
    case Errc::not_a_common_solution: return "NotACommonSolution";
    case Errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace burgers_lab

#endif
