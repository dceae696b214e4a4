#pragma once

// Finite-difference metric variation of the pointwise action density.
//
// For constant symmetric perturbations g -> g + t dg at a point, Lambda has
// no derivatives of g, so the variational derivative is the ordinary partial
// derivative and
//
//   dLambda/dt = -(sqrt|g| / 2c) T^{ab} dg_ab,
//
// i.e. T_ab = (2c / sqrt|g|) dLambda/dg^{ab}. The normalisation is pinned by
// the vacuum, where both responses reproduce the Maxwell tensor exactly.
//
// Error budget with central differences: truncation h^2/6 |Lambda'''| plus
// rounding eps |Lambda| / h; at h = 1e-4 the first is ~1e-9 relative for
// O(1) metrics and the second ~1e-12.

#include "covem/constitutive.hpp"
#include "covem/stress_energy.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace covem {

/// How the constitutive tensor follows the metric.
enum class MetricResponse {
  /// V keeps its coordinate direction and is renormalised under g + t dg;
  /// the mixed components of the zeta maps stay fixed. Z moves through V~
  /// and the Hodge map.
  v_tethered,
  /// The 6x6 matrix of Z acting on 2-form components stays fixed.
  metric_independent,
  /// V~ = g(V, -) stays fixed instead of V (exploration only).
  covector_tethered,
};

std::string_view to_string(MetricResponse r);
MetricResponse parse_metric_response(std::string_view name);

struct VariationSpec {
  /// Symmetric perturbation directions; empty means the 10 coordinate
  /// directions dg = E_ab + E_ba (a < b) and E_aa.
  std::vector<Matrix4> directions;
  double step = 1e-4;
  /// 1: central differences; 2: central differences at h and h/2 combined by
  /// Richardson extrapolation.
  int extrapolation = 1;

  void validate() const;
};

std::vector<Matrix4> coordinate_metric_directions();

class OracleConditioningError : public std::runtime_error {
 public:
  OracleConditioningError(double condition_number);
  double condition_number() const { return condition_number_; }

 private:
  double condition_number_;
};

inline constexpr double kMaxOracleCondition = 1e6;

/// Lambda (coefficient of dx^0123) at the metric g + t dg.
double perturbed_lagrangian(const KForm& f, const ConstitutiveModel& m,
                            const Metric& g, MetricResponse response,
                            const Matrix4& dg, double t);

/// dLambda(g + t dg)/dt at t = 0.
double lagrangian_derivative(const KForm& f, const ConstitutiveModel& m,
                             const Metric& g, MetricResponse response,
                             const Matrix4& dg, double h,
                             int extrapolation = 1);

/// T whose pairing with every dg in the spec reproduces the finite-difference
/// derivatives (least squares when more than ten directions are given).
StressEnergy metric_variation_oracle(const KForm& f, const ConstitutiveModel& m,
                                     const Metric& g, MetricResponse response,
                                     const VariationSpec& spec = {});

}  // namespace covem
