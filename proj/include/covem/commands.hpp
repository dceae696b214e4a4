#pragma once

// Scenario commands behind the command-line tool.

#include "covem/report.hpp"
#include "covem/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace covem {

/// e, b, d, h for every observer at the scenario point.
Report cmd_decompose(const ScenarioConfig& config);

inline const std::vector<std::string> kTensorNames = {
    "abraham", "minkowski_sym", "comoving", "oracle_v_tethered",
    "oracle_metric_independent"};

/// Requested tensors plus the Abraham-Minkowski gap and its decomposition.
/// Unknown tensor names throw std::invalid_argument.
Report cmd_stress(const ScenarioConfig& config,
                  const std::vector<std::string>& tensors);

/// "a,b,c" or "start:stop:step" (stop included up to rounding).
std::vector<double> parse_beta_list(const std::string& text);

/// Effective constitutive blocks seen by observers boosted by beta along the
/// configured axis relative to the medium (or to the coordinate rest frame
/// for the vacuum). Requires the Minkowski metric.
Report cmd_boost_zeta(const ScenarioConfig& config,
                      const std::vector<double>& betas);

}  // namespace covem
