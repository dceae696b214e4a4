#pragma once

// Declarative scenario files (schema "covariant-em/1").
//
// A config is parsed from YAML or JSON into ScenarioConfig, which can be
// written back as canonical JSON (all defaults filled, fixed key order) and
// resolved into library objects.

#include "covem/constitutive.hpp"
#include "covem/em_fields.hpp"
#include "covem/variation.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covem {

using Json = nlohmann::ordered_json;

inline constexpr const char* kConfigSchema = "covariant-em/1";

/// Invalid scenario; `path` locates the offending field ("medium.velocity").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)),
        message_(message) {}
  const std::string& path() const { return path_; }
  /// The message without the path prefix.
  const std::string& message() const { return message_; }

 private:
  std::string path_;
  std::string message_;
};

struct MetricSpec {
  enum class Kind { minkowski, diagonal, components };
  Kind kind = Kind::minkowski;
  Matrix4 components = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
};

/// A coordinate 3-velocity (normalised as (1, v/c)) or a 4-velocity
/// direction (rescaled to unit length). "rest" is the zero 3-velocity.
struct VelocitySpec {
  enum class Kind { three, four };
  Kind kind = Kind::three;
  std::vector<double> values{0.0, 0.0, 0.0};
};

struct MediumSpec {
  MediumKind kind = MediumKind::vacuum;
  VelocitySpec velocity;
  double epsilon = 1.0;
  double mu = 1.0;
  /// Frame components in the frame adapted to the medium velocity, in the
  /// units of the chosen constants.
  std::optional<Matrix3> zeta_de, zeta_db, zeta_he, zeta_hb;
};

struct PlaneWaveSpec {
  double amplitude = 1.0;
  std::array<double, 3> propagation{1.0, 0.0, 0.0};
  std::array<double, 3> polarization{0.0, 1.0, 0.0};
  double omega = 1.0;
};

struct FrameFieldSpec {
  std::array<double, 3> e{};
  std::array<double, 3> b{};
  /// Observer whose adapted frame the components refer to; "medium" uses the
  /// medium velocity.
  bool medium_frame = true;
  VelocitySpec velocity;
};

struct FieldSpec {
  enum class Kind { constant_F, plane_wave, frame_fields };
  Kind kind = Kind::constant_F;
  std::array<double, 6> constant_F{};
  PlaneWaveSpec plane_wave;
  FrameFieldSpec frame_fields;
};

struct OracleSpec {
  double step = 1e-4;
  int extrapolation = 1;
  /// Symmetric metric perturbations; empty means the coordinate directions.
  std::vector<Matrix4> directions;
};

struct ScenarioConfig {
  std::string constants = "natural";  ///< "natural" or "si"
  MetricSpec metric;
  MediumSpec medium;
  FieldSpec field;
  std::vector<VelocitySpec> observers;  ///< empty means one observer at rest
  Coordinates point{0.0, 0.0, 0.0, 0.0};
  OracleSpec oracle;
  int boost_axis = 1;  ///< 1, 2, 3 for x, y, z
};

/// Parses a JSON document already in memory.
ScenarioConfig parse_config(const Json& doc);
/// Reads YAML or JSON (by extension, ".json" for JSON) from a file.
ScenarioConfig load_config(const std::string& path);
/// Parses YAML text (JSON text is valid YAML too).
ScenarioConfig parse_config_text(const std::string& text);
/// Canonical JSON form; parse_config(to_json(c)) reproduces it exactly.
Json to_json(const ScenarioConfig& config);

/// Library objects for a config.
struct Scenario {
  Constants constants;
  Metric metric;
  ConstitutiveModel medium;
  FormField field;
  std::vector<Observer> observers;
  Coordinates point;
  VariationSpec variation;

  KForm field_at_point() const { return field(point); }
};

Scenario resolve(const ScenarioConfig& config);

/// Unit future-pointing 4-velocity for a velocity spec.
Vector4 resolve_velocity(const VelocitySpec& v, const Metric& g,
                         const Constants& k, const std::string& path);

}  // namespace covem
