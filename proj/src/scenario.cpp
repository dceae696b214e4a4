#include "covem/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace covem {

namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// --- YAML -> JSON ------------------------------------------------------------

Json scalar_to_json(const YAML::Node& node) {
  const std::string& text = node.Scalar();
  if (node.Tag() == "!") return text;  // quoted
  if (text == "true" || text == "True" || text == "TRUE") return true;
  if (text == "false" || text == "False" || text == "FALSE") return false;
  if (text == "~" || text == "null" || text == "Null" || text == "NULL") return nullptr;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  if (text.find_first_of(".eEnN") == std::string::npos) {
    long long i = 0;
    const auto r = std::from_chars(first, last, i);
    if (r.ec == std::errc() && r.ptr == last) return i;
  }
  double d = 0.0;
  const auto r = std::from_chars(first, last, d);
  if (r.ec == std::errc() && r.ptr == last && std::isfinite(d)) return d;
  return text;
}

Json yaml_to_json(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Scalar:
      return scalar_to_json(node);
    case YAML::NodeType::Sequence: {
      Json out = Json::array();
      for (const auto& item : node) out.push_back(yaml_to_json(item));
      return out;
    }
    case YAML::NodeType::Map: {
      Json out = Json::object();
      for (const auto& kv : node) {
        const std::string key = kv.first.as<std::string>();
        if (out.contains(key)) throw ConfigError(key, "duplicate key");
        out[key] = yaml_to_json(kv.second);
      }
      return out;
    }
  }
  return nullptr;
}

// --- strict readers ----------------------------------------------------------

// Object reader that rejects unknown keys once finish() is called.
class Fields {
 public:
  Fields(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) throw ConfigError(path_, "expected a mapping");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const Json& get(const std::string& key) {
    if (!j_.contains(key)) throw ConfigError(join(path_, key), "missing");
    used_.insert(key);
    return j_.at(key);
  }

  const Json* find(const std::string& key) {
    if (!j_.contains(key)) return nullptr;
    used_.insert(key);
    return &j_.at(key);
  }

  std::string path(const std::string& key) const { return join(path_, key); }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError(join(path_, key), "unknown key");
    }
  }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path, "must be finite");
  return x;
}

std::string string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

std::vector<double> numbers(const Json& j, const std::string& path,
                            std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw ConfigError(path, "expected a list of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(number(j[i], index_path(path, i)));
  return out;
}

template <std::size_t N>
std::array<double, N> fixed(const Json& j, const std::string& path) {
  const auto v = numbers(j, path, N);
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

template <int N>
Eigen::Matrix<double, N, N> square(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(N)) {
    throw ConfigError(path, "expected " + std::to_string(N) + " rows of " +
                                std::to_string(N) + " numbers");
  }
  Eigen::Matrix<double, N, N> m;
  for (int r = 0; r < N; ++r) {
    const auto row = numbers(j[static_cast<std::size_t>(r)],
                             index_path(path, static_cast<std::size_t>(r)),
                             static_cast<std::size_t>(N));
    for (int c = 0; c < N; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

int axis_index(const std::string& name, const std::string& path) {
  if (name == "x") return 1;
  if (name == "y") return 2;
  if (name == "z") return 3;
  throw ConfigError(path, "axis must be x, y or z");
}

std::array<double, 3> direction(const Json& j, const std::string& path) {
  if (j.is_string()) {
    std::array<double, 3> out{};
    out[static_cast<std::size_t>(axis_index(j.get<std::string>(), path) - 1)] = 1.0;
    return out;
  }
  return fixed<3>(j, path);
}

// A velocity given inside an object as "velocity" or "four_velocity".
VelocitySpec velocity_in(Fields& f) {
  const Json* three = f.find("velocity");
  const Json* four = f.find("four_velocity");
  if (three && four) {
    throw ConfigError(f.path("velocity"), "give velocity or four_velocity, not both");
  }
  VelocitySpec v;
  if (four) {
    v.kind = VelocitySpec::Kind::four;
    v.values = numbers(*four, f.path("four_velocity"), 4);
  } else if (three) {
    v.values = numbers(*three, f.path("velocity"), 3);
  }
  return v;
}

// "rest", or a mapping with velocity / four_velocity.
VelocitySpec velocity_value(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "rest") {
      throw ConfigError(path, "expected \"rest\" or a velocity mapping");
    }
    return {};
  }
  Fields f(j, path);
  VelocitySpec v = velocity_in(f);
  f.finish();
  return v;
}

Json velocity_json(const VelocitySpec& v) {
  Json out = Json::object();
  out[v.kind == VelocitySpec::Kind::three ? "velocity" : "four_velocity"] = v.values;
  return out;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

MediumKind medium_kind(const std::string& name, const std::string& path) {
  for (MediumKind k : {MediumKind::vacuum, MediumKind::isotropic,
                       MediumKind::anisotropic, MediumKind::magneto_electric}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError(path,
                    "unknown medium kind '" + name +
                        "' (vacuum, isotropic, anisotropic, magneto_electric)");
}

MetricSpec parse_metric(const Json& j, const std::string& path) {
  MetricSpec m;
  Fields f(j, path);
  const Json* preset = f.find("preset");
  const Json* diag = f.find("diagonal");
  const Json* comps = f.find("components");
  if ((preset != nullptr) + (diag != nullptr) + (comps != nullptr) != 1) {
    throw ConfigError(path, "give exactly one of preset, diagonal, components");
  }
  if (preset) {
    if (string(*preset, f.path("preset")) != "minkowski") {
      throw ConfigError(f.path("preset"), "unknown preset (minkowski)");
    }
  } else if (diag) {
    m.kind = MetricSpec::Kind::diagonal;
    const auto d = fixed<4>(*diag, f.path("diagonal"));
    m.components = Eigen::Vector4d(d[0], d[1], d[2], d[3]).asDiagonal();
  } else {
    m.kind = MetricSpec::Kind::components;
    m.components = square<4>(*comps, f.path("components"));
  }
  f.finish();
  return m;
}

MediumSpec parse_medium(const Json& j, const std::string& path) {
  MediumSpec m;
  Fields f(j, path);
  m.kind = medium_kind(string(f.get("kind"), f.path("kind")), f.path("kind"));
  if (m.kind == MediumKind::vacuum) {
    f.finish();
    return m;
  }
  m.velocity = velocity_in(f);
  const auto zeta = [&](const char* key, bool required) -> std::optional<Matrix3> {
    const Json* z = f.find(key);
    if (!z) {
      if (required) throw ConfigError(f.path(key), "missing");
      return std::nullopt;
    }
    return square<3>(*z, f.path(key));
  };
  switch (m.kind) {
    case MediumKind::isotropic:
      m.epsilon = number(f.get("epsilon"), f.path("epsilon"));
      m.mu = number(f.get("mu"), f.path("mu"));
      break;
    case MediumKind::anisotropic:
      m.zeta_de = zeta("zeta_de", true);
      m.zeta_hb = zeta("zeta_hb", true);
      break;
    case MediumKind::magneto_electric:
      m.zeta_de = zeta("zeta_de", true);
      m.zeta_db = zeta("zeta_db", true);
      m.zeta_hb = zeta("zeta_hb", true);
      m.zeta_he = zeta("zeta_he", false);
      if (!m.zeta_he) m.zeta_he = Matrix3(-m.zeta_db->transpose());
      break;
    case MediumKind::vacuum:
      break;
  }
  f.finish();
  return m;
}

FieldSpec parse_field(const Json& j, const std::string& path) {
  FieldSpec out;
  Fields f(j, path);
  const Json* cf = f.find("constant_F");
  const Json* pw = f.find("plane_wave");
  const Json* ff = f.find("frame_fields");
  if ((cf != nullptr) + (pw != nullptr) + (ff != nullptr) != 1) {
    throw ConfigError(path,
                      "give exactly one of constant_F, plane_wave, frame_fields");
  }
  if (cf) {
    out.kind = FieldSpec::Kind::constant_F;
    out.constant_F = fixed<6>(*cf, f.path("constant_F"));
  } else if (pw) {
    out.kind = FieldSpec::Kind::plane_wave;
    Fields w(*pw, f.path("plane_wave"));
    auto& spec = out.plane_wave;
    if (const Json* a = w.find("amplitude")) spec.amplitude = number(*a, w.path("amplitude"));
    if (const Json* n = w.find("propagation")) spec.propagation = direction(*n, w.path("propagation"));
    if (const Json* p = w.find("polarization")) spec.polarization = direction(*p, w.path("polarization"));
    if (const Json* o = w.find("omega")) spec.omega = number(*o, w.path("omega"));
    w.finish();
  } else {
    out.kind = FieldSpec::Kind::frame_fields;
    Fields w(*ff, f.path("frame_fields"));
    auto& spec = out.frame_fields;
    spec.e = fixed<3>(w.get("e"), w.path("e"));
    spec.b = fixed<3>(w.get("b"), w.path("b"));
    if (const Json* fr = w.find("frame")) {
      if (fr->is_string() && fr->get<std::string>() == "medium") {
        spec.medium_frame = true;
      } else {
        spec.medium_frame = false;
        spec.velocity = velocity_value(*fr, w.path("frame"));
      }
    }
    w.finish();
  }
  f.finish();
  return out;
}

}  // namespace

ScenarioConfig parse_config(const Json& doc) {
  ScenarioConfig c;
  Fields f(doc, "");
  const std::string schema = string(f.get("schema"), "schema");
  if (schema != kConfigSchema) {
    throw ConfigError("schema", "unsupported schema '" + schema + "' (expected " +
                                    kConfigSchema + ")");
  }
  if (const Json* k = f.find("constants")) {
    c.constants = string(*k, "constants");
    if (c.constants != "natural" && c.constants != "si") {
      throw ConfigError("constants", "expected natural or si");
    }
  }
  if (const Json* m = f.find("metric")) c.metric = parse_metric(*m, "metric");
  if (const Json* m = f.find("medium")) c.medium = parse_medium(*m, "medium");
  c.field = parse_field(f.get("field"), "field");
  if (const Json* obs = f.find("observers")) {
    if (!obs->is_array()) throw ConfigError("observers", "expected a list");
    for (std::size_t i = 0; i < obs->size(); ++i) {
      c.observers.push_back(velocity_value((*obs)[i], index_path("observers", i)));
    }
  }
  if (const Json* p = f.find("point")) c.point = fixed<4>(*p, "point");
  if (const Json* o = f.find("oracle")) {
    Fields of(*o, "oracle");
    if (const Json* s = of.find("step")) c.oracle.step = number(*s, "oracle.step");
    if (const Json* e = of.find("extrapolation")) {
      if (!e->is_number_integer()) throw ConfigError("oracle.extrapolation", "expected 1 or 2");
      c.oracle.extrapolation = e->get<int>();
    }
    if (const Json* d = of.find("directions")) {
      if (!d->is_array()) throw ConfigError("oracle.directions", "expected a list of 4x4 matrices");
      for (std::size_t i = 0; i < d->size(); ++i) {
        c.oracle.directions.push_back(square<4>((*d)[i], index_path("oracle.directions", i)));
      }
    }
    of.finish();
  }
  if (const Json* a = f.find("boost_axis")) {
    c.boost_axis = axis_index(string(*a, "boost_axis"), "boost_axis");
  }
  f.finish();
  return c;
}

ScenarioConfig parse_config_text(const std::string& text) {
  YAML::Node node;
  try {
    node = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError("", std::string("invalid YAML: ") + e.what());
  }
  return parse_config(yaml_to_json(node));
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (!is_json) return parse_config_text(buf.str());
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

Json to_json(const ScenarioConfig& c) {
  Json out = Json::object();
  out["schema"] = kConfigSchema;
  out["constants"] = c.constants;

  Json metric = Json::object();
  switch (c.metric.kind) {
    case MetricSpec::Kind::minkowski:
      metric["preset"] = "minkowski";
      break;
    case MetricSpec::Kind::diagonal: {
      Json d = Json::array();
      for (int i = 0; i < 4; ++i) d.push_back(c.metric.components(i, i));
      metric["diagonal"] = d;
      break;
    }
    case MetricSpec::Kind::components:
      metric["components"] = matrix_json(c.metric.components);
      break;
  }
  out["metric"] = metric;

  Json medium = Json::object();
  medium["kind"] = std::string(to_string(c.medium.kind));
  if (c.medium.kind != MediumKind::vacuum) {
    medium.update(velocity_json(c.medium.velocity));
  }
  if (c.medium.kind == MediumKind::isotropic) {
    medium["epsilon"] = c.medium.epsilon;
    medium["mu"] = c.medium.mu;
  }
  for (const auto& [key, z] :
       {std::pair{"zeta_de", &c.medium.zeta_de}, std::pair{"zeta_db", &c.medium.zeta_db},
        std::pair{"zeta_he", &c.medium.zeta_he}, std::pair{"zeta_hb", &c.medium.zeta_hb}}) {
    if (*z) medium[key] = matrix_json(**z);
  }
  out["medium"] = medium;

  Json field = Json::object();
  switch (c.field.kind) {
    case FieldSpec::Kind::constant_F:
      field["constant_F"] = c.field.constant_F;
      break;
    case FieldSpec::Kind::plane_wave: {
      const auto& w = c.field.plane_wave;
      field["plane_wave"] = {{"amplitude", w.amplitude},
                             {"propagation", w.propagation},
                             {"polarization", w.polarization},
                             {"omega", w.omega}};
      break;
    }
    case FieldSpec::Kind::frame_fields: {
      const auto& w = c.field.frame_fields;
      Json ff = {{"e", w.e}, {"b", w.b}};
      ff["frame"] = w.medium_frame ? Json("medium") : velocity_json(w.velocity);
      field["frame_fields"] = ff;
      break;
    }
  }
  out["field"] = field;

  Json observers = Json::array();
  for (const auto& o : c.observers) observers.push_back(velocity_json(o));
  out["observers"] = observers;
  out["point"] = c.point;
  out["oracle"] = {{"step", c.oracle.step}, {"extrapolation", c.oracle.extrapolation}};
  if (!c.oracle.directions.empty()) {
    Json dirs = Json::array();
    for (const Matrix4& d : c.oracle.directions) dirs.push_back(matrix_json(d));
    out["oracle"]["directions"] = dirs;
  }
  out["boost_axis"] = std::string(1, "xyz"[c.boost_axis - 1]);
  return out;
}

Vector4 resolve_velocity(const VelocitySpec& v, const Metric& g,
                         const Constants& k, const std::string& path) {
  try {
    if (v.kind == VelocitySpec::Kind::three) {
      return Observer::from_three_velocity({v.values[0], v.values[1], v.values[2]}, g, k).u();
    }
    return Observer::normalised(Vector4(v.values[0], v.values[1], v.values[2], v.values[3]), g)
        .u();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

Scenario resolve(const ScenarioConfig& c) {
  const Constants k = c.constants == "si" ? Constants::si() : Constants::natural();
  const Metric g = [&] {
    try {
      return Metric(c.metric.components);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("metric", e.what());
    }
  }();

  const MediumSpec& ms = c.medium;
  const ConstitutiveModel medium = [&] {
    if (ms.kind == MediumKind::vacuum) return ConstitutiveModel::vacuum(k);
    const Vector4 v = resolve_velocity(ms.velocity, g, k, "medium.velocity");
    try {
      const auto map = [&](const std::optional<Matrix3>& a) {
        return SpatialLinearMap::from_frame(*a, v, g);
      };
      switch (ms.kind) {
        case MediumKind::isotropic:
          return ConstitutiveModel::isotropic(ms.epsilon, ms.mu, v, g, k);
        case MediumKind::anisotropic:
          return ConstitutiveModel::anisotropic(map(ms.zeta_de), map(ms.zeta_hb), g, k);
        case MediumKind::magneto_electric:
        case MediumKind::vacuum:
          break;
      }
      return ConstitutiveModel::magneto_electric(map(ms.zeta_de), map(ms.zeta_db),
                                                 map(ms.zeta_he), map(ms.zeta_hb), g, k);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("medium", e.what());
    }
  }();

  const FormField field = [&] {
    switch (c.field.kind) {
      case FieldSpec::Kind::constant_F:
        return FormField::constant(KForm(2, std::span<const double>(c.field.constant_F)));
      case FieldSpec::Kind::plane_wave: {
        const auto& s = c.field.plane_wave;
        PlaneWave w;
        w.amplitude = s.amplitude;
        w.propagation = s.propagation;
        w.polarization = s.polarization;
        w.omega = s.omega;
        try {
          return w.field(k);
        } catch (const std::invalid_argument& e) {
          throw ConfigError("field.plane_wave", e.what());
        }
      }
      case FieldSpec::Kind::frame_fields:
        break;
    }
    const auto& s = c.field.frame_fields;
    const Vector4 u =
        s.medium_frame
            ? (medium.has_velocity() ? medium.velocity() : Observer::at_rest(g).u())
            : resolve_velocity(s.velocity, g, k, "field.frame_fields.frame");
    const Observer obs(u, g);
    const auto frame = obs.frame();
    KForm e(1), b(1);
    for (std::size_t j = 0; j < 3; ++j) {
      const KForm theta = flat(frame[j + 1], g);
      e += s.e[j] * theta;
      b += s.b[j] * theta;
    }
    return FormField::constant(reconstruct_F(e, b, obs, k));
  }();

  std::vector<Observer> observers;
  if (c.observers.empty()) observers.push_back(Observer::at_rest(g));
  for (std::size_t i = 0; i < c.observers.size(); ++i) {
    observers.emplace_back(
        resolve_velocity(c.observers[i], g, k, index_path("observers", i)), g);
  }

  VariationSpec variation;
  variation.step = c.oracle.step;
  variation.extrapolation = c.oracle.extrapolation;
  variation.directions = c.oracle.directions;
  try {
    variation.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("oracle", e.what());
  }

  return {k, g, medium, field, observers, c.point, variation};
}

}  // namespace covem
