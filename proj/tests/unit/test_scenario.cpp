#include "covem/commands.hpp"
#include "covem/variation.hpp"
#include "covem/verify.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>

using namespace covem;

namespace {

const char* kVacuum = R"(
schema: covariant-em/1
constants: natural
medium:
  kind: vacuum
field:
  constant_F: [0.5, 0.0, 0.0, 0.0, 0.0, 1.0]
observers:
  - rest
  - velocity: [0.6, 0.0, 0.0]
)";

const char* kMagnetoElectric = R"(
schema: covariant-em/1
metric:
  diagonal: [-1.0, 1.2, 0.9, 1.0]
medium:
  kind: magneto_electric
  velocity: [0.2, -0.1, 0.05]
  zeta_de: [[2.0, 0.1, 0.0], [0.1, 1.5, 0.0], [0.0, 0.0, 1.8]]
  zeta_db: [[0.0, 0.2, 0.0], [-0.1, 0.0, 0.1], [0.0, 0.3, 0.0]]
  zeta_hb: [[0.8, 0.0, 0.1], [0.0, 0.9, 0.0], [0.1, 0.0, 0.7]]
field:
  constant_F: [0.3, -0.2, 0.5, 0.4, 0.1, -0.6]
point: [0.1, 0.2, 0.3, 0.4]
)";

std::string config_error_path(const std::string& text) {
  try {
    resolve(parse_config_text(text));
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

const Check& find_check(const Report& r, const std::string& name) {
  for (const Check& c : r.checks) {
    if (c.name == name) return c;
  }
  throw std::logic_error("no check " + name);
}

}  // namespace

TEST_CASE("config parsing and canonical echo") {
  const ScenarioConfig c = parse_config_text(kMagnetoElectric);
  CHECK(c.constants == "natural");
  CHECK(c.metric.kind == MetricSpec::Kind::diagonal);
  CHECK(c.medium.kind == MediumKind::magneto_electric);
  REQUIRE(c.medium.zeta_he);
  CHECK(*c.medium.zeta_he == Matrix3(-c.medium.zeta_db->transpose()));
  const Json echo = to_json(c);
  CHECK(echo["schema"] == kConfigSchema);
  // the echo re-parses to the same config
  CHECK(to_json(parse_config(echo)) == echo);
  CHECK(to_json(parse_config_text(echo.dump())) == echo);
  const Json vac = to_json(parse_config_text(kVacuum));
  CHECK(to_json(parse_config(vac)) == vac);
  CHECK(vac["observers"].size() == 2);
}

TEST_CASE("config errors carry the offending path") {
  CHECK(config_error_path(R"(
schema: covariant-em/1
field:
  constant_F: [1, 0, 0, 0, 0, 0]
  plane_wave: {omega: 1.0}
)") == "field");
  CHECK(config_error_path("schema: covariant-em/2\nfield: {constant_F: [1,0,0,0,0,0]}") ==
        "schema");
  CHECK(config_error_path(
            "schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0,0]}\ncolour: red") ==
        "colour");
  CHECK(config_error_path(
            "schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0]}") == "field.constant_F");
  CHECK(config_error_path("schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0,0]}\n"
                          "observers: [{velocity: [1.0, 0, 0]}]") == "observers[0]");
  CHECK(config_error_path("schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0,0]}\n"
                          "medium: {kind: isotropic, epsilon: 2}") == "medium.mu");
  CHECK(config_error_path("schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0,0]}\n"
                          "metric: {diagonal: [1, 1, 1, 1]}") == "metric");
  CHECK(config_error_path("schema: covariant-em/1\nschema: covariant-em/1\n"
                          "field: {constant_F: [1,0,0,0,0,0]}") == "schema");
  CHECK(config_error_path("schema: covariant-em/1\nfield: {constant_F: [1,0,0,0,0,'x']}") ==
        "field.constant_F[5]");
  CHECK(config_error_path("schema: covariant-em/1\nfield: [") == "");
}

TEST_CASE("velocities are normalised") {
  const ScenarioConfig c = parse_config_text(kMagnetoElectric);
  const Scenario sc = resolve(c);
  const Vector4 v = sc.medium.velocity();
  CHECK(std::abs(sc.metric(v, v) + 1.0) < 1e-9);
  CHECK(v(0) > 0.0);
  CHECK(v(1) / v(0) == doctest::Approx(0.2));
  CHECK(v(2) / v(0) == doctest::Approx(-0.1));
}

TEST_CASE("decompose passes library values through") {
  const ScenarioConfig c = parse_config_text(kVacuum);
  const Report r = cmd_decompose(c);
  CHECK(r.ok());
  const Scenario sc = resolve(c);
  const auto eb = decompose_F(sc.field_at_point(), Observer::at_rest(sc.metric), sc.constants);
  const Json& rest = r.results["observers"][0];
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rest["e"][i].get<double>() == eb.e[i]);
    CHECK(rest["b"][i].get<double>() == eb.b[i]);
  }
  // F = 0.5 dx0^dx1 + dx2^dx3: e = i_U F = 0.5 dx1 at rest
  CHECK(rest["e"][1].get<double>() == 0.5);
}

TEST_CASE("plane-wave scenario is null in the rest frame") {
  for (const char* axes : {"propagation: x\n    polarization: y",
                           "propagation: [1, 2, 2]\n    polarization: [2, 1, -2]"}) {
    const std::string text = std::string(R"(
schema: covariant-em/1
field:
  plane_wave:
    amplitude: 1.5
    )") + axes + R"(
    omega: 2.0
point: [0.3, 0.1, -0.2, 0.4]
)";
    const Report r = cmd_decompose(parse_config_text(text));
    const Json& fc = r.results["observers"][0]["frame_components"];
    double e2 = 0.0, b2 = 0.0, eb = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double e = fc["e"][i].get<double>();
      const double b = fc["b"][i].get<double>();
      e2 += e * e;
      b2 += b * b;
      eb += e * b;
    }
    REQUIRE(e2 > 0.0);
    CHECK(std::abs(std::sqrt(e2) - std::sqrt(b2)) <= 1e-12 * std::sqrt(e2));
    CHECK(std::abs(eb) <= 1e-12 * e2);
  }
}

TEST_CASE("stress report") {
  const Report me = cmd_stress(parse_config_text(kMagnetoElectric),
                               {"abraham", "minkowski_sym", "comoving"});
  CHECK(me.ok());
  CHECK(find_check(me, "gap_equals_half_sym_V_s").violation <= 1e-12);
  CHECK(me.results["abraham_minus_minkowski"]["max_abs"].get<double>() > 1e-3);

  const Report vac = cmd_stress(parse_config_text(kVacuum), {"abraham", "minkowski_sym"});
  CHECK(vac.ok());
  CHECK(vac.results["abraham_minus_minkowski"]["max_abs"].get<double>() <= 1e-13);

  const char* rest = R"(
schema: covariant-em/1
medium: {kind: isotropic, epsilon: 2.0, mu: 1.5, velocity: [0, 0, 0]}
field: {frame_fields: {e: [1, 0, 0], b: [0, 0.5, 0]}}
)";
  const Report oracle =
      cmd_stress(parse_config_text(rest), {"oracle_v_tethered", "oracle_metric_independent"});
  CHECK(oracle.ok());
  CHECK(find_check(oracle, "oracle_v_tethered_agreement").violation <= 1e-6);
  CHECK(find_check(oracle, "oracle_metric_independent_agreement").violation <= 1e-6);

  CHECK_THROWS_AS(cmd_stress(parse_config_text(kVacuum), {"belinfante"}), std::invalid_argument);
}

TEST_CASE("oracle conditioning failure becomes a failed check") {
  // the coordinate directions with the last one replaced by a near-copy of
  // the one before it
  std::vector<Matrix4> d = coordinate_metric_directions();
  d[9] = d[8];
  d[9](0, 0) = 1e-9;
  std::string dirs;
  for (const Matrix4& m : d) dirs += std::string(dirs.empty() ? "" : ", ") + to_json(m).dump();
  const std::string text = "schema: covariant-em/1\n"
                           "field: {constant_F: [1, 0, 0, 0, 0, 1]}\n"
                           "oracle: {directions: [" + dirs + "]}\n";
  const ScenarioConfig c = parse_config_text(text);
  CHECK(c.oracle.directions.size() == 10);
  CHECK(to_json(parse_config(to_json(c))) == to_json(c));
  const Report r = cmd_stress(c, {"abraham", "oracle_v_tethered"});
  CHECK_FALSE(r.ok());
  const Check& failed = find_check(r, "oracle_v_tethered_agreement");
  CHECK_FALSE(failed.pass());
  CHECK(failed.detail.find("condition") != std::string::npos);
  CHECK(r.results["tensors"].contains("abraham"));
  CHECK_FALSE(r.results["tensors"].contains("oracle_v_tethered"));
}

TEST_CASE("boost-zeta") {
  const char* text = R"(
schema: covariant-em/1
medium: {kind: isotropic, epsilon: 2.0, mu: 1.0, velocity: [0, 0, 0]}
field: {constant_F: [1, 0, 0, 0, 0, 0]}
)";
  const Report r = cmd_boost_zeta(parse_config_text(text), {0.0, 0.3});
  CHECK(r.ok());
  REQUIRE(r.table);
  CHECK(r.table->header.size() == 37);
  CHECK(r.table->header[1] == "de_11");
  CHECK(r.table->header[36] == "hb_33");
  CHECK(r.table->rows.size() == 2);
  CHECK(r.results["rows"][0]["cross_norm"].get<double>() <= 1e-12);
  CHECK(r.results["rows"][1]["cross_norm"].get<double>() > 1e-3);
  CHECK(find_check(r, "beta_0_matches_comoving").violation <= 1e-12);

  const std::string csv = render_csv(r);
  CHECK(csv.rfind("beta,de_11,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  CHECK_THROWS_AS(cmd_boost_zeta(parse_config_text(kMagnetoElectric), {0.1}), ConfigError);
}

TEST_CASE("beta lists") {
  CHECK(parse_beta_list("0.1, 0.2,0.5") == std::vector<double>{0.1, 0.2, 0.5});
  CHECK(parse_beta_list("0:0.9:0.3") == std::vector<double>{0.0, 0.3, 0.6, 0.9});
  CHECK(parse_beta_list("0:0.5:0.2").size() == 3);
  CHECK(parse_beta_list("-0.5") == std::vector<double>{-0.5});
  CHECK_THROWS_AS(parse_beta_list("1.0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_beta_list("0.1,,0.2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_beta_list("0:0.5:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_beta_list("0.5:0:0.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_beta_list("abc"), std::invalid_argument);
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "demo";
  r.config = nullptr;
  r.results["name"] = "a,\"b\"";
  r.results["values"] = Json::array({0.1, 1.0 / 3.0, 1e-300});
  r.add_check("small", 1e-13, 1e-12);
  r.add_check("nan", std::nan(""), 1.0, "diverged");

  CHECK_FALSE(r.ok());
  const Json j = Json::parse(render_json(r));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["summary"]["status"] == "fail");
  CHECK(j["checks"][1]["violation"].is_null());
  CHECK(j["checks"][1]["detail"] == "diverged");
  // shortest round-trip floats
  CHECK(render_json(r).find("0.3333333333333333") != std::string::npos);
  CHECK(render_json(r) == render_json(r));

  const std::string csv = render_csv(r);
  CHECK(csv.rfind("path,value\r\n", 0) == 0);
  CHECK(csv.find("name,\"a,\"\"b\"\"\"\r\n") != std::string::npos);

  const std::string plain = render_table(r, false);
  CHECK(plain.find("FAIL") != std::string::npos);
  CHECK(plain.find("\033[") == std::string::npos);
  CHECK(render_table(r, true).find("\033[31mFAIL\033[0m") != std::string::npos);

  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
}

TEST_CASE("verify suites") {
  CHECK_THROWS_AS(cmd_verify("nonsense", 1), std::invalid_argument);
  const Report hodge = cmd_verify("hodge", 7);
  CHECK(hodge.ok());
  for (const Check& c : hodge.checks) CHECK(c.name.rfind("hodge.", 0) == 0);
  CHECK(render_json(hodge) == render_json(cmd_verify("hodge", 7)));
  // suites draw from their own streams: running alone or within "all" agrees
  const Report all = cmd_verify("all", 7);
  CHECK(all.ok());
  for (const Check& c : hodge.checks) {
    CHECK(find_check(all, c.name).violation == c.violation);
  }
  CHECK(render_json(cmd_verify("hodge", 8)) != render_json(hodge));
}
