#include "covem/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace covem {

namespace {

constexpr double kRoundTripTolerance = 1e-12;
constexpr double kGapTolerance = 1e-12;
constexpr double kVacuumGapTolerance = 1e-13;
constexpr double kComovingTolerance = 1e-12;
constexpr double kOracleTolerance = 1e-6;
constexpr double kNormalisationTolerance = 1e-9;

Json frame_components(const KForm& a, const Observer& obs) {
  const auto frame = obs.frame();
  return Json::array({a.as_vector().dot(frame[1]), a.as_vector().dot(frame[2]),
                      a.as_vector().dot(frame[3])});
}

Json constants_json(const Constants& k) {
  return {{"c", k.c()}, {"eps0", k.eps0()}, {"mu0", k.mu0()}};
}

double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Report cmd_decompose(const ScenarioConfig& config) {
  const Scenario sc = resolve(config);
  const Constants& k = sc.constants;
  const Metric& g = sc.metric;
  const KForm f = sc.field_at_point();
  const KForm g2 = apply_Z(sc.medium, f, g);

  Report r;
  r.command = "decompose";
  r.config = to_json(config);
  r.results["constants"] = constants_json(k);
  r.results["point"] = sc.point;
  r.results["F"] = to_json(f);
  r.results["G"] = to_json(g2);
  Json observers = Json::array();
  for (std::size_t i = 0; i < sc.observers.size(); ++i) {
    const Observer& obs = sc.observers[i];
    const FrameFields ff = frame_fields(f, g2, obs, k);
    observers.push_back({{"four_velocity", to_json(obs.u())},
                         {"e", to_json(ff.e)},
                         {"b", to_json(ff.b)},
                         {"d", to_json(ff.d)},
                         {"h", to_json(ff.h)},
                         {"frame_components",
                          {{"e", frame_components(ff.e, obs)},
                           {"b", frame_components(ff.b, obs)},
                           {"d", frame_components(ff.d, obs)},
                           {"h", frame_components(ff.h, obs)}}}});
    const std::string prefix = "observer_" + std::to_string(i) + ".";
    r.add_check(prefix + "normalisation", std::abs(g(obs.u(), obs.u()) + 1.0),
                kNormalisationTolerance);
    r.add_check(prefix + "reconstruct_F",
                relative_difference(reconstruct_F(ff.e, ff.b, obs, k), f),
                kRoundTripTolerance);
    r.add_check(prefix + "reconstruct_G",
                relative_difference(reconstruct_G(ff.d, ff.h, obs, k), g2),
                kRoundTripTolerance);
  }
  r.results["observers"] = observers;
  return r;
}

Report cmd_stress(const ScenarioConfig& config,
                  const std::vector<std::string>& tensors) {
  for (const std::string& t : tensors) {
    if (std::find(kTensorNames.begin(), kTensorNames.end(), t) == kTensorNames.end()) {
      throw std::invalid_argument(
          "unknown tensor '" + t +
          "' (abraham, minkowski_sym, comoving, oracle_v_tethered, "
          "oracle_metric_independent)");
    }
  }
  const Scenario sc = resolve(config);
  const Constants& k = sc.constants;
  const Metric& g = sc.metric;
  const ConstitutiveModel& m = sc.medium;
  const KForm f = sc.field_at_point();
  const KForm g2 = apply_Z(m, f, g);

  Report r;
  r.command = "stress";
  r.config = to_json(config);
  r.results["constants"] = constants_json(k);
  r.results["point"] = sc.point;
  r.results["F"] = to_json(f);
  r.results["G"] = to_json(g2);

  const auto sa = check_self_adjoint(as_rank4(m, g), g);
  r.results["self_adjoint"] = {{"violation", sa.max_violation},
                               {"self_adjoint", sa.self_adjoint}};

  const Matrix4 ab = abraham_T(f, m, g).components();
  const Matrix4 mi = minkowski_sym_T(f, g2, g).components();
  const Vector4 v = m.has_velocity() ? m.velocity() : Observer::at_rest(g).u();
  const KForm vt = flat(v, g);
  const KForm s = m.has_velocity() ? s_form(f, g2, v, g) : KForm(1);
  const Matrix4 half_vs = 0.5 * (outer(vt, s) + outer(s, vt));
  const Matrix4 gap = ab - mi;

  Json out = Json::object();
  std::vector<std::pair<std::string, Matrix4>> computed;
  for (const std::string& name : tensors) {
    Matrix4 t;
    if (name == "abraham") {
      t = ab;
    } else if (name == "minkowski_sym") {
      t = mi;
    } else if (name == "comoving") {
      const Observer medium_frame(v, g);
      t = comoving_T(frame_fields(f, g2, medium_frame, k)).components();
      r.add_check("comoving_equivalence", relative_difference(t, ab), kComovingTolerance);
    } else {
      const bool tethered = name == "oracle_v_tethered";
      const MetricResponse response =
          tethered ? MetricResponse::v_tethered : MetricResponse::metric_independent;
      const Matrix4& closed = tethered ? ab : mi;
      try {
        t = metric_variation_oracle(f, m, g, response, sc.variation).components();
        r.add_check(name + "_agreement", relative_difference(t, closed), kOracleTolerance);
      } catch (const OracleConditioningError& e) {
        r.add_check(name + "_agreement", std::nan(""), kOracleTolerance, e.what());
        continue;
      }
    }
    out[name] = {{"components", to_json(t)}, {"trace", (g.inverse() * t).trace()}};
    computed.emplace_back(name, t);
  }
  r.results["tensors"] = out;

  r.results["velocity"] = to_json(v);
  r.results["s"] = to_json(s);
  r.results["abraham_minus_minkowski"] = {{"components", to_json(gap)},
                                          {"max_abs", max_abs(gap)}};
  r.results["half_sym_V_s"] = to_json(half_vs);
  r.add_check("gap_equals_half_sym_V_s",
              relative_difference(gap, half_vs, max_abs(ab)), kGapTolerance);
  if (!m.has_velocity()) {
    r.add_check("vacuum_gap", relative_difference(ab, mi), kVacuumGapTolerance);
  }

  Json projections = Json::array();
  for (const Observer& obs : sc.observers) {
    Json p = {{"four_velocity", to_json(obs.u())}};
    for (const auto& [name, t] : computed) {
      const StressEnergy te(0.5 * (t + t.transpose()));
      p[name] = {{"energy_density", energy_density(te, obs)},
                 {"momentum_density", to_json(momentum_density(te, obs))}};
    }
    projections.push_back(p);
  }
  r.results["observers"] = projections;
  return r;
}

std::vector<double> parse_beta_list(const std::string& text) {
  const auto number = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double x = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() ||
        !std::isfinite(x)) {
      throw std::invalid_argument("--beta: cannot parse '" + std::string(s) + "'");
    }
    return x;
  };
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto a = text.find(':');
    const auto b = text.find(':', a + 1);
    const std::string_view sv(text);
    const double start = number(sv.substr(0, a));
    const double stop = number(sv.substr(a + 1, b - a - 1));
    const double step = number(sv.substr(b + 1));
    if (!(step > 0.0) || stop < start) {
      throw std::invalid_argument("--beta: need start <= stop and step > 0");
    }
    const double count = (stop - start) / step;
    if (count > 100000) throw std::invalid_argument("--beta: too many points");
    const auto n = static_cast<long>(std::floor(count + 1e-9));
    // land exactly on stop when it lies on the grid
    const bool exact = n > 0 && std::abs(count - static_cast<double>(n)) <= 1e-9;
    for (long i = 0; i <= n; ++i) {
      const double t = static_cast<double>(i);
      out.push_back(exact ? start + (stop - start) * t / static_cast<double>(n)
                          : start + t * step);
    }
  } else {
    std::string_view sv(text);
    while (true) {
      const auto comma = sv.find(',');
      out.push_back(number(sv.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      sv.remove_prefix(comma + 1);
    }
  }
  for (double beta : out) {
    if (!(std::abs(beta) < 1.0)) {
      throw std::invalid_argument("--beta: |beta| must be below 1");
    }
  }
  return out;
}

Report cmd_boost_zeta(const ScenarioConfig& config,
                      const std::vector<double>& betas) {
  const Matrix4 eta = Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
  if (config.metric.components != eta) {
    throw ConfigError("metric",
                      "boost-zeta needs the Minkowski metric: a boost is a global "
                      "frame change only in flat spacetime");
  }
  const Scenario sc = resolve(config);
  const Constants& k = sc.constants;
  const Metric& g = sc.metric;
  const ConstitutiveModel& m = sc.medium;
  const Vector4 v = m.has_velocity() ? m.velocity() : Observer::at_rest(g).u();
  const Vector4 leg = orthonormal_frame(v, g)[static_cast<std::size_t>(config.boost_axis)];
  const ConstitutiveTensor zt = as_rank4(m, g);

  Report r;
  r.command = "boost-zeta";
  r.config = to_json(config);
  Table table;
  table.header.push_back("beta");
  const char* block_names[] = {"de", "db", "he", "hb"};
  for (const char* b : block_names)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        table.header.push_back(std::string(b) + "_" + std::to_string(i) + std::to_string(j));

  Json rows = Json::array();
  bool finite = true;
  for (double beta : betas) {
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    const Observer obs(gamma * (v + beta * leg), g);
    const auto blocks = frame_blocks(effective_zetas(zt, obs, k), obs);
    Json row = {{"beta", beta}, {"four_velocity", to_json(obs.u())}};
    std::vector<Json> cells{beta};
    for (std::size_t b = 0; b < 4; ++b) {
      row[std::string("zeta_") + block_names[b]] = to_json(blocks[b]);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cells.push_back(blocks[b](i, j));
      finite = finite && blocks[b].allFinite();
    }
    row["cross_norm"] = std::sqrt(blocks[1].squaredNorm() + blocks[2].squaredNorm());
    rows.push_back(row);
    table.rows.push_back(std::move(cells));

    if (beta == 0.0) {
      const Observer rest(v, g);
      const auto own = frame_blocks(effective_zetas(zt, rest, k), rest);
      const std::array<Matrix4, 4> model = {m.zeta_de(), m.zeta_db(), m.zeta_he(),
                                            m.zeta_hb()};
      double worst = 0.0;
      double scale = 0.0;
      for (std::size_t b = 0; b < 4; ++b) scale = std::max(scale, own[b].cwiseAbs().maxCoeff());
      if (m.has_velocity()) {
        for (std::size_t b = 0; b < 4; ++b) {
          const Matrix3 want = SpatialLinearMap(model[b], v, g).frame_components(g);
          worst = std::max(worst, (blocks[b] - want).cwiseAbs().maxCoeff() / scale);
        }
      } else {
        const Matrix3 id = Matrix3::Identity();
        const Matrix3 want[4] = {k.eps0() * id, Matrix3::Zero(), Matrix3::Zero(), id / k.mu0()};
        for (std::size_t b = 0; b < 4; ++b) {
          worst = std::max(worst, (blocks[b] - want[b]).cwiseAbs().maxCoeff() / scale);
        }
      }
      r.add_check("beta_0_matches_comoving", worst, kRoundTripTolerance);
    }
  }
  r.results["axis"] = std::string(1, "xyz"[config.boost_axis - 1]);
  r.results["rows"] = rows;
  r.add_check("finite", finite ? 0.0 : std::nan(""), 0.0);
  r.table = std::move(table);
  return r;
}

}  // namespace covem
