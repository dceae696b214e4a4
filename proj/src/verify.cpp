#include "covem/verify.hpp"

#include "covem/constitutive.hpp"
#include "covem/em_fields.hpp"
#include "covem/sampling.hpp"
#include "covem/stress_energy.hpp"
#include "covem/variation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace covem {

namespace {

// Worst violation seen; NaN is sticky so a broken sample cannot be hidden.
class Worst {
 public:
  void add(double x) {
    if (std::isnan(v_)) return;
    if (std::isnan(x) || x > v_) v_ = x;
  }
  double value() const { return v_; }

 private:
  double v_ = 0.0;
};

struct Suite {
  Report& report;
  std::string name;
  Json samples = Json::object();

  void check(const std::string& what, const Worst& w, double threshold,
             std::size_t n) {
    report.add_check(name + "." + what, w.value(), threshold);
    samples[what] = n;
  }
};

const MediumKind kAllMedia[] = {MediumKind::vacuum, MediumKind::isotropic,
                                MediumKind::anisotropic,
                                MediumKind::magneto_electric};

const Constants kConstantSets[] = {Constants::natural(), Constants(3.0, 0.5)};

double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

double asymmetry(const Matrix4& t) {
  const double s = max_abs(t);
  return s == 0.0 ? 0.0 : max_abs(t - t.transpose()) / s;
}

Matrix4 boost(double beta, int axis) {
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  Matrix4 l = Matrix4::Identity();
  l(0, 0) = l(axis, axis) = gamma;
  l(0, axis) = l(axis, 0) = -gamma * beta;
  return l;
}

Vector4 random_vector(Sampler& s) {
  return {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
}

KForm transform_form(const KForm& a, const Matrix4& linv) {
  if (a.degree() == 1) return KForm::from_vector(linv.transpose() * a.as_vector());
  return two_form(linv.transpose() * to_matrix(a) * linv);
}

// ---------------------------------------------------------------------------

void suite_hodge(Sampler& s, Suite& out) {
  constexpr int n = 1000;
  for (int k = 0; k <= 4; ++k) {
    Worst w;
    const double sign = (k * (4 - k)) % 2 == 0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
      const Metric g = s.lorentzian_metric();
      const KForm a = s.form(k);
      w.add(relative_difference(hodge(hodge(a, g), g), sign * a));
    }
    out.check("involution_k" + std::to_string(k), w, 1e-12, n);
  }

  Worst pairing_symmetry;
  Worst pairing_value;
  std::size_t pairs = 0;
  for (int k = 0; k <= 4; ++k) {
    for (int i = 0; i < 100; ++i, ++pairs) {
      const Metric g = s.lorentzian_metric();
      const KForm a = s.form(k);
      const KForm b = s.form(k);
      const KForm ab = wedge(a, hodge(b, g));
      const KForm ba = wedge(b, hodge(a, g));
      const double scale = a.norm() * b.norm() * g.sqrt_abs_det();
      pairing_symmetry.add(relative_difference(ab, ba, scale));
      const double want = inner(a, b, g) * g.sqrt_abs_det();
      pairing_value.add(std::abs(ab.value() - want) / std::max({scale, std::abs(want), 1e-300}));
    }
  }
  out.check("pairing_symmetry", pairing_symmetry, 1e-12, pairs);
  out.check("pairing_equals_inner_volume", pairing_value, 1e-11, pairs);

  Worst orientation;
  for (int i = 0; i < 100; ++i) {
    const Metric g = s.lorentzian_metric();
    orientation.add(relative_difference(hodge(KForm::scalar(1.0), g),
                                        g.sqrt_abs_det() * KForm::basis({0, 1, 2, 3})));
  }
  out.check("orientation_star_one", orientation, 1e-12, 100);

  Worst frozen;
  const Metric eta = Metric::minkowski();
  frozen.add(relative_difference(hodge(KForm::basis({0, 1}), eta), -KForm::basis({2, 3})));
  frozen.add(relative_difference(hodge(KForm::basis({2, 3}), eta), KForm::basis({0, 1})));
  frozen.add(relative_difference(hodge(KForm::basis({0}), eta), -KForm::basis({1, 2, 3})));
  out.check("minkowski_reference_values", frozen, 1e-15, 3);

  Worst graded;
  Worst leibniz;
  std::size_t products = 0;
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; p + q <= 4; ++q) {
      for (int i = 0; i < 40; ++i, ++products) {
        const KForm a = s.form(p);
        const KForm b = s.form(q);
        const double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
        graded.add(relative_difference(wedge(a, b), sign * wedge(b, a), a.norm() * b.norm()));
        if (p == 0 || q == 0) continue;
        const Vector4 x = random_vector(s);
        const KForm lhs = interior(x, wedge(a, b));
        const double lsign = p % 2 == 0 ? 1.0 : -1.0;
        const KForm rhs = wedge(interior(x, a), b) + lsign * wedge(a, interior(x, b));
        leibniz.add(relative_difference(lhs, rhs, a.norm() * b.norm() * x.norm()));
      }
    }
  }
  out.check("graded_commutativity", graded, 1e-12, products);
  out.check("interior_leibniz", leibniz, 1e-12, products);

  Worst antisymmetry;
  for (int k = 2; k <= 4; ++k) {
    for (int i = 0; i < 50; ++i) {
      const KForm a = s.form(k);
      const std::vector<double> full = expand(a);
      std::size_t stride = 1;
      for (int slot = k - 1; slot > 0; --slot, stride *= 4) {
        // swap index slot-1 and slot in every flat position
        for (std::size_t pos = 0; pos < full.size(); ++pos) {
          const std::size_t lo = (pos / stride) % 4;
          const std::size_t hi = (pos / (stride * 4)) % 4;
          const std::size_t swapped = pos - lo * stride - hi * stride * 4 +
                                      hi * stride + lo * stride * 4;
          antisymmetry.add(std::abs(full[pos] + full[swapped]));
        }
      }
    }
  }
  out.check("expanded_antisymmetry", antisymmetry, 0.0, 150);

  Worst dd;
  constexpr int fields = 20;
  for (int i = 0; i < fields; ++i) {
    std::array<std::array<double, 15>, 4> c{};
    for (auto& row : c)
      for (double& x : row) x = s.uniform(-1, 1);
    const FormField f(1, [c](const Coordinates& x) {
      KForm w(1);
      for (std::size_t a = 0; a < 4; ++a) {
        double v = c[a][0];
        std::size_t n = 1;
        for (std::size_t b = 0; b < 4; ++b) v += c[a][n++] * x[b];
        for (std::size_t b = 0; b < 4; ++b)
          for (std::size_t e = b; e < 4; ++e) v += c[a][n++] * x[b] * x[e] * (b == e ? 1.0 : 0.5);
        w[a] = v;
      }
      return w;
    });
    const Coordinates x{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};
    dd.add(ext_deriv_fd(ext_deriv_field(f, 1e-3), x, 1e-3).max_abs());
  }
  out.check("d_of_d", dd, 1e-6, fields);
}

// ---------------------------------------------------------------------------

void suite_fields(Sampler& s, Suite& out) {
  Worst round_f, round_g, round_eb, spatial, linear, norm;
  std::size_t n = 0;
  for (const Constants& k : {Constants::natural(), Constants(3.0, 0.5), Constants::si()}) {
    for (int i = 0; i < 400; ++i, ++n) {
      const Metric g = s.lorentzian_metric();
      const Observer obs(s.velocity(g), g);
      const KForm f = s.form(2);
      const KForm g2 = s.form(2);
      const FrameFields ff = frame_fields(f, g2, obs, k);
      round_f.add(relative_difference(reconstruct_F(ff.e, ff.b, obs, k), f));
      round_g.add(relative_difference(reconstruct_G(ff.d, ff.h, obs, k), g2));
      const double scale = obs.u().cwiseAbs().sum();
      for (const KForm* a : {&ff.e, &ff.b, &ff.d, &ff.h}) {
        if (a->max_abs() > 0.0)
          spatial.add(std::abs(a->as_vector().dot(obs.u())) / (a->max_abs() * scale));
      }

      const KForm e = s.spatial_one_form(obs.u(), g);
      const KForm b = s.spatial_one_form(obs.u(), g, 1.0 / k.c());
      const ElectricMagnetic eb = decompose_F(reconstruct_F(e, b, obs, k), obs, k);
      round_eb.add(std::max(relative_difference(eb.e, e), relative_difference(eb.b, b)));

      const double alpha = s.uniform(-2, 2);
      const double beta = s.uniform(-2, 2);
      const KForm f2 = s.form(2);
      const ElectricMagnetic one = decompose_F(f, obs, k);
      const ElectricMagnetic two = decompose_F(f2, obs, k);
      const ElectricMagnetic sum = decompose_F(alpha * f + beta * f2, obs, k);
      linear.add(std::max(relative_difference(sum.e, alpha * one.e + beta * two.e),
                          relative_difference(sum.b, alpha * one.b + beta * two.b)));

      std::array<double, 3> v{};
      do {
        for (double& x : v) x = s.uniform(-0.5, 0.5) * k.c();
      } while (!(g(Vector4(1.0, v[0] / k.c(), v[1] / k.c(), v[2] / k.c()),
                   Vector4(1.0, v[0] / k.c(), v[1] / k.c(), v[2] / k.c())) < -0.05));
      const Observer moving = Observer::from_three_velocity(v, g, k);
      norm.add(std::abs(g(moving.u(), moving.u()) + 1.0));
    }
  }
  out.check("reconstruct_decompose_F", round_f, 1e-12, n);
  out.check("reconstruct_decompose_G", round_g, 1e-12, n);
  out.check("decompose_reconstruct_eb", round_eb, 1e-12, n);
  out.check("frame_fields_spatial", spatial, 1e-12, n);
  out.check("decompose_linearity", linear, 1e-12, n);
  out.check("velocity_normalisation", norm, 1e-9, n);

  Worst covariance;
  const Metric eta = Metric::minkowski();
  const Constants k = Constants::natural();
  constexpr int boosts = 300;
  for (int i = 0; i < boosts; ++i) {
    const Matrix4 l = boost(s.uniform(-0.9, 0.9), 1 + i % 3);
    const Matrix4 linv = l.inverse();
    const Observer obs(s.velocity(eta), eta);
    const KForm f = s.form(2);
    const ElectricMagnetic eb = decompose_F(f, obs, k);
    const ElectricMagnetic moved = decompose_F(transform_form(f, linv), Observer(l * obs.u(), eta), k);
    covariance.add(std::max(relative_difference(moved.e, transform_form(eb.e, linv)),
                            relative_difference(moved.b, transform_form(eb.b, linv))));
  }
  out.check("boost_covariance", covariance, 1e-12, boosts);
}

// ---------------------------------------------------------------------------

void suite_constitutive(Sampler& s, Suite& out) {
  for (MediumKind kind : kAllMedia) {
    Worst comoving, linear, rank4, adjoint;
    std::size_t n = 0;
    for (const Constants& k : kConstantSets) {
      for (int i = 0; i < 250; ++i, ++n) {
        const Metric g = s.lorentzian_metric();
        const ConstitutiveModel m = s.model(kind, g, k);
        const Observer obs(m.has_velocity() ? m.velocity() : s.velocity(g), g);
        const KForm f = s.form(2);
        const KForm g2 = apply_Z(m, f, g);
        const ElectricMagnetic eb = decompose_F(f, obs, k);
        const DisplacementMagnetic want = comoving_dh(m, eb.e, eb.b);
        const DisplacementMagnetic got = decompose_G(g2, obs, k);
        comoving.add(std::max(relative_difference(got.d, want.d),
                              relative_difference(got.h, want.h)));

        const KForm f2 = s.form(2);
        const double alpha = s.uniform(-2, 2);
        const double beta = s.uniform(-2, 2);
        linear.add(relative_difference(apply_Z(m, alpha * f + beta * f2, g),
                                       alpha * g2 + beta * apply_Z(m, f2, g)));
        const ConstitutiveTensor zt = as_rank4(m, g);
        rank4.add(relative_difference(zt.apply(f), g2));
        adjoint.add(check_self_adjoint(zt, g).max_violation);
      }
    }
    const std::string tag(to_string(kind));
    out.check("comoving_consistency." + tag, comoving, 1e-12, n);
    out.check("apply_Z_linearity." + tag, linear, 1e-12, n);
    out.check("as_rank4_faithful." + tag, rank4, 1e-12, n);
    out.check("self_adjoint." + tag, adjoint, 1e-12, n);
  }

  Worst vacuum_frames;
  constexpr int frames = 200;
  for (int i = 0; i < frames; ++i) {
    const Constants& k = kConstantSets[i % 2];
    const Metric g = s.lorentzian_metric();
    const Observer obs(s.velocity(g), g);
    const auto blocks = frame_blocks(
        effective_zetas(as_rank4(ConstitutiveModel::vacuum(k), g), obs, k), obs);
    const Matrix3 id = Matrix3::Identity();
    const double de = (blocks[0] - k.eps0() * id).cwiseAbs().maxCoeff() / k.eps0();
    const double hb = (blocks[3] - id / k.mu0()).cwiseAbs().maxCoeff() * k.mu0();
    const double cross = std::max(blocks[1].cwiseAbs().maxCoeff(), blocks[2].cwiseAbs().maxCoeff()) /
                         std::sqrt(k.eps0() / k.mu0());
    vacuum_frames.add(std::max({de, hb, cross}));
  }
  out.check("vacuum_frame_independence", vacuum_frames, 1e-12, frames);

  // isotropic eps = 2, mu = 1 seen by observers boosted along x
  const Constants k = Constants::natural();
  const Metric eta = Metric::minkowski();
  const ConstitutiveTensor zt =
      as_rank4(ConstitutiveModel::isotropic(2.0, 1.0, Vector4::Unit(0), eta, k), eta);
  const auto cross_norm = [&](double beta) {
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    const Observer obs(Vector4(gamma, gamma * beta, 0, 0), eta);
    const auto b = frame_blocks(effective_zetas(zt, obs, k), obs);
    return std::sqrt(b[1].squaredNorm() + b[2].squaredNorm());
  };
  Worst at_rest;
  at_rest.add(cross_norm(0.0));
  out.check("isotropic_cross_blocks_at_rest", at_rest, 1e-12, 1);
  // cross blocks grow linearly from zero: slopes at 1e-3 and 1e-2 agree
  Worst onset;
  const double slope_small = cross_norm(1e-3) / 1e-3;
  const double slope_large = cross_norm(1e-2) / 1e-2;
  onset.add(std::abs(slope_small - slope_large) / slope_large);
  out.check("isotropic_cross_blocks_continuous", onset, 1e-3, 2);
  Worst growth;
  double prev = 0.0;
  for (double beta : {1e-3, 1e-2, 0.1, 0.3, 0.9}) {
    const double c = cross_norm(beta);
    growth.add(c > prev ? 0.0 : 1.0);
    prev = c;
  }
  out.check("isotropic_cross_blocks_increasing", growth, 0.0, 5);
  Worst nonzero;
  nonzero.add(1e-3 / cross_norm(0.3));
  out.check("isotropic_cross_blocks_nonzero_at_0.3", nonzero, 1.0, 1);
}

// ---------------------------------------------------------------------------

void suite_stress(Sampler& s, Suite& out) {
  for (MediumKind kind : kAllMedia) {
    Worst symmetric, equivalence, gap, energy, momentum;
    std::size_t n = 0;
    for (const Constants& k : kConstantSets) {
      for (int i = 0; i < 250; ++i, ++n) {
        const Metric g = s.lorentzian_metric();
        const ConstitutiveModel m = s.model(kind, g, k);
        const Vector4 v = m.has_velocity() ? m.velocity() : s.velocity(g);
        const Observer frame(v, g);
        const KForm f = s.form(2);
        const KForm g2 = apply_Z(m, f, g);
        const Matrix4 ab = abraham_T(f, m, g).components();
        const Matrix4 mi = minkowski_sym_T(f, g2, g).components();
        symmetric.add(std::max(asymmetry(ab), asymmetry(mi)));

        const FrameFields ff = frame_fields(f, g2, frame, k);
        const StressEnergy co = comoving_T(ff);
        equivalence.add(relative_difference(co.components(), ab));

        const KForm vt = flat(v, g);
        const KForm sf = s_form(f, g2, v, g);
        gap.add(relative_difference(ab - mi, 0.5 * (outer(vt, sf) + outer(sf, vt)), max_abs(ab)));

        const double want_energy = 0.5 * (inner(ff.e, ff.d, g) + inner(ff.h, ff.b, g));
        const double got_energy = energy_density(co, frame);
        energy.add(std::abs(got_energy - want_energy) /
                   std::max(std::abs(want_energy), max_abs(co.components())));
        const KForm want_p = poynting(ff.e, ff.h, v, g) / k.c();
        momentum.add(relative_difference(momentum_density(co, frame), want_p,
                                          max_abs(co.components())));
      }
    }
    const std::string tag(to_string(kind));
    out.check("symmetric." + tag, symmetric, 1e-12, n);
    out.check("comoving_equivalence." + tag, equivalence, 1e-12, n);
    out.check("difference_law." + tag, gap, 1e-12, n);
    out.check("comoving_energy." + tag, energy, 1e-12, n);
    out.check("comoving_momentum." + tag, momentum, 1e-12, n);
  }

  Worst vacuum_s, vacuum_gap;
  constexpr int vacua = 500;
  for (int i = 0; i < vacua; ++i) {
    const Constants& k = kConstantSets[i % 2];
    const Metric g = s.lorentzian_metric();
    const ConstitutiveModel m = ConstitutiveModel::vacuum(k);
    const Vector4 v = s.velocity(g);
    const KForm f = s.form(2);
    const KForm g2 = apply_Z(m, f, g);
    // inputs of the cancelling wedge products scaled to unit size
    const double scale = std::max(flat(v, g).max_abs() * interior(v, hodge(g2, g)).max_abs() *
                                      interior(v, f).max_abs(),
                                  1e-300);
    vacuum_s.add(s_form(f, g2, v, g).max_abs() / scale);
    vacuum_gap.add(relative_difference(abraham_T(f, m, g).components(),
                                       minkowski_sym_T(f, g2, g).components()));
  }
  out.check("vacuum_s_vanishes", vacuum_s, 1e-14, vacua);
  out.check("vacuum_gap", vacuum_gap, 1e-13, vacua);

  Worst tensorial;
  const Metric eta = Metric::minkowski();
  const Constants k = Constants::natural();
  std::size_t n = 0;
  for (MediumKind kind : {MediumKind::isotropic, MediumKind::anisotropic,
                          MediumKind::magneto_electric}) {
    for (int i = 0; i < 50; ++i, ++n) {
      const ConstitutiveModel m = s.model(kind, eta, k);
      const KForm f = s.form(2);
      const Matrix4 t = abraham_T(f, m, eta).components();
      const Matrix4 l = boost(s.uniform(-0.8, 0.8), 1 + i % 3);
      const Matrix4 linv = l.inverse();
      const Vector4 vp = l * m.velocity();
      const auto map = [&](const Matrix4& z) {
        return SpatialLinearMap(linv.transpose() * z * l.transpose(), vp, eta);
      };
      const auto mp = ConstitutiveModel::magneto_electric(
          map(m.zeta_de()), map(m.zeta_db()), map(m.zeta_he()), map(m.zeta_hb()), eta, k);
      const Matrix4 tp = abraham_T(transform_form(f, linv), mp, eta).components();
      tensorial.add(relative_difference(tp, linv.transpose() * t * linv));
    }
  }
  out.check("boost_tensoriality", tensorial, 1e-10, n);
}

// ---------------------------------------------------------------------------

double oracle_error(const KForm& f, const ConstitutiveModel& m, const Metric& g,
                    MetricResponse r, double h) {
  VariationSpec spec;
  spec.step = h;
  const Matrix4 t = metric_variation_oracle(f, m, g, r, spec).components();
  const Matrix4 closed = r == MetricResponse::v_tethered
                             ? abraham_T(f, m, g).components()
                             : minkowski_sym_T(f, apply_Z(m, f, g), g).components();
  return relative_difference(t, closed);
}

void suite_oracle(Sampler& s, Suite& out) {
  const Constants k = Constants::natural();
  Worst tethered, independent;
  std::size_t n = 0;
  for (MediumKind kind : kAllMedia) {
    for (int i = 0; i < 5; ++i, ++n) {
      const Metric g = s.lorentzian_metric();
      const ConstitutiveModel m = s.model(kind, g, k);
      const KForm f = s.form(2);
      tethered.add(oracle_error(f, m, g, MetricResponse::v_tethered, 1e-4));
      independent.add(oracle_error(f, m, g, MetricResponse::metric_independent, 1e-4));
    }
  }
  out.check("v_tethered_matches_abraham", tethered, 1e-6, n);
  out.check("metric_independent_matches_minkowski_sym", independent, 1e-6, n);

  Worst order;
  std::size_t runs = 0;
  for (MediumKind kind : {MediumKind::isotropic, MediumKind::magneto_electric}) {
    const Metric g = s.lorentzian_metric();
    const ConstitutiveModel m = s.model(kind, g, k);
    const KForm f = s.form(2);
    for (MetricResponse r : {MetricResponse::v_tethered, MetricResponse::metric_independent}) {
      const double e1 = oracle_error(f, m, g, r, 1e-3);
      const double e2 = oracle_error(f, m, g, r, 5e-4);
      const double e3 = oracle_error(f, m, g, r, 2.5e-4);
      order.add(std::abs(e1 / e2 / 4.0 - 1.0));
      order.add(std::abs(e2 / e3 / 4.0 - 1.0));
      ++runs;
    }
  }
  out.check("error_ratio_per_halving_vs_4", order, 0.15, runs);
}

// ---------------------------------------------------------------------------

void suite_maxwell(Sampler& s, Suite& out) {
  const Constants k = Constants::natural();
  const Metric eta = Metric::minkowski();
  const double steps[] = {4e-2, 2e-2, 1e-2};
  Worst order_f, order_g, null_field, stalls;
  constexpr int waves = 10;
  for (int i = 0; i < waves; ++i) {
    PlaneWave w;
    w.amplitude = s.uniform(0.5, 2.0);
    w.omega = s.uniform(0.5, 2.0);
    const Vector4 n = random_vector(s);
    const Vector4 p = random_vector(s);
    w.propagation = {n(1), n(2), n(3)};
    w.polarization = {p(1), p(2), p(3)};
    w = w.normalised();
    const Coordinates x{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)};

    const VacuumWaveFields good = vacuum_wave_fields(w, k);
    double prev_f = 0.0;
    double prev_g = 0.0;
    for (double h : steps) {
      const auto r = maxwell_residuals(good.f, good.g, good.j, x, h, eta);
      if (prev_f > 0.0) {
        order_f.add(std::abs(std::log2(prev_f / r.dF.norm()) - 2.0));
        order_g.add(std::abs(std::log2(prev_g / r.dstarG_j.norm()) - 2.0));
      }
      prev_f = r.dF.norm();
      prev_g = r.dstarG_j.norm();
    }

    const ElectricMagnetic eb = decompose_F(w.field_at(x, k), Observer::at_rest(eta), k);
    const double e = std::sqrt(inner(eb.e, eb.e, eta));
    const double b = std::sqrt(inner(eb.b, eb.b, eta));
    if (e > 0.0) {
      null_field.add(std::max(std::abs(e - k.c() * b) / e,
                              std::abs(inner(eb.e, eb.b, eta)) / (e * b)));
    }

    const VacuumWaveFields bad = vacuum_wave_fields(w.broken(), k);
    const double r1 = maxwell_residuals(bad.f, bad.g, bad.j, x, 1e-2, eta).dF.norm();
    const double r2 = maxwell_residuals(bad.f, bad.g, bad.j, x, 5e-3, eta).dF.norm();
    stalls.add(std::abs(r2 / r1 - 1.0));
  }
  out.check("dF_order_deviation", order_f, 0.2, waves);
  out.check("dstarG_order_deviation", order_g, 0.2, waves);
  out.check("plane_wave_null", null_field, 1e-12, waves);
  out.check("broken_wave_residual_stalls", stalls, 0.05, waves);
}

using SuiteFn = void (*)(Sampler&, Suite&);

SuiteFn suite_function(const std::string& name) {
  if (name == "hodge") return suite_hodge;
  if (name == "fields") return suite_fields;
  if (name == "constitutive") return suite_constitutive;
  if (name == "stress") return suite_stress;
  if (name == "oracle") return suite_oracle;
  if (name == "maxwell") return suite_maxwell;
  return nullptr;
}

}  // namespace

Report cmd_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = kSuiteNames;
  } else if (suite_function(suite)) {
    names = {suite};
  } else {
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (hodge, fields, constitutive, stress, oracle, maxwell, all)");
  }

  Report r;
  r.command = "verify";
  r.config = nullptr;
  r.results["suite"] = suite;
  r.results["seed"] = seed;
  Json suites = Json::object();
  for (const std::string& name : names) {
    const std::uint64_t child = split_seed(seed, name);
    Sampler sampler(child);
    Suite out{r, name};
    suite_function(name)(sampler, out);
    suites[name] = {{"seed", child}, {"samples", out.samples}};
  }
  r.results["suites"] = suites;
  return r;
}

}  // namespace covem
