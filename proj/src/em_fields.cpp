#include "covem/em_fields.hpp"

#include <cmath>
#include <string>

namespace covem {

Observer::Observer(const Vector4& u, const Metric& g) : u_(u), g_(g) {
  if (!u.allFinite()) throw std::invalid_argument("Observer: non-finite U");
  const double uu = g(u, u);
  if (std::abs(uu + 1.0) > kUnitTolerance) {
    throw std::invalid_argument("Observer: g(U,U) = " + std::to_string(uu) +
                                ", expected -1");
  }
  if (!(u(0) > 0.0)) {
    throw std::invalid_argument("Observer: U is not future-pointing (U^0 <= 0)");
  }
}

Observer Observer::normalised(const Vector4& direction, const Metric& g) {
  const double n2 = g(direction, direction);
  if (!(n2 < 0.0)) {
    throw std::invalid_argument("Observer: direction is not timelike");
  }
  return Observer(direction / std::sqrt(-n2), g);
}

Observer Observer::from_three_velocity(const std::array<double, 3>& v,
                                       const Metric& g, const Constants& k) {
  const double speed = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(speed < k.c())) {
    throw std::invalid_argument("Observer: |v| = " + std::to_string(speed) +
                                " is not below c");
  }
  return normalised(Vector4(1.0, v[0] / k.c(), v[1] / k.c(), v[2] / k.c()), g);
}

bool is_spatial(const KForm& a, const Vector4& u, double tol) {
  const double contraction = std::abs(interior(u, a).value());
  return contraction <= tol * a.norm() * std::max(1.0, u.norm());
}

void require_spatial(const KForm& a, const Vector4& u, const char* what) {
  if (a.degree() != 1) {
    throw std::invalid_argument(std::string(what) + " must be a 1-form");
  }
  if (!is_spatial(a, u, kSpatialTolerance)) {
    throw std::invalid_argument(std::string(what) +
                                " is not spatial with respect to the observer");
  }
}

namespace {

void require_two_form(const KForm& f, const char* what) {
  if (f.degree() != 2) {
    throw std::invalid_argument(std::string(what) + " must be a 2-form");
  }
}

}  // namespace

ElectricMagnetic decompose_F(const KForm& f, const Observer& obs,
                             const Constants& k) {
  require_two_form(f, "F");
  const Metric& g = obs.metric();
  return {interior(obs.u(), f), interior(obs.u(), hodge(f, g)) / k.c()};
}

KForm reconstruct_F(const KForm& e, const KForm& b, const Observer& obs,
                    const Constants& k) {
  require_spatial(e, obs.u(), "e");
  require_spatial(b, obs.u(), "b");
  const KForm ut = obs.covector();
  return wedge(e, ut) - hodge(wedge(k.c() * b, ut), obs.metric());
}

DisplacementMagnetic decompose_G(const KForm& g2, const Observer& obs,
                                 const Constants& k) {
  require_two_form(g2, "G");
  const Metric& g = obs.metric();
  return {interior(obs.u(), g2), k.c() * interior(obs.u(), hodge(g2, g))};
}

KForm reconstruct_G(const KForm& d, const KForm& h, const Observer& obs,
                    const Constants& k) {
  require_spatial(d, obs.u(), "d");
  require_spatial(h, obs.u(), "h");
  const KForm ut = obs.covector();
  return wedge(d, ut) - hodge(wedge(h / k.c(), ut), obs.metric());
}

FrameFields frame_fields(const KForm& f, const KForm& g2, const Observer& obs,
                         const Constants& k) {
  const auto [e, b] = decompose_F(f, obs, k);
  const auto [d, h] = decompose_G(g2, obs, k);
  return {e, b, d, h, obs, k};
}

MaxwellResiduals maxwell_residuals(const FormField& f_field,
                                   const FormField& g_field,
                                   const FormField& j_field,
                                   const Coordinates& x, double h,
                                   const Metric& g) {
  if (f_field.degree() != 2 || g_field.degree() != 2 ||
      j_field.degree() != 3) {
    throw std::invalid_argument(
        "maxwell_residuals: F and G must be 2-form fields, j a 3-form field");
  }
  if (h < 1e-10) {
    throw std::invalid_argument(
        "maxwell_residuals: step below 1e-10 is dominated by cancellation");
  }
  MaxwellResiduals r;
  r.dF = ext_deriv_fd(f_field, x, h);
  r.dstarG_j = ext_deriv_fd(hodge_field(g_field, g), x, h) - j_field(x);
  return r;
}

// --- plane waves -----------------------------------------------------------

PlaneWave PlaneWave::normalised() const {
  PlaneWave w = *this;
  Eigen::Vector3d n(propagation[0], propagation[1], propagation[2]);
  Eigen::Vector3d p(polarization[0], polarization[1], polarization[2]);
  if (!(n.norm() > 0.0)) throw std::invalid_argument("PlaneWave: zero propagation");
  n.normalize();
  p -= p.dot(n) * n;
  if (!(p.norm() > 1e-12)) {
    throw std::invalid_argument("PlaneWave: polarisation parallel to propagation");
  }
  p.normalize();
  for (int i = 0; i < 3; ++i) {
    w.propagation[static_cast<std::size_t>(i)] = n(i);
    w.polarization[static_cast<std::size_t>(i)] = p(i);
  }
  return w;
}

KForm PlaneWave::field_at(const Coordinates& x, const Constants& k) const {
  const auto& n = propagation;
  const auto& p = polarization;
  const double wavenumber = omega / k.c();
  const double nx = n[0] * x[1] + n[1] * x[2] + n[2] * x[3];
  const double phase = wavenumber * (x[0] - nx / phase_speed);
  const KForm dt = KForm::basis({0});
  const KForm dn = KForm::one_form(0.0, n[0], n[1], n[2]);
  const KForm dp = KForm::one_form(0.0, p[0], p[1], p[2]);
  return amplitude * std::cos(phase) * wedge(dt - magnetic_scale * dn, dp);
}

FormField PlaneWave::field(const Constants& k) const {
  const PlaneWave w = normalised();
  return FormField(2, [w, k](const Coordinates& x) { return w.field_at(x, k); });
}

PlaneWave PlaneWave::broken() const {
  PlaneWave w = *this;
  w.phase_speed = 1.5;
  w.magnetic_scale = 0.5;
  return w;
}

VacuumWaveFields vacuum_wave_fields(const PlaneWave& wave, const Constants& k) {
  const PlaneWave w = wave.normalised();
  FormField f = w.field(k);
  FormField g(2, [w, k](const Coordinates& x) {
    return k.eps0() * w.field_at(x, k);
  });
  return {std::move(f), std::move(g), FormField::constant(KForm(3))};
}

}  // namespace covem
