#include "covem/stress_energy.hpp"

#include <cmath>

namespace covem {

StressEnergy::StressEnergy(const Matrix4& t) : t_(t) {
  if (!t.allFinite()) throw std::invalid_argument("StressEnergy: non-finite");
  const double scale = t.cwiseAbs().maxCoeff();
  if ((t - t.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("StressEnergy: components are not symmetric");
  }
}

KForm lagrangian(const KForm& f, const ConstitutiveModel& m, const Metric& g) {
  return wedge(f, hodge(apply_Z(m, f, g), g)) / (2.0 * m.constants().c());
}

double field_pairing(const KForm& f, const KForm& g2, const Metric& g) {
  return inner(f, g2, g);
}

KForm s_form(const KForm& f, const KForm& g2, const Vector4& v,
             const Metric& g) {
  if (std::abs(g(v, v) + 1.0) > Observer::kUnitTolerance) {
    throw std::invalid_argument("s_form: V is not unit timelike");
  }
  const KForm vt = flat(v, g);
  const KForm ivf = interior(v, f);
  const KForm ivsf = interior(v, hodge(f, g));
  const KForm ivg = interior(v, g2);
  const KForm ivsg = interior(v, hodge(g2, g));
  return hodge(wedge(vt, ivsg, ivf) + wedge(vt, ivg, ivsf), g);
}

KForm poynting(const KForm& e, const KForm& h, const Vector4& v,
               const Metric& g) {
  require_spatial(e, v, "e");
  require_spatial(h, v, "h");
  return hodge(wedge(flat(v, g), h, e), g);
}

StressEnergy minkowski_sym_T(const KForm& f, const KForm& g2,
                             const Metric& g) {
  const Matrix4 c = contracted_product(f, g2, g);
  const Matrix4 t =
      0.5 * (c + c.transpose()) - 0.5 * field_pairing(f, g2, g) * g.components();
  return StressEnergy(0.5 * (t + t.transpose()));
}

StressEnergy abraham_T(const KForm& f, const ConstitutiveModel& m,
                       const Metric& g) {
  const KForm g2 = apply_Z(m, f, g);
  const Matrix4 sym = minkowski_sym_T(f, g2, g).components();
  if (!m.has_velocity()) return StressEnergy(sym);
  const Vector4& v = m.velocity();
  const KForm vt = flat(v, g);
  const KForm s = s_form(f, g2, v, g);
  const Matrix4 gap = 0.5 * (outer(vt, s) + outer(s, vt));
  return StressEnergy(sym + gap);
}

StressEnergy comoving_T(const FrameFields& ff) {
  const Observer& obs = ff.observer;
  const Metric& g = obs.metric();
  const Vector4& v = obs.u();
  for (const auto* a : {&ff.e, &ff.b, &ff.d, &ff.h}) {
    require_spatial(*a, v, "frame field");
  }
  const KForm vt = flat(v, g);
  const Vector4 e = ff.e.as_vector();
  const Vector4 b = ff.b.as_vector();
  const Vector4 d = ff.d.as_vector();
  const Vector4 h = ff.h.as_vector();
  const Matrix4& ginv = g.inverse();
  const double energy = 0.5 * (e.dot(ginv * d) + h.dot(ginv * b));
  const KForm s = poynting(ff.e, ff.h, v, g) / ff.constants.c();

  Matrix4 t = -0.5 * (e * d.transpose() + d * e.transpose()) -
              0.5 * (h * b.transpose() + b * h.transpose()) +
              energy * (g.components() + 2.0 * outer(vt, vt)) + outer(vt, s) +
              outer(s, vt);
  return StressEnergy(0.5 * (t + t.transpose()));
}

double energy_density(const StressEnergy& t, const Observer& obs) {
  return t(obs.u(), obs.u());
}

KForm momentum_density(const StressEnergy& t, const Observer& obs) {
  const Vector4 p = -(t.components() * obs.u());
  return KForm::from_vector(spatial_projector(obs.u(), obs.metric()) * p);
}

}  // namespace covem
