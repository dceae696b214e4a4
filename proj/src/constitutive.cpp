#include "covem/constitutive.hpp"

#include <cmath>
#include <string>

namespace covem {

namespace {

constexpr double kMapTolerance = 1e-12;

double scale_of(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

void require_unit_velocity(const Vector4& v, const Metric& g) {
  if (std::abs(g(v, v) + 1.0) > Observer::kUnitTolerance) {
    throw std::invalid_argument("medium velocity is not unit timelike under g");
  }
}

void require_same_velocity(const SpatialLinearMap& a, const SpatialLinearMap& b) {
  if ((a.velocity() - b.velocity()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, a.velocity().norm())) {
    throw std::invalid_argument("constitutive maps refer to different velocities");
  }
}

}  // namespace

// --- SpatialLinearMap --------------------------------------------------------

SpatialLinearMap::SpatialLinearMap(const Matrix4& m, const Vector4& v,
                                   const Metric& g)
    : m_(m), v_(v) {
  require_unit_velocity(v, g);
  const Vector4 vt = g.components() * v;
  const double s = scale_of(m) * std::max(1.0, vt.norm()) * std::max(1.0, v.norm());
  if ((m * vt).cwiseAbs().maxCoeff() > kMapTolerance * s) {
    throw std::invalid_argument("SpatialLinearMap does not annihilate V~");
  }
  if ((v.transpose() * m).cwiseAbs().maxCoeff() > kMapTolerance * s) {
    throw std::invalid_argument("SpatialLinearMap image is not spatial");
  }
}

SpatialLinearMap SpatialLinearMap::from_frame(const Matrix3& a,
                                              const Vector4& v,
                                              const Metric& g) {
  const auto e = orthonormal_frame(v, g);
  Matrix4 m = Matrix4::Zero();
  for (int j = 0; j < 3; ++j) {
    const Vector4 theta = g.components() * e[static_cast<std::size_t>(j + 1)];
    for (int k = 0; k < 3; ++k) {
      m += a(j, k) * theta * e[static_cast<std::size_t>(k + 1)].transpose();
    }
  }
  return SpatialLinearMap(m, v, g);
}

SpatialLinearMap SpatialLinearMap::isotropic(double scale, const Vector4& v,
                                             const Metric& g) {
  return SpatialLinearMap(scale * spatial_projector(v, g), v, g);
}

KForm SpatialLinearMap::operator()(const KForm& a) const {
  return KForm::from_vector(m_ * a.as_vector());
}

Matrix3 SpatialLinearMap::frame_components(const Metric& g) const {
  const auto e = orthonormal_frame(v_, g);
  Matrix3 a;
  for (int k = 0; k < 3; ++k) {
    const Vector4 image =
        m_ * (g.components() * e[static_cast<std::size_t>(k + 1)]);
    for (int j = 0; j < 3; ++j) {
      a(j, k) = e[static_cast<std::size_t>(j + 1)].dot(image);
    }
  }
  return a;
}

// --- ConstitutiveModel -------------------------------------------------------

std::string_view to_string(MediumKind kind) {
  switch (kind) {
    case MediumKind::vacuum:
      return "vacuum";
    case MediumKind::isotropic:
      return "isotropic";
    case MediumKind::anisotropic:
      return "anisotropic";
    case MediumKind::magneto_electric:
      return "magneto_electric";
  }
  return "unknown";
}

ConstitutiveModel ConstitutiveModel::vacuum(const Constants& k) {
  return ConstitutiveModel(MediumKind::vacuum, k);
}

ConstitutiveModel ConstitutiveModel::isotropic(double epsilon, double mu,
                                               const Vector4& v,
                                               const Metric& g,
                                               const Constants& k) {
  if (mu == 0.0 || !std::isfinite(mu) || !std::isfinite(epsilon)) {
    throw std::invalid_argument(
        "isotropic medium needs a finite, non-vanishing relative permeability");
  }
  require_unit_velocity(v, g);
  if (!(v(0) > 0.0)) throw std::invalid_argument("medium velocity is past-pointing");
  ConstitutiveModel m(MediumKind::isotropic, k);
  m.v_ = v;
  m.g_ = g;
  m.epsilon_ = epsilon;
  m.mu_ = mu;
  const Matrix4 p = spatial_projector(v, g);
  m.de_ = k.eps0() * epsilon * p;
  m.hb_ = p / (k.mu0() * mu);
  return m;
}

ConstitutiveModel ConstitutiveModel::anisotropic(const SpatialLinearMap& zde,
                                                 const SpatialLinearMap& zhb,
                                                 const Metric& g,
                                                 const Constants& k) {
  require_same_velocity(zde, zhb);
  ConstitutiveModel m(MediumKind::anisotropic, k);
  m.v_ = zde.velocity();
  m.g_ = g;
  m.de_ = zde.matrix();
  m.hb_ = zhb.matrix();
  return m;
}

ConstitutiveModel ConstitutiveModel::magneto_electric(
    const SpatialLinearMap& zde, const SpatialLinearMap& zdb,
    const SpatialLinearMap& zhe, const SpatialLinearMap& zhb, const Metric& g,
    const Constants& k) {
  require_same_velocity(zde, zdb);
  require_same_velocity(zde, zhe);
  require_same_velocity(zde, zhb);
  ConstitutiveModel m(MediumKind::magneto_electric, k);
  m.v_ = zde.velocity();
  m.g_ = g;
  m.de_ = zde.matrix();
  m.db_ = zdb.matrix();
  m.he_ = zhe.matrix();
  m.hb_ = zhb.matrix();
  return m;
}

ConstitutiveModel ConstitutiveModel::self_adjoint_magneto_electric(
    const Matrix3& zde, const Matrix3& zhb, const Matrix3& zdb,
    const Vector4& v, const Metric& g, const Constants& k) {
  const auto asym = [](const Matrix3& a) {
    return (a - a.transpose()).cwiseAbs().maxCoeff() >
           1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff());
  };
  if (asym(zde) || asym(zhb)) {
    throw std::invalid_argument(
        "self-adjoint medium needs symmetric zde and zhb frame components");
  }
  return magneto_electric(SpatialLinearMap::from_frame(zde, v, g),
                          SpatialLinearMap::from_frame(zdb, v, g),
                          SpatialLinearMap::from_frame(-zdb.transpose(), v, g),
                          SpatialLinearMap::from_frame(zhb, v, g), g, k);
}

const Vector4& ConstitutiveModel::velocity() const {
  if (!has_velocity()) throw std::logic_error("vacuum has no bulk velocity");
  return v_;
}

Matrix4 ConstitutiveModel::zeta_de() const { return de_; }
Matrix4 ConstitutiveModel::zeta_db() const { return db_; }
Matrix4 ConstitutiveModel::zeta_he() const { return he_; }
Matrix4 ConstitutiveModel::zeta_hb() const { return hb_; }

ConstitutiveModel ConstitutiveModel::retethered(const Vector4& v,
                                                const Metric& g) const {
  ConstitutiveModel m = *this;
  if (m.kind_ == MediumKind::vacuum) return m;
  m.v_ = v;
  m.g_ = g;
  if (m.kind_ == MediumKind::isotropic) {
    const Matrix4 p = spatial_projector(v, g);
    m.de_ = k_.eps0() * epsilon_ * p;
    m.hb_ = p / (k_.mu0() * mu_);
  }
  return m;
}

// --- MediumField -------------------------------------------------------------

MediumField MediumField::uniform(const ConstitutiveModel& m) {
  return MediumField([m](const Coordinates&) { return m; });
}

MediumField MediumField::isotropic(
    std::function<Vector4(const Coordinates&)> v,
    std::function<double(const Coordinates&)> eps,
    std::function<double(const Coordinates&)> mu, const Metric& g,
    const Constants& k) {
  return MediumField([=](const Coordinates& x) {
    return ConstitutiveModel::isotropic(eps(x), mu(x), v(x), g, k);
  });
}

// --- Z -----------------------------------------------------------------------

DisplacementMagnetic comoving_dh(const ConstitutiveModel& m, const KForm& e,
                                 const KForm& b) {
  const Constants& k = m.constants();
  switch (m.kind()) {
    case MediumKind::vacuum:
      return {k.eps0() * e, b / k.mu0()};
    case MediumKind::isotropic:
      require_spatial(e, m.velocity(), "e");
      require_spatial(b, m.velocity(), "b");
      return {k.eps0() * m.epsilon() * e, b / (k.mu0() * m.mu())};
    case MediumKind::anisotropic:
    case MediumKind::magneto_electric:
      break;
  }
  require_spatial(e, m.velocity(), "e");
  require_spatial(b, m.velocity(), "b");
  const Vector4 ev = e.as_vector();
  const Vector4 bv = b.as_vector();
  return {KForm::from_vector(m.zeta_de() * ev + m.zeta_db() * bv),
          KForm::from_vector(m.zeta_he() * ev + m.zeta_hb() * bv)};
}

KForm apply_Z(const ConstitutiveModel& m, const KForm& f, const Metric& g) {
  if (f.degree() != 2) throw std::invalid_argument("apply_Z: F must be a 2-form");
  const Constants& k = m.constants();
  if (m.kind() == MediumKind::vacuum) return k.eps0() * f;

  const Vector4& v = m.velocity();
  require_unit_velocity(v, g);
  const KForm vt = flat(v, g);
  const Vector4 e = interior(v, f).as_vector();
  const Vector4 b = interior(v, hodge(f, g)).as_vector() / k.c();

  Vector4 d;
  Vector4 h;
  if (m.kind() == MediumKind::isotropic) {
    d = k.eps0() * m.epsilon() * e;
    h = b / (k.mu0() * m.mu());
  } else {
    d = m.zeta_de() * e + m.zeta_db() * b;
    h = m.zeta_he() * e + m.zeta_hb() * b;
  }
  return wedge(KForm::from_vector(d), vt) -
         hodge(wedge(KForm::from_vector(h / k.c()), vt), g);
}

KForm ConstitutiveTensor::apply(const KForm& f) const {
  if (f.degree() != 2) throw std::invalid_argument("Z: F must be a 2-form");
  Eigen::Matrix<double, 6, 1> x;
  for (int n = 0; n < 6; ++n) x(n) = f[static_cast<std::size_t>(n)];
  const Eigen::Matrix<double, 6, 1> y = z_ * x;
  return KForm(2, std::span<const double>(y.data(), 6));
}

namespace {

KForm two_form_basis(int n) {
  KForm e(2);
  e[static_cast<std::size_t>(n)] = 1.0;
  return e;
}

}  // namespace

ConstitutiveTensor as_rank4(const ConstitutiveModel& m, const Metric& g) {
  Matrix6 z;
  for (int n = 0; n < 6; ++n) {
    const KForm col = apply_Z(m, two_form_basis(n), g);
    for (int r = 0; r < 6; ++r) z(r, n) = col[static_cast<std::size_t>(r)];
  }
  return ConstitutiveTensor(z, g);
}

SelfAdjointness check_self_adjoint(const ConstitutiveTensor& zt,
                                   const Metric& g, double tol) {
  Matrix6 p;
  for (int j = 0; j < 6; ++j) {
    const KForm star_z = hodge(zt.apply(two_form_basis(j)), g);
    for (int i = 0; i < 6; ++i) {
      p(i, j) = wedge(two_form_basis(i), star_z).value();
    }
  }
  const double scale = p.cwiseAbs().maxCoeff();
  const double asym = (p - p.transpose()).cwiseAbs().maxCoeff();
  const double violation = scale == 0.0 ? 0.0 : asym / scale;
  return {violation <= tol, violation};
}

EffectiveZetas effective_zetas(const ConstitutiveTensor& zt,
                               const Observer& obs, const Constants& k) {
  const Metric& g = obs.metric();
  const auto frame = obs.frame();
  const KForm ut = obs.covector();
  Matrix4 de = Matrix4::Zero();
  Matrix4 db = Matrix4::Zero();
  Matrix4 he = Matrix4::Zero();
  Matrix4 hb = Matrix4::Zero();
  for (std::size_t j = 1; j < 4; ++j) {
    const KForm theta = flat(frame[j], g);
    const Vector4 dual = frame[j];  // theta^i(dual_j) = delta^i_j
    // pure e = theta, b = 0
    const auto from_e = decompose_G(zt.apply(wedge(theta, ut)), obs, k);
    // pure b = theta, e = 0
    const auto from_b =
        decompose_G(zt.apply(-hodge(wedge(k.c() * theta, ut), g)), obs, k);
    de += from_e.d.as_vector() * dual.transpose();
    he += from_e.h.as_vector() * dual.transpose();
    db += from_b.d.as_vector() * dual.transpose();
    hb += from_b.h.as_vector() * dual.transpose();
  }
  // strip rounding-level non-spatial parts
  const Vector4& u = obs.u();
  const Matrix4 p = spatial_projector(u, g);
  return {SpatialLinearMap(p * de * p, u, g), SpatialLinearMap(p * db * p, u, g),
          SpatialLinearMap(p * he * p, u, g), SpatialLinearMap(p * hb * p, u, g)};
}

std::array<Matrix3, 4> frame_blocks(const EffectiveZetas& z,
                                    const Observer& obs) {
  const Metric& g = obs.metric();
  return {z.de.frame_components(g), z.db.frame_components(g),
          z.he.frame_components(g), z.hb.frame_components(g)};
}

}  // namespace covem
