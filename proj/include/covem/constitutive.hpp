#pragma once

#include "covem/constants.hpp"
#include "covem/em_fields.hpp"
#include "covem/exterior.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace covem {

using Matrix3 = Eigen::Matrix3d;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Linear map on 1-forms, stored as mixed components acting on covariant
/// component vectors (out = M a), that is spatial with respect to V: it
/// annihilates V~ and its image is annihilated by V.
class SpatialLinearMap {
 public:
  SpatialLinearMap(const Matrix4& m, const Vector4& v, const Metric& g);

  /// M = sum_jk A_jk theta^j (x) e_k over the orthonormal frame adapted to V,
  /// so that M(theta^k) = sum_j A_jk theta^j.
  static SpatialLinearMap from_frame(const Matrix3& a, const Vector4& v,
                                     const Metric& g);
  /// scale * (spatial identity).
  static SpatialLinearMap isotropic(double scale, const Vector4& v,
                                    const Metric& g);

  const Matrix4& matrix() const { return m_; }
  const Vector4& velocity() const { return v_; }
  KForm operator()(const KForm& a) const;
  /// A_jk as defined in from_frame, in the frame adapted to V under g.
  Matrix3 frame_components(const Metric& g) const;

 private:
  Matrix4 m_;
  Vector4 v_;
};

enum class MediumKind { vacuum, isotropic, anisotropic, magneto_electric };

std::string_view to_string(MediumKind kind);

/// Pointwise linear constitutive model.
///
/// Non-vacuum media carry a unit timelike bulk velocity V and four spatial
/// maps with d = zde(e) + zdb(b), h = zhe(e) + zhb(b) in the comoving frame.
class ConstitutiveModel {
 public:
  static ConstitutiveModel vacuum(const Constants& k);
  /// Requires mu != 0.
  static ConstitutiveModel isotropic(double epsilon, double mu,
                                     const Vector4& v, const Metric& g,
                                     const Constants& k);
  static ConstitutiveModel anisotropic(const SpatialLinearMap& zde,
                                       const SpatialLinearMap& zhb,
                                       const Metric& g, const Constants& k);
  /// General magneto-electric medium; no self-adjointness is imposed.
  static ConstitutiveModel magneto_electric(const SpatialLinearMap& zde,
                                            const SpatialLinearMap& zdb,
                                            const SpatialLinearMap& zhe,
                                            const SpatialLinearMap& zhb,
                                            const Metric& g,
                                            const Constants& k);
  /// Magneto-electric medium with a self-adjoint Z. Frame components (in the
  /// frame adapted to V) must be symmetric for zde and zhb; the cross block
  /// zhe is fixed to -transpose(zdb).
  static ConstitutiveModel self_adjoint_magneto_electric(
      const Matrix3& zde, const Matrix3& zhb, const Matrix3& zdb,
      const Vector4& v, const Metric& g, const Constants& k);

  MediumKind kind() const { return kind_; }
  const Constants& constants() const { return k_; }
  bool has_velocity() const { return kind_ != MediumKind::vacuum; }
  /// Bulk 4-velocity; throws for the vacuum.
  const Vector4& velocity() const;
  /// Metric the model was constructed against (absent for the vacuum).
  const std::optional<Metric>& metric() const { return g_; }

  double epsilon() const { return epsilon_; }
  double mu() const { return mu_; }

  /// Mixed components of the four maps (for the vacuum and isotropic kinds
  /// these are multiples of the spatial projector of the stored metric).
  Matrix4 zeta_de() const;
  Matrix4 zeta_db() const;
  Matrix4 zeta_he() const;
  Matrix4 zeta_hb() const;

  /// Same maps and kind with a different bulk velocity and metric context.
  /// No spatiality checks: used to follow a medium under metric
  /// perturbations.
  ConstitutiveModel retethered(const Vector4& v, const Metric& g) const;

 private:
  ConstitutiveModel(MediumKind kind, const Constants& k) : kind_(kind), k_(k) {}

  MediumKind kind_;
  Constants k_;
  Vector4 v_ = Vector4::Unit(0);
  std::optional<Metric> g_;
  double epsilon_ = 1.0;
  double mu_ = 1.0;
  Matrix4 de_ = Matrix4::Zero();
  Matrix4 db_ = Matrix4::Zero();
  Matrix4 he_ = Matrix4::Zero();
  Matrix4 hb_ = Matrix4::Zero();
};

/// Position-dependent medium; stress-energy work is pointwise, so a field is
/// evaluated to a ConstitutiveModel first.
class MediumField {
 public:
  using Function = std::function<ConstitutiveModel(const Coordinates&)>;
  explicit MediumField(Function f) : f_(std::move(f)) {}

  static MediumField uniform(const ConstitutiveModel& m);
  static MediumField isotropic(std::function<Vector4(const Coordinates&)> v,
                               std::function<double(const Coordinates&)> eps,
                               std::function<double(const Coordinates&)> mu,
                               const Metric& g, const Constants& k);

  ConstitutiveModel evaluate_at(const Coordinates& x) const { return f_(x); }

 private:
  Function f_;
};

/// G = Z(F) = zde(e) ^ V~ + zdb(b) ^ V~ - *((zhe(e) + zhb(b)) / c ^ V~)
/// with e = i_V F, c b = i_V *F; eps0 F for the vacuum.
KForm apply_Z(const ConstitutiveModel& m, const KForm& f, const Metric& g);

/// d, h from comoving e, b.
DisplacementMagnetic comoving_dh(const ConstitutiveModel& m, const KForm& e,
                                 const KForm& b);

/// Z materialised in the lexicographic 2-form basis: column n is Z(basis_n).
class ConstitutiveTensor {
 public:
  ConstitutiveTensor(const Matrix6& z, const Metric& g) : z_(z), g_(g) {}

  const Matrix6& matrix() const { return z_; }
  const Metric& metric() const { return g_; }
  KForm apply(const KForm& f) const;

 private:
  Matrix6 z_;
  Metric g_;
};

ConstitutiveTensor as_rank4(const ConstitutiveModel& m, const Metric& g);

struct SelfAdjointness {
  bool self_adjoint;
  double max_violation;  ///< max |P - P^T| / max |P|, P_ij = E_i ^ *Z(E_j)
};

SelfAdjointness check_self_adjoint(const ConstitutiveTensor& zt,
                                   const Metric& g, double tol = 1e-12);

struct EffectiveZetas {
  SpatialLinearMap de;
  SpatialLinearMap db;
  SpatialLinearMap he;
  SpatialLinearMap hb;
};

/// The four maps an observer U would fit to d, h as functions of its own
/// e, b; extracted by applying Z to a spanning set of pure-e and pure-b
/// 2-forms built from the U-adapted frame.
EffectiveZetas effective_zetas(const ConstitutiveTensor& zt,
                               const Observer& obs, const Constants& k);

/// Frame components (de, db, he, hb) in the observer's adapted frame.
std::array<Matrix3, 4> frame_blocks(const EffectiveZetas& z,
                                    const Observer& obs);

}  // namespace covem
