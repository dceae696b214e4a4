#pragma once

#include "covem/constitutive.hpp"
#include "covem/em_fields.hpp"
#include "covem/exterior.hpp"

namespace covem {

/// Symmetric covariant rank-2 tensor T_ab.
class StressEnergy {
 public:
  /// Throws if t is not symmetric to 1e-12 relative.
  explicit StressEnergy(const Matrix4& t);

  const Matrix4& components() const { return t_; }
  double operator()(const Vector4& x, const Vector4& y) const {
    return x.dot(t_ * y);
  }
  double operator()(int a, int b) const { return t_(a, b); }

 private:
  Matrix4 t_;
};

/// Lambda = F ^ *Z(F) / (2c).
KForm lagrangian(const KForm& f, const ConstitutiveModel& m, const Metric& g);

/// <F, G> = *^{-1}(F ^ *G), the scalar multiplying g in both tensors.
double field_pairing(const KForm& f, const KForm& g2, const Metric& g);

/// s = *(V~ ^ i_V*G ^ i_V F + V~ ^ i_V G ^ i_V*F); the wedge order fixes the
/// sign that makes abraham_T the tethered metric variation of Lambda under
/// the orientation in exterior.hpp.
KForm s_form(const KForm& f, const KForm& g2, const Vector4& v,
             const Metric& g);

/// Poynting 1-form S~ = *(V~ ^ h ^ e), sign fixed as for s_form.
KForm poynting(const KForm& e, const KForm& h, const Vector4& v,
               const Metric& g);

/// T = 1/2 (i_a F (x) i^a G + i_a G (x) i^a F) - 1/2 <F,G> g.
StressEnergy minkowski_sym_T(const KForm& f, const KForm& g2, const Metric& g);

/// minkowski_sym_T(F, Z(F)) + 1/2 (V~ (x) s + s (x) V~); for the vacuum s = 0.
StressEnergy abraham_T(const KForm& f, const ConstitutiveModel& m,
                       const Metric& g);

/// The same tensor written with comoving fields (ff.observer must be the
/// medium frame):
///   T = -1/2 (e(x)d + d(x)e) - 1/2 (h(x)b + b(x)h)
///       + 1/2 (g(e,d) + g(h,b)) (g + 2 V~(x)V~) + (V~(x)S~ + S~(x)V~) / c.
/// With x^0 = ct the Poynting term carries 1/c; it drops out for c = 1.
StressEnergy comoving_T(const FrameFields& ff);

/// T(U, U).
double energy_density(const StressEnergy& t, const Observer& obs);
/// Spatial part of -T(U, -); equals +S~ / c in the comoving frame.
KForm momentum_density(const StressEnergy& t, const Observer& obs);

}  // namespace covem
