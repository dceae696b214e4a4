#pragma once

#include "covem/constants.hpp"
#include "covem/exterior.hpp"
#include "covem/form_field.hpp"

#include <array>

namespace covem {

/// Unit, future-pointing (U^0 > 0) timelike observer with its metric.
class Observer {
 public:
  Observer(const Vector4& u, const Metric& g);

  /// 4-velocity proportional to (1, v/c) normalised under g; |v| >= c or a
  /// non-timelike direction is rejected.
  static Observer from_three_velocity(const std::array<double, 3>& v,
                                      const Metric& g, const Constants& k);
  /// Rescales a future-pointing timelike vector to unit length.
  static Observer normalised(const Vector4& direction, const Metric& g);
  static Observer at_rest(const Metric& g) {
    return normalised(Vector4::Unit(0), g);
  }

  const Vector4& u() const { return u_; }
  const Metric& metric() const { return g_; }
  /// U~ = g(U, -)
  KForm covector() const { return flat(u_, g_); }
  /// Orthonormal frame adapted to U (see orthonormal_frame).
  std::array<Vector4, 4> frame() const { return orthonormal_frame(u_, g_); }

  static constexpr double kUnitTolerance = 1e-12;

 private:
  Vector4 u_;
  Metric g_;
};

struct ElectricMagnetic {
  KForm e{1};
  KForm b{1};
};

struct DisplacementMagnetic {
  KForm d{1};
  KForm h{1};
};

/// e, b, d, h measured by one observer.
struct FrameFields {
  KForm e{1};
  KForm b{1};
  KForm d{1};
  KForm h{1};
  Observer observer;
  Constants constants;
};

/// e = i_U F and c b = i_U *F.
ElectricMagnetic decompose_F(const KForm& f, const Observer& obs,
                             const Constants& k);
/// F = e ^ U~ - *(c b ^ U~).
KForm reconstruct_F(const KForm& e, const KForm& b, const Observer& obs,
                    const Constants& k);

/// d = i_U G and h / c = i_U *G.
DisplacementMagnetic decompose_G(const KForm& g2, const Observer& obs,
                                 const Constants& k);
/// G = d ^ U~ - *((h / c) ^ U~).
KForm reconstruct_G(const KForm& d, const KForm& h, const Observer& obs,
                    const Constants& k);

FrameFields frame_fields(const KForm& f, const KForm& g2, const Observer& obs,
                         const Constants& k);

/// Throws unless |i_U a| <= kSpatialTolerance * |a|.
void require_spatial(const KForm& a, const Vector4& u, const char* what);
bool is_spatial(const KForm& a, const Vector4& u, double tol);
inline constexpr double kSpatialTolerance = 1e-9;

struct MaxwellResiduals {
  KForm dF{3};        ///< dF
  KForm dstarG_j{3};  ///< d*G - j
};

/// Central-difference residuals of dF = 0 and d*G = j at x.
MaxwellResiduals maxwell_residuals(const FormField& f_field,
                                   const FormField& g_field,
                                   const FormField& j_field,
                                   const Coordinates& x, double h,
                                   const Metric& g);

/// Linearly polarised vacuum plane wave in Minkowski coordinates x^0 = ct:
///   F = A cos(k (x^0 - n.x)) (dx^0 - n_i dx^i) ^ (p_j dx^j)
/// with unit propagation n, unit polarisation p orthogonal to n, and
/// wavenumber k = omega / c.
struct PlaneWave {
  double amplitude = 1.0;
  std::array<double, 3> propagation{1.0, 0.0, 0.0};
  std::array<double, 3> polarization{0.0, 1.0, 0.0};
  double omega = 1.0;
  /// Phase speed in units of c; 1 gives the vacuum dispersion relation.
  double phase_speed = 1.0;
  /// Scales the magnetic part of F; 1 keeps |e| = c|b|.
  double magnetic_scale = 1.0;

  /// Normalises n and orthogonalises p against it.
  PlaneWave normalised() const;
  KForm field_at(const Coordinates& x, const Constants& k) const;
  FormField field(const Constants& k) const;
  /// A deliberately wrong wave: phase speed 1.5 c and |e| = 2 c |b|.
  PlaneWave broken() const;
};

/// F and G = eps0 F for a plane wave, plus a vanishing current.
struct VacuumWaveFields {
  FormField f;
  FormField g;
  FormField j;
};
VacuumWaveFields vacuum_wave_fields(const PlaneWave& wave, const Constants& k);

}  // namespace covem
