#include "covem/sampling.hpp"

#include <cmath>

namespace covem {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t seed, std::string_view stream) {
  // FNV-1a over the stream name, then mixed with the parent seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char ch : stream) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(seed) ^ h);
}

double Sampler::uniform(double lo, double hi) {
  // Explicit mapping so that draws do not depend on the standard library's
  // distribution implementation.
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

KForm Sampler::form(int degree, double scale) {
  KForm w(degree);
  for (double& x : w.components()) x = uniform(-scale, scale);
  return w;
}

Metric Sampler::lorentzian_metric(double spread) {
  const Matrix4 eta = Eigen::Vector4d(-1.0, 1.0, 1.0, 1.0).asDiagonal();
  for (;;) {
    Matrix4 a = Matrix4::Identity();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) += uniform(-spread, spread);
    const Matrix4 g = a.transpose() * eta * a;
    if (g(0, 0) < -0.2 && std::abs(g.determinant()) > 0.05) {
      return Metric(0.5 * (g + g.transpose()));
    }
  }
}

Vector4 Sampler::velocity(const Metric& g, double max_speed) {
  const auto frame = Observer::at_rest(g).frame();
  for (;;) {
    const double b1 = uniform(-max_speed, max_speed);
    const double b2 = uniform(-max_speed, max_speed);
    const double b3 = uniform(-max_speed, max_speed);
    const double b2sum = b1 * b1 + b2 * b2 + b3 * b3;
    if (b2sum >= max_speed * max_speed) continue;
    const double gamma = 1.0 / std::sqrt(1.0 - b2sum);
    return gamma * (frame[0] + b1 * frame[1] + b2 * frame[2] + b3 * frame[3]);
  }
}

KForm Sampler::spatial_one_form(const Vector4& u, const Metric& g,
                                double scale) {
  const KForm a = form(1, scale);
  return KForm::from_vector(spatial_projector(u, g) * a.as_vector());
}

Matrix3 Sampler::matrix3(double scale) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = uniform(-scale, scale);
  return m;
}

Matrix3 Sampler::spd3(double lo, double hi) {
  // random rotation from the QR of a random matrix, random spectrum
  const Eigen::HouseholderQR<Matrix3> qr(matrix3(1.0));
  const Matrix3 q = qr.householderQ();
  const Eigen::Vector3d ev(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi));
  const Matrix3 s = q * ev.asDiagonal() * q.transpose();
  return 0.5 * (s + s.transpose());
}

ConstitutiveModel Sampler::model(MediumKind kind, const Metric& g,
                                 const Constants& k) {
  if (kind == MediumKind::vacuum) return ConstitutiveModel::vacuum(k);
  const Vector4 v = velocity(g);
  const double e0 = k.eps0();
  const double inv_mu0 = 1.0 / k.mu0();
  switch (kind) {
    case MediumKind::isotropic: {
      const double eps = uniform(1.0, 4.0);
      const double mu = uniform(0.5, 3.0);
      return ConstitutiveModel::isotropic(eps, mu, v, g, k);
    }
    case MediumKind::anisotropic:
      return ConstitutiveModel::anisotropic(
          SpatialLinearMap::from_frame(e0 * spd3(1.0, 4.0), v, g),
          SpatialLinearMap::from_frame(inv_mu0 * spd3(0.3, 2.0), v, g), g, k);
    case MediumKind::magneto_electric:
    case MediumKind::vacuum:
      break;
  }
  // cross block scaled by sqrt(eps0 / mu0) so all blocks are comparable in SI
  const double cross = std::sqrt(e0 * inv_mu0);
  return ConstitutiveModel::self_adjoint_magneto_electric(
      e0 * spd3(1.0, 4.0), inv_mu0 * spd3(0.3, 2.0), cross * matrix3(0.5), v,
      g, k);
}

}  // namespace covem
