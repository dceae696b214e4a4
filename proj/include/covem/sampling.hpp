#pragma once

// Seeded generators of random states for property checks.

#include "covem/constitutive.hpp"
#include "covem/em_fields.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace covem {

/// splitmix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Independent child seed for a named stream; lets suites run in any order
/// (or concurrently) without changing each other's draws.
std::uint64_t split_seed(std::uint64_t seed, std::string_view stream);

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  KForm form(int degree, double scale = 1.0);
  /// g = A^T diag(-1,1,1,1) A with A a perturbation of the identity; the
  /// coordinate vector d_0 stays timelike.
  Metric lorentzian_metric(double spread = 0.25);
  /// Unit future-pointing 4-velocity whose speed relative to the normalised
  /// d_0 observer is below max_speed (in units of c).
  Vector4 velocity(const Metric& g, double max_speed = 0.6);
  /// Random 1-form spatial with respect to u.
  KForm spatial_one_form(const Vector4& u, const Metric& g, double scale = 1.0);
  Matrix3 matrix3(double scale = 1.0);
  /// Symmetric positive definite 3x3 with eigenvalues in [lo, hi].
  Matrix3 spd3(double lo, double hi);
  /// Random model of the given kind with unit velocity under g; the
  /// magneto-electric model is self-adjoint.
  ConstitutiveModel model(MediumKind kind, const Metric& g, const Constants& k);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace covem
