#include "covem/em_fields.hpp"
#include "covem/sampling.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

#include <cmath>

using namespace covem;

namespace {

Matrix4 boost_x(double beta) {
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  Matrix4 l = Matrix4::Identity();
  l(0, 0) = l(1, 1) = gamma;
  l(0, 1) = l(1, 0) = -gamma * beta;
  return l;
}

KForm transform_one_form(const Matrix4& linv, const KForm& a) {
  return KForm::from_vector(linv.transpose() * a.as_vector());
}

}  // namespace

TEST_CASE("observer validation") {
  const Metric eta = Metric::minkowski();
  CHECK_NOTHROW(Observer(Vector4::Unit(0), eta));
  CHECK_THROWS_AS(Observer(2.0 * Vector4::Unit(0), eta), std::invalid_argument);
  CHECK_THROWS_AS(Observer(-Vector4::Unit(0), eta), std::invalid_argument);
  CHECK_THROWS_AS(Observer::normalised(Vector4(1, 2, 0, 0), eta), std::invalid_argument);
  const Constants k = Constants::natural();
  CHECK_THROWS_AS(Observer::from_three_velocity({1.0, 0.0, 0.0}, eta, k),
                  std::invalid_argument);
  const Observer o = Observer::from_three_velocity({0.6, 0.0, 0.0}, eta, k);
  CHECK(o.u()(0) == doctest::Approx(1.25));
  CHECK(o.u()(1) == doctest::Approx(0.75));
  const Observer si = Observer::from_three_velocity({0.6 * 299792458.0, 0.0, 0.0}, eta,
                                                    Constants::si());
  CHECK(si.u()(1) == doctest::Approx(0.75));
}

TEST_CASE("rest-frame decomposition in Minkowski space") {
  const Metric eta = Metric::minkowski();
  const Constants k = Constants::natural();
  const Observer rest = Observer::at_rest(eta);
  SUBCASE("F = E dx1 ^ dx0 gives e = -E dx1 under i_U F") {
    const double big_e = 2.5;
    const auto [e, b] = decompose_F(big_e * KForm::basis({1, 0}), rest, k);
    CHECK(relative_difference(e, KForm::one_form(0, -big_e, 0, 0)) == 0.0);
    CHECK(b.max_abs() == 0.0);
  }
  SUBCASE("F = B dx2 ^ dx3 is purely magnetic along dx1") {
    const auto [e, b] = decompose_F(KForm::basis({2, 3}), rest, k);
    CHECK(e.max_abs() == 0.0);
    // i_U *(dx2^dx3) with *(dx2^dx3) = dx0^dx1
    CHECK(relative_difference(b, KForm::one_form(0, 1, 0, 0)) == 0.0);
  }
}

TEST_CASE("decomposition round trips") {
  Sampler s(21);
  for (const Constants& k : {Constants::natural(), Constants(3.0, 0.5)}) {
    for (int i = 0; i < 300; ++i) {
      const Metric g = s.lorentzian_metric();
      const Observer obs(s.velocity(g), g);
      const KForm f = s.form(2);
      const auto [e, b] = decompose_F(f, obs, k);
      CHECK(is_spatial(e, obs.u(), 1e-12));
      CHECK(is_spatial(b, obs.u(), 1e-12));
      CHECK(relative_difference(reconstruct_F(e, b, obs, k), f) < 1e-12);
      const auto [d, h] = decompose_G(f, obs, k);
      CHECK(relative_difference(reconstruct_G(d, h, obs, k), f) < 1e-12);

      const KForm e2 = s.spatial_one_form(obs.u(), g);
      const KForm b2 = s.spatial_one_form(obs.u(), g);
      const auto back = decompose_F(reconstruct_F(e2, b2, obs, k), obs, k);
      CHECK(relative_difference(back.e, e2) < 1e-12);
      CHECK(relative_difference(back.b, b2) < 1e-12);
    }
  }
}

TEST_CASE("non-spatial inputs are rejected") {
  const Metric eta = Metric::minkowski();
  const Observer rest = Observer::at_rest(eta);
  const Constants k = Constants::natural();
  CHECK_THROWS_AS(reconstruct_F(KForm::one_form(1, 0, 0, 0), KForm(1), rest, k),
                  std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_G(KForm(1), KForm::one_form(0.1, 1, 0, 0), rest, k),
                  std::invalid_argument);
  CHECK_THROWS_AS(decompose_F(KForm(1), rest, k), std::invalid_argument);
}

TEST_CASE("vacuum constitutive relation in SI units") {
  const Constants k = Constants::si();
  const Metric eta = Metric::minkowski();
  const Observer obs = Observer::from_three_velocity({1e8, -5e7, 0.0}, eta, k);
  Sampler s(22);
  for (int i = 0; i < 50; ++i) {
    const KForm e = s.spatial_one_form(obs.u(), eta, 1e3);
    const KForm b = s.spatial_one_form(obs.u(), eta, 1e-5);
    const KForm f = reconstruct_F(e, b, obs, k);
    const FrameFields ff = frame_fields(f, k.eps0() * f, obs, k);
    CHECK(relative_difference(ff.d, k.eps0() * e) < 1e-12);
    CHECK(relative_difference(ff.h, b / k.mu0()) < 1e-12);
  }
}

TEST_CASE("boost covariance of e and b") {
  // Components of the same field measured by the same observer in two
  // Minkowski charts related by x' = L x.
  const Constants k = Constants::natural();
  const Metric eta = Metric::minkowski();
  Sampler s(23);
  for (double beta : {0.1, 0.5, 0.9}) {
    const Matrix4 l = boost_x(beta);
    const Matrix4 linv = l.inverse();
    for (int i = 0; i < 50; ++i) {
      const Vector4 u = s.velocity(eta);
      const KForm f = s.form(2);
      const auto [e, b] = decompose_F(f, Observer(u, eta), k);
      const KForm fp = two_form(linv.transpose() * to_matrix(f) * linv);
      const auto [ep, bp] = decompose_F(fp, Observer(l * u, eta), k);
      CHECK(relative_difference(ep, transform_one_form(linv, e), 1.0) < 1e-12);
      CHECK(relative_difference(bp, transform_one_form(linv, b), 1.0) < 1e-12);
    }
  }
}

TEST_CASE("plane wave") {
  const Constants k = Constants::natural();
  const Metric eta = Metric::minkowski();
  PlaneWave w;
  w.propagation = {1.0, 2.0, 2.0};
  w.polarization = {0.0, 1.0, -1.0};
  w.omega = 2.0;
  const auto fields = vacuum_wave_fields(w, k);
  const Coordinates x{0.3, 0.1, -0.2, 0.4};

  SUBCASE("|e| = c|b|, e orthogonal to b") {
    const auto [e, b] = decompose_F(fields.f(x), Observer::at_rest(eta), k);
    CHECK(std::sqrt(inner(e, e, eta)) ==
          doctest::Approx(k.c() * std::sqrt(inner(b, b, eta))).epsilon(1e-12));
    CHECK(std::abs(inner(e, b, eta)) < 1e-12);
  }
  SUBCASE("residuals converge at second order") {
    double prev_f = 0.0, prev_g = 0.0;
    for (double h : {4e-2, 2e-2, 1e-2}) {
      const auto r = maxwell_residuals(fields.f, fields.g, fields.j, x, h, eta);
      const double nf = r.dF.norm(), ng = r.dstarG_j.norm();
      CHECK(nf > 0.0);
      if (prev_f > 0.0) {
        CHECK(std::log2(prev_f / nf) == doctest::Approx(2.0).epsilon(0.1));
        CHECK(std::log2(prev_g / ng) == doctest::Approx(2.0).epsilon(0.1));
      }
      prev_f = nf;
      prev_g = ng;
    }
  }
  SUBCASE("broken dispersion does not converge") {
    const auto bad = vacuum_wave_fields(w.broken(), k);
    const auto r1 = maxwell_residuals(bad.f, bad.g, bad.j, x, 1e-2, eta);
    const auto r2 = maxwell_residuals(bad.f, bad.g, bad.j, x, 5e-3, eta);
    CHECK(r2.dF.norm() > 0.1);
    CHECK(r2.dF.norm() / r1.dF.norm() == doctest::Approx(1.0).epsilon(0.01));
  }
  SUBCASE("step and degree validation") {
    CHECK_THROWS_AS(maxwell_residuals(fields.f, fields.g, fields.j, x, 1e-11, eta),
                    std::invalid_argument);
    CHECK_THROWS_AS(maxwell_residuals(fields.j, fields.g, fields.j, x, 1e-3, eta),
                    std::invalid_argument);
  }
  SUBCASE("parallel polarisation is rejected") {
    PlaneWave bad;
    bad.polarization = bad.propagation;
    CHECK_THROWS_AS(bad.normalised(), std::invalid_argument);
  }
}
