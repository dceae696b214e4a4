#include "covem/form_field.hpp"
#include "doctest.h"

#include <cmath>

using namespace covem;

TEST_CASE("constant fields are closed") {
  const FormField f = FormField::constant(KForm(2, {1, -2, 3, 0.5, 7, -1}));
  const KForm d = ext_deriv_fd(f, {0.3, -1.0, 2.0, 0.1}, 1e-3);
  CHECK(d.degree() == 3);
  CHECK(d.max_abs() == 0.0);
}

TEST_CASE("d(x^1 dx^2) = dx^1 ^ dx^2") {
  const FormField f(1, [](const Coordinates& x) {
    return KForm::one_form(0.0, 0.0, x[1], 0.0);
  });
  const KForm d = ext_deriv_fd(f, {0.0, 0.4, 1.0, -2.0}, 1e-2);
  const KForm expected = KForm::basis({1, 2});
  CHECK(relative_difference(d, expected) < 1e-12);
}

TEST_CASE("0-form gradient") {
  const FormField f(0, [](const Coordinates& x) {
    return KForm::scalar(x[0] * x[0] + 3.0 * x[2]);
  });
  const KForm d = ext_deriv_fd(f, {1.5, 0.0, 0.0, 0.0}, 1e-3);
  CHECK(d[0] == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(d[1] == doctest::Approx(0.0));
  CHECK(d[2] == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("central differences converge at second order") {
  // w = sin(x^0) cos(x^3) dx^1: dw = cos x0 cos x3 dx0^dx1 + sin x0 sin x3 dx1^dx3
  const FormField f(1, [](const Coordinates& x) {
    return KForm::one_form(0.0, std::sin(x[0]) * std::cos(x[3]), 0.0, 0.0);
  });
  const Coordinates x{0.7, 0.0, 0.0, -0.4};
  KForm exact(2);
  exact[0] = std::cos(x[0]) * std::cos(x[3]);
  exact[4] = std::sin(x[0]) * std::sin(x[3]);
  const double e1 = (ext_deriv_fd(f, x, 1e-2) - exact).max_abs();
  const double e2 = (ext_deriv_fd(f, x, 5e-3) - exact).max_abs();
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  const double er = (ext_deriv_fd(f, x, 1e-2, FdScheme::richardson) - exact).max_abs();
  CHECK(er < e1 * 1e-2);
}

TEST_CASE("d o d vanishes to truncation order") {
  const FormField f(1, [](const Coordinates& x) {
    return KForm::one_form(std::sin(x[1] * x[2]), x[0] * x[3] * x[3],
                           std::exp(0.3 * x[0]), std::cos(x[1]));
  });
  const FormField df = ext_deriv_field(f, 1e-3);
  const KForm ddf = ext_deriv_fd(df, {0.2, 0.5, -0.3, 0.8}, 1e-3);
  CHECK(ddf.max_abs() < 1e-6);
}

TEST_CASE("errors") {
  const FormField top = FormField::constant(KForm::scalar(0.0));
  CHECK_THROWS_AS(ext_deriv_fd(FormField::constant(KForm(4)), {0, 0, 0, 0}, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(ext_deriv_fd(top, {0, 0, 0, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FormField(5, [](const Coordinates&) { return KForm(0); }),
                  std::invalid_argument);
  const FormField wrong(2, [](const Coordinates&) { return KForm(1); });
  CHECK_THROWS_AS(wrong({0, 0, 0, 0}), std::logic_error);
}

TEST_CASE("hodge_field applies the pointwise Hodge map") {
  const Metric eta = Metric::minkowski();
  const FormField f = hodge_field(FormField::constant(KForm::basis({0, 1})), eta);
  CHECK(relative_difference(f({1, 2, 3, 4}), -KForm::basis({2, 3})) == 0.0);
}
