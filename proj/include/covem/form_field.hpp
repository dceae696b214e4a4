#pragma once

#include "covem/exterior.hpp"

#include <functional>
#include <string>

namespace covem {

/// A k-form valued function of the chart coordinates.
class FormField {
 public:
  using Function = std::function<KForm(const Coordinates&)>;

  FormField(int degree, Function f, std::string chart = "cartesian");

  /// Constant field.
  static FormField constant(const KForm& w, std::string chart = "cartesian");

  int degree() const { return degree_; }
  const std::string& chart() const { return chart_; }

  /// Evaluates and checks the returned degree.
  KForm operator()(const Coordinates& x) const;

 private:
  int degree_;
  Function f_;
  std::string chart_;
};

enum class FdScheme {
  central,     ///< second-order central differences
  richardson,  ///< central differences at h and h/2, Richardson-extrapolated
};

/// Finite-difference exterior derivative of a k-form field at x, k < 4:
/// (dw)_{a0..ak} = sum_i (-1)^i d_{a_i} w_{a0..^a_i..ak}.
KForm ext_deriv_fd(const FormField& f, const Coordinates& x, double h,
                   FdScheme scheme = FdScheme::central);

/// The field x -> ext_deriv_fd(f, x, h), for composing derivatives.
FormField ext_deriv_field(FormField f, double h,
                          FdScheme scheme = FdScheme::central);

/// The field x -> *f(x) for a fixed metric.
FormField hodge_field(FormField f, const Metric& g);

}  // namespace covem
