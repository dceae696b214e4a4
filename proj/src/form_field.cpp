#include "covem/form_field.hpp"

#include <bit>
#include <string>
#include <utility>

namespace covem {

FormField::FormField(int degree, Function f, std::string chart)
    : degree_(degree), f_(std::move(f)), chart_(std::move(chart)) {
  if (degree < 0 || degree > kDim) {
    throw std::invalid_argument("FormField: degree out of range");
  }
  if (!f_) throw std::invalid_argument("FormField: empty function");
}

FormField FormField::constant(const KForm& w, std::string chart) {
  return FormField(w.degree(), [w](const Coordinates&) { return w; },
                   std::move(chart));
}

KForm FormField::operator()(const Coordinates& x) const {
  KForm w = f_(x);
  if (w.degree() != degree_) {
    throw std::logic_error("FormField returned degree " +
                           std::to_string(w.degree()) + ", expected " +
                           std::to_string(degree_));
  }
  return w;
}

namespace {

// Central-difference partial derivatives d_a w for all four coordinates.
std::array<KForm, 4> partials(const FormField& f, const Coordinates& x,
                              double h) {
  std::array<KForm, 4> d;
  for (int a = 0; a < kDim; ++a) {
    Coordinates xp = x;
    Coordinates xm = x;
    xp[static_cast<std::size_t>(a)] += h;
    xm[static_cast<std::size_t>(a)] -= h;
    d[static_cast<std::size_t>(a)] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return d;
}

KForm assemble(int k, const std::array<KForm, 4>& d) {
  KForm out(k + 1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const unsigned mask = component_mask(k + 1, n);
    double sum = 0.0;
    int position = 0;
    for (int a = 0; a < kDim; ++a) {
      if (!(mask & (1u << a))) continue;
      const double sign = (position % 2 == 0) ? 1.0 : -1.0;
      const unsigned rest = mask & ~(1u << a);
      sum += sign * d[static_cast<std::size_t>(a)][component_position(rest)];
      ++position;
    }
    out[n] = sum;
  }
  return out;
}

}  // namespace

KForm ext_deriv_fd(const FormField& f, const Coordinates& x, double h,
                   FdScheme scheme) {
  const int k = f.degree();
  if (k >= kDim) {
    throw std::invalid_argument(
        "ext_deriv_fd: the derivative of a 4-form does not exist in 4D");
  }
  if (!(h > 0.0)) throw std::invalid_argument("ext_deriv_fd: step must be > 0");
  const KForm coarse = assemble(k, partials(f, x, h));
  if (scheme == FdScheme::central) return coarse;
  const KForm fine = assemble(k, partials(f, x, 0.5 * h));
  return (4.0 * fine - coarse) / 3.0;
}

FormField ext_deriv_field(FormField f, double h, FdScheme scheme) {
  const int k = f.degree();
  const std::string chart = f.chart();
  return FormField(
      k + 1,
      [f = std::move(f), h, scheme](const Coordinates& x) {
        return ext_deriv_fd(f, x, h, scheme);
      },
      chart);
}

FormField hodge_field(FormField f, const Metric& g) {
  const int k = f.degree();
  const std::string chart = f.chart();
  return FormField(
      kDim - k,
      [f = std::move(f), g](const Coordinates& x) { return hodge(f(x), g); },
      chart);
}

}  // namespace covem
