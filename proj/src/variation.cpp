#include "covem/variation.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace covem {

std::string_view to_string(MetricResponse r) {
  switch (r) {
    case MetricResponse::v_tethered:
      return "v_tethered";
    case MetricResponse::metric_independent:
      return "metric_independent";
    case MetricResponse::covector_tethered:
      return "covector_tethered";
  }
  return "unknown";
}

MetricResponse parse_metric_response(std::string_view name) {
  if (name == "v_tethered") return MetricResponse::v_tethered;
  if (name == "metric_independent") return MetricResponse::metric_independent;
  if (name == "covector_tethered") return MetricResponse::covector_tethered;
  throw std::invalid_argument("unknown metric response '" + std::string(name) +
                              "'");
}

void VariationSpec::validate() const {
  if (!(step >= 1e-6 && step <= 1e-2)) {
    throw std::invalid_argument("VariationSpec: step must lie in [1e-6, 1e-2]");
  }
  if (extrapolation != 1 && extrapolation != 2) {
    throw std::invalid_argument("VariationSpec: extrapolation must be 1 or 2");
  }
  for (const Matrix4& d : directions) {
    if ((d - d.transpose()).cwiseAbs().maxCoeff() > 0.0) {
      throw std::invalid_argument("VariationSpec: direction is not symmetric");
    }
  }
  if (!directions.empty() && directions.size() < 10) {
    throw std::invalid_argument(
        "VariationSpec: at least ten directions are needed to span dg");
  }
}

std::vector<Matrix4> coordinate_metric_directions() {
  std::vector<Matrix4> dirs;
  for (int a = 0; a < kDim; ++a) {
    for (int b = a; b < kDim; ++b) {
      Matrix4 d = Matrix4::Zero();
      d(a, b) = 1.0;
      d(b, a) = 1.0;
      dirs.push_back(d);
    }
  }
  return dirs;
}

OracleConditioningError::OracleConditioningError(double condition_number)
    : std::runtime_error("metric variation oracle: extraction system is "
                         "ill-conditioned (condition number " +
                         std::to_string(condition_number) + ")"),
      condition_number_(condition_number) {}

namespace {

// Lambda along g + t dg for a fixed field and medium response.
class PerturbedAction {
 public:
  PerturbedAction(const KForm& f, const ConstitutiveModel& m, const Metric& g,
                  MetricResponse response)
      : f_(f), m_(m), g_(g), response_(response) {
    if (response == MetricResponse::metric_independent) z_ = as_rank4(m, g);
  }

  double operator()(const Matrix4& dg, double t) const {
    const Metric gp(g_.components() + t * dg);
    if (!m_.has_velocity()) return lagrangian(f_, m_, gp).value();
    switch (response_) {
      case MetricResponse::v_tethered: {
        const Vector4& v = m_.velocity();
        const Vector4 vp = v / std::sqrt(-gp(v, v));
        return lagrangian(f_, m_.retethered(vp, gp), gp).value();
      }
      case MetricResponse::covector_tethered: {
        const Vector4 vt = g_.components() * m_.velocity();
        Vector4 vp = gp.inverse() * vt;
        vp /= std::sqrt(-gp(vp, vp));
        return lagrangian(f_, m_.retethered(vp, gp), gp).value();
      }
      case MetricResponse::metric_independent:
        return wedge(f_, hodge(z_->apply(f_), gp)).value() /
               (2.0 * m_.constants().c());
    }
    throw std::logic_error("unhandled metric response");
  }

  double derivative(const Matrix4& dg, double h, int extrapolation) const {
    const auto central = [&](double step) {
      return ((*this)(dg, step) - (*this)(dg, -step)) / (2.0 * step);
    };
    const double coarse = central(h);
    if (extrapolation == 1) return coarse;
    return (4.0 * central(0.5 * h) - coarse) / 3.0;
  }

 private:
  const KForm& f_;
  const ConstitutiveModel& m_;
  const Metric& g_;
  MetricResponse response_;
  std::optional<ConstitutiveTensor> z_;
};

}  // namespace

double perturbed_lagrangian(const KForm& f, const ConstitutiveModel& m,
                            const Metric& g, MetricResponse response,
                            const Matrix4& dg, double t) {
  return PerturbedAction(f, m, g, response)(dg, t);
}

double lagrangian_derivative(const KForm& f, const ConstitutiveModel& m,
                             const Metric& g, MetricResponse response,
                             const Matrix4& dg, double h, int extrapolation) {
  return PerturbedAction(f, m, g, response).derivative(dg, h, extrapolation);
}

StressEnergy metric_variation_oracle(const KForm& f, const ConstitutiveModel& m,
                                     const Metric& g, MetricResponse response,
                                     const VariationSpec& spec) {
  spec.validate();
  const std::vector<Matrix4> dirs =
      spec.directions.empty() ? coordinate_metric_directions() : spec.directions;

  const PerturbedAction action(f, m, g, response);
  // Unknowns T_ab for a <= b, in row-major upper-triangular order.
  const double factor = -g.sqrt_abs_det() / (2.0 * m.constants().c());
  const auto n = static_cast<Eigen::Index>(dirs.size());
  Eigen::MatrixXd a(n, 10);
  Eigen::VectorXd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Matrix4& dg = dirs[static_cast<std::size_t>(k)];
    const Matrix4 x = g.inverse() * dg * g.inverse();
    int col = 0;
    for (int p = 0; p < kDim; ++p) {
      for (int q = p; q < kDim; ++q) {
        a(k, col++) = factor * (p == q ? x(p, p) : x(p, q) + x(q, p));
      }
    }
    y(k) = action.derivative(dg, spec.step, spec.extrapolation);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0
                          ? sv(0) / sv(sv.size() - 1)
                          : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxOracleCondition)) throw OracleConditioningError(cond);
  const Eigen::VectorXd t = svd.solve(y);

  Matrix4 out;
  int col = 0;
  for (int p = 0; p < kDim; ++p) {
    for (int q = p; q < kDim; ++q) {
      out(p, q) = t(col);
      out(q, p) = t(col);
      ++col;
    }
  }
  return StressEnergy(out);
}

}  // namespace covem
