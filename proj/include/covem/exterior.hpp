#pragma once

// Pointwise exterior algebra on a 4-dimensional Lorentzian vector space.
//
// Conventions (used consistently by every module):
//   * signature (-,+,+,+), index 0 timelike;
//   * forms are stored by their independent components F_{i<j<...} in
//     lexicographic order, and the full antisymmetric array is related to
//     them by F = sum_{i<j} F_ij dx^i ^ dx^j ("determinant" normalisation),
//     so that (a ^ b)_ij = a_i b_j - a_j b_i;
//   * orientation: eps_{0123} = +1 and *1 = sqrt|g| dx^0^dx^1^dx^2^dx^3.

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace covem {

using Vector4 = Eigen::Vector4d;  ///< contravariant components X^a
using Matrix4 = Eigen::Matrix4d;  ///< rank-2 covariant array T_ab
using Coordinates = std::array<double, 4>;

inline constexpr int kDim = 4;

/// Number of stored components of a k-form, C(4, k).
constexpr std::size_t form_size(int degree) {
  constexpr std::size_t table[] = {1, 4, 6, 4, 1};
  return (degree < 0 || degree > kDim) ? 0 : table[degree];
}

/// Bit mask (bit i set <=> index i present) of the n-th stored component of a
/// k-form, in lexicographic order.
unsigned component_mask(int degree, std::size_t n);
/// Inverse of component_mask.
std::size_t component_position(unsigned mask);
/// Sorted index list of the n-th stored component of a k-form.
std::vector<int> component_indices(int degree, std::size_t n);

/// Degree-k antisymmetric covariant tensor at a point.
class KForm {
 public:
  KForm() : KForm(0) {}
  explicit KForm(int degree);
  KForm(int degree, std::initializer_list<double> components);
  KForm(int degree, std::span<const double> components);

  static KForm scalar(double value);
  /// dx^{i1} ^ ... ^ dx^{ik}; indices need not be sorted (sign is applied),
  /// repeated indices give the zero form.
  static KForm basis(std::initializer_list<int> indices);
  static KForm one_form(double a0, double a1, double a2, double a3) {
    return KForm(1, {a0, a1, a2, a3});
  }

  int degree() const { return degree_; }
  std::size_t size() const { return form_size(degree_); }
  std::span<const double> components() const { return {c_.data(), size()}; }
  std::span<double> components() { return {c_.data(), size()}; }

  double operator[](std::size_t n) const { return c_[n]; }
  double& operator[](std::size_t n) { return c_[n]; }

  /// Component of the full antisymmetric array at arbitrary indices.
  double at(std::span<const int> indices) const;
  double at(std::initializer_list<int> indices) const {
    return at(std::span<const int>(indices.begin(), indices.size()));
  }

  /// Single component of a 0-form or a 4-form.
  double value() const;
  /// Components of a 1-form as a column vector.
  Vector4 as_vector() const;
  static KForm from_vector(const Vector4& v);

  double max_abs() const;
  double norm() const;  ///< Euclidean norm of the stored components

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(double s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator-(KForm a) { return a *= -1.0; }
  friend KForm operator*(double s, KForm a) { return a *= s; }
  friend KForm operator*(KForm a, double s) { return a *= s; }
  friend KForm operator/(KForm a, double s) { return a *= 1.0 / s; }

 private:
  void require_same_degree(const KForm& o) const;

  int degree_;
  std::array<double, 6> c_{};
};

/// Full antisymmetric array (4^k entries, row-major in the indices).
std::vector<double> expand(const KForm& w);
/// Inverse of expand; antisymmetry of the input is not checked.
KForm compress(int degree, std::span<const double> full);

/// Symmetric, invertible metric of signature (-,+,+,+).
class Metric {
 public:
  /// Validates symmetry, non-degeneracy and Lorentzian signature.
  explicit Metric(const Matrix4& g);

  static Metric minkowski();
  static Metric diagonal(const std::array<double, 4>& d);

  const Matrix4& components() const { return g_; }
  const Matrix4& inverse() const { return ginv_; }
  double det() const { return det_; }
  double sqrt_abs_det() const { return sqrt_abs_det_; }

  double operator()(const Vector4& x, const Vector4& y) const {
    return x.dot(g_ * y);
  }

  static constexpr double kDegenerateDet = 1e-10;

 private:
  Matrix4 g_;
  Matrix4 ginv_;
  double det_;
  double sqrt_abs_det_;
};

KForm wedge(const KForm& a, const KForm& b);
KForm wedge(const KForm& a, const KForm& b, const KForm& c);

/// (i_X w)_{a2..ak} = X^{a1} w_{a1 a2..ak}.
KForm interior(const Vector4& x, const KForm& w);

KForm flat(const Vector4& x, const Metric& g);
Vector4 sharp(const KForm& w, const Metric& g);

/// Components w^{I} of a k-form with all indices raised by g.
KForm raise(const KForm& w, const Metric& g);

/// Induced inner product <a, b> = sum_{I increasing} a_I b^I.
double inner(const KForm& a, const KForm& b, const Metric& g);

/// Hodge map; a ^ *b = <a, b> *1.
KForm hodge(const KForm& w, const Metric& g);

/// Volume form *1.
KForm volume_form(const Metric& g);

/// g-orthonormal frame whose first vector is the unit timelike U; the spatial
/// legs come from Gram-Schmidt on the coordinate vectors d_1, d_2, d_3.
std::array<Vector4, 4> orthonormal_frame(const Vector4& u, const Metric& g);

/// Full antisymmetric 4x4 array of a 2-form, and back.
Matrix4 to_matrix(const KForm& two_form);
KForm two_form(const Matrix4& antisymmetric);

/// a (x) b for 1-forms.
Matrix4 outer(const KForm& a, const KForm& b);

/// i_a A (x) i^a B for two 2-forms, summed over a coordinate basis with the
/// index raised by g: result_bd = A_ab g^{ac} B_cd.
Matrix4 contracted_product(const KForm& a, const KForm& b, const Metric& g);

/// Spatial projector acting on 1-forms: P(a) = a + U~ a(U).
Matrix4 spatial_projector(const Vector4& u, const Metric& g);

/// |a - b| / max(|a|, |b|, scale) in the max-abs norm; 0 when all vanish.
double relative_difference(const KForm& a, const KForm& b, double scale = 0.0);
double relative_difference(const Matrix4& a, const Matrix4& b,
                           double scale = 0.0);

}  // namespace covem
