#include "covem/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace covem {

namespace {

// Lexicographic component masks for each degree.
constexpr unsigned kMasks0[] = {0b0000};
constexpr unsigned kMasks1[] = {0b0001, 0b0010, 0b0100, 0b1000};
constexpr unsigned kMasks2[] = {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
constexpr unsigned kMasks3[] = {0b0111, 0b1011, 0b1101, 0b1110};
constexpr unsigned kMasks4[] = {0b1111};

constexpr const unsigned* kMaskTable[] = {kMasks0, kMasks1, kMasks2, kMasks3,
                                          kMasks4};

// mask -> position within its degree
constexpr std::array<std::size_t, 16> kPosition = [] {
  std::array<std::size_t, 16> p{};
  const unsigned* tables[] = {kMasks0, kMasks1, kMasks2, kMasks3, kMasks4};
  constexpr std::size_t sizes[] = {1, 4, 6, 4, 1};
  for (int k = 0; k <= 4; ++k) {
    for (std::size_t n = 0; n < sizes[k]; ++n) p[tables[k][n]] = n;
  }
  return p;
}();

void require_degree(int degree) {
  if (degree < 0 || degree > kDim) {
    throw std::invalid_argument("KForm degree must be in 0..4, got " +
                                std::to_string(degree));
  }
}

// Sign of the permutation that sorts the concatenation (S, T) of two disjoint
// increasing index sets given as masks.
int shuffle_sign(unsigned s, unsigned t) {
  int inversions = 0;
  for (int i = 0; i < kDim; ++i) {
    if (s & (1u << i)) inversions += std::popcount(t & ((1u << i) - 1u));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// det of the k x k submatrix m[rows, cols] for index masks of equal size.
double minor_det(const Matrix4& m, unsigned rows, unsigned cols) {
  int r[4];
  int c[4];
  int k = 0;
  int kc = 0;
  for (int i = 0; i < kDim; ++i) {
    if (rows & (1u << i)) r[k++] = i;
    if (cols & (1u << i)) c[kc++] = i;
  }
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return m(r[0], c[0]);
    case 2:
      return m(r[0], c[0]) * m(r[1], c[1]) - m(r[0], c[1]) * m(r[1], c[0]);
    case 3: {
      Eigen::Matrix3d s;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s(i, j) = m(r[i], c[j]);
      return s.determinant();
    }
    default:
      return m.determinant();
  }
}

}  // namespace

unsigned component_mask(int degree, std::size_t n) {
  require_degree(degree);
  if (n >= form_size(degree)) throw std::out_of_range("component index");
  return kMaskTable[degree][n];
}

std::size_t component_position(unsigned mask) { return kPosition.at(mask); }

std::vector<int> component_indices(int degree, std::size_t n) {
  const unsigned m = component_mask(degree, n);
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i)
    if (m & (1u << i)) out.push_back(i);
  return out;
}

// --- KForm -----------------------------------------------------------------

KForm::KForm(int degree) : degree_(degree) { require_degree(degree); }

KForm::KForm(int degree, std::initializer_list<double> components)
    : KForm(degree, std::span<const double>(components.begin(),
                                            components.size())) {}

KForm::KForm(int degree, std::span<const double> components) : KForm(degree) {
  if (components.size() != size()) {
    throw std::invalid_argument("KForm: degree " + std::to_string(degree) +
                                " needs " + std::to_string(size()) +
                                " components, got " +
                                std::to_string(components.size()));
  }
  std::copy(components.begin(), components.end(), c_.begin());
}

KForm KForm::scalar(double value) {
  KForm w(0);
  w.c_[0] = value;
  return w;
}

KForm KForm::basis(std::initializer_list<int> indices) {
  const int k = static_cast<int>(indices.size());
  KForm w(k);
  unsigned mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= kDim) throw std::invalid_argument("basis index range");
    if (mask & (1u << i)) return w;
    mask |= 1u << i;
  }
  w.c_[component_position(mask)] = 1.0;
  // sign of the sorting permutation
  int inversions = 0;
  const std::vector<int> idx(indices);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inversions;
  if (inversions % 2) w *= -1.0;
  return w;
}

double KForm::at(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != degree_) {
    throw std::invalid_argument("KForm::at: wrong number of indices");
  }
  unsigned mask = 0;
  int inversions = 0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const int a = indices[i];
    if (a < 0 || a >= kDim) throw std::out_of_range("KForm::at index");
    if (mask & (1u << a)) return 0.0;
    mask |= 1u << a;
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (a > indices[j]) ++inversions;
  }
  const double v = c_[component_position(mask)];
  return (inversions % 2) ? -v : v;
}

double KForm::value() const {
  if (degree_ != 0 && degree_ != kDim) {
    throw std::invalid_argument("KForm::value needs a 0-form or 4-form");
  }
  return c_[0];
}

Vector4 KForm::as_vector() const {
  if (degree_ != 1) throw std::invalid_argument("KForm::as_vector: not a 1-form");
  return {c_[0], c_[1], c_[2], c_[3]};
}

KForm KForm::from_vector(const Vector4& v) {
  return KForm(1, {v(0), v(1), v(2), v(3)});
}

double KForm::max_abs() const {
  double m = 0.0;
  for (double x : components()) m = std::max(m, std::abs(x));
  return m;
}

double KForm::norm() const {
  double s = 0.0;
  for (double x : components()) s += x * x;
  return std::sqrt(s);
}

void KForm::require_same_degree(const KForm& o) const {
  if (o.degree_ != degree_) {
    throw std::invalid_argument("KForm arithmetic on different degrees");
  }
}

KForm& KForm::operator+=(const KForm& o) {
  require_same_degree(o);
  for (std::size_t n = 0; n < size(); ++n) c_[n] += o.c_[n];
  return *this;
}

KForm& KForm::operator-=(const KForm& o) {
  require_same_degree(o);
  for (std::size_t n = 0; n < size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

KForm& KForm::operator*=(double s) {
  for (std::size_t n = 0; n < size(); ++n) c_[n] *= s;
  return *this;
}

std::vector<double> expand(const KForm& w) {
  const int k = w.degree();
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= kDim;
  std::vector<double> full(total, 0.0);
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (std::size_t flat_index = 0; flat_index < total; ++flat_index) {
    std::size_t rem = flat_index;
    for (int i = k - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = static_cast<int>(rem % kDim);
      rem /= kDim;
    }
    full[flat_index] = w.at(idx);
  }
  return full;
}

KForm compress(int degree, std::span<const double> full) {
  KForm w(degree);
  for (std::size_t n = 0; n < w.size(); ++n) {
    std::size_t flat_index = 0;
    for (int i : component_indices(degree, n))
      flat_index = flat_index * kDim + static_cast<std::size_t>(i);
    w[n] = full[flat_index];
  }
  return w;
}

// --- Metric ----------------------------------------------------------------

Metric::Metric(const Matrix4& g) : g_(g) {
  if (!g.allFinite()) throw std::invalid_argument("Metric: non-finite entry");
  const double scale = g.cwiseAbs().maxCoeff();
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("Metric: components are not symmetric");
  }
  g_ = 0.5 * (g + g.transpose());
  det_ = g_.determinant();
  if (!(std::abs(det_) >= kDegenerateDet)) {
    throw std::invalid_argument("Metric: degenerate (|det g| below 1e-10)");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4> eig(g_, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();  // ascending
  if (!(ev(0) < 0.0 && ev(1) > 0.0)) {
    throw std::invalid_argument("Metric: signature is not (-,+,+,+)");
  }
  ginv_ = g_.inverse();
  sqrt_abs_det_ = std::sqrt(std::abs(det_));
}

Metric Metric::minkowski() { return diagonal({-1.0, 1.0, 1.0, 1.0}); }

Metric Metric::diagonal(const std::array<double, 4>& d) {
  Matrix4 g = Matrix4::Zero();
  for (int i = 0; i < kDim; ++i) g(i, i) = d[static_cast<std::size_t>(i)];
  return Metric(g);
}

// --- algebra ---------------------------------------------------------------

KForm wedge(const KForm& a, const KForm& b) {
  const int p = a.degree();
  const int q = b.degree();
  if (p + q > kDim) {
    throw std::invalid_argument("wedge: degree " + std::to_string(p) + " + " +
                                std::to_string(q) + " exceeds 4");
  }
  KForm out(p + q);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned ma = component_mask(p, i);
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const unsigned mb = component_mask(q, j);
      if (ma & mb) continue;
      out[component_position(ma | mb)] += shuffle_sign(ma, mb) * a[i] * b[j];
    }
  }
  return out;
}

KForm wedge(const KForm& a, const KForm& b, const KForm& c) {
  return wedge(wedge(a, b), c);
}

KForm interior(const Vector4& x, const KForm& w) {
  const int k = w.degree();
  if (k == 0) throw std::invalid_argument("interior: cannot contract a 0-form");
  KForm out(k - 1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const unsigned mj = component_mask(k - 1, n);
    double sum = 0.0;
    for (int a = 0; a < kDim; ++a) {
      if (mj & (1u << a)) continue;
      const double sign = shuffle_sign(1u << a, mj);
      sum += sign * x(a) * w[component_position(mj | (1u << a))];
    }
    out[n] = sum;
  }
  return out;
}

KForm flat(const Vector4& x, const Metric& g) {
  return KForm::from_vector(g.components() * x);
}

Vector4 sharp(const KForm& w, const Metric& g) {
  return g.inverse() * w.as_vector();
}

KForm raise(const KForm& w, const Metric& g) {
  const int k = w.degree();
  KForm out(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const unsigned mi = component_mask(k, i);
    double sum = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      sum += minor_det(g.inverse(), mi, component_mask(k, j)) * w[j];
    }
    out[i] = sum;
  }
  return out;
}

double inner(const KForm& a, const KForm& b, const Metric& g) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("inner: degrees differ");
  }
  const KForm bu = raise(b, g);
  double sum = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) sum += a[n] * bu[n];
  return sum;
}

KForm hodge(const KForm& w, const Metric& g) {
  const int k = w.degree();
  const KForm wu = raise(w, g);
  KForm out(kDim - k);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const unsigned mj = component_mask(kDim - k, n);
    const unsigned mi = 0b1111u & ~mj;
    // (*w)_J = sqrt|g| w^{I} eps_{I J}, I the complement of J.
    out[n] = g.sqrt_abs_det() * shuffle_sign(mi, mj) *
             wu[component_position(mi)];
  }
#ifdef COVEM_MUTANT_HODGE_SIGN
  out *= -1.0;
#endif
  return out;
}

KForm volume_form(const Metric& g) {
  return KForm(kDim, {g.sqrt_abs_det()});
}

std::array<Vector4, 4> orthonormal_frame(const Vector4& u, const Metric& g) {
  std::array<Vector4, 4> e;
  const double uu = g(u, u);
  if (!(uu < 0.0)) throw std::invalid_argument("orthonormal_frame: U not timelike");
  e[0] = u / std::sqrt(-uu);
  for (int k = 1; k < kDim; ++k) {
    Vector4 v = Vector4::Unit(k);
    // subtract projections; e[0] has norm -1, the others +1
    v += g(v, e[0]) * e[0];
    for (int j = 1; j < k; ++j) v -= g(v, e[j]) * e[j];
    const double n2 = g(v, v);
    if (!(n2 > 0.0)) {
      throw std::invalid_argument("orthonormal_frame: degenerate spatial leg");
    }
    e[static_cast<std::size_t>(k)] = v / std::sqrt(n2);
  }
  return e;
}

Matrix4 to_matrix(const KForm& f) {
  if (f.degree() != 2) throw std::invalid_argument("to_matrix: not a 2-form");
  Matrix4 m = Matrix4::Zero();
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) m(a, b) = f.at({a, b});
  return m;
}

KForm two_form(const Matrix4& m) {
  KForm f(2);
  for (std::size_t n = 0; n < f.size(); ++n) {
    const auto idx = component_indices(2, n);
    f[n] = m(idx[0], idx[1]);
  }
  return f;
}

Matrix4 outer(const KForm& a, const KForm& b) {
  return a.as_vector() * b.as_vector().transpose();
}

Matrix4 contracted_product(const KForm& a, const KForm& b, const Metric& g) {
  return to_matrix(a).transpose() * g.inverse() * to_matrix(b);
}

Matrix4 spatial_projector(const Vector4& u, const Metric& g) {
  return Matrix4::Identity() + (g.components() * u) * u.transpose();
}

double relative_difference(const KForm& a, const KForm& b, double scale) {
  const double d = (a - b).max_abs();
  const double s = std::max({a.max_abs(), b.max_abs(), scale});
  return s == 0.0 ? d : d / s;
}

double relative_difference(const Matrix4& a, const Matrix4& b, double scale) {
  const double d = (a - b).cwiseAbs().maxCoeff();
  const double s = std::max({a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff(),
                             scale});
  return s == 0.0 ? d : d / s;
}

}  // namespace covem
