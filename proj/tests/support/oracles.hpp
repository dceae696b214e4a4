#pragma once

// Brute-force reference implementations on fully expanded index arrays.
// Deliberately independent of the mask-based code in src/.

#include "covem/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace covem::oracle {

inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

/// Levi-Civita symbol with eps_{0123} = +1 for arbitrary index lists.
inline int levi_civita(const std::vector<int>& idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return 0;
  return permutation_sign(idx);
}

inline std::size_t flat_index(const std::vector<int>& idx) {
  std::size_t n = 0;
  for (int i : idx) n = n * 4 + static_cast<std::size_t>(i);
  return n;
}

inline std::vector<int> unflatten(std::size_t n, int k) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    idx[static_cast<std::size_t>(i)] = static_cast<int>(n % 4);
    n /= 4;
  }
  return idx;
}

inline std::size_t power4(int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= 4;
  return n;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// (a ^ b)_{i1..i(p+q)} = 1/(p! q!) sum_sigma sgn(sigma) a_{..} b_{..}
inline std::vector<double> wedge_full(const std::vector<double>& a, int p,
                                      const std::vector<double>& b, int q) {
  const int k = p + q;
  std::vector<double> out(power4(k), 0.0);
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (std::size_t n = 0; n < out.size(); ++n) {
    const auto idx = unflatten(n, k);
    std::iota(perm.begin(), perm.end(), 0);
    double sum = 0.0;
    do {
      std::vector<int> ia, ib;
      for (int i = 0; i < p; ++i) ia.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      for (int i = p; i < k; ++i) ib.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      sum += permutation_sign(perm) * a[flat_index(ia)] * b[flat_index(ib)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    out[n] = sum / (factorial(p) * factorial(q));
  }
  return out;
}

/// X^{a} w_{a ...}
inline std::vector<double> interior_full(const Vector4& x,
                                         const std::vector<double>& w, int k) {
  std::vector<double> out(power4(k - 1), 0.0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    auto rest = unflatten(n, k - 1);
    double sum = 0.0;
    for (int a = 0; a < 4; ++a) {
      std::vector<int> idx{a};
      idx.insert(idx.end(), rest.begin(), rest.end());
      sum += x(a) * w[flat_index(idx)];
    }
    out[n] = sum;
  }
  return out;
}

/// all indices raised with g^{ab}
inline std::vector<double> raise_full(const std::vector<double>& w, int k,
                                      const Matrix4& ginv) {
  std::vector<double> out(power4(k), 0.0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const auto up = unflatten(n, k);
    double sum = 0.0;
    for (std::size_t m = 0; m < out.size(); ++m) {
      const auto down = unflatten(m, k);
      double factor = w[m];
      for (int i = 0; i < k && factor != 0.0; ++i)
        factor *= ginv(up[static_cast<std::size_t>(i)], down[static_cast<std::size_t>(i)]);
      sum += factor;
    }
    out[n] = sum;
  }
  return out;
}

/// (*w)_{b..} = 1/k! w^{a..} sqrt|g| eps_{a.. b..}
inline std::vector<double> hodge_full(const std::vector<double>& w, int k,
                                      const Matrix4& g) {
  const Matrix4 ginv = g.inverse();
  const double root = std::sqrt(std::abs(g.determinant()));
  const auto wu = raise_full(w, k, ginv);
  std::vector<double> out(power4(4 - k), 0.0);
  for (std::size_t n = 0; n < out.size(); ++n) {
    const auto tail = unflatten(n, 4 - k);
    double sum = 0.0;
    for (std::size_t m = 0; m < wu.size(); ++m) {
      auto idx = unflatten(m, k);
      idx.insert(idx.end(), tail.begin(), tail.end());
      sum += wu[m] * levi_civita(idx);
    }
    out[n] = root * sum / factorial(k);
  }
  return out;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace covem::oracle
