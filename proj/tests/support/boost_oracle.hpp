#pragma once

// Effective constitutive blocks seen by a boosted observer in an isotropic
// medium at rest in Minkowski space, computed with textbook 3-vector field
// components and explicit Lorentz matrices (no Hodge map involved).
//
// Rest-frame components: F_0i = E_i, F_ij = eps_ijk c B_k, and the same for
// G with (D, H / c).

#include <Eigen/Dense>

#include <array>
#include <cmath>

namespace covem::oracle {

struct IsotropicRestMedium {
  double epsilon;
  double mu;
  double c;
  double eps0;
};

inline double eps3(int i, int j, int k) {
  return 0.5 * (i - j) * (j - k) * (k - i);
}

inline Eigen::Matrix4d field_tensor(const Eigen::Vector3d& el,
                                    const Eigen::Vector3d& mag_times_c) {
  Eigen::Matrix4d f = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 3; ++i) {
    f(0, i + 1) = el(i);
    f(i + 1, 0) = -el(i);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) f(i + 1, j + 1) += eps3(i, j, k) * mag_times_c(k);
  }
  return f;
}

inline void split_tensor(const Eigen::Matrix4d& f, Eigen::Vector3d& el,
                         Eigen::Vector3d& mag_times_c) {
  for (int i = 0; i < 3; ++i) {
    el(i) = f(0, i + 1);
    mag_times_c(i) = 0.0;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        mag_times_c(k) += 0.5 * eps3(i, j, k) * f(i + 1, j + 1);
}

/// Lorentz matrix of the chart moving with velocity beta * c along `axis`.
inline Eigen::Matrix4d boost_matrix(double beta, int axis) {
  const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  Eigen::Matrix4d l = Eigen::Matrix4d::Identity();
  l(0, 0) = l(axis, axis) = gamma;
  l(0, axis) = l(axis, 0) = -gamma * beta;
  return l;
}

/// Blocks (de, db, he, hb) with d' = de e' + db b', h' = he e' + hb b' in
/// the frame of an observer moving with beta along `axis`.
inline std::array<Eigen::Matrix3d, 4> boosted_isotropic_blocks(
    const IsotropicRestMedium& m, double beta, int axis) {
  const Eigen::Matrix4d l = boost_matrix(beta, axis);  // x' = L x
  const Eigen::Matrix4d linv = l.inverse();
  const double mu0 = 1.0 / (m.eps0 * m.c * m.c);
  std::array<Eigen::Matrix3d, 4> out;
  for (int col = 0; col < 6; ++col) {
    Eigen::Vector3d e_obs = Eigen::Vector3d::Zero();
    Eigen::Vector3d b_obs = Eigen::Vector3d::Zero();
    if (col < 3) e_obs(col) = 1.0; else b_obs(col - 3) = 1.0;
    // observer chart -> rest chart: F_rest = L^T F' L
    const Eigen::Matrix4d f_rest = l.transpose() * field_tensor(e_obs, m.c * b_obs) * l;
    Eigen::Vector3d e_rest, cb_rest;
    split_tensor(f_rest, e_rest, cb_rest);
    const Eigen::Vector3d d_rest = m.eps0 * m.epsilon * e_rest;
    const Eigen::Vector3d h_rest = (cb_rest / m.c) / (mu0 * m.mu);
    const Eigen::Matrix4d g_obs =
        linv.transpose() * field_tensor(d_rest, h_rest / m.c) * linv;
    Eigen::Vector3d d_obs, h_over_c;
    split_tensor(g_obs, d_obs, h_over_c);
    const Eigen::Vector3d h_obs = m.c * h_over_c;
    if (col < 3) {
      out[0].col(col) = d_obs;
      out[2].col(col) = h_obs;
    } else {
      out[1].col(col - 3) = d_obs;
      out[3].col(col - 3) = h_obs;
    }
  }
  return out;
}

}  // namespace covem::oracle
