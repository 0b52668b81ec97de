#include "gosset/structure_constants.hpp"

#include <cmath>

namespace gosset::apposition {

StructureConstants build_structure_constants(const roots::RootSystem& rs,
                                             const roots::HighestRootData& hr,
                                             const roots::KillingData& kd,
                                             std::uint64_t jacobi_seed, int jacobi_samples) {
  StructureConstants sc;
  sc.rs = rs;
  sc.hr = hr;
  sc.kd = kd;
  sc.chev = build_chevalley(rs, kd);
  check_jacobi_sample(rs, sc.chev, jacobi_seed, jacobi_samples);

  const int nr = rs.num_roots(), l = rs.rank;
  sc.dim = nr + l;

  std::vector<double> sqrt_kappa(nr);
  for (int i = 0; i < nr; ++i) sqrt_kappa[i] = std::sqrt(double(sc.chev.kappa[i]));

  sc.nhat = Eigen::MatrixXd::Zero(nr, nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      if (sc.chev.n[i][j] == 0) continue;
      int k = rs.index_of([&] {
        roots::Coords s = rs.roots[i];
        for (int m = 0; m < l; ++m) s[m] += rs.roots[j][m];
        return s;
      }());
      sc.nhat(i, j) = double(sc.chev.n[i][j]) * sqrt_kappa[k] / (sqrt_kappa[i] * sqrt_kappa[j]);
    }

  sc.cartan_action = Eigen::MatrixXd::Zero(nr, l);
  for (int p = 0; p < nr; ++p)
    for (int i = 0; i < l; ++i) {
      Rational v = 0;
      for (int j = 0; j < l; ++j) v += Rational(rs.roots[p][j]) * kd.K(j, i);
      sc.cartan_action(p, i) = to_double(v);
    }
  return sc;
}

Eigen::VectorXd bracket(const StructureConstants& sc, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(sc.dim);
  for (int i = 0; i < nr; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < nr; ++j) {
      if (v[j] == 0) continue;
      const double c = u[i] * v[j];
      if (sc.rs.neg_of[i] == j) {
        // [e_phi, e_{-phi}] = w_phi = sum_k phi_k t_k after unit-pair scaling.
        for (int k = 0; k < l; ++k) out[nr + k] += c * sc.rs.roots[i][k];
      } else if (sc.nhat(i, j) != 0) {
        roots::Coords s = sc.rs.roots[i];
        for (int m = 0; m < l; ++m) s[m] += sc.rs.roots[j][m];
        out[sc.rs.index_of(s)] += c * sc.nhat(i, j);
      }
    }
  }
  for (int k = 0; k < l; ++k) {
    const double uk = u[nr + k], vk = v[nr + k];
    if (uk != 0)
      for (int j = 0; j < nr; ++j) out[j] += uk * v[j] * sc.cartan_action(j, k);
    if (vk != 0)
      for (int i = 0; i < nr; ++i) out[i] -= vk * u[i] * sc.cartan_action(i, k);
  }
  return out;
}

Eigen::MatrixXd ad_matrix(const StructureConstants& sc, const Eigen::VectorXd& v) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(sc.dim, sc.dim);
  for (int i = 0; i < nr; ++i) {
    if (v[i] == 0) continue;
    const double c = v[i];
    for (int j = 0; j < nr; ++j) {
      if (sc.rs.neg_of[i] == j) {
        for (int k = 0; k < l; ++k) ad(nr + k, j) += c * sc.rs.roots[i][k];
      } else if (sc.nhat(i, j) != 0) {
        roots::Coords s = sc.rs.roots[i];
        for (int m = 0; m < l; ++m) s[m] += sc.rs.roots[j][m];
        ad(sc.rs.index_of(s), j) += c * sc.nhat(i, j);
      }
    }
    // [e_phi, t_k] = -cartan_action(phi, k) e_phi.
    for (int k = 0; k < l; ++k) ad(i, nr + k) -= c * sc.cartan_action(i, k);
  }
  for (int k = 0; k < l; ++k) {
    if (v[nr + k] == 0) continue;
    for (int j = 0; j < nr; ++j) ad(j, j) += v[nr + k] * sc.cartan_action(j, k);
  }
  return ad;
}

double killing_form(const StructureConstants& sc, const Eigen::VectorXd& u,
                    const Eigen::VectorXd& v) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  double out = 0;
  for (int i = 0; i < nr; ++i) out += u[i] * v[sc.rs.neg_of[i]];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) out += u[nr + i] * v[nr + j] * to_double(sc.kd.K(i, j));
  return out;
}

std::complex<double> killing_form(const StructureConstants& sc, const Eigen::VectorXcd& u,
                                  const Eigen::VectorXcd& v) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  std::complex<double> out = 0;
  for (int i = 0; i < nr; ++i) out += u[i] * v[sc.rs.neg_of[i]];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) out += u[nr + i] * v[nr + j] * to_double(sc.kd.K(i, j));
  return out;
}

Eigen::MatrixXd theta_matrix(const StructureConstants& sc) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  Eigen::MatrixXd th = Eigen::MatrixXd::Zero(sc.dim, sc.dim);
  for (int i = 0; i < nr; ++i) th(sc.rs.neg_of[i], i) = -1;
  for (int k = 0; k < l; ++k) th(nr + k, nr + k) = -1;
  return th;
}

CyclicElement build_cyclic_element(const StructureConstants& sc) {
  CyclicElement ce;
  ce.x = Eigen::VectorXd::Zero(sc.dim);
  ce.x_minus = Eigen::VectorXd::Zero(sc.dim);
  const int l = sc.rs.rank;

  roots::Coords psi = sc.hr.marks;
  roots::Coords neg_psi = psi;
  for (int& v : neg_psi) v = -v;
  ce.x[sc.rs.index_of(neg_psi)] = 1;
  ce.x_minus[sc.rs.index_of(psi)] = 1;
  for (int i = 0; i < l; ++i) {
    roots::Coords alpha(l, 0), neg_alpha(l, 0);
    alpha[i] = 1;
    neg_alpha[i] = -1;
    ce.x[sc.rs.index_of(alpha)] = std::sqrt(double(sc.hr.marks[i]));
    ce.x_minus[sc.rs.index_of(neg_alpha)] = std::sqrt(double(sc.hr.marks[i]));
  }
  return ce;
}

}  // namespace gosset::apposition
