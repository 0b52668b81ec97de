#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "gosset/chevalley.hpp"
#include "gosset/root_system.hpp"

namespace gosset::apposition {

// Bracket table after the symmetric rescaling e -> e / sqrt(kappa(e, e_-)),
// which makes every opposite pair satisfy kappa(e_phi, e_{-phi}) = 1 while
// keeping the compact involution in the form e_phi -> -e_{-phi}.  Basis order:
// root vectors in root-index order, then the Killing duals t_1..t_l of the
// simple roots (so the Cartan Gram block is exactly K).
struct StructureConstants {
  roots::RootSystem rs;
  roots::HighestRootData hr;
  roots::KillingData kd;
  ChevalleyBasis chev;

  int dim = 0;  // |roots| + rank
  Eigen::MatrixXd nhat;           // scaled root-pair constants
  Eigen::MatrixXd cartan_action;  // nroots x rank: [t_i, e_phi] = cartan_action(phi, i) e_phi

  int cartan_start() const { return rs.num_roots(); }
};

// Builds the Chevalley layer, proves the Jacobi identity exactly on `jacobi_samples`
// seeded random triples (aborting on failure), then rescales.
StructureConstants build_structure_constants(const roots::RootSystem& rs,
                                             const roots::HighestRootData& hr,
                                             const roots::KillingData& kd,
                                             std::uint64_t jacobi_seed = 0x67055e7u,
                                             int jacobi_samples = 500);

// [u, v] for dense coefficient vectors.
Eigen::VectorXd bracket(const StructureConstants& sc, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v);

// Matrix of ad(v) in the basis above.
Eigen::MatrixXd ad_matrix(const StructureConstants& sc, const Eigen::VectorXd& v);

// Bilinear (not sesquilinear) Killing form of coefficient vectors.
double killing_form(const StructureConstants& sc, const Eigen::VectorXd& u, const Eigen::VectorXd& v);
std::complex<double> killing_form(const StructureConstants& sc, const Eigen::VectorXcd& u,
                                  const Eigen::VectorXcd& v);

// Matrix of the compact involution: e_phi -> -e_{-phi}, t -> -t.
Eigen::MatrixXd theta_matrix(const StructureConstants& sc);

// Principal cyclic element x = e_{-psi} + sum_i sqrt(n_i) e_{alpha_i} and its
// commuting partner x_minus = e_{psi} + sum_i sqrt(n_i) e_{-alpha_i}.
struct CyclicElement {
  Eigen::VectorXd x;
  Eigen::VectorXd x_minus;
  double t_beta = 1.0;  // pairing normalization of the defining eigenvalue
};

CyclicElement build_cyclic_element(const StructureConstants& sc);

}  // namespace gosset::apposition
