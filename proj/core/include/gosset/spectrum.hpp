#pragma once

#include <complex>
#include <map>

#include "gosset/circle_operator.hpp"
#include "gosset/structure_constants.hpp"

namespace gosset::apposition {

struct ModulusClass {
  double modulus = 0;
  std::vector<int> members;  // indices into eigenvalues
};

struct SpectralReport {
  int dim = 0;
  int h = 0;
  int kernel_dim = 0;
  std::vector<std::complex<double>> eigenvalues;  // nonzero spectrum of ad x, sorted by (|nu|, arg)
  Eigen::MatrixXcd eigenvectors;                  // dim x count, unit vectors for the compact metric
  std::vector<ModulusClass> classes;              // ascending modulus, grouped at rel 1e-6
  Eigen::MatrixXd kernel;                         // dim x kernel_dim, orthonormal for the compact metric
};

// Change of basis that turns the compact-form inner product into the standard
// one: identity on the root-vector block, transpose Cholesky factor of K on
// the Cartan block.
struct CompactFrame {
  Eigen::MatrixXd p;      // dim x dim
  Eigen::MatrixXd p_inv;
};
CompactFrame compact_frame(const StructureConstants& sc);

// Joint spectrum of ad x via the commuting split x = H + S with H = (x + x_-)/2
// self-adjoint and S = (x - x_-)/2 skew-adjoint for the compact metric.
SpectralReport spectrum(const StructureConstants& sc, const CyclicElement& ce);

struct OracleRadii {
  std::vector<double> radii;   // sqrt(2/h) * |nu|, one per modulus class, ascending
  std::vector<int> counts;     // class sizes
};
OracleRadii oracle_radii(const SpectralReport& sr);

struct ZeroComponentCheck {
  Eigen::VectorXcd z;            // Cartan-block coefficients of the eigenvector
  double residual = 0;           // |M z - |nu|^2 z| / |z| against the circle operator
  double projection_norm = 0;    // |z| / |eigenvector|
};

ZeroComponentCheck zero_component_eigencheck(const StructureConstants& sc, const SpectralReport& sr,
                                             int eig_index, const radii::CircleOperator& op);

struct GradedVector {
  std::map<int, Eigen::VectorXcd> components;  // height k -> component in g(k)
  double residual = 0;      // eigen-equation residual of the reassembled vector
  double beyond_band = 0;   // mass at heights |k| >= h (structurally zero)
};

// Rebuilds a full eigenvector from its Cartan component z by the two-sided
// height recursion along x(beta') = x - e_{-psi} and x_minus(beta') = x_minus - e_psi.
GradedVector reconstruct_root_vector(const StructureConstants& sc, const CyclicElement& ce,
                                     const Eigen::VectorXcd& z, std::complex<double> nu);

}  // namespace gosset::apposition
