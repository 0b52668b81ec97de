#pragma once

#include "gosset/spectrum.hpp"

namespace gosset::coxplane {

// Linear functionals of the roots on the centralizer of x, recovered from the
// joint spectrum.  Basis vectors are split by the compact involution: the
// first p_count columns have theta = -1 (their adjoint action is symmetric),
// the rest have theta = +1 (multiplied by i to make the action Hermitian).
// values(r, m) is the m-th functional coordinate of leaf r; every leaf is one
// root of the system.
struct FunctionalFrame {
  Eigen::MatrixXd basis;   // dim x rank, original coordinates, real
  int p_count = 0;
  std::vector<std::complex<double>> nu;  // per leaf: the eigenvalue it refines
  Eigen::MatrixXd values;  // leaves x rank, real
  Eigen::MatrixXd gram_basis;  // rank x rank Killing Gram of the (i-adjusted) basis
  Eigen::MatrixXd gram_w;      // leaves x leaves: Killing products of the functionals
  std::vector<int> negation;   // leaf index with opposite functional
  std::vector<int> group_of;   // leaf -> index of its eigenvalue group in the spectral report
};

FunctionalFrame root_functionals(const apposition::StructureConstants& sc,
                                 const apposition::SpectralReport& sr);

enum class EdgeMode { none, polytope };

// Leaf index pairs whose Killing product is maximal among non-proportional
// functionals; with the polytope convention these are the nearest-neighbor
// edges of the root polytope.
std::vector<std::pair<int, int>> edges(const FunctionalFrame& ff, EdgeMode mode);

struct PlanePoint {
  double x = 0, y = 0;
  int class_index = 0;
  std::complex<double> nu;  // phase-fixed eigenvalue the point projects
};

struct FigureSpec {
  roots::LieType type;
  int h = 0;
  int exponent = 1;
  std::vector<PlanePoint> points;             // sorted by (class, angle)
  std::vector<double> circle_radii;           // ascending, one per modulus class
  std::vector<std::pair<int, int>> edges;     // indices into points
};

struct ProjectOptions {
  EdgeMode edge_mode = EdgeMode::none;
  int exponent = 1;  // must be coprime to h
};

// Plane figure of the spectrum: each eigenvalue nu becomes the point
// sqrt(2/h) * nu after a global rotation placing the largest-modulus
// eigenvalue of maximal real part on the positive x-axis.  exponent != 1
// projects onto the eigenplane of the corresponding primitive rotation
// instead, through the functional frame.
FigureSpec make_figure(const apposition::StructureConstants& sc,
                       const apposition::SpectralReport& sr, const ProjectOptions& opts);

// Unit-normalized generator of the exponent-k eigenplane; throws
// std::invalid_argument unless gcd(k, h) == 1.
Eigen::VectorXcd exponent_eigenvector(const apposition::StructureConstants& sc,
                                      const apposition::SpectralReport& sr, int k);

}  // namespace gosset::coxplane
