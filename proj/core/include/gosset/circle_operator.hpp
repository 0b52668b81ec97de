#pragma once

#include <optional>
#include <vector>

#include "gosset/root_system.hpp"

namespace gosset::radii {

// Rank-one sum operator on the Cartan subalgebra, expressed in the basis of
// Killing-dual simple roots.  Its eigenvalues, scaled by 2/h and square-rooted,
// are the circle radii of the plane projection.  M = (diag(n) + n n^T) K with
// n the marks of the highest root; K M is symmetric, so M is self-adjoint for
// the Killing Gram K.
struct CircleOperator {
  roots::LieType type;
  int rank = 0;
  int h = 0;
  std::vector<int> marks;
  RatMatrix M;
  RatMatrix K;
};

CircleOperator build_circle_operator(const roots::RootSystem& rs,
                                     const roots::HighestRootData& hr,
                                     const roots::KillingData& kd);

struct RadiiReport {
  std::vector<double> eigenvalues;     // of (2/h) * operator, ascending
  std::vector<double> radii;           // square roots of the above
  std::vector<double> normalized;      // 1000 * r / r_max
  std::vector<long long> integer_parts;
  std::vector<int> multiplicities;     // run lengths of coincident radii (rel 1e-9)
};

// Dependency-free dense path: Cholesky change of basis followed by cyclic
// Jacobi sweeps (off-diagonal tolerance 1e-13, at most 100 sweeps).
RadiiReport radii_report(const CircleOperator& op);

struct CharPolyReport {
  int h = 0;
  Rational scale_c;                       // 1, except 30/trace for E8
  std::vector<Rational> coefficients;     // monic: x^l + c[0] x^{l-1} + ... + c[l-1]
  bool integral = false;                  // all coefficients integers
  std::vector<std::vector<Rational>> factors;  // E8 only: two quartics, each {1, a, b, c, d}
  bool factorization_verified = false;    // factors multiply back exactly
};

// Exact characteristic polynomial of scale_c * M via Faddeev-LeVerrier.
CharPolyReport char_poly(const CircleOperator& op);

// Attempts to identify an eigenvalue of scale_c * M as an exact rational:
// continued-fraction reconstruction followed by exact evaluation in the
// characteristic polynomial.  Returns nullopt for irrational eigenvalues.
std::optional<Rational> exact_eigenvalue(const CharPolyReport& cp, double lambda);

// Horner evaluation of the given coefficients, highest degree first.
double evaluate_poly(const std::vector<Rational>& poly, double x);

struct GoldenPair {
  int lower = 0;
  int upper = 0;
  double ratio = 0;        // radii[upper] / radii[lower]
  int lower_factor = -1;   // quartic factor owning the lower radius (E8)
  int upper_factor = -1;
};

// Index pairs (ascending radii) whose ratio is (1+sqrt 5)/2 within tol.  For
// E8 each radius is also assigned to the quartic factor whose value at the
// corresponding eigenvalue is smallest in magnitude.
std::vector<GoldenPair> golden_pairs(const RadiiReport& rr, const CharPolyReport& cp,
                                     double tol = 1e-9);

}  // namespace gosset::radii
