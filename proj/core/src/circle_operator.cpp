#include "gosset/circle_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gosset::radii {

namespace {

// Minimal dense double helpers, kept local so this path shares no numerics
// with the adjoint-representation route it is checked against.
using DMat = std::vector<std::vector<double>>;

DMat dmat(int n) { return DMat(n, std::vector<double>(n, 0.0)); }

DMat to_double_matrix(const RatMatrix& m) {
  DMat out = dmat(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = to_double(m(i, j));
  return out;
}

DMat cholesky(const DMat& a) {
  const int n = static_cast<int>(a.size());
  DMat l = dmat(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0) throw std::runtime_error("Killing Gram is not positive definite");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return l;
}

double frobenius(const DMat& a) {
  double s = 0;
  for (auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

double off_diagonal_norm(const DMat& a) {
  double s = 0;
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

// Cyclic Jacobi on a symmetric matrix; returns the diagonal, ascending.
std::vector<double> jacobi_eigenvalues(DMat s) {
  const int n = static_cast<int>(s.size());
  const double stop = 1e-13 * (1.0 + frobenius(s));
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(s) < stop) {
      std::vector<double> eig(n);
      for (int i = 0; i < n; ++i) eig[i] = s[i][i];
      std::sort(eig.begin(), eig.end());
      return eig;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (s[p][q] == 0) continue;
        const double theta = (s[q][q] - s[p][p]) / (2 * s[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = s[k][p], skq = s[k][q];
          s[k][p] = c * skp - sn * skq;
          s[k][q] = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s[p][k], sqk = s[q][k];
          s[p][k] = c * spk - sn * sqk;
          s[q][k] = sn * spk + c * sqk;
        }
      }
    }
  }
  throw std::runtime_error("Jacobi eigensolver did not converge in 100 sweeps");
}

}  // namespace

CircleOperator build_circle_operator(const roots::RootSystem& rs,
                                     const roots::HighestRootData& hr,
                                     const roots::KillingData& kd) {
  CircleOperator op;
  op.type = rs.type;
  op.rank = rs.rank;
  op.h = hr.h;
  op.marks = hr.marks;

  const int l = rs.rank;
  RatMatrix n(l, l);
  for (int i = 0; i < l; ++i) {
    n(i, i) = hr.marks[i];
    for (int j = 0; j < l; ++j) n(i, j) += Rational(hr.marks[i]) * hr.marks[j];
  }
  op.M = n * kd.K;
  op.K = kd.K;

  if (!(op.K * op.M).is_symmetric())
    throw std::runtime_error("operator is not self-adjoint for the Killing Gram");

  // trace(M) equals sum_{j=0..l} n_j (alpha_j, alpha_j) under the Killing
  // normalization, with n_0 = 1 and alpha_0 = -psi; that sum is 1 in every type.
  Rational expected = Rational(2) / kd.I;
  for (int i = 0; i < l; ++i) {
    roots::Coords alpha(l, 0);
    alpha[i] = 1;
    expected += Rational(hr.marks[i]) * rs.norm_of[rs.index_of(alpha)] / kd.I;
  }
  if (op.M.trace() != expected || expected != 1)
    throw std::runtime_error("trace identity for the circle operator failed");
  return op;
}

RadiiReport radii_report(const CircleOperator& op) {
  const int l = op.rank;
  DMat k = to_double_matrix(op.K);
  DMat b = to_double_matrix(op.M.scaled(Rational(2, op.h)));

  // Similarity to a symmetric problem: with K = L L^T, the matrix
  // S = L^T B L^{-T} is symmetric and has the same spectrum as B.
  DMat lmat = cholesky(k);
  DMat x = dmat(l);  // X = B * L^{-T}, column by column
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      double s = b[i][j];
      for (int m = 0; m < j; ++m) s -= x[i][m] * lmat[j][m];
      x[i][j] = s / lmat[j][j];
    }
  DMat sym = dmat(l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      double s = 0;
      for (int m = i; m < l; ++m) s += lmat[m][i] * x[m][j];
      sym[i][j] = s;
    }

  RadiiReport rep;
  rep.eigenvalues = jacobi_eigenvalues(sym);
  for (double ev : rep.eigenvalues) {
    if (ev <= 0) throw std::runtime_error("circle operator has a nonpositive eigenvalue");
    rep.radii.push_back(std::sqrt(ev));
  }
  const double rmax = rep.radii.back();
  for (double r : rep.radii) {
    // Divide first so the top entry is exactly 1000.
    double nrm = 1000.0 * (r / rmax);
    rep.normalized.push_back(nrm);
    rep.integer_parts.push_back(static_cast<long long>(std::floor(nrm)));
  }
  for (int i = 0; i < l;) {
    int j = i;
    while (j < l && rep.radii[j] - rep.radii[i] <= 1e-9 * rmax) ++j;
    rep.multiplicities.push_back(j - i);
    i = j;
  }
  return rep;
}

CharPolyReport char_poly(const CircleOperator& op) {
  CharPolyReport rep;
  rep.h = op.h;
  rep.scale_c = 1;
  if (op.type == roots::LieType{'E', 8}) rep.scale_c = Rational(30) / op.M.trace();

  const int l = op.rank;
  RatMatrix x = op.M.scaled(rep.scale_c);

  // Faddeev-LeVerrier: exact monic characteristic polynomial.
  RatMatrix n = RatMatrix::identity(l);
  for (int k = 1; k <= l; ++k) {
    RatMatrix mk = x * n;
    Rational ck = -mk.trace() / k;
    rep.coefficients.push_back(ck);
    n = mk;
    n.add_to_diagonal(ck);
  }
  rep.integral = std::all_of(rep.coefficients.begin(), rep.coefficients.end(),
                             [](const Rational& c) { return is_integer(c); });

  if (op.type == roots::LieType{'E', 8}) {
    const std::vector<Rational> f1 = {1, -15, 75, -135, 45};
    const std::vector<Rational> f2 = {1, -15, 60, -90, 45};
    std::vector<Rational> prod(9, 0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) prod[i + j] += f1[i] * f2[j];
    bool ok = prod[0] == 1;
    for (int i = 1; i <= 8; ++i) ok = ok && prod[i] == rep.coefficients[i - 1];
    rep.factorization_verified = ok;
    if (ok) rep.factors = {f1, f2};
  }
  return rep;
}

double evaluate_poly(const std::vector<Rational>& poly, double x) {
  double v = 0;
  for (const Rational& c : poly) v = v * x + to_double(c);
  return v;
}

std::optional<Rational> exact_eigenvalue(const CharPolyReport& cp, double lambda) {
  // Continued-fraction reconstruction with exact verification.
  double x = lambda;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    if (std::abs(fl) > 1e15) break;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > 1000000000LL || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 != 0 && std::abs(lambda - double(p1) / double(q1)) < 1e-12 * std::max(1.0, std::abs(lambda))) {
      Rational cand(p1, q1);
      Rational value = 1;
      for (const Rational& c : cp.coefficients) value = value * cand + c;
      if (value == 0) return cand;
      break;
    }
    double frac = x - fl;
    if (frac < 1e-14) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

std::vector<GoldenPair> golden_pairs(const RadiiReport& rr, const CharPolyReport& cp, double tol) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const int l = static_cast<int>(rr.radii.size());

  // Assign each radius to the quartic factor with the smaller residual at the
  // matching eigenvalue of scale_c * M.
  std::vector<int> factor(l, -1);
  if (cp.factors.size() == 2) {
    for (int i = 0; i < l; ++i) {
      double ev_m = rr.eigenvalues[i] * cp.h / 2.0;
      double xval = to_double(cp.scale_c) * ev_m;
      double r0 = std::abs(evaluate_poly(cp.factors[0], xval));
      double r1 = std::abs(evaluate_poly(cp.factors[1], xval));
      factor[i] = r0 <= r1 ? 0 : 1;
    }
  }

  std::vector<GoldenPair> out;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      double ratio = rr.radii[j] / rr.radii[i];
      if (std::abs(ratio / golden - 1.0) < tol) {
        out.push_back({i, j, ratio, factor[i], factor[j]});
      }
    }
  return out;
}

}  // namespace gosset::radii
