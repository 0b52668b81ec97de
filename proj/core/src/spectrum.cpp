#include "gosset/spectrum.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace gosset::apposition {

CompactFrame compact_frame(const StructureConstants& sc) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  Eigen::MatrixXd k(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) k(i, j) = to_double(sc.kd.K(i, j));
  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success) throw std::runtime_error("Killing Gram is not positive definite");
  Eigen::MatrixXd lt = llt.matrixL().transpose();

  CompactFrame f;
  f.p = Eigen::MatrixXd::Identity(sc.dim, sc.dim);
  f.p_inv = Eigen::MatrixXd::Identity(sc.dim, sc.dim);
  f.p.block(nr, nr, l, l) = lt;
  f.p_inv.block(nr, nr, l, l) = lt.inverse();
  return f;
}

namespace {

// Splits a sorted value list into clusters at relative gap `tol`.
std::vector<std::pair<int, int>> cluster_ranges(const Eigen::VectorXd& vals, double tol) {
  const int n = static_cast<int>(vals.size());
  double scale = 0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(vals[i]));
  scale = std::max(scale, 1e-300);
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || vals[i] - vals[i - 1] > tol * scale) {
      out.emplace_back(start, i);
      start = i;
    }
  }
  return out;
}

}  // namespace

SpectralReport spectrum(const StructureConstants& sc, const CyclicElement& ce) {
  const int dim = sc.dim, l = sc.rs.rank;
  SpectralReport rep;
  rep.dim = dim;
  rep.h = sc.hr.h;

  CompactFrame fr = compact_frame(sc);
  Eigen::VectorXd hvec = 0.5 * (ce.x + ce.x_minus);
  Eigen::VectorXd svec = 0.5 * (ce.x - ce.x_minus);
  Eigen::MatrixXd at = fr.p * ad_matrix(sc, hvec) * fr.p_inv;
  Eigen::MatrixXd st = fr.p * ad_matrix(sc, svec) * fr.p_inv;

  const double hnorm = at.norm(), snorm = st.norm();
  if ((at - at.transpose()).norm() > 1e-10 * std::max(1.0, hnorm))
    throw std::runtime_error("symmetric part of ad x is not symmetric in the compact frame");
  if ((st + st.transpose()).norm() > 1e-10 * std::max(1.0, snorm))
    throw std::runtime_error("skew part of ad x is not skew in the compact frame");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esh(0.5 * (at + at.transpose()));
  if (esh.info() != Eigen::Success) throw std::runtime_error("eigensolve of the symmetric part failed");

  struct Pair {
    std::complex<double> nu;
    Eigen::VectorXcd vec;  // transformed coordinates
  };
  std::vector<Pair> pairs;
  pairs.reserve(dim);

  for (auto [b, e] : cluster_ranges(esh.eigenvalues(), 1e-7)) {
    const int m = e - b;
    const double a = esh.eigenvalues().segment(b, m).mean();
    Eigen::MatrixXd u = esh.eigenvectors().middleCols(b, m);
    Eigen::MatrixXd sb = u.transpose() * st * u;
    // Hermitian form of the skew restriction: eigenvalue mu of i*sb gives the
    // imaginary part -mu.
    Eigen::MatrixXcd herm = std::complex<double>(0, 1) * sb.cast<std::complex<double>>();
    herm = 0.5 * (herm + herm.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ess(herm);
    if (ess.info() != Eigen::Success) throw std::runtime_error("eigensolve of the skew part failed");
    for (int r = 0; r < m; ++r) {
      Pair p;
      p.nu = {a, -ess.eigenvalues()[r]};
      p.vec = u.cast<std::complex<double>>() * ess.eigenvectors().col(r);
      pairs.push_back(std::move(p));
    }
  }

  double maxmod = 0;
  for (auto& p : pairs) maxmod = std::max(maxmod, std::abs(p.nu));
  if (maxmod <= 0) throw std::runtime_error("ad x has no nonzero spectrum");

  std::vector<int> nonzero;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    if (std::abs(pairs[i].nu) > 1e-6 * maxmod) nonzero.push_back(i);
  if (static_cast<int>(nonzero.size()) != dim - l)
    throw std::runtime_error("nonzero spectrum does not have dimension minus rank many members");

  std::sort(nonzero.begin(), nonzero.end(), [&](int i, int j) {
    double mi = std::abs(pairs[i].nu), mj = std::abs(pairs[j].nu);
    if (mi != mj) return mi < mj;
    double ai = std::arg(pairs[i].nu), aj = std::arg(pairs[j].nu);
    if (ai != aj) return ai < aj;
    return i < j;
  });

  rep.eigenvalues.reserve(nonzero.size());
  rep.eigenvectors.resize(dim, static_cast<int>(nonzero.size()));
  for (int c = 0; c < static_cast<int>(nonzero.size()); ++c) {
    rep.eigenvalues.push_back(pairs[nonzero[c]].nu);
    rep.eigenvectors.col(c) = fr.p_inv * pairs[nonzero[c]].vec;
  }

  // Modulus classes.
  int start = 0;
  for (int i = 1; i <= static_cast<int>(rep.eigenvalues.size()); ++i) {
    if (i == static_cast<int>(rep.eigenvalues.size()) ||
        std::abs(rep.eigenvalues[i]) - std::abs(rep.eigenvalues[start]) > 1e-6 * maxmod) {
      ModulusClass mc;
      double acc = 0;
      for (int j = start; j < i; ++j) {
        mc.members.push_back(j);
        acc += std::abs(rep.eigenvalues[j]);
      }
      mc.modulus = acc / mc.members.size();
      rep.classes.push_back(std::move(mc));
      start = i;
    }
  }

  // Real orthonormal kernel basis of ad x in the compact frame.
  Eigen::MatrixXd xt = at + st;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(xt, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  int kdim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] < 1e-8 * sv[0]) ++kdim;
  if (kdim != l) throw std::runtime_error("kernel of ad x does not have dimension equal to the rank");
  rep.kernel_dim = kdim;
  rep.kernel = fr.p_inv * svd.matrixV().rightCols(kdim);
  return rep;
}

OracleRadii oracle_radii(const SpectralReport& sr) {
  OracleRadii out;
  const double scale = std::sqrt(2.0 / sr.h);
  for (const auto& mc : sr.classes) {
    out.radii.push_back(scale * mc.modulus);
    out.counts.push_back(static_cast<int>(mc.members.size()));
  }
  return out;
}

ZeroComponentCheck zero_component_eigencheck(const StructureConstants& sc, const SpectralReport& sr,
                                             int eig_index, const radii::CircleOperator& op) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  ZeroComponentCheck out;
  Eigen::VectorXcd v = sr.eigenvectors.col(eig_index);
  out.z = v.segment(nr, l);
  const double vnorm = v.norm(), znorm = out.z.norm();
  out.projection_norm = znorm / vnorm;
  if (znorm < 1e-12 * vnorm)
    throw std::runtime_error("eigenvector has numerically zero Cartan component");

  Eigen::MatrixXd m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m(i, j) = to_double(op.M(i, j));
  const double lam = std::norm(sr.eigenvalues[eig_index]);
  out.residual = (m * out.z - lam * out.z).norm() / znorm;
  return out;
}

namespace {

// The height recursion is a shooting scheme: any admixture of a class with a
// larger modulus grows like (|mu|/|nu|)^k, up to ~1e19 for E8.  Double
// precision cannot survive that, so the chain runs in 50-digit floats on
// exactly reconstructed matrix entries, after snapping z onto the matching
// eigenspace of the exact circle operator.
using MF = boost::multiprecision::cpp_bin_float_50;

struct MC {
  MF re, im;
};
MC operator+(const MC& a, const MC& b) { return {a.re + b.re, a.im + b.im}; }
MC operator*(const MC& a, const MC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
MC operator*(const MF& s, const MC& a) { return {s * a.re, s * a.im}; }

MF mf(const Rational& r) {
  return MF(boost::multiprecision::numerator(r)) / MF(boost::multiprecision::denominator(r));
}

using RatPoly = std::vector<Rational>;  // coefficients, highest degree first

RatPoly poly_derivative(const RatPoly& p) {
  const int deg = static_cast<int>(p.size()) - 1;
  RatPoly d;
  for (int i = 0; i < deg; ++i) d.push_back(p[i] * Rational(deg - i));
  return d;
}

RatPoly poly_trim(RatPoly p) {
  size_t i = 0;
  while (i + 1 < p.size() && p[i] == 0) ++i;
  p.erase(p.begin(), p.begin() + i);
  return p;
}

RatPoly poly_monic(RatPoly p) {
  for (auto& c : p) c /= p.front();
  return p;
}

RatPoly poly_mod(RatPoly a, const RatPoly& b) {
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    Rational q = a[0] / b[0];
    for (size_t i = 0; i < b.size(); ++i) a[i] -= q * b[i];
    a = poly_trim(std::move(a));
    if (a.size() == 1 && a[0] == 0) break;
    if (a[0] == 0) a = poly_trim(std::move(a));
  }
  return a;
}

RatPoly poly_divide_exact(RatPoly a, const RatPoly& b) {
  RatPoly q;
  while (a.size() >= b.size()) {
    Rational c = a[0] / b[0];
    q.push_back(c);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= c * b[i];
    a.erase(a.begin());
  }
  return q;
}

// p with repeated roots removed: p / gcd(p, p').
RatPoly square_free_part(const RatPoly& p) {
  RatPoly a = poly_monic(p), b = poly_trim(poly_derivative(p));
  bool b_zero = b.size() == 1 && b[0] == 0;
  if (!b_zero) b = poly_monic(b);
  while (!b_zero) {
    RatPoly r = poly_trim(poly_mod(a, b));
    a = std::move(b);
    b_zero = r.size() == 1 && r[0] == 0;
    if (!b_zero) b = poly_monic(std::move(r));
  }
  if (a.size() <= 1) return poly_monic(p);  // gcd is a constant: already square free
  return poly_divide_exact(poly_monic(p), a);
}

MF poly_eval(const RatPoly& p, const MF& x) {
  MF v = 0;
  for (const auto& c : p) v = v * x + mf(c);
  return v;
}

// Simple root of p nearest the seed, by Newton at 50 digits.
MF refine_root(const RatPoly& p, double seed) {
  RatPoly q = square_free_part(p);
  RatPoly dq = poly_derivative(q);
  MF x = seed;
  for (int it = 0; it < 80; ++it) {
    MF step = poly_eval(q, x) / poly_eval(dq, x);
    x -= step;
    if (abs(step) <= abs(x) * MF(1e-45)) break;
  }
  return x;
}

// Partial-pivot LU solve of the near-singular (M - lambda I) w = rhs; the
// blow-up along the target eigenvector is the point (inverse iteration).
std::vector<MF> lu_solve(std::vector<std::vector<MF>> a, std::vector<MF> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(rhs[c], rhs[piv]);
    if (a[c][c] == 0) a[c][c] = MF(1e-48);
    for (int r = c + 1; r < n; ++r) {
      MF f = a[r][c] / a[c][c];
      if (f == 0) continue;
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<MF> w(n);
  for (int r = n - 1; r >= 0; --r) {
    MF s = rhs[r];
    for (int k = r + 1; k < n; ++k) s -= a[r][k] * w[k];
    w[r] = s / a[r][r];
  }
  return w;
}

struct SparseMF {
  std::vector<std::tuple<int, int, MF>> trip;  // (row, col, value)

  std::vector<MC> apply(const std::vector<MC>& v, int dim) const {
    std::vector<MC> out(dim, MC{0, 0});
    for (const auto& [r, c, val] : trip) out[r] = out[r] + val * v[c];
    return out;
  }
};

// ad of a vector supported on root indices, with every entry rebuilt from the
// exact integer/rational tables (sqrt factors taken at 50 digits).
SparseMF sparse_ad(const StructureConstants& sc, const std::vector<std::pair<int, MF>>& support) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank;
  std::vector<MF> sqrt_kappa(nr);
  for (int i = 0; i < nr; ++i) sqrt_kappa[i] = sqrt(MF(sc.chev.kappa[i]));

  SparseMF ad;
  for (const auto& [i, c] : support) {
    for (int j = 0; j < nr; ++j) {
      if (sc.rs.neg_of[i] == j) {
        for (int k = 0; k < l; ++k)
          if (sc.rs.roots[i][k] != 0)
            ad.trip.emplace_back(nr + k, j, c * MF(sc.rs.roots[i][k]));
      } else if (sc.chev.n[i][j] != 0) {
        roots::Coords s = sc.rs.roots[i];
        for (int m = 0; m < l; ++m) s[m] += sc.rs.roots[j][m];
        int k = sc.rs.index_of(s);
        ad.trip.emplace_back(k, j,
                             c * MF(sc.chev.n[i][j]) * sqrt_kappa[k] /
                                 (sqrt_kappa[i] * sqrt_kappa[j]));
      }
    }
    for (int k = 0; k < l; ++k) {
      Rational act = 0;
      for (int j = 0; j < l; ++j) act += Rational(sc.rs.roots[i][j]) * sc.kd.K(j, k);
      if (act != 0) ad.trip.emplace_back(i, nr + k, -(c * mf(act)));
    }
  }
  return ad;
}

double mc_norm(const std::vector<MC>& v) {
  MF s = 0;
  for (const auto& x : v) s += x.re * x.re + x.im * x.im;
  return static_cast<double>(sqrt(s));
}

}  // namespace

GradedVector reconstruct_root_vector(const StructureConstants& sc, const CyclicElement& ce,
                                     const Eigen::VectorXcd& z, std::complex<double> nu) {
  const int nr = sc.rs.num_roots(), l = sc.rs.rank, h = sc.hr.h;
  GradedVector out;

  // Eigenvalue of the circle operator matching z, refined on the exact
  // characteristic polynomial.
  auto op = radii::build_circle_operator(sc.rs, sc.hr, sc.kd);
  auto cp = radii::char_poly(op);
  RatPoly charpoly;
  charpoly.emplace_back(1);
  charpoly.insert(charpoly.end(), cp.coefficients.begin(), cp.coefficients.end());
  const MF lam = refine_root(charpoly, to_double(cp.scale_c) * std::norm(nu)) / mf(cp.scale_c);

  // One step of inverse iteration snaps z onto the eigenspace; realign with
  // the input so the k = 0 component stays the caller's z.
  std::vector<std::vector<MF>> shifted(l, std::vector<MF>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) shifted[i][j] = mf(op.M(i, j)) - (i == j ? lam : MF(0));
  std::vector<MF> rre(l), rim(l);
  for (int i = 0; i < l; ++i) rre[i] = z[i].real(), rim[i] = z[i].imag();
  std::vector<MF> wre = lu_solve(shifted, rre), wim = lu_solve(shifted, rim);
  MF wnorm = 0;
  for (int i = 0; i < l; ++i) wnorm += wre[i] * wre[i] + wim[i] * wim[i];
  wnorm = sqrt(wnorm);
  std::vector<MC> zs(l);
  for (int i = 0; i < l; ++i) zs[i] = MC{wre[i] / wnorm, wim[i] / wnorm};
  MC align{0, 0};
  for (int i = 0; i < l; ++i)
    align = align + MC{zs[i].re, -zs[i].im} * MC{MF(z[i].real()), MF(z[i].imag())};
  for (int i = 0; i < l; ++i) zs[i] = zs[i] * align;

  // |nu*|^2 = lam exactly; the phase only rotates heights and stays double.
  const std::complex<double> unit = nu / std::abs(nu);
  const MF unorm = sqrt(MF(unit.real()) * MF(unit.real()) + MF(unit.imag()) * MF(unit.imag()));
  const MF numod = sqrt(lam);
  const MC nu_mp{numod * MF(unit.real()) / unorm, numod * MF(unit.imag()) / unorm};
  const MC inv_nu{nu_mp.re / lam, -nu_mp.im / lam};       // 1/nu
  const MC inv_nu_bar{nu_mp.re / lam, nu_mp.im / lam};    // 1/conj(nu)

  std::vector<std::pair<int, MF>> sup_up, sup_dn;
  for (int i = 0; i < l; ++i) {
    roots::Coords simple(l, 0), neg(l, 0);
    simple[i] = 1;
    neg[i] = -1;
    const MF c = sqrt(MF(sc.hr.marks[i]));
    sup_up.emplace_back(sc.rs.index_of(simple), c);
    sup_dn.emplace_back(sc.rs.index_of(neg), c);
  }
  SparseMF ad_up = sparse_ad(sc, sup_up), ad_dn = sparse_ad(sc, sup_dn);

  auto to_cd = [&](const std::vector<MC>& v) {
    Eigen::VectorXcd o(sc.dim);
    for (int i = 0; i < sc.dim; ++i)
      o[i] = {static_cast<double>(v[i].re), static_cast<double>(v[i].im)};
    return o;
  };

  std::vector<MC> e0(sc.dim, MC{0, 0});
  for (int i = 0; i < l; ++i) e0[nr + i] = zs[i];
  out.components[0] = to_cd(e0);

  std::vector<MC> cur = e0;
  for (int k = 1; k <= h; ++k) {
    auto nxt = ad_up.apply(cur, sc.dim);
    for (auto& x : nxt) x = x * inv_nu;
    cur = std::move(nxt);
    if (k < h)
      out.components[k] = to_cd(cur);
    else
      out.beyond_band = std::max(out.beyond_band, mc_norm(cur));
  }
  cur = e0;
  for (int k = 1; k <= h; ++k) {
    auto nxt = ad_dn.apply(cur, sc.dim);
    for (auto& x : nxt) x = x * inv_nu_bar;
    cur = std::move(nxt);
    if (k < h)
      out.components[-k] = to_cd(cur);
    else
      out.beyond_band = std::max(out.beyond_band, mc_norm(cur));
  }

  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(sc.dim);
  for (auto& [k, comp] : out.components) full += comp;
  Eigen::MatrixXcd adx = ad_matrix(sc, ce.x).cast<std::complex<double>>();
  out.residual = (adx * full - nu * full).norm() / full.norm();
  return out;
}

}  // namespace gosset::apposition
