#include "gosset/coxeter_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gosset::coxplane {

using apposition::SpectralReport;
using apposition::StructureConstants;

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  int keep = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] > tol * svd.singularValues()[0]) ++keep;
  return svd.matrixU().leftCols(keep);
}

struct Refiner {
  const std::vector<Eigen::MatrixXcd>& ops;  // Hermitian, transformed coordinates
  std::vector<Eigen::VectorXcd> leaves;

  void split(const Eigen::MatrixXcd& w, size_t op_index) {
    const int m = static_cast<int>(w.cols());
    if (m == 1) {
      leaves.push_back(w.col(0));
      return;
    }
    if (op_index == ops.size())
      throw std::runtime_error("joint eigenspace refinement left a degenerate block");
    Eigen::MatrixXcd block = w.adjoint() * ops[op_index] * w;
    block = 0.5 * (block + block.adjoint().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
    const auto& ev = es.eigenvalues();
    double scale = std::max(std::abs(ev[0]), std::abs(ev[m - 1]));
    scale = std::max(scale, 1e-12);
    int start = 0;
    for (int i = 1; i <= m; ++i) {
      if (i == m || ev[i] - ev[i - 1] > 1e-7 * scale) {
        split(w * es.eigenvectors().middleCols(start, i - start), op_index + 1);
        start = i;
      }
    }
  }
};

}  // namespace

FunctionalFrame root_functionals(const StructureConstants& sc, const SpectralReport& sr) {
  const int dim = sc.dim, l = sc.rs.rank;
  const int count = static_cast<int>(sr.eigenvalues.size());
  apposition::CompactFrame fr = apposition::compact_frame(sc);
  Eigen::MatrixXd theta = apposition::theta_matrix(sc);  // same matrix in both frames

  // theta-split of the centralizer basis.
  Eigen::MatrixXd kt = fr.p * sr.kernel;
  Eigen::MatrixXd p_part = orthonormal_columns(0.5 * (kt - theta * kt), 1e-8);
  Eigen::MatrixXd k_part = orthonormal_columns(0.5 * (kt + theta * kt), 1e-8);
  if (p_part.cols() + k_part.cols() != l)
    throw std::runtime_error("involution split of the centralizer has wrong dimension");

  FunctionalFrame ff;
  ff.p_count = static_cast<int>(p_part.cols());
  ff.basis.resize(dim, l);
  std::vector<Eigen::MatrixXcd> ops;
  for (int j = 0; j < p_part.cols(); ++j) {
    ff.basis.col(j) = fr.p_inv * p_part.col(j);
    Eigen::MatrixXd ad = fr.p * ad_matrix(sc, ff.basis.col(j)) * fr.p_inv;
    ops.push_back(0.5 * (ad + ad.transpose()).cast<std::complex<double>>());
  }
  for (int j = 0; j < k_part.cols(); ++j) {
    ff.basis.col(ff.p_count + j) = fr.p_inv * k_part.col(j);
    Eigen::MatrixXd ad = fr.p * ad_matrix(sc, ff.basis.col(ff.p_count + j)) * fr.p_inv;
    Eigen::MatrixXcd herm = std::complex<double>(0, 1) * ad.cast<std::complex<double>>();
    ops.push_back(0.5 * (herm + herm.adjoint().eval()));
  }

  // Group coincident eigenvalues, then refine each group to one leaf per root.
  double maxmod = 0;
  for (auto nu : sr.eigenvalues) maxmod = std::max(maxmod, std::abs(nu));
  ff.values.resize(count, l);
  std::vector<char> used(count, 0);

  for (int i = 0; i < count; ++i) {
    if (used[i]) continue;
    std::vector<int> group{i};
    used[i] = 1;
    for (int j = i + 1; j < count; ++j) {
      if (!used[j] && std::abs(sr.eigenvalues[j] - sr.eigenvalues[i]) <= 1e-7 * maxmod) {
        group.push_back(j);
        used[j] = 1;
      }
    }
    Eigen::MatrixXcd w(dim, group.size());
    for (size_t g = 0; g < group.size(); ++g) w.col(g) = fr.p * sr.eigenvectors.col(group[g]);

    Refiner refiner{ops, {}};
    refiner.split(w, 0);
    if (refiner.leaves.size() != group.size())
      throw std::runtime_error("refinement changed the number of eigenvectors");
    for (auto& leaf : refiner.leaves) {
      ff.nu.push_back(sr.eigenvalues[i]);
      ff.group_of.push_back(i);
      const int r = static_cast<int>(ff.nu.size()) - 1;
      for (size_t m = 0; m < ops.size(); ++m) {
        std::complex<double> val = leaf.adjoint() * ops[m] * leaf;
        ff.values(r, static_cast<int>(m)) = val.real();
      }
    }
  }

  // Killing Gram of the basis (k-type columns taken with a factor of i).
  ff.gram_basis.resize(l, l);
  for (int m = 0; m < l; ++m)
    for (int n = 0; n < l; ++n) {
      Eigen::VectorXcd bm = ff.basis.col(m).cast<std::complex<double>>();
      Eigen::VectorXcd bn = ff.basis.col(n).cast<std::complex<double>>();
      if (m >= ff.p_count) bm *= std::complex<double>(0, 1);
      if (n >= ff.p_count) bn *= std::complex<double>(0, 1);
      std::complex<double> v = killing_form(sc, bm, bn);
      ff.gram_basis(m, n) = v.real();
    }

  Eigen::MatrixXd solved = ff.gram_basis.ldlt().solve(ff.values.transpose());
  ff.gram_w = ff.values * solved;

  // Pair each functional with its negative.
  const int leaves = static_cast<int>(ff.values.rows());
  ff.negation.assign(leaves, -1);
  double vscale = ff.values.cwiseAbs().maxCoeff();
  for (int r = 0; r < leaves; ++r) {
    for (int s = 0; s < leaves; ++s) {
      if ((ff.values.row(r) + ff.values.row(s)).cwiseAbs().maxCoeff() < 1e-6 * vscale) {
        ff.negation[r] = s;
        break;
      }
    }
    if (ff.negation[r] < 0) throw std::runtime_error("functional set is not closed under negation");
  }
  return ff;
}

std::vector<std::pair<int, int>> edges(const FunctionalFrame& ff, EdgeMode mode) {
  std::vector<std::pair<int, int>> out;
  if (mode == EdgeMode::none) return out;
  const int n = static_cast<int>(ff.gram_w.rows());
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      if (ff.negation[r] == s) continue;
      best = std::max(best, ff.gram_w(r, s));
    }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      if (ff.negation[r] == s) continue;
      if (ff.gram_w(r, s) >= best - 1e-6 * std::abs(best)) out.emplace_back(r, s);
    }
  return out;
}

Eigen::VectorXcd exponent_eigenvector(const StructureConstants& sc, const SpectralReport& sr,
                                      int k) {
  const int h = sr.h, dim = sc.dim, l = sc.rs.rank;
  const int kk = ((k % h) + h) % h;
  if (std::gcd(kk, h) != 1)
    throw std::invalid_argument("exponent " + std::to_string(k) + " is not coprime to the Coxeter number " +
                                std::to_string(h));

  apposition::CompactFrame fr = apposition::compact_frame(sc);
  Eigen::MatrixXcd rot = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < sc.rs.num_roots(); ++i) {
    double ang = 2.0 * kPi * sc.rs.height_of[i] / h;
    rot(i, i) = std::polar(1.0, ang);
  }
  Eigen::MatrixXcd kt = (fr.p * sr.kernel).cast<std::complex<double>>();
  Eigen::MatrixXcd sigma = kt.adjoint() * rot * kt;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sigma);
  const std::complex<double> target = std::polar(1.0, 2.0 * kPi * kk / h);
  int pick = -1;
  double bestdist = 1e300, second = 1e300;
  for (int i = 0; i < l; ++i) {
    double d = std::abs(es.eigenvalues()[i] - target);
    if (d < bestdist) {
      second = bestdist;
      bestdist = d;
      pick = i;
    } else {
      second = std::min(second, d);
    }
  }
  if (bestdist > 1e-8)
    throw std::runtime_error("rotation eigenvalue for the requested exponent not found");
  if (second < 1e-6)
    throw std::runtime_error("rotation eigenvalue for the requested exponent is not simple");

  Eigen::VectorXcd vt = kt * es.eigenvectors().col(pick);
  vt *= std::sqrt(double(h)) / vt.norm();
  Eigen::VectorXcd v = fr.p_inv.cast<std::complex<double>>() * vt;
  if (std::abs(killing_form(sc, v, v)) > 1e-8 * h)
    throw std::runtime_error("exponent eigenvector is not isotropic");
  return v;
}

namespace {

// Global rotation: largest-modulus eigenvalue with maximal real part (ties to
// positive imaginary part) goes to the positive x-axis.
std::complex<double> phase_fix(const std::vector<std::complex<double>>& nus) {
  double maxmod = 0;
  for (auto nu : nus) maxmod = std::max(maxmod, std::abs(nu));
  std::complex<double> pick(-1e300, 0);
  for (auto nu : nus) {
    if (std::abs(nu) < maxmod * (1 - 1e-9)) continue;
    if (nu.real() > pick.real() + 1e-12 * maxmod ||
        (std::abs(nu.real() - pick.real()) <= 1e-12 * maxmod && nu.imag() > pick.imag()))
      pick = nu;
  }
  return std::polar(1.0, -std::arg(pick));
}

}  // namespace

FigureSpec make_figure(const StructureConstants& sc, const SpectralReport& sr,
                       const ProjectOptions& opts) {
  FigureSpec fig;
  fig.type = sc.rs.type;
  fig.h = sr.h;
  fig.exponent = ((opts.exponent % sr.h) + sr.h) % sr.h;
  const double scale = std::sqrt(2.0 / sr.h);

  std::vector<std::complex<double>> nus;
  std::vector<std::pair<int, int>> leaf_edges;
  std::vector<int> leaf_of_point;  // functional leaf index per raw point, or empty

  const bool functional_path = fig.exponent != 1 || opts.edge_mode != EdgeMode::none;
  FunctionalFrame ff;
  if (functional_path) ff = root_functionals(sc, sr);

  if (fig.exponent == 1) {
    nus = sr.eigenvalues;
    if (opts.edge_mode != EdgeMode::none) {
      // Leaves refine eigenvalue groups; assign each leaf to one member of its
      // group so edges can reference point indices.
      std::vector<std::vector<int>> group_members(sr.eigenvalues.size());
      std::vector<int> leaf_point(ff.nu.size(), -1);
      std::vector<int> taken(sr.eigenvalues.size(), 0);
      double maxmod = 0;
      for (auto nu : sr.eigenvalues) maxmod = std::max(maxmod, std::abs(nu));
      for (size_t g = 0; g < sr.eigenvalues.size(); ++g)
        for (size_t m = 0; m < sr.eigenvalues.size(); ++m)
          if (std::abs(sr.eigenvalues[m] - sr.eigenvalues[g]) <= 1e-7 * maxmod)
            group_members[g].push_back(static_cast<int>(m));
      for (size_t leaf = 0; leaf < ff.nu.size(); ++leaf) {
        for (int cand : group_members[ff.group_of[leaf]]) {
          if (!taken[cand]) {
            taken[cand] = 1;
            leaf_point[leaf] = cand;
            break;
          }
        }
        if (leaf_point[leaf] < 0) throw std::runtime_error("leaf-to-point assignment failed");
      }
      for (auto [r, s] : edges(ff, opts.edge_mode))
        leaf_edges.emplace_back(leaf_point[r], leaf_point[s]);
    }
  } else {
    Eigen::VectorXcd v = exponent_eigenvector(sc, sr, fig.exponent);
    apposition::CompactFrame fr = apposition::compact_frame(sc);
    Eigen::MatrixXd bas_t = fr.p * ff.basis;  // orthonormal columns
    Eigen::VectorXcd coef = bas_t.transpose().cast<std::complex<double>>() *
                            (fr.p.cast<std::complex<double>>() * v);
    nus.resize(ff.nu.size());
    for (int r = 0; r < static_cast<int>(ff.nu.size()); ++r) {
      std::complex<double> val = 0;
      for (int m = 0; m < ff.values.cols(); ++m) {
        std::complex<double> fun = ff.values(r, m);
        if (m >= ff.p_count) fun *= std::complex<double>(0, -1);
        val += coef[m] * fun;
      }
      nus[r] = val;
    }
    if (opts.edge_mode != EdgeMode::none) {
      for (auto [r, s] : edges(ff, opts.edge_mode)) leaf_edges.emplace_back(r, s);
    }
  }

  const std::complex<double> rot = phase_fix(nus);
  for (auto& nu : nus) nu *= rot;

  // Modulus classes of the projected points.
  double maxmod = 0;
  for (auto nu : nus) maxmod = std::max(maxmod, std::abs(nu));
  std::vector<int> order(nus.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ma = std::abs(nus[a]), mb = std::abs(nus[b]);
    if (ma != mb) return ma < mb;
    double aa = std::arg(nus[a]), ab = std::arg(nus[b]);
    if (aa != ab) return aa < ab;
    return a < b;
  });

  std::vector<int> class_of(nus.size(), 0);
  double class_start = -1;
  int cls = -1;
  std::vector<double> acc;
  std::vector<int> cnt;
  for (int idx : order) {
    double m = std::abs(nus[idx]);
    if (cls < 0 || m - class_start > 1e-6 * maxmod) {
      ++cls;
      class_start = m;
      acc.push_back(0);
      cnt.push_back(0);
    }
    class_of[idx] = cls;
    acc[cls] += m;
    ++cnt[cls];
  }
  for (size_t c = 0; c < acc.size(); ++c) fig.circle_radii.push_back(scale * acc[c] / cnt[c]);

  std::vector<int> point_of(nus.size());  // raw index -> final point index
  fig.points.resize(nus.size());
  for (size_t p = 0; p < order.size(); ++p) {
    int idx = order[p];
    point_of[idx] = static_cast<int>(p);
    PlanePoint pt;
    pt.nu = nus[idx];
    pt.class_index = class_of[idx];
    pt.x = scale * nus[idx].real();
    pt.y = scale * nus[idx].imag();
    fig.points[p] = pt;
  }
  for (auto [r, s] : leaf_edges) {
    int a = point_of[r], b = point_of[s];
    fig.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(fig.edges.begin(), fig.edges.end());
  return fig;
}

}  // namespace gosset::coxplane
