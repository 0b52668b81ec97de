#include "gosset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>

#include "gosset/chevalley.hpp"
#include "gosset/circle_operator.hpp"
#include "gosset/coxeter_plane.hpp"
#include "gosset/spectrum.hpp"

namespace gosset::verify {

namespace {

std::string sci(double v) {
  char b[40];
  std::snprintf(b, sizeof(b), "%.3e", v);
  return b;
}

// Pivots of the symmetric LDL^T reduction; all positive iff the matrix is
// positive definite.  Exact.
std::vector<Rational> ldl_pivots(RatMatrix m) {
  std::vector<Rational> piv;
  for (int k = 0; k < m.rows(); ++k) {
    Rational d = m(k, k);
    piv.push_back(d);
    if (d == 0) break;
    for (int i = k + 1; i < m.rows(); ++i)
      for (int j = k + 1; j < m.cols(); ++j) m(i, j) -= m(i, k) * m(k, j) / d;
  }
  return piv;
}

}  // namespace

bool VerifyReport::passed() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyReport run_verify(const roots::LieType& type, const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.type = type;
  rep.max_relative_discrepancy = std::numeric_limits<double>::quiet_NaN();

  auto check = [&rep](const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    rep.checks.push_back(r);
    return r.passed;
  };
  auto finish = [&] {
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  };

  std::optional<roots::RootSystem> rs;
  std::optional<roots::HighestRootData> hr;
  std::optional<roots::KillingData> kd;
  if (!check("construction", [&](CheckResult& r) {
        rs = roots::build_root_system(type);
        hr = roots::highest_root(*rs);
        kd = roots::killing_gram(*rs, *hr);
        rep.h = hr->h;
        r.passed = true;
        r.value = rs->num_roots();
        r.detail = std::to_string(rs->num_roots()) + " roots, h = " + std::to_string(hr->h) +
                   ", dual Coxeter " + std::to_string(kd->dual_coxeter);
      }))
    return finish();

  const int l = rs->rank, h = hr->h, nr = rs->num_roots();

  check("root-count", [&](CheckResult& r) {
    r.passed = nr == l * h && 2 * static_cast<int>(rs->positive.size()) == nr;
    r.value = nr;
    r.detail = std::to_string(nr) + " = " + std::to_string(l) + " * " + std::to_string(h) +
               ", half of them positive";
  });

  check("height-symmetry", [&](CheckResult& r) {
    std::map<int, int> hist;
    bool signs = true;
    for (int i = 0; i < nr; ++i) {
      hist[rs->height_of[i]]++;
      bool nonneg = true, nonpos = true;
      for (int c : rs->roots[i]) {
        nonneg = nonneg && c >= 0;
        nonpos = nonpos && c <= 0;
      }
      signs = signs && (nonneg || nonpos);
    }
    bool sym = hist.find(0) == hist.end();
    for (const auto& [k, c] : hist) {
      auto it = hist.find(-k);
      sym = sym && it != hist.end() && it->second == c;
    }
    r.passed = sym && signs;
    r.value = hr->psi_height;
    r.detail = "height histogram symmetric, heights span -" + std::to_string(hr->psi_height) + ".." +
               std::to_string(hr->psi_height) + ", coordinates never mix signs";
  });

  check("root-strings", [&](CheckResult& r) {
    long long pairs = 0;
    bool ok = true;
    for (int p = 0; p < nr && ok; ++p) {
      for (int q = 0; q < nr && ok; ++q) {
        if (p == q || rs->neg_of[p] == q) continue;
        bool in[11];
        for (int k = -5; k <= 5; ++k) {
          roots::Coords c = rs->roots[q];
          for (int i = 0; i < l; ++i) c[i] += k * rs->roots[p][i];
          in[k + 5] = rs->is_root(c);
        }
        int runs = 0;
        for (int i = 0; i < 11; ++i)
          if (in[i] && (i == 0 || !in[i - 1])) ++runs;
        ok = runs == 1 && in[5];
        ++pairs;
      }
    }
    r.passed = ok;
    r.value = static_cast<double>(pairs);
    r.detail = std::to_string(pairs) + " ordered pairs, every root string an unbroken interval";
  });

  check("highest-root", [&](CheckResult& r) {
    int at_top = 0;
    for (int i = 0; i < nr; ++i)
      if (rs->height_of[i] == hr->psi_height) ++at_top;
    long long marksum = 0;
    bool marks_pos = true;
    for (int m : hr->marks) {
      marks_pos = marks_pos && m >= 1;
      marksum += m;
    }
    bool maximal = true;
    for (int i = 0; i < l && maximal; ++i) {
      roots::Coords c = hr->marks;
      c[i] += 1;
      maximal = !rs->is_root(c);
    }
    r.passed = at_top == 1 && marks_pos && h == 1 + marksum && hr->psi_height == h - 1 && maximal;
    r.value = h;
    r.detail = "unique top root of height h - 1 = " + std::to_string(hr->psi_height) +
               ", positive marks summing to h - 1, no root above it";
  });

  check("killing-scale", [&](CheckResult& r) {
    Rational norm_sum = 0;
    for (int i = 0; i < nr; ++i) norm_sum += rs->norm_of[i];
    const bool trace_formula = kd->I * l == norm_sum;
    const bool dual = kd->I == Rational(2) * kd->dual_coxeter;
    const bool rescale = kd->K.scaled(kd->I) == rs->base_form;
    auto piv = ldl_pivots(kd->K);
    bool spd = static_cast<int>(piv.size()) == l;
    for (const Rational& p : piv) spd = spd && p > 0;
    r.passed = trace_formula && dual && rescale && spd;
    r.value = to_double(kd->I);
    r.detail = "I = " + fraction_string(kd->I) + " = (sum of root norms)/rank = 2 * " +
               std::to_string(kd->dual_coxeter) + "; K positive definite";
  });

  std::optional<radii::CircleOperator> op;
  std::optional<radii::RadiiReport> rr;
  check("operator-self-adjoint", [&](CheckResult& r) {
    op = radii::build_circle_operator(*rs, *hr, *kd);
    r.passed = (op->K * op->M).is_symmetric();
    r.value = 1;
    r.detail = "K*M symmetric as exact rationals";
  });

  if (op) {
    check("operator-trace", [&](CheckResult& r) {
      const Rational tr = op->M.trace();
      Rational s = rs->norm_of[hr->psi_index];  // the j = 0 term: n_0 = 1, |alpha_0| = |psi|
      for (int i = 0; i < l; ++i) {
        roots::Coords a(l, 0);
        a[i] = 1;
        s += Rational(hr->marks[i]) * rs->norm_of[rs->index_of(a)];
      }
      s /= kd->I;
      r.passed = tr == s && tr == 1;
      r.value = to_double(tr);
      r.detail = "trace = sum of n_j (alpha_j, alpha_j) over the extended diagram = " +
                 fraction_string(tr);
    });

    check("operator-positive", [&](CheckResult& r) {
      rr = radii::radii_report(*op);
      const double mn = rr->eigenvalues.front();
      double sum = 0;
      for (double e : rr->eigenvalues) sum += e;
      const double target = (2.0 / h) * to_double(op->M.trace());
      const bool trace_sum = std::abs(sum - target) <= 1e-12 * std::max(1.0, target);
      r.passed = mn > 0 && trace_sum && rr->normalized.back() == 1000.0;
      r.value = mn;
      r.detail = "smallest eigenvalue of the 2/h scaling = " + sci(mn) +
                 ", eigenvalue sum matches the trace, top normalized radius exactly 1000";
    });
  }

  std::optional<apposition::ChevalleyBasis> chev;
  check("structure-integrality", [&](CheckResult& r) {
    chev = apposition::build_chevalley(*rs, *kd);
    long long maxn = 0;
    bool ok = true;
    for (int i = 0; i < nr && ok; ++i) {
      for (int j = 0; j < nr && ok; ++j) {
        const long long nij = chev->n[i][j];
        maxn = std::max(maxn, std::llabs(nij));
        roots::Coords c = rs->roots[i];
        for (int t = 0; t < l; ++t) c[t] += rs->roots[j][t];
        const int sum = (i == j || j == rs->neg_of[i]) ? -1 : rs->index_of(c);
        if (sum < 0)
          ok = nij == 0;
        else
          ok = std::llabs(nij) == roots::string_down(*rs, i, j) + 1;
        ok = ok && nij == -chev->n[j][i] && chev->n[rs->neg_of[i]][rs->neg_of[j]] == -nij;
      }
    }
    r.passed = ok;
    r.value = static_cast<double>(maxn);
    r.detail = "every constant realizes its root-string length, antisymmetric, negation-odd; max |N| = " +
               std::to_string(maxn);
  });

  if (chev) {
    check("jacobi-identity", [&](CheckResult& r) {
      const int dim = nr + l;
      if (dim <= 60) {
        apposition::check_jacobi_full(*rs, *chev);
        const long long t = static_cast<long long>(dim) * (dim - 1) * (dim - 2) / 6;
        r.value = static_cast<double>(t);
        r.detail = "exact on all " + std::to_string(t) + " basis triples";
      } else {
        apposition::check_jacobi_sample(*rs, *chev, opts.seed, opts.jacobi_samples);
        r.value = opts.jacobi_samples;
        r.detail = "exact on " + std::to_string(opts.jacobi_samples) + " seeded random triples";
      }
      r.passed = true;
    });

    check("pairing-normalization", [&](CheckResult& r) {
      bool ok = true;
      for (int i = 0; i < nr && ok; ++i)
        ok = apposition::adjoint_trace_pairing(*rs, *chev, i) == chev->kappa[i];
      // The trace form restricted to the Cartan must reproduce K exactly:
      // kappa(t_i, t_j) = sum over roots of phi(t_i) phi(t_j).
      RatMatrix acc(l, l);
      for (int i = 0; i < nr; ++i) {
        std::vector<Rational> u(l, Rational(0));
        for (int a = 0; a < l; ++a)
          for (int b = 0; b < l; ++b) u[a] += kd->K(a, b) * rs->roots[i][b];
        for (int a = 0; a < l; ++a)
          for (int b = 0; b < l; ++b) acc(a, b) += u[a] * u[b];
      }
      ok = ok && acc == kd->K;
      r.passed = ok;
      r.value = nr;
      r.detail = "kappa(e, e-) equals the adjoint trace for all roots; Cartan trace form equals K";
    });
  }

  std::optional<apposition::StructureConstants> sc;
  std::optional<apposition::CyclicElement> ce;
  check("cyclic-commutator", [&](CheckResult& r) {
    sc = apposition::build_structure_constants(*rs, *hr, *kd, opts.seed, opts.jacobi_samples);
    ce = apposition::build_cyclic_element(*sc);
    const double res = apposition::bracket(*sc, ce->x, ce->x_minus).cwiseAbs().maxCoeff();
    r.passed = res <= 1e-12;
    r.value = res;
    r.detail = "max |[x, x-]| = " + sci(res);
  });

  if (sc && ce) {
    check("real-structure", [&](CheckResult& r) {
      auto fr = apposition::compact_frame(*sc);
      const Eigen::VectorXd hv = 0.5 * (ce->x + ce->x_minus);
      const Eigen::VectorXd sv = 0.5 * (ce->x - ce->x_minus);
      const Eigen::MatrixXd at = fr.p * apposition::ad_matrix(*sc, hv) * fr.p_inv;
      const Eigen::MatrixXd st = fr.p * apposition::ad_matrix(*sc, sv) * fr.p_inv;
      const double symm = (at - at.transpose()).norm() / std::max(1.0, at.norm());
      const double skew = (st + st.transpose()).norm() / std::max(1.0, st.norm());
      r.passed = symm <= 1e-10 && skew <= 1e-10;
      r.value = std::max(symm, skew);
      r.detail = "x - x- acts skew-adjointly (purely imaginary spectrum), x + x- self-adjointly";
    });
  }

  std::optional<apposition::SpectralReport> sr;
  if (sc && ce) {
    check("kernel-rank", [&](CheckResult& r) {
      sr = apposition::spectrum(*sc, *ce);
      // rank of (ad x)^2 in the frame where ad x is normal, so the singular
      // values are the squared eigenvalue moduli and the zero gap is clean
      auto cf = apposition::compact_frame(*sc);
      const Eigen::MatrixXd ax = cf.p * apposition::ad_matrix(*sc, ce->x) * cf.p_inv;
      const Eigen::MatrixXd ax2 = ax * ax;
      Eigen::BDCSVD<Eigen::MatrixXd> svd(ax2);
      int k2 = 0;
      for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] < 1e-8 * svd.singularValues()[0]) ++k2;
      r.passed = sr->kernel_dim == l && static_cast<int>(sr->eigenvalues.size()) == l * h && k2 == l;
      r.value = sr->kernel_dim;
      r.detail = "dim ker ad x = dim ker (ad x)^2 = " + std::to_string(l) + ", plus " +
                 std::to_string(sr->eigenvalues.size()) + " nonzero eigenvalues";
    });
  }

  if (sr) {
    check("kernel-abelian", [&](CheckResult& r) {
      double worst = 0;
      for (int i = 0; i < sr->kernel_dim; ++i) {
        for (int j = i + 1; j < sr->kernel_dim; ++j) {
          const Eigen::VectorXd ki = sr->kernel.col(i), kj = sr->kernel.col(j);
          const double res =
              apposition::bracket(*sc, ki, kj).norm() / std::max(1e-300, ki.norm() * kj.norm());
          worst = std::max(worst, res);
        }
      }
      r.passed = worst <= 1e-10;
      r.value = worst;
      r.detail = "centralizer of x closes under brackets to " + sci(worst) +
                 " (a Cartan subalgebra in apposition)";
    });

    check("rotation-invariance", [&](CheckResult& r) {
      const std::complex<double> gamma = std::polar(1.0, 2.0 * M_PI / h);
      double worst = 0;
      for (const auto& nu : sr->eigenvalues) {
        const std::complex<double> target = gamma * nu;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& mu : sr->eigenvalues) best = std::min(best, std::abs(mu - target));
        worst = std::max(worst, best / std::abs(nu));
      }
      r.passed = worst <= 1e-9;
      r.value = worst;
      r.detail = "spectrum maps onto itself under rotation by 2*pi/" + std::to_string(h) +
                 " within " + sci(worst);
    });

    check("modulus-classes", [&](CheckResult& r) {
      bool ok = true;
      int total = 0;
      std::string sizes;
      for (const auto& mc : sr->classes) {
        const int m = static_cast<int>(mc.members.size());
        total += m;
        ok = ok && m > 0 && m % h == 0;
        if (!sizes.empty()) sizes += ",";
        sizes += std::to_string(m);
      }
      ok = ok && total == l * h;
      if (type == roots::LieType{'E', 8}) {
        ok = ok && static_cast<int>(sr->classes.size()) == 8;
        for (const auto& mc : sr->classes) ok = ok && mc.members.size() == 30;
      }
      r.passed = ok;
      r.value = static_cast<double>(sr->classes.size());
      r.detail = std::to_string(sr->classes.size()) + " modulus classes of sizes " + sizes +
                 ", each a multiple of h";
    });
  }

  if (sr && rr) {
    check("radii-agreement", [&](CheckResult& r) {
      auto oracle = apposition::oracle_radii(*sr);
      std::vector<double> expanded;
      for (size_t c = 0; c < oracle.radii.size(); ++c)
        for (int k = 0; k < oracle.counts[c] / h; ++k) expanded.push_back(oracle.radii[c]);
      if (static_cast<int>(expanded.size()) != l)
        throw std::runtime_error("oracle class weights do not expand to rank many radii");
      std::sort(expanded.begin(), expanded.end());
      double worst = 0;
      for (int i = 0; i < l; ++i)
        worst = std::max(worst, std::abs(expanded[i] - rr->radii[i]) / rr->radii[i]);
      rep.max_relative_discrepancy = worst;
      r.passed = worst <= opts.tolerance;
      r.value = worst;
      r.detail = "operator radii vs adjoint-spectrum radii: max relative difference " + sci(worst);
    });
  }

  struct ZPick {
    int eig = 0;
    Eigen::VectorXcd z;
  };
  std::vector<ZPick> picks;
  if (sr && op) {
    check("cartan-component", [&](CheckResult& r) {
      double maxres = 0;
      bool ok = true;
      Eigen::MatrixXcd on(l, 0);  // orthonormalized picks, for the greedy rank test
      for (const auto& mc : sr->classes) {
        const int need = static_cast<int>(mc.members.size()) / h;
        int got = 0;
        for (int idx : mc.members) {
          if (got == need) break;
          apposition::ZeroComponentCheck zc;
          try {
            zc = apposition::zero_component_eigencheck(*sc, *sr, idx, *op);
          } catch (const std::exception&) {
            continue;
          }
          Eigen::VectorXcd g = zc.z.normalized();
          for (int c = 0; c < on.cols(); ++c) g -= on.col(c).dot(g) * on.col(c);
          if (g.norm() < 1e-6) continue;  // same orbit: proportional Cartan component
          on.conservativeResize(l, on.cols() + 1);
          on.col(on.cols() - 1) = g.normalized();
          picks.push_back({idx, zc.z});
          maxres = std::max(maxres, zc.residual);
          ++got;
        }
        ok = ok && got == need;
      }
      ok = ok && static_cast<int>(picks.size()) == l && maxres <= opts.tolerance;
      r.passed = ok;
      if (!ok && static_cast<int>(picks.size()) != l) picks.clear();
      r.value = maxres;
      r.detail = "one Cartan component per Coxeter orbit solves the operator eigenproblem, max residual " +
                 sci(maxres);
    });
  }

  if (static_cast<int>(picks.size()) == l) {
    check("component-rank", [&](CheckResult& r) {
      Eigen::MatrixXcd z(l, l);
      for (int i = 0; i < l; ++i) z.col(i) = picks[i].z.normalized();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z);
      const double cond = svd.singularValues()[l - 1] / svd.singularValues()[0];
      r.passed = cond > 1e-8;
      r.value = cond;
      r.detail = "the " + std::to_string(l) + " collected components span the Cartan (sigma_min/sigma_max = " +
                 sci(cond) + ")";
    });

    check("reconstruction", [&](CheckResult& r) {
      const double bound = std::min(opts.tolerance, 1e-9);
      double maxres = 0, maxbeyond = 0;
      bool band = true;
      for (const auto& pk : picks) {
        auto gv = apposition::reconstruct_root_vector(*sc, *ce, pk.z, sr->eigenvalues[pk.eig]);
        double total = 0;
        for (const auto& [k, comp] : gv.components) {
          total += comp.squaredNorm();
          band = band && std::abs(k) < h;
        }
        total = std::sqrt(total);
        maxres = std::max(maxres, gv.residual);
        maxbeyond = std::max(maxbeyond, gv.beyond_band / std::max(1e-300, total));
      }
      r.passed = maxres <= bound && band && maxbeyond <= 1e-10;
      r.value = maxres;
      r.detail = "height recursion reassembles each eigenvector to " + sci(maxres) +
                 ", nothing at heights beyond the band (" + sci(maxbeyond) + ")";
    });
  }

  if (sc && sr) {
    check("figure-circles", [&](CheckResult& r) {
      auto fig = coxplane::make_figure(*sc, *sr, {});
      const bool count = static_cast<int>(fig.points.size()) == l * h;
      double oncirc = 0, rmax = 0;
      for (const auto& p : fig.points) {
        const double rad = fig.circle_radii[p.class_index];
        oncirc = std::max(oncirc, std::abs(std::hypot(p.x, p.y) - rad) / rad);
        rmax = std::max(rmax, rad);
      }
      const double ca = std::cos(2.0 * M_PI / h), sa = std::sin(2.0 * M_PI / h);
      double closure = 0;
      for (const auto& p : fig.points) {
        const double rx = ca * p.x - sa * p.y, ry = sa * p.x + ca * p.y;
        double drot = std::numeric_limits<double>::infinity();
        double dneg = std::numeric_limits<double>::infinity();
        for (const auto& q : fig.points) {
          drot = std::min(drot, std::hypot(q.x - rx, q.y - ry));
          dneg = std::min(dneg, std::hypot(q.x + p.x, q.y + p.y));
        }
        closure = std::max(closure, std::max(drot, dneg) / rmax);
      }
      r.passed = count && oncirc <= 1e-9 && closure <= 1e-8;
      r.value = oncirc;
      r.detail = std::to_string(fig.points.size()) + " points on " +
                 std::to_string(fig.circle_radii.size()) + " circles (membership " + sci(oncirc) +
                 "), closed under the h-fold rotation and negation (" + sci(closure) + ")";
    });
  }

  return finish();
}

}  // namespace gosset::verify
