#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "gosset/structure_constants.hpp"

using namespace gosset;
using namespace gosset::roots;
using namespace gosset::apposition;

namespace {

struct Realized {
  RootSystem rs;
  HighestRootData hr;
  KillingData kd;
  StructureConstants sc;
};

Realized realize(const LieType& t) {
  Realized r{build_root_system(t), {}, {}, {}};
  r.hr = highest_root(r.rs);
  r.kd = killing_gram(r.rs, r.hr);
  r.sc = build_structure_constants(r.rs, r.hr, r.kd);
  return r;
}

}  // namespace

TEST_CASE("integer basis layer") {
  auto rs = build_root_system({'G', 2});
  auto hr = highest_root(rs);
  auto kd = killing_gram(rs, hr);
  auto cb = build_chevalley(rs, kd);

  long long maxn = 0;
  for (int i = 0; i < cb.nroots; ++i)
    for (int j = 0; j < cb.nroots; ++j) {
      long long n = cb.n[i][j];
      maxn = std::max(maxn, std::llabs(n));
      CHECK(n == -cb.n[j][i]);
      Coords sum = rs.roots[i];
      for (int k = 0; k < rs.rank; ++k) sum[k] += rs.roots[j][k];
      bool sums_to_root = rs.is_root(sum);
      if (j == rs.neg_of[i] || !sums_to_root) {
        CHECK(n == 0);
      } else {
        CHECK(std::llabs(n) == string_down(rs, i, j) + 1);
        CHECK(cb.n[rs.neg_of[i]][rs.neg_of[j]] == -n);
      }
    }
  CHECK(maxn == 3);  // the long G2 string

  // pairing values: 2I / (phi,phi), so 8 on long roots and 24 on short ones
  for (int i = 0; i < cb.nroots; ++i) {
    long long expect = rs.norm_of[i] == Rational(2) ? 8 : 24;
    CHECK(cb.kappa[i] == expect);
    CHECK(adjoint_trace_pairing(rs, cb, i) == expect);
  }
}

TEST_CASE("A2 brackets by hand") {
  auto rs = build_root_system({'A', 2});
  auto kd = killing_gram(rs, highest_root(rs));
  auto cb = build_chevalley(rs, kd);

  int a1 = rs.index_of({1, 0});
  int a2 = rs.index_of({0, 1});
  int psi = rs.index_of({1, 1});

  auto br = bracket_basis(rs, cb, a1, a2);
  REQUIRE(br.size() == 1);
  CHECK(br[0].first == psi);
  CHECK(std::llabs(br[0].second) == 1);

  // [e, -e] lands in the coroot lattice
  auto h = bracket_basis(rs, cb, a1, rs.neg_of[a1]);
  REQUIRE(h.size() == 1);
  CHECK(h[0].first == rs.num_roots() + 0);
  CHECK(h[0].second == 1);

  for (int i = 0; i < rs.num_roots(); ++i) CHECK(cb.kappa[i] == 6);

  check_jacobi_full(rs, cb);
}

TEST_CASE("Jacobi identity holds exactly") {
  for (auto name : {"A3", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(name);
    auto rs = build_root_system(*parse_lie_type(name));
    auto kd = killing_gram(rs, highest_root(rs));
    auto cb = build_chevalley(rs, kd);
    check_jacobi_full(rs, cb);
  }
  // E8 sampled (the full triple loop is for small ranks)
  auto rs = build_root_system({'E', 8});
  auto kd = killing_gram(rs, highest_root(rs));
  auto cb = build_chevalley(rs, kd);
  check_jacobi_sample(rs, cb, 0x67055e7u, 800);
}

TEST_CASE("rescaled layer normalizations") {
  auto r = realize({'B', 3});
  const auto& sc = r.sc;
  int n = r.rs.num_roots();

  // kappa(e_phi, e_{-phi}) = 1 after the symmetric rescale
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(sc.dim);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(sc.dim);
    u[i] = 1;
    v[r.rs.neg_of[i]] = 1;
    CHECK(killing_form(sc, u, v) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(killing_form(sc, u, u) == doctest::Approx(0.0).epsilon(1e-12));
  }

  // Cartan block of the form is the Killing Gram
  for (int i = 0; i < r.rs.rank; ++i)
    for (int j = 0; j < r.rs.rank; ++j) {
      Eigen::VectorXd u = Eigen::VectorXd::Zero(sc.dim);
      Eigen::VectorXd v = Eigen::VectorXd::Zero(sc.dim);
      u[sc.cartan_start() + i] = 1;
      v[sc.cartan_start() + j] = 1;
      CHECK(killing_form(sc, u, v) ==
            doctest::Approx(to_double(r.kd.K(i, j))).epsilon(1e-12));
    }

  // theta is an involution and in the compact form B(u, theta u) < 0
  Eigen::MatrixXd th = theta_matrix(sc);
  CHECK((th * th - Eigen::MatrixXd::Identity(sc.dim, sc.dim)).norm() < 1e-12);
  for (int i = 0; i < sc.dim; ++i) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(sc.dim);
    u[i] = 1;
    CHECK(killing_form(sc, u, th * u) < 0);
  }
}

TEST_CASE("cartan action matches pairing integers") {
  auto r = realize({'C', 3});
  for (int phi = 0; phi < r.rs.num_roots(); ++phi) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(r.sc.dim);
    e[phi] = 1;
    for (int i = 0; i < r.rs.rank; ++i) {
      Eigen::VectorXd t = Eigen::VectorXd::Zero(r.sc.dim);
      t[r.sc.cartan_start() + i] = 1;
      Eigen::VectorXd out = bracket(r.sc, t, e);
      // [t_i, e_phi] = (phi, t_i) e_phi; the coefficient is stored directly
      CHECK(out[phi] == doctest::Approx(r.sc.cartan_action(phi, i)).epsilon(1e-14));
      out[phi] = 0;
      CHECK(out.norm() < 1e-14);
    }
  }
}

TEST_CASE("cyclic element commutes with its partner") {
  for (auto name : {"A2", "B2", "G2", "F4", "E8"}) {
    CAPTURE(name);
    auto r = realize(*parse_lie_type(name));
    auto ce = build_cyclic_element(r.sc);

    Eigen::VectorXd c = bracket(r.sc, ce.x, ce.x_minus);
    CHECK(c.lpNorm<Eigen::Infinity>() < 1e-12);

    // x has the lowered highest root plus one vector per simple root,
    // with squared coefficients equal to the marks
    int nz = 0;
    for (int i = 0; i < r.sc.dim; ++i)
      if (ce.x[i] != 0) ++nz;
    CHECK(nz == r.rs.rank + 1);
    CHECK(ce.x[r.rs.neg_of[r.hr.psi_index]] == 1.0);
    for (int i = 0; i < r.rs.rank; ++i) {
      Coords simple(r.rs.rank, 0);
      simple[i] = 1;
      double coef = ce.x[r.rs.index_of(simple)];
      CHECK(coef * coef == doctest::Approx(r.hr.marks[i]).epsilon(1e-12));
    }

    // theta swaps x and -x_minus
    Eigen::MatrixXd th = theta_matrix(r.sc);
    CHECK((th * ce.x + ce.x_minus).norm() < 1e-12);
  }
}

TEST_CASE("adjoint of the cyclic element has corank equal to the rank") {
  auto r = realize({'A', 3});
  auto ce = build_cyclic_element(r.sc);
  Eigen::MatrixXd ad = ad_matrix(r.sc, ce.x);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ad);
  int nullity = 0;
  double smax = svd.singularValues()[0];
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()[i] < 1e-10 * smax) ++nullity;
  CHECK(nullity == r.rs.rank);

  // killing form is ad-invariant: B([x,u],v) + B(u,[x,v]) = 0 on a few pairs
  std::srand(7);
  for (int trial = 0; trial < 12; ++trial) {
    Eigen::VectorXd u = Eigen::VectorXd::Random(r.sc.dim);
    Eigen::VectorXd v = Eigen::VectorXd::Random(r.sc.dim);
    double lhs = killing_form(r.sc, bracket(r.sc, ce.x, u), v);
    double rhs = -killing_form(r.sc, u, bracket(r.sc, ce.x, v));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}
