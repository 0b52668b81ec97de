#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gosset/circle_operator.hpp"

using namespace gosset;
using namespace gosset::roots;
using namespace gosset::radii;

namespace {

struct Built {
  RootSystem rs;
  HighestRootData hr;
  KillingData kd;
  CircleOperator op;
};

Built build(const LieType& t) {
  Built b{build_root_system(t), {}, {}, {}};
  b.hr = highest_root(b.rs);
  b.kd = killing_gram(b.rs, b.hr);
  b.op = build_circle_operator(b.rs, b.hr, b.kd);
  return b;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_CASE("A2 operator is half the identity") {
  auto b = build({'A', 2});
  RatMatrix half = RatMatrix::identity(2).scaled(Rational(1, 2));
  CHECK(b.op.M == half);
  CHECK((b.op.K * b.op.M).is_symmetric());
  CHECK(b.op.M.trace() == Rational(1));

  auto rr = radii_report(b.op);
  REQUIRE(rr.eigenvalues.size() == 2);
  CHECK(rr.eigenvalues[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(rr.eigenvalues[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(rr.radii[0] == doctest::Approx(std::sqrt(1.0 / 3)).epsilon(1e-14));
  CHECK(rr.normalized[0] == 1000.0);
  CHECK(rr.normalized[1] == 1000.0);
  CHECK(rr.integer_parts == std::vector<long long>{1000, 1000});
  CHECK(rr.multiplicities == std::vector<int>{2});

  auto cp = char_poly(b.op);
  CHECK(cp.scale_c == Rational(1));
  REQUIRE(cp.coefficients.size() == 2);
  CHECK(cp.coefficients[0] == Rational(-1));       // (x - 1/2)^2
  CHECK(cp.coefficients[1] == Rational(1, 4));
  CHECK_FALSE(cp.integral);

  auto ex = exact_eigenvalue(cp, 0.5);
  REQUIRE(ex.has_value());
  CHECK(*ex == Rational(1, 2));
}

TEST_CASE("operator trace is one for every type") {
  for (const auto& t : standard_sweep()) {
    std::string tag = t.name();
    CAPTURE(tag);
    auto b = build(t);
    CHECK(b.op.M.trace() == Rational(1));
    CHECK((b.op.K * b.op.M).is_symmetric());

    auto rr = radii_report(b.op);
    REQUIRE(static_cast<int>(rr.eigenvalues.size()) == b.rs.rank);
    CHECK(std::is_sorted(rr.eigenvalues.begin(), rr.eigenvalues.end()));
    for (double ev : rr.eigenvalues) CHECK(ev > 0);
    double sum = std::accumulate(rr.eigenvalues.begin(), rr.eigenvalues.end(), 0.0);
    CHECK(sum == doctest::Approx(2.0 / b.hr.h).epsilon(1e-12));
    CHECK(rr.normalized.back() == 1000.0);
    CHECK(std::accumulate(rr.multiplicities.begin(), rr.multiplicities.end(), 0) == b.rs.rank);

    // floating spectrum satisfies the exact characteristic polynomial
    auto cp = char_poly(b.op);
    double c = to_double(cp.scale_c);
    std::vector<Rational> full;  // coefficients omit the leading monic 1
    full.emplace_back(1);
    full.insert(full.end(), cp.coefficients.begin(), cp.coefficients.end());
    for (double ev : rr.eigenvalues) {
      double x = c * ev * b.hr.h / 2.0;
      CHECK(std::abs(evaluate_poly(full, x)) < 1e-6);
    }
  }
}

TEST_CASE("E8 table") {
  auto b = build({'E', 8});
  auto rr = radii_report(b.op);

  // normalized radii, frozen from the integer characteristic polynomial roots
  const double expect[8] = {209.056926535, 338.261212718, 415.823381636, 502.754139782,
                            618.033988750, 672.816364803, 813.473286152, 1000.0};
  REQUIRE(rr.normalized.size() == 8);
  for (int i = 0; i < 8; ++i)
    CHECK(rr.normalized[i] == doctest::Approx(expect[i]).epsilon(1e-10));
  CHECK(rr.integer_parts ==
        std::vector<long long>{209, 338, 415, 502, 618, 672, 813, 1000});
  CHECK(rr.multiplicities == std::vector<int>(8, 1));

  // the two smallest radii sit at the golden ratio
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  CHECK(rr.radii[1] / rr.radii[0] == doctest::Approx(golden).epsilon(1e-12));
}

TEST_CASE("E8 characteristic polynomial factors") {
  auto b = build({'E', 8});
  auto cp = char_poly(b.op);

  CHECK(cp.scale_c == Rational(30));  // trace M = 1
  CHECK(cp.integral);
  std::vector<Rational> tail = {-30, 360, -2250, 7965, -16200, 18225, -10125, 2025};
  CHECK(cp.coefficients == tail);

  REQUIRE(cp.factors.size() == 2);
  CHECK(cp.factors[0] == std::vector<Rational>{1, -15, 75, -135, 45});
  CHECK(cp.factors[1] == std::vector<Rational>{1, -15, 60, -90, 45});
  CHECK(cp.factorization_verified);

  // independent product check
  auto prod = poly_mul(cp.factors[0], cp.factors[1]);
  std::vector<Rational> monic = {1};
  monic.insert(monic.end(), tail.begin(), tail.end());
  CHECK(prod == monic);

  // irrational spectrum: no eigenvalue identifies as rational
  auto rr = radii_report(b.op);
  double scaled = to_double(cp.scale_c) * rr.eigenvalues[0] * b.hr.h / 2.0;
  CHECK_FALSE(exact_eigenvalue(cp, scaled).has_value());
}

TEST_CASE("E8 golden pairs cross the two factor families") {
  auto b = build({'E', 8});
  auto rr = radii_report(b.op);
  auto cp = char_poly(b.op);
  auto pairs = golden_pairs(rr, cp);

  REQUIRE(pairs.size() == 4);
  const double golden = 0.5 * (1.0 + std::sqrt(5.0));
  std::vector<std::pair<int, int>> got;
  bool used[8] = {};
  for (const auto& p : pairs) {
    got.push_back({p.lower, p.upper});
    CHECK(p.ratio == doctest::Approx(golden).epsilon(1e-9));
    CHECK(p.lower_factor != p.upper_factor);
    CHECK(p.lower_factor >= 0);
    CHECK(p.upper_factor >= 0);
    used[p.lower] = used[p.upper] = true;
  }
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<int, int>>{{0, 1}, {2, 5}, {3, 6}, {4, 7}});
  for (bool u : used) CHECK(u);
}

TEST_CASE("spectrum survives renumbering and rank-2 duality") {
  auto f = build({'F', 4});
  auto rs2 = build_root_system({'F', 4}, {2, 3, 1, 0});
  auto hr2 = highest_root(rs2);
  auto kd2 = killing_gram(rs2, hr2);
  auto rr1 = radii_report(f.op);
  auto rr2 = radii_report(build_circle_operator(rs2, hr2, kd2));
  REQUIRE(rr1.eigenvalues.size() == rr2.eigenvalues.size());
  for (size_t i = 0; i < rr1.eigenvalues.size(); ++i)
    CHECK(rr1.eigenvalues[i] == doctest::Approx(rr2.eigenvalues[i]).epsilon(1e-10));

  // B2 and C2 give the same circles
  auto rb = radii_report(build({'B', 2}).op);
  auto rc = radii_report(build({'C', 2}).op);
  for (int i = 0; i < 2; ++i)
    CHECK(rb.eigenvalues[i] == doctest::Approx(rc.eigenvalues[i]).epsilon(1e-12));
}
