#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gosset/root_system.hpp"

using namespace gosset;
using namespace gosset::roots;

namespace {

std::set<Coords> root_set(const RootSystem& rs) {
  return {rs.roots.begin(), rs.roots.end()};
}

}  // namespace

TEST_CASE("type parsing and admissibility") {
  auto t = parse_lie_type("E8");
  REQUIRE(t.has_value());
  CHECK(t->family == 'E');
  CHECK(t->rank == 8);
  CHECK(parse_lie_type("e8").has_value());
  CHECK(parse_lie_type("b3")->family == 'B');

  CHECK_FALSE(parse_lie_type("X4").has_value());
  CHECK_FALSE(parse_lie_type("A").has_value());
  CHECK_FALSE(parse_lie_type("8").has_value());
  CHECK_FALSE(parse_lie_type("").has_value());
  CHECK_FALSE(parse_lie_type("A2b").has_value());

  std::string reason;
  CHECK(admissible({'A', 2}));
  CHECK(admissible({'B', 2}));
  CHECK(admissible({'C', 2}));
  CHECK(admissible({'D', 4}));
  CHECK(admissible({'G', 2}));
  CHECK(admissible({'F', 4}));
  CHECK(admissible({'E', 6}));

  CHECK_FALSE(admissible({'A', 1}, &reason));   // rank 2 floor everywhere
  CHECK_FALSE(admissible({'D', 3}, &reason));   // folded into A3, not admitted
  CHECK(!reason.empty());
  CHECK_FALSE(admissible({'D', 2}));
  CHECK_FALSE(admissible({'E', 5}));
  CHECK_FALSE(admissible({'E', 9}));
  CHECK_FALSE(admissible({'F', 5}));
  CHECK_FALSE(admissible({'G', 3}));
}

TEST_CASE("standard sweep composition") {
  auto sweep = standard_sweep();
  CHECK(sweep.size() == 31);
  auto has = [&](char f, int r) {
    return std::find(sweep.begin(), sweep.end(), LieType{f, r}) != sweep.end();
  };
  CHECK(has('B', 2));
  CHECK(has('C', 2));  // both rank-2 conventions present
  CHECK_FALSE(has('D', 3));
  CHECK(has('D', 4));
  CHECK(has('E', 8));
  CHECK(has('G', 2));
  for (const auto& t : sweep) CHECK(admissible(t));
}

TEST_CASE("A2 enumeration") {
  auto rs = build_root_system({'A', 2});
  CHECK(rs.num_roots() == 6);
  std::set<Coords> expect = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
  CHECK(root_set(rs) == expect);

  auto hr = highest_root(rs);
  CHECK(hr.h == 3);
  CHECK(hr.marks == std::vector<int>{1, 1});
  CHECK(rs.roots[hr.psi_index] == Coords{1, 1});
  CHECK(hr.psi_height == 2);

  auto kd = killing_gram(rs, hr);
  CHECK(kd.I == Rational(6));
  CHECK(kd.dual_coxeter == 3);
  RatMatrix k(2, 2);
  k(0, 0) = Rational(1, 3);
  k(0, 1) = Rational(-1, 6);
  k(1, 0) = Rational(-1, 6);
  k(1, 1) = Rational(1, 3);
  CHECK(kd.K == k);
}

TEST_CASE("G2 enumeration") {
  auto rs = build_root_system({'G', 2});
  CHECK(rs.num_roots() == 12);
  std::set<Coords> pos = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  std::set<Coords> expect;
  for (auto& c : pos) {
    expect.insert(c);
    expect.insert({-c[0], -c[1]});
  }
  CHECK(root_set(rs) == expect);

  auto hr = highest_root(rs);
  CHECK(hr.h == 6);
  CHECK(hr.marks == std::vector<int>{3, 2});

  auto kd = killing_gram(rs, hr);
  CHECK(kd.I == Rational(8));
  CHECK(kd.dual_coxeter == 4);

  // alpha1 short, alpha2 long
  int i1 = rs.index_of({1, 0});
  int i2 = rs.index_of({0, 1});
  CHECK(rs.norm_of[i1] == Rational(2, 3));
  CHECK(rs.norm_of[i2] == Rational(2));

  // the long string: alpha2 + k alpha1 for k = 0..3
  CHECK(string_down(rs, i1, rs.index_of({3, 1})) == 3);
  CHECK(string_down(rs, i1, rs.index_of({2, 1})) == 2);
  CHECK(string_down(rs, i1, i2) == 0);
}

TEST_CASE("B2 and C2 are transposes of each other") {
  auto b = build_root_system({'B', 2});
  auto c = build_root_system({'C', 2});
  CHECK(b.num_roots() == 8);
  CHECK(c.num_roots() == 8);
  CHECK(root_set(b) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {1, 2},
                                        {-1, 0}, {0, -1}, {-1, -1}, {-1, -2}});
  CHECK(root_set(c) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1},
                                        {-1, 0}, {0, -1}, {-1, -1}, {-2, -1}});
  CHECK(b.cartan[0][1] == c.cartan[1][0]);
  CHECK(b.cartan[1][0] == c.cartan[0][1]);

  auto hb = highest_root(b);
  auto hc = highest_root(c);
  CHECK(hb.marks == std::vector<int>{1, 2});
  CHECK(hc.marks == std::vector<int>{2, 1});
  CHECK(hb.h == 4);
  CHECK(hc.h == 4);
  CHECK(killing_gram(b, hb).I == Rational(6));
  CHECK(killing_gram(c, hc).I == Rational(6));
}

TEST_CASE("E8 headline numbers") {
  auto rs = build_root_system({'E', 8});
  CHECK(rs.num_roots() == 240);
  auto hr = highest_root(rs);
  CHECK(hr.h == 30);
  CHECK(hr.marks == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  auto kd = killing_gram(rs, hr);
  CHECK(kd.I == Rational(60));
  CHECK(kd.dual_coxeter == 30);
  // simply laced: every root has squared length 2
  for (int i = 0; i < rs.num_roots(); ++i) CHECK(rs.norm_of[i] == Rational(2));
}

TEST_CASE("F4 and D4 marks") {
  auto f = build_root_system({'F', 4});
  auto hf = highest_root(f);
  CHECK(f.num_roots() == 48);
  CHECK(hf.h == 12);
  CHECK(hf.marks == std::vector<int>{2, 3, 4, 2});
  CHECK(killing_gram(f, hf).dual_coxeter == 9);

  auto d = build_root_system({'D', 4});
  auto hd = highest_root(d);
  CHECK(d.num_roots() == 24);
  CHECK(hd.h == 6);
  CHECK(hd.marks == std::vector<int>{1, 2, 1, 1});
  CHECK(killing_gram(d, hd).dual_coxeter == 6);
}

TEST_CASE("sweep structural properties") {
  for (const auto& t : standard_sweep()) {
    std::string tag = t.name();
    CAPTURE(tag);
    auto rs = build_root_system(t);
    auto hr = highest_root(rs);
    auto kd = killing_gram(rs, hr);
    int l = rs.rank;

    CHECK(rs.num_roots() == l * hr.h);
    CHECK(2 * static_cast<int>(rs.positive.size()) == rs.num_roots());
    CHECK(hr.h == 1 + std::accumulate(hr.marks.begin(), hr.marks.end(), 0));
    CHECK(hr.psi_height == hr.h - 1);
    CHECK(kd.I == Rational(2 * kd.dual_coxeter));

    // height histogram is symmetric, no height-0 roots
    std::map<int, int> hist;
    for (int i = 0; i < rs.num_roots(); ++i) {
      CHECK(rs.height_of[i] != 0);
      hist[rs.height_of[i]]++;
    }
    for (auto& [k, cnt] : hist) CHECK(hist.at(-k) == cnt);

    // the highest root is alone at the top, and cannot be extended
    CHECK(hist.at(hr.psi_height) == 1);
    for (int j = 0; j < l; ++j) {
      Coords up = rs.roots[hr.psi_index];
      up[j] += 1;
      CHECK_FALSE(rs.is_root(up));
    }

    // negation and reflection keep the set closed
    for (int i = 0; i < rs.num_roots(); ++i) {
      CHECK(rs.neg_of[rs.neg_of[i]] == i);
      CHECK(rs.height_of[rs.neg_of[i]] == -rs.height_of[i]);
      CHECK(rs.b0(rs.roots[i], rs.roots[i]) == rs.norm_of[i]);
      for (int j = 0; j < l; ++j) CHECK(rs.is_root(rs.reflect(rs.roots[i], j)));
    }

    // at most two root lengths, long ones normalized to 2
    std::set<Rational> norms(rs.norm_of.begin(), rs.norm_of.end());
    CHECK(norms.size() <= 2);
    CHECK(*norms.rbegin() == Rational(2));

    // cartan integers recoverable from the form
    for (int i = 0; i < l; ++i) {
      Coords ei(l, 0);
      ei[i] = 1;
      for (int j = 0; j < l; ++j) CHECK(rs.pairing(ei, j) == rs.cartan[i][j]);
    }
  }
}

TEST_CASE("renumbering leaves invariants alone") {
  auto std_rs = build_root_system({'F', 4});
  auto perm_rs = build_root_system({'F', 4}, {3, 2, 1, 0});
  CHECK(perm_rs.num_roots() == std_rs.num_roots());

  auto heights_of = [](const RootSystem& rs) {
    std::multiset<int> m(rs.height_of.begin(), rs.height_of.end());
    return m;
  };
  CHECK(heights_of(perm_rs) == heights_of(std_rs));

  std::multiset<Rational> n1(std_rs.norm_of.begin(), std_rs.norm_of.end());
  std::multiset<Rational> n2(perm_rs.norm_of.begin(), perm_rs.norm_of.end());
  CHECK(n1 == n2);

  auto h1 = highest_root(std_rs);
  auto h2 = highest_root(perm_rs);
  CHECK(h1.h == h2.h);
  std::multiset<int> m1(h1.marks.begin(), h1.marks.end());
  std::multiset<int> m2(h2.marks.begin(), h2.marks.end());
  CHECK(m1 == m2);
  CHECK(killing_gram(std_rs, h1).I == killing_gram(perm_rs, h2).I);
}

TEST_CASE("root strings stay within Lie bounds") {
  for (auto name : {"A3", "B3", "G2", "C3"}) {
    auto rs = build_root_system(*parse_lie_type(name));
    CAPTURE(name);
    for (int p : rs.positive) {
      for (int q = 0; q < rs.num_roots(); ++q) {
        if (q == p || q == rs.neg_of[p]) continue;
        int down = string_down(rs, p, q);
        CHECK(down >= 0);
        CHECK(down <= 3);
        // contiguity: walking further down leaves the system for good
        Coords c = rs.roots[q];
        for (int k = 0; k < rs.rank; ++k) c[k] -= (down + 1) * rs.roots[p][k];
        CHECK_FALSE(rs.is_root(c));
      }
    }
  }
}
