#include "gosset/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gosset::roots {

namespace {

struct DiagramData {
  std::vector<Rational> d;  // half squared lengths of the simple roots
  std::vector<std::tuple<int, int, Rational>> edges;  // (i, j, base_form value)
};

// Bourbaki numbering throughout: chains run 1..l; in B the last node is short,
// in C the last node is long, in D the fork sits at node l-2, in E the branch
// node 2 hangs off node 4, in F nodes 1,2 are long, in G node 1 is short.
DiagramData diagram(const LieType& t) {
  const int l = t.rank;
  DiagramData dd;
  dd.d.assign(l, 1);
  auto chain = [&](int from, int to, const Rational& v) {
    for (int i = from; i < to; ++i) dd.edges.emplace_back(i, i + 1, v);
  };
  switch (t.family) {
    case 'A':
      chain(0, l - 1, -1);
      break;
    case 'B':
      dd.d[l - 1] = Rational(1, 2);
      chain(0, l - 1, -1);
      break;
    case 'C':
      for (int i = 0; i < l - 1; ++i) dd.d[i] = Rational(1, 2);
      chain(0, l - 2, Rational(-1, 2));
      dd.edges.emplace_back(l - 2, l - 1, -1);
      break;
    case 'D':
      chain(0, l - 2, -1);
      dd.edges.emplace_back(l - 3, l - 1, -1);
      break;
    case 'E':
      dd.edges.emplace_back(0, 2, -1);
      dd.edges.emplace_back(1, 3, -1);
      for (int i = 2; i < l - 1; ++i) dd.edges.emplace_back(i, i + 1, -1);
      break;
    case 'F':
      dd.d[2] = dd.d[3] = Rational(1, 2);
      dd.edges.emplace_back(0, 1, -1);
      dd.edges.emplace_back(1, 2, -1);
      dd.edges.emplace_back(2, 3, Rational(-1, 2));
      break;
    case 'G':
      dd.d[0] = Rational(1, 3);
      dd.edges.emplace_back(0, 1, -1);
      break;
    default:
      throw std::invalid_argument("unknown family " + t.name());
  }
  return dd;
}

int height(const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); }

}  // namespace

int RootSystem::index_of(const Coords& c) const {
  auto it = index_map.find(c);
  return it == index_map.end() ? -1 : it->second;
}

Rational RootSystem::b0(const Coords& x, const Coords& y) const {
  Rational out = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (y[j] == 0) continue;
      out += Rational(x[i]) * y[j] * base_form(i, j);
    }
  }
  return out;
}

int RootSystem::pairing(const Coords& phi, int j) const {
  int out = 0;
  for (int i = 0; i < rank; ++i) out += phi[i] * cartan[i][j];
  return out;
}

Coords RootSystem::reflect(const Coords& phi, int j) const {
  Coords out = phi;
  out[j] -= pairing(phi, j);
  return out;
}

RootSystem build_root_system(const LieType& type) {
  std::vector<int> identity(type.rank);
  std::iota(identity.begin(), identity.end(), 0);
  return build_root_system(type, identity);
}

RootSystem build_root_system(const LieType& type, const std::vector<int>& numbering) {
  std::string reason;
  if (!admissible(type, &reason)) throw std::invalid_argument(reason);
  const int l = type.rank;
  if (static_cast<int>(numbering.size()) != l)
    throw std::invalid_argument("numbering must be a permutation of 0..rank-1");
  {
    std::vector<int> seen(l, 0);
    for (int v : numbering) {
      if (v < 0 || v >= l || seen[v]++) throw std::invalid_argument("numbering must be a permutation of 0..rank-1");
    }
  }

  RootSystem rs;
  rs.type = type;
  rs.rank = l;
  rs.base_form = RatMatrix(l, l);

  DiagramData dd = diagram(type);
  for (int i = 0; i < l; ++i) rs.base_form(numbering[i], numbering[i]) = 2 * dd.d[i];
  for (auto& [i, j, v] : dd.edges) {
    rs.base_form(numbering[i], numbering[j]) = v;
    rs.base_form(numbering[j], numbering[i]) = v;
  }

  rs.cartan.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational c = 2 * rs.base_form(i, j) / rs.base_form(j, j);
      rs.cartan[i][j] = static_cast<int>(to_int(c));
    }

  // Orbit of the simple roots under the simple reflections.  For a valid
  // Cartan matrix this closes on the full (finite) root system.
  std::set<Coords> seen;
  std::deque<Coords> work;
  for (int i = 0; i < l; ++i) {
    Coords alpha(l, 0);
    alpha[i] = 1;
    seen.insert(alpha);
    work.push_back(alpha);
  }
  while (!work.empty()) {
    Coords phi = work.front();
    work.pop_front();
    for (int j = 0; j < l; ++j) {
      Coords img = rs.reflect(phi, j);
      if (seen.insert(img).second) work.push_back(img);
    }
    if (seen.size() > 500000) throw std::runtime_error("root generation did not close");
  }

  rs.roots.assign(seen.begin(), seen.end());
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  const int n = rs.num_roots();
  rs.height_of.resize(n);
  rs.neg_of.resize(n);
  rs.norm_of.resize(n);
  for (int i = 0; i < n; ++i) rs.index_map[rs.roots[i]] = i;
  std::set<Rational> norms;
  for (int i = 0; i < n; ++i) {
    rs.height_of[i] = height(rs.roots[i]);
    rs.norm_of[i] = rs.b0(rs.roots[i], rs.roots[i]);
    norms.insert(rs.norm_of[i]);
    Coords neg = rs.roots[i];
    for (int& v : neg) v = -v;
    rs.neg_of[i] = rs.index_of(neg);
    if (rs.neg_of[i] < 0) throw std::runtime_error("root set not closed under negation");
    if (rs.height_of[i] > 0) rs.positive.push_back(i);
  }
  if (norms.size() > 2 || *norms.rbegin() !=2)
    throw std::runtime_error("unexpected root length normalization");
  return rs;
}

HighestRootData highest_root(const RootSystem& rs) {
  HighestRootData out;
  int best = -1;
  for (int i = 0; i < rs.num_roots(); ++i) {
    if (rs.height_of[i] > best) {
      best = rs.height_of[i];
      out.psi_index = i;
    }
  }
  for (int i = 0; i < rs.num_roots(); ++i) {
    if (rs.height_of[i] == best && i != out.psi_index)
      throw std::runtime_error("highest root is not unique");
  }
  out.marks = rs.roots[out.psi_index];
  out.psi_height = best;
  out.h = 1 + best;
  for (int m : out.marks)
    if (m <= 0) throw std::runtime_error("highest root has a nonpositive mark");
  return out;
}

KillingData killing_gram(const RootSystem& rs, const HighestRootData& hr) {
  KillingData kd;
  Rational total = 0;
  for (int i = 0; i < rs.num_roots(); ++i) total += rs.norm_of[i];
  kd.I = total / rs.rank;
  kd.K = rs.base_form.scaled(1 / kd.I);

  // Dual Coxeter number from the comarks (marks of the dual system):
  // n_i^vee = n_i * (alpha_i, alpha_i) / 2.
  Rational hv = 1;
  for (int i = 0; i < rs.rank; ++i) hv += Rational(hr.marks[i]) * rs.base_form(i, i) / 2;
  kd.dual_coxeter = to_int(hv);
  if (kd.I != 2 * hv)
    throw std::runtime_error("Killing normalization does not match twice the dual Coxeter number");
  return kd;
}

const std::vector<int>& heights(const RootSystem& rs) { return rs.height_of; }

int string_down(const RootSystem& rs, int phi, int chi) {
  int k = 0;
  Coords c = rs.roots[chi];
  const Coords& p = rs.roots[phi];
  while (true) {
    for (int i = 0; i < rs.rank; ++i) c[i] -= p[i];
    bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
    if (zero || !rs.is_root(c)) return k;
    ++k;
  }
}

}  // namespace gosset::roots
