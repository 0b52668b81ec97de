#include "gosset/chevalley.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gosset::apposition {

namespace {

using roots::Coords;
using roots::RootSystem;

Coords add(const Coords& a, const Coords& b) {
  Coords out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coords sub(const Coords& a, const Coords& b) {
  Coords out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero(const Coords& a) {
  for (int v : a)
    if (v) return false;
  return true;
}

// Builder for the positive-pair table; resolves arbitrary sign patterns
// against it through the three-term relation N(x,y)/(z,z) = N(y,z)/(x,x)
// for roots with x + y + z = 0.
struct Builder {
  const RootSystem& rs;
  std::vector<std::vector<long long>> pos;  // positive pair table
  std::vector<std::vector<char>> filled;

  explicit Builder(const RootSystem& r)
      : rs(r),
        pos(r.num_roots(), std::vector<long long>(r.num_roots(), 0)),
        filled(r.num_roots(), std::vector<char>(r.num_roots(), 0)) {}

  long long pos_any(int u, int v) const {
    if (!filled[u][v]) throw std::logic_error("structure constant requested before it was determined");
    return pos[u][v];
  }

  void set_pos(int u, int v, long long value) {
    pos[u][v] = value;
    pos[v][u] = -value;
    filled[u][v] = filled[v][u] = 1;
  }

  long long n_any(int i, int j) const {
    const Coords sum = add(rs.roots[i], rs.roots[j]);
    if (is_zero(sum) || !rs.is_root(sum)) return 0;
    const bool pi = rs.height_of[i] > 0, pj = rs.height_of[j] > 0;
    if (pi && pj) return pos_any(i, j);
    if (!pi && !pj) return -pos_any(rs.neg_of[i], rs.neg_of[j]);

    // Mixed signs: with x = root i, y = root j, z = -(x + y), one cyclic pair
    // of the triple shares a sign; reduce to it.  N(x,y) = (z,z)/(x,x) N(y,z)
    // and N(x,y) = (z,z)/(y,y) N(z,x).
    const int k = rs.neg_of[rs.index_of(sum)];
    const Rational nx = rs.norm_of[i], ny = rs.norm_of[j], nz = rs.norm_of[k];
    const bool pk = rs.height_of[k] > 0;
    Rational value;
    if (pi && pk) {
      value = nz / ny * pos_any(k, i);  // (z, x) both positive
    } else if (pj && pk) {
      value = nz / nx * pos_any(j, k);  // (y, z) both positive
    } else if (pi) {
      value = nz / nx * -pos_any(rs.neg_of[j], rs.neg_of[k]);  // (y, z) both negative
    } else {
      value = nz / ny * -pos_any(rs.neg_of[k], rs.neg_of[i]);  // (z, x) both negative
    }
    return to_int(value);
  }
};

}  // namespace

ChevalleyBasis build_chevalley(const RootSystem& rs, const roots::KillingData& kd) {
  Builder bld(rs);
  const int l = rs.rank;

  // Height induction over positive roots.  For each gamma the distinguished
  // decomposition gamma = alpha + beta (alpha the lowest-index simple root
  // with beta = gamma - alpha positive) gets n = p + 1 where p is the length
  // of the descending alpha-string through beta; every other decomposition is
  // then forced by the Jacobi identity.
  for (int g : rs.positive) {
    if (rs.height_of[g] < 2) continue;
    const Coords& gamma = rs.roots[g];

    int alpha = -1, beta = -1;
    std::vector<std::pair<int, int>> others;
    for (int xi : rs.positive) {
      if (xi >= g) break;
      Coords rest = sub(gamma, rs.roots[xi]);
      int eta = rs.index_of(rest);
      if (eta < 0 || rs.height_of[eta] <= 0 || xi > eta) continue;
      if (alpha < 0) {
        alpha = xi;  // positive roots are ordered by height, so this is simple
        beta = eta;
      } else {
        others.emplace_back(xi, eta);
      }
    }
    if (alpha < 0 || rs.height_of[alpha] != 1)
      throw std::logic_error("positive root without a simple summand");

    bld.set_pos(alpha, beta, roots::string_down(rs, alpha, beta) + 1);

    for (auto [xi, eta] : others) {
      // Jacobi on (e_alpha, e_beta, e_{-xi}) pins N(xi, eta).
      long long t_beta = 0, t_alpha = 0;
      Coords bmx = sub(rs.roots[beta], rs.roots[xi]);
      if (rs.is_root(bmx)) {
        int bx = rs.index_of(bmx);
        t_beta = bld.n_any(beta, rs.neg_of[xi]) * bld.n_any(bx, alpha);
      }
      Coords amx = sub(rs.roots[alpha], rs.roots[xi]);
      if (!is_zero(amx) && rs.is_root(amx)) {
        int ax = rs.index_of(amx);
        t_alpha = bld.n_any(rs.neg_of[xi], alpha) * bld.n_any(ax, beta);
      }
      Rational q = rs.norm_of[g] / rs.norm_of[eta] * (t_beta + t_alpha);
      q /= bld.pos_any(alpha, beta);
      long long value = to_int(q);
      if (value == 0) throw std::logic_error("vanishing structure constant on a root pair");
      bld.set_pos(xi, eta, value);
    }
  }

  ChevalleyBasis cb;
  cb.nroots = rs.num_roots();
  cb.rank = l;
  cb.n.assign(cb.nroots, std::vector<long long>(cb.nroots, 0));
  for (int i = 0; i < cb.nroots; ++i)
    for (int j = 0; j < cb.nroots; ++j) cb.n[i][j] = bld.n_any(i, j);

  cb.coroot.resize(cb.nroots);
  cb.kappa.resize(cb.nroots);
  for (int i = 0; i < cb.nroots; ++i) {
    Coords co(l);
    for (int j = 0; j < l; ++j) {
      Rational c = Rational(rs.roots[i][j]) * rs.base_form(j, j) / rs.norm_of[i];
      co[j] = static_cast<int>(to_int(c));
    }
    cb.coroot[i] = co;
    cb.kappa[i] = to_int(2 * kd.I / rs.norm_of[i]);
  }

  // Root strings bound the constants: |n(phi,chi)| = p + 1 <= 4.
  for (int i = 0; i < cb.nroots; ++i)
    for (int j = 0; j < cb.nroots; ++j) {
      if (cb.n[i][j] == 0) continue;
      long long expect = roots::string_down(rs, i, j) + 1;
      if (cb.n[i][j] != expect && cb.n[i][j] != -expect)
        throw std::logic_error("structure constant magnitude differs from root-string length");
      if (cb.n[i][j] != -cb.n[rs.neg_of[i]][rs.neg_of[j]])
        throw std::logic_error("structure constants break the Chevalley symmetry");
    }
  return cb;
}

std::vector<std::pair<int, long long>> bracket_basis(const RootSystem& rs, const ChevalleyBasis& cb,
                                                     int a, int b) {
  const int nr = cb.nroots;
  std::vector<std::pair<int, long long>> out;
  if (a < nr && b < nr) {
    if (rs.neg_of[a] == b) {
      for (int i = 0; i < cb.rank; ++i)
        if (cb.coroot[a][i]) out.emplace_back(nr + i, cb.coroot[a][i]);
    } else if (cb.n[a][b]) {
      out.emplace_back(rs.index_of(add(rs.roots[a], rs.roots[b])), cb.n[a][b]);
    }
  } else if (a >= nr && b < nr) {
    long long c = rs.pairing(rs.roots[b], a - nr);
    if (c) out.emplace_back(b, c);
  } else if (a < nr && b >= nr) {
    long long c = -rs.pairing(rs.roots[a], b - nr);
    if (c) out.emplace_back(a, c);
  }
  return out;
}

namespace {

void jacobi_triple(const RootSystem& rs, const ChevalleyBasis& cb, int a, int b, int c,
                   std::vector<long long>& acc) {
  const int dim = cb.nroots + cb.rank;
  acc.assign(dim, 0);
  auto addcyc = [&](int x, int y, int z) {
    for (auto [mid, cxy] : bracket_basis(rs, cb, x, y))
      for (auto [idx, v] : bracket_basis(rs, cb, mid, z)) acc[idx] += cxy * v;
  };
  addcyc(a, b, c);
  addcyc(b, c, a);
  addcyc(c, a, b);
  for (long long v : acc)
    if (v != 0)
      throw std::logic_error("Jacobi identity failed on basis triple (" + std::to_string(a) + ", " +
                             std::to_string(b) + ", " + std::to_string(c) + ")");
}

}  // namespace

void check_jacobi_sample(const RootSystem& rs, const ChevalleyBasis& cb, std::uint64_t seed,
                         int count) {
  const int dim = cb.nroots + cb.rank;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::vector<long long> acc;
  for (int t = 0; t < count; ++t) jacobi_triple(rs, cb, pick(rng), pick(rng), pick(rng), acc);
}

void check_jacobi_full(const RootSystem& rs, const ChevalleyBasis& cb) {
  const int dim = cb.nroots + cb.rank;
  std::vector<long long> acc;
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b)
      for (int c = b + 1; c < dim; ++c) jacobi_triple(rs, cb, a, b, c, acc);
}

long long adjoint_trace_pairing(const RootSystem& rs, const ChevalleyBasis& cb, int root) {
  const int dim = cb.nroots + cb.rank;
  const int e = root, f = rs.neg_of[root];
  // kappa on the Cartan block needs rational care; the root-vector block is
  // integral.  tr(ad e ad f) = sum over basis b of the b-coefficient of
  // [e, [f, b]].
  Rational trace = 0;
  for (int b = 0; b < dim; ++b) {
    for (auto [mid, c1] : bracket_basis(rs, cb, f, b))
      for (auto [idx, c2] : bracket_basis(rs, cb, e, mid))
        if (idx == b) trace += Rational(c1) * c2;
  }
  return to_int(trace);
}

}  // namespace gosset::apposition
