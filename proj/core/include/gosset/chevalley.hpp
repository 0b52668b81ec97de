#pragma once

#include <cstdint>
#include <vector>

#include "gosset/root_system.hpp"

namespace gosset::apposition {

// Integer structure constants:
//   [e_phi, e_chi]   = n(phi,chi) e_{phi+chi}   when phi+chi is a root,
//   [e_phi, e_{-phi}] = h_phi                    (integer simple-coroot coords),
//   [h_i, e_phi]     = <phi, alpha_i^vee> e_phi.
// The pairing kappa(e_phi, e_{-phi}) = 2I/(phi,phi) is a positive integer.
// Signs are fixed by choosing n > 0 on the distinguished pair of each positive
// root (lowest-index simple summand first); everything else follows from the
// Jacobi identity, so the table is reproducible run to run.
struct ChevalleyBasis {
  int nroots = 0;
  int rank = 0;
  std::vector<std::vector<long long>> n;       // nroots x nroots, 0 when the sum is not a root
  std::vector<roots::Coords> coroot;           // per root: h_phi over the simple coroots
  std::vector<long long> kappa;                // per root: kappa(e_phi, e_{-phi})
};

ChevalleyBasis build_chevalley(const roots::RootSystem& rs, const roots::KillingData& kd);

// Bracket of two basis elements of the integer layer.  Basis order: root
// vectors first (root index), then the simple coroots h_0..h_{rank-1}.
// Returns (index, coefficient) pairs.
std::vector<std::pair<int, long long>> bracket_basis(const roots::RootSystem& rs,
                                                     const ChevalleyBasis& cb, int a, int b);

// Exact Jacobi identity on `count` random basis triples (fixed seed).  Throws
// std::logic_error naming the offending triple on failure.
void check_jacobi_sample(const roots::RootSystem& rs, const ChevalleyBasis& cb,
                         std::uint64_t seed, int count);

// Exact Jacobi identity on every basis triple; O(dim^3), for small ranks.
void check_jacobi_full(const roots::RootSystem& rs, const ChevalleyBasis& cb);

// kappa(e_phi, e_{-phi}) recomputed as the exact trace of ad(e_phi) ad(e_{-phi}).
long long adjoint_trace_pairing(const roots::RootSystem& rs, const ChevalleyBasis& cb, int root);

}  // namespace gosset::apposition
