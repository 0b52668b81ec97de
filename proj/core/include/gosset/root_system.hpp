#pragma once

#include <map>
#include <vector>

#include "gosset/lie_type.hpp"
#include "gosset/rational.hpp"

namespace gosset::roots {

using Coords = std::vector<int>;  // integer coordinates in the simple-root basis

// A simple root system with every root expressed in simple-root coordinates.
// Roots are stored in a canonical order (height, then lexicographic), so all
// downstream indexing is deterministic.  base_form is the invariant inner
// product normalized so long roots have squared length 2.
struct RootSystem {
  LieType type;
  int rank = 0;
  std::vector<Coords> roots;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  RatMatrix base_form;

  std::vector<int> height_of;   // aligned with roots
  std::vector<int> neg_of;      // index of the negated root
  std::vector<Rational> norm_of;  // base_form(phi, phi)
  std::vector<int> positive;    // indices of positive roots, ascending

  std::map<Coords, int> index_map;

  int num_roots() const { return static_cast<int>(roots.size()); }
  int index_of(const Coords& c) const;  // -1 when not a root
  bool is_root(const Coords& c) const { return index_of(c) >= 0; }

  Rational b0(const Coords& x, const Coords& y) const;
  int pairing(const Coords& phi, int j) const;  // <phi, alpha_j^vee>
  Coords reflect(const Coords& phi, int j) const;
};

RootSystem build_root_system(const LieType& type);

// Same system with the simple roots relabeled by `numbering` (a permutation of
// 0..rank-1): node i of the standard diagram becomes simple root numbering[i].
// Exists so that convention-independence is testable.
RootSystem build_root_system(const LieType& type, const std::vector<int>& numbering);

struct HighestRootData {
  int psi_index = -1;
  std::vector<int> marks;  // coordinates of the highest root
  int h = 0;               // Coxeter number, 1 + sum of marks
  int psi_height = 0;      // equals h - 1
};

HighestRootData highest_root(const RootSystem& rs);

struct KillingData {
  Rational I;            // normalization ratio: killing form = I * base_form
  RatMatrix K;           // Gram matrix of the simple roots under the Killing form
  long long dual_coxeter = 0;
};

KillingData killing_gram(const RootSystem& rs, const HighestRootData& hr);

const std::vector<int>& heights(const RootSystem& rs);

// Largest k >= 0 with chi - k*phi still a root (phi, chi root indices).
int string_down(const RootSystem& rs, int phi, int chi);

}  // namespace gosset::roots
