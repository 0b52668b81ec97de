#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gosset::roots {

struct LieType {
  char family = 0;  // 'A'..'G'
  int rank = 0;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const LieType& o) const { return family == o.family && rank == o.rank; }
};

// Parses names like "E8" or "b3".  Returns nullopt on malformed input;
// admissibility is a separate question.
std::optional<LieType> parse_lie_type(std::string_view s);

// Simple types of rank >= 2 only.  D needs rank >= 4 (D3 is not admitted as a
// distinct type even though its diagram matches A3); B2 and C2 are both
// admitted.  Fills `reason` on rejection when given.
bool admissible(const LieType& t, std::string* reason = nullptr);

// The rank-2..8 sweep used by `verify --all` and the cross-module tests:
// A2..A8, B2..B8, C2..C8, D4..D8, E6, E7, E8, F4, G2.
std::vector<LieType> standard_sweep();

}  // namespace gosset::roots
