#include "gosset/lie_type.hpp"

#include <cctype>

namespace gosset::roots {

std::optional<LieType> parse_lie_type(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (fam < 'A' || fam > 'G') return std::nullopt;
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) return std::nullopt;
  }
  return LieType{fam, rank};
}

bool admissible(const LieType& t, std::string* reason) {
  auto reject = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  if (t.rank < 2) return reject(t.name() + ": rank must be at least 2");
  switch (t.family) {
    case 'A':
    case 'B':
    case 'C':
      return true;
    case 'D':
      if (t.rank < 4)
        return reject(t.name() + ": type D requires rank >= 4 (D2, D3 are not simple types here)");
      return true;
    case 'E':
      if (t.rank < 6 || t.rank > 8) return reject(t.name() + ": type E exists only for ranks 6, 7, 8");
      return true;
    case 'F':
      if (t.rank != 4) return reject(t.name() + ": type F exists only for rank 4");
      return true;
    case 'G':
      if (t.rank != 2) return reject(t.name() + ": type G exists only for rank 2");
      return true;
    default:
      return reject("unknown family");
  }
}

std::vector<LieType> standard_sweep() {
  std::vector<LieType> out;
  for (char fam : {'A', 'B', 'C'})
    for (int r = 2; r <= 8; ++r) out.push_back({fam, r});
  for (int r = 4; r <= 8; ++r) out.push_back({'D', r});
  for (int r = 6; r <= 8; ++r) out.push_back({'E', r});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

}  // namespace gosset::roots
