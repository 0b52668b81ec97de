#pragma once

#include <string>

#include "gosset/coxeter_plane.hpp"

namespace gosset::coxplane {

struct SvgOptions {
  int size = 900;
  std::vector<std::string> palette;  // one color per modulus class; defaults below
};

const std::vector<std::string>& default_palette();

// Both emitters are deterministic: fixed six-decimal formatting, stable point
// order, LF line endings.  Identical figures produce identical bytes.
std::string emit_svg(const FigureSpec& fig, const SvgOptions& opts = {});
std::string emit_csv(const FigureSpec& fig);

}  // namespace gosset::coxplane
