#pragma once

// SVG wire diagram for a word: nails as labeled circles on a horizontal
// line, the wire as a single path looping once per letter. +j hooks over
// nail j from the left, -j from the right; later passes run at lower
// travel levels and paint over earlier ones (the always-over
// convention). Output is valid SVG 1.1 and byte-deterministic.

#include <string>

#include "hangwire/word.hpp"

namespace hangwire {

std::string render_svg(const Word& w);

}  // namespace hangwire
