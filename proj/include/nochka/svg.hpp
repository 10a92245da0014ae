#pragma once

#include <string>

#include "nochka/diagram.hpp"

namespace nochka {

/// Static vector rendering of the diagram: axes, every (alpha, codim)
/// point, the slope-1 line through (n, k), the line OX, the points W and X,
/// and the hull segments with their slopes as exact fractions. All pixel
/// coordinates are integers (60 px per lattice step, 40 px margins), so the
/// output is byte-for-byte deterministic.
std::string render_diagram_svg(const NochkaDiagram& diagram);

}  // namespace nochka
