#pragma once

#include <iosfwd>
#include <string>

#include "crossline/line_arith.hpp"

namespace crossline {

/**
 * Renders a construction trace as SVG 1.1 (auto-fit viewBox): the base
 * line solid, the auxiliary lines dashed, constructed points as labeled
 * markers and the frame points O, I as labeled ticks. Defined for
 * rational traces only; other fields throw UnsupportedFieldError.
 * Output is byte-stable for equal traces.
 */
std::string trace_to_svg(const ConstructionTrace& trace);
void emit_svg(const ConstructionTrace& trace, std::ostream& out);
void emit_svg_file(const ConstructionTrace& trace, const std::string& path);

} // namespace crossline
