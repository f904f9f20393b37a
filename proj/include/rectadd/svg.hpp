#ifndef RECTADD_SVG_HPP
#define RECTADD_SVG_HPP

#include "rectadd/decompose.hpp"

#include <string>

namespace rectadd {

/// SVG 1.1 drawing of a decomposition: every packed square outlined as
/// `<rect class="square">`, the remainder (if any) hatched as
/// `<rect class="remainder">`. The longer side spans a fixed 800 px viewport.
std::string render_svg(const Decomposition& d);

/// Throws std::runtime_error if the file cannot be written.
void write_svg(const Decomposition& d, const std::string& path);

}  // namespace rectadd

#endif  // RECTADD_SVG_HPP
