#pragma once

// Text formats shared by the toolkit.
//
// Grid file:  first line `N M c`, then N lines of M whitespace-separated
//             tokens; `.` is blank, otherwise a color in [1,c].
// Shape file: a `mode: full|half` header line, then one `x y` integer pair
//             per line. Lines starting with `#` are comments in both formats.

#include <gridcolor/errors.hpp>
#include <gridcolor/grid.hpp>

#include <iosfwd>
#include <string>

namespace gridcolor {

PartialColoring read_grid(std::istream &in);
void write_grid(std::ostream &out, const PartialColoring &coloring);
std::string format_grid(const PartialColoring &coloring);

ShapeFamily read_shape(std::istream &in);
void write_shape(std::ostream &out, const ShapeFamily &family);

PartialColoring load_grid_file(const std::string &path);
ShapeFamily load_shape_file(const std::string &path);

} // namespace gridcolor
