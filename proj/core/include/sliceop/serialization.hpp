#pragma once

#include <string>

#include "sliceop/series.hpp"

namespace sliceop {

// JSON interchange format for truncated series:
//
//   {"radius": <positive number or "inf">, "coeffs": [[w,x,y,z], ...]}
//
// where coeffs[n] holds the four real components of the coefficient of q^n.
// A missing "radius" means an entire series. Parsing normalizes trailing
// zero coefficients; serialize followed by parse reproduces every finite
// component bit for bit (17 significant digits).

// Formats one finite double with 17 significant digits, the shortest count
// that round-trips IEEE binary64 exactly.
std::string format_double(double v);

// Parses a series from JSON text. Throws FormatError with the offending
// index or field named in the message.
Series parse_series_text(const std::string& text);

// Reads and parses a series file. Throws IoError if the file cannot be
// read, FormatError if the contents are malformed.
Series parse_series(const std::string& path);

// Renders a series to the interchange format (single line, no spaces).
// Throws FormatError on non-finite coefficient components.
std::string serialize_series(const Series& f);

// Writes serialize_series(f) plus a trailing newline. Throws IoError.
void write_series(const Series& f, const std::string& path);

}  // namespace sliceop
