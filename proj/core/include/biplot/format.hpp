#pragma once

#include <string>

namespace biplot {

/// Shortest decimal text that parses back to exactly `v`.
std::string shortest(double v);

/// Fixed-point text with `decimals` digits after the point; "-0.00" becomes "0.00".
std::string fixed(double v, int decimals);

/// Escapes &, <, >, " and ' for XML text and attribute values.
std::string xml_escape(const std::string& s);

} // namespace biplot
