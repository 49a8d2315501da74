#pragma once

#include "biplot/data_table.hpp"

namespace biplot {

/// The three embedded indicator tables.
///  1: science and bibliometric indicators for 21 European countries (21 x 8)
///  2: THE ranking scores of the top 25 universities, 2012 edition (25 x 4)
///  3: normalized bibliometric indicators of one university in 12 fields (12 x 6)
/// Any other id throws InputError.
DataTable load_case(int id);

} // namespace biplot
