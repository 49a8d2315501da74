#pragma once

#include <stdexcept>
#include <string>

namespace biplot {

/// Malformed input: bad CSV, out-of-range parameters, inconsistent shapes.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative routine failed to converge or produced non-finite values.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace biplot
