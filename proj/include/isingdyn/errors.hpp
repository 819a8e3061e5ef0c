#pragma once

#include <stdexcept>
#include <string>

namespace isingdyn {

// Invalid user input: malformed files, bad dimensions, out-of-range options.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical breakdown during integration or eigenanalysis.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A run ended before the monitored bifurcation occurred.
struct no_bifurcation_error : std::runtime_error {
  explicit no_bifurcation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace isingdyn
