#pragma once

#include <stdexcept>
#include <string>

namespace ellsurf {

// Malformed or invalid input: bad file syntax, wrong vector lengths, data
// violating a structural invariant.  The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically meaningful rejection: the requested quantity does not exist
// or is not determined for these parameters (stable-range violations,
// ambiguous recovery, negative subscheme length, ...).  Exit code 3.
struct math_domain_error : std::runtime_error {
  explicit math_domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A polarization sitting on a wall.  Chambers are open, so sign comparisons
// against such a class are undefined; callers that probe chambers iteratively
// catch this and move on.
struct on_wall_error : math_domain_error {
  explicit on_wall_error(const std::string& what) : math_domain_error(what) {}
};

}  // namespace ellsurf
