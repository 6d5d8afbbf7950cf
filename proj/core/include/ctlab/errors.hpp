#ifndef CTLAB_ERRORS_HPP
#define CTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctlab {

// Bad caller input: malformed group spec, non-prime p, subgroup not normal, ...
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string &what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (group order, permutation degree, modulus
// search). The CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string &what) : std::runtime_error(what) {}
};

// A checked internal invariant failed. Indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string &what) : std::logic_error(what) {}
};

} // namespace ctlab

#endif
