#ifndef CTLAB_CAPS_HPP
#define CTLAB_CAPS_HPP

#include <cstdint>

namespace ctlab {

// Resource caps for group construction. Exhaustive element enumeration is the
// backbone of every algorithm here, so both caps guard memory and time rather
// than correctness. Exceeding either raises resource_error.
struct Caps {
  std::int64_t max_degree = 64;
  std::int64_t max_order = 100000;
};

} // namespace ctlab

#endif
