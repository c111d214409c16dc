#pragma once

#include <stdexcept>
#include <string>

namespace parity_ramsey {

// Bad numeric parameter (beta < 2, c <= 0, ...).
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Length mismatch, non-divisible length, malformed vertex text.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// delta() requires its arguments in lexicographic order.
struct OrderingError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SelfLoopError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request exceeds what the universe or a desk-scale ceiling can hold.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// C(p,2) odd: a clique of that order can never be parity-even.
struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigurationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSpecialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MultiplicityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace parity_ramsey
