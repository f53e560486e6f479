#pragma once

#include <ostream>

#include "starcheck/algebra.hpp"

namespace starcheck {

// Readable gtest failure messages.
inline void PrintTo(const Element& e, std::ostream* os) { *os << e.to_string(); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace starcheck
