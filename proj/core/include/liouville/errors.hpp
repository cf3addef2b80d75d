#pragma once

#include <stdexcept>

namespace liouville {

// A computation finished but its internal error estimate exceeds the
// contract's accuracy gate.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace liouville
