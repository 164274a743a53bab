#pragma once

#include <stdexcept>
#include <string>

namespace fpbk {

// Malformed input text or data.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid object (bad code, inconsistent grid, etc).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured size limit was exceeded.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fpbk
