#pragma once

#include <stdexcept>
#include <string>

namespace illumid {

/// File or image access failure; message names the offending path.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed manifest / config input; message carries the line number.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Corrupt or wrong-version checkpoint.
struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace illumid
