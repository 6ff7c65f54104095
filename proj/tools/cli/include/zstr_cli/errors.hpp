#pragma once

#include <stdexcept>

namespace zstr::cli {

/// Bad flags, malformed ranges or config values. Exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files. Exit code 1.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zstr::cli
