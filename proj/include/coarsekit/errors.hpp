#pragma once

#include <stdexcept>
#include <string>

namespace coarsekit {

// Stable error taxonomy shared by the library and the CLI exit codes.
enum class ErrorCode {
    internal = 1,
    unresolved_label = 2,
    malformed_file = 3,
    param_out_of_range = 4,
    nonconformable = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace coarsekit
