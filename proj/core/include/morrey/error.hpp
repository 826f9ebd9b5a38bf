#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace morrey {

/// Domain error with a short stable code ("bad-exponent", "empty-quadrature", ...).
/// The what() string is "<code>: <context>".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

inline void require(bool ok, const char* code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace morrey
