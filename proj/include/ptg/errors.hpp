#pragma once

#include <stdexcept>
#include <string>

namespace ptg {

// Error taxonomy mirrored by the CLI exit codes: usage errors exit 2,
// hypothesis failures exit 1, internal invariant breaches also exit 1
// but indicate a bug rather than bad input.
enum class ErrorKind { Usage, Hypothesis, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error usage_error(std::string code, const std::string& what) {
    return Error(ErrorKind::Usage, std::move(code), what);
}

inline Error hypothesis_error(std::string code, const std::string& what) {
    return Error(ErrorKind::Hypothesis, std::move(code), what);
}

inline Error internal_error(std::string code, const std::string& what) {
    return Error(ErrorKind::Internal, std::move(code), what);
}

}  // namespace ptg
