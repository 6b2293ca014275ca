#pragma once

#include <stdexcept>
#include <string>

namespace dox {

// Failure classes map onto CLI exit codes: input problems (2), violated
// hypotheses on user data (1), and broken internal guarantees (3).
enum class ErrorClass { Parse, Validation, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}

    ErrorClass error_class() const { return cls_; }
    const std::string& kind() const { return kind_; }

    // Optional printable witness (usually a tensor) attached by the thrower.
    std::string witness;

private:
    ErrorClass cls_;
    std::string kind_;
};

inline Error parse_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorClass::Parse, kind, msg);
}
inline Error validation_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorClass::Validation, kind, msg);
}
inline Error internal_error(const std::string& kind, const std::string& msg) {
    return Error(ErrorClass::Internal, kind, msg);
}

}  // namespace dox
