#ifndef FRAMEKIT_ERROR_HPP
#define FRAMEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

enum class ErrorKind {
    NotHermitian,
    NotPsd,
    NoConvergence,
    BadShape,
    ZeroFrame,
    IndexMismatch,
    IdentityMismatch,
    NotNormalizedTight,
    NoExtension,
    BadCokernel,
    BadSize,
    WrongFamily,
    ParseError,
    InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPsd: return "NotPsd";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::ZeroFrame: return "ZeroFrame";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::IdentityMismatch: return "IdentityMismatch";
    case ErrorKind::NotNormalizedTight: return "NotNormalizedTight";
    case ErrorKind::NoExtension: return "NoExtension";
    case ErrorKind::BadCokernel: return "BadCokernel";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::WrongFamily: return "WrongFamily";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace framekit

#endif
