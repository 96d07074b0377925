#ifndef CYV_ERROR_HPP
#define CYV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyv {

/// Failure categories shared by every module. Each operation documents which
/// of these it may raise.
enum class ErrorCode {
    NotSymmetric,
    BadDimensions,
    RingMismatch,
    NotTopDegree,
    NonIntegral,
    IndexOutOfRange,
    NotDominantInBlock,
    EmptyComplex,
    BadRational,
    WrongShape,
    IdenticallyZero,
    DependentVectors,
    DegenerateSystem,
    PlaneInsideHypersurface,
    NonReducedCurve,
    ResultantDegenerate,
    NotSingular,
    BadPrime,
    NonNodalSingularity,
    UnknownCheckName,
    SyntaxError,
    Io,
    Internal,
};

inline constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::BadDimensions: return "BadDimensions";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotTopDegree: return "NotTopDegree";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotDominantInBlock: return "NotDominantInBlock";
        case ErrorCode::EmptyComplex: return "EmptyComplex";
        case ErrorCode::BadRational: return "BadRational";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::IdenticallyZero: return "IdenticallyZero";
        case ErrorCode::DependentVectors: return "DependentVectors";
        case ErrorCode::DegenerateSystem: return "DegenerateSystem";
        case ErrorCode::PlaneInsideHypersurface: return "PlaneInsideHypersurface";
        case ErrorCode::NonReducedCurve: return "NonReducedCurve";
        case ErrorCode::ResultantDegenerate: return "ResultantDegenerate";
        case ErrorCode::NotSingular: return "NotSingular";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::NonNodalSingularity: return "NonNodalSingularity";
        case ErrorCode::UnknownCheckName: return "UnknownCheckName";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Parse failure in a user-supplied expression; `offset` is the 0-based
/// character position where parsing stopped.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, "at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cyv

#endif  // CYV_ERROR_HPP
