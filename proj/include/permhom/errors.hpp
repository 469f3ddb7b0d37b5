/**
 * Exception types shared by every permhom module.
 */

#ifndef PERMHOM_ERRORS_HPP
#define PERMHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permhom {

enum class ErrorKind
{
    MalformedSimplex,
    MissingSimplex,
    UndefinedInput,
    NotSubcomplex,
    NotPrincipal,
    NotAFace,
    NotAllowable,
    CannotReduce,
    InvalidFiltration,
    MalformedPermutation,
    Parse,
    SizeLimit,
    Internal
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::MalformedSimplex:     return "malformed-simplex";
        case ErrorKind::MissingSimplex:       return "missing-simplex";
        case ErrorKind::UndefinedInput:       return "undefined-input";
        case ErrorKind::NotSubcomplex:        return "not-a-subcomplex";
        case ErrorKind::NotPrincipal:         return "not-principal";
        case ErrorKind::NotAFace:             return "not-a-face";
        case ErrorKind::NotAllowable:         return "not-allowable";
        case ErrorKind::CannotReduce:         return "cannot-reduce";
        case ErrorKind::InvalidFiltration:    return "filtration-error";
        case ErrorKind::MalformedPermutation: return "malformed-permutation";
        case ErrorKind::Parse:                return "parse-error";
        case ErrorKind::SizeLimit:            return "size-limit";
        case ErrorKind::Internal:             return "internal-error";
    }
    return "unknown";
}

/**
 * Every recoverable failure raised by the library carries a kind so that
 * front ends can map it to an exit code without string matching.
 */
class Error : public std::runtime_error
{
    private:
        ErrorKind kind_;
        std::string message_;

    public:
        Error(ErrorKind kind, const std::string& message)
            : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message)
        {
        }

        ErrorKind kind() const noexcept { return kind_; }

        /** The message without the kind prefix. */
        const std::string& message() const noexcept { return message_; }
};

}   // namespace permhom

#endif
