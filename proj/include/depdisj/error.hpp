#ifndef DEPDISJ_ERROR_HPP
#define DEPDISJ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace depdisj {

enum class ErrorKind {
    InvalidAtom,
    EmptyCaseForm,
    ScopeMismatch,
    ScopeOverlap,
    BadSubscope,
    NothingToSplit,
    MalformedForm,
    EmptyGroup,
    RaggedGroup,
    GroupTooLarge,
    Syntax,
    DuplicateGroup,
    Verification,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; kind() tells them apart.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// An error tied to a position in a constraint document (1-based line/column).
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column,
               const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace depdisj

#endif // DEPDISJ_ERROR_HPP
