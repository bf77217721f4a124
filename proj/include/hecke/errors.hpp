#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HECKE_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// scalar
HECKE_DEFINE_ERROR(DivisionByZero);
HECKE_DEFINE_ERROR(BackendMismatch);
HECKE_DEFINE_ERROR(NonGenericQ);
HECKE_DEFINE_ERROR(OutOfRange);

// tensor
HECKE_DEFINE_ERROR(PositionOutOfRange);
HECKE_DEFINE_ERROR(ShapeMismatch);
HECKE_DEFINE_ERROR(Singular);
HECKE_DEFINE_ERROR(NotColumnInvertible);
HECKE_DEFINE_ERROR(DimensionLimit);

// symmetry
HECKE_DEFINE_ERROR(DuplicateEntry);
HECKE_DEFINE_ERROR(DimensionMismatch);
HECKE_DEFINE_ERROR(NotValidated);

// heckealg
HECKE_DEFINE_ERROR(ChainMismatch);

// frame
HECKE_DEFINE_ERROR(NotEven);
HECKE_DEFINE_ERROR(RankNotOne);
HECKE_DEFINE_ERROR(IdentityViolated);
HECKE_DEFINE_ERROR(RelationViolated);

// qtrace
HECKE_DEFINE_ERROR(NotEndomorphism);
HECKE_DEFINE_ERROR(CrossCheckFailed);

#undef HECKE_DEFINE_ERROR

/// Syntax error in a scalar literal or an R-matrix file. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what),
          line_(line),
          column_(column) {}

    /// The description without the position prefix.
    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace hecke
