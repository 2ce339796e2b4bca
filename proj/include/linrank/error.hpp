#pragma once

#include <stdexcept>
#include <string>

namespace linrank {

// Machine-readable failure kinds. The CLI maps these to `error.kind` strings
// and to exit codes: ParseError/ValidationError -> 2, everything else -> 1.
enum class Errc {
    NotPrime,
    NotIrreducible,
    SizeBudgetExceeded,
    CtxMismatch,
    DivisionByZero,
    StrideMismatch,
    StrideNotOne,
    StrideNotCoprime,
    BothZero,
    NotSquare,
    SingularW,
    ShapeMismatch,
    OutOfRange,
    NotConsecutive,
    SizeMismatch,
    DegreeRange,
    ZeroLeadingCoefficient,
    InternalInconsistency,
    ParseError,
    ValidationError,
};

const char* errc_name(Errc kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(Errc kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    Errc kind() const noexcept { return kind_; }

  private:
    Errc kind_;
};

[[noreturn]] inline void fail(Errc kind, const std::string& message) { throw Error(kind, message); }

}  // namespace linrank
