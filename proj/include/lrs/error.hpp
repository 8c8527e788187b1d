#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrs {

enum class ErrorKind {
    NonPrimeP,
    DegreeZero,
    FieldTooLarge,
    TowerMismatch,
    ZeroInput,
    NotADivisor,
    RingMismatch,
    ZeroEvaluator,
    DegreeTooLarge,
    TooManyBlocks,
    BlockTooLong,
    ShapeMismatch,
    RankTooLarge,
    WeightTooLarge,
    MessageDegreeTooLarge,
    EnumerationTooLarge,
    InvalidRadius,
    InvalidCode,
    RadiusNotLessThanD,
    WeightViolation,
    NegativeDiscriminant,
    ZetaTooLarge,
    EpsilonTooSmall,
    EpsilonTooLarge,
    IndependenceFailure,
    PreconditionViolation,
    InvariantViolation,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace lrs
