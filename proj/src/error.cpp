#include "lrs/error.hpp"

namespace lrs {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeP: return "NonPrimeP";
        case ErrorKind::DegreeZero: return "DegreeZero";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::TowerMismatch: return "TowerMismatch";
        case ErrorKind::ZeroInput: return "ZeroInput";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::ZeroEvaluator: return "ZeroEvaluator";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::TooManyBlocks: return "TooManyBlocks";
        case ErrorKind::BlockTooLong: return "BlockTooLong";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::RankTooLarge: return "RankTooLarge";
        case ErrorKind::WeightTooLarge: return "WeightTooLarge";
        case ErrorKind::MessageDegreeTooLarge: return "MessageDegreeTooLarge";
        case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorKind::InvalidRadius: return "InvalidRadius";
        case ErrorKind::InvalidCode: return "InvalidCode";
        case ErrorKind::RadiusNotLessThanD: return "RadiusNotLessThanD";
        case ErrorKind::WeightViolation: return "WeightViolation";
        case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorKind::ZetaTooLarge: return "ZetaTooLarge";
        case ErrorKind::EpsilonTooSmall: return "EpsilonTooSmall";
        case ErrorKind::EpsilonTooLarge: return "EpsilonTooLarge";
        case ErrorKind::IndependenceFailure: return "IndependenceFailure";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lrs
