#ifndef TOROCOB_ERRORS_HPP
#define TOROCOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torocob {

// Exit-code classes used by the CLI:
//   DomainError  -> 1 (input is well-formed but mathematically invalid)
//   SchemaError  -> 2 (unparsable or schema-violating input)
//   InternalError-> 3 (a library postcondition failed; always a bug)
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};
struct ParseError : SchemaError {
    using SchemaError::SchemaError;
};
struct InternalError : Error {
    using Error::Error;
};

// lattice
struct ZeroVectorError : DomainError {
    using DomainError::DomainError;
};
struct ContainmentError : DomainError {
    using DomainError::DomainError;
};
struct RankError : DomainError {
    using DomainError::DomainError;
};
struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};

// corners
struct CycleLengthError : DomainError {
    using DomainError::DomainError;
};
struct NotBottomError : DomainError {
    using DomainError::DomainError;
};
struct AdjacencyError : DomainError {
    using DomainError::DomainError;
};
struct NotSimpleError : DomainError {
    using DomainError::DomainError;
};
struct IdCollisionError : DomainError {
    using DomainError::DomainError;
};
struct AmbiguousIncidenceError : DomainError {
    using DomainError::DomainError;
};

// charfun / families
struct UnknownFaceError : DomainError {
    using DomainError::DomainError;
};
struct NotASimplexError : DomainError {
    using DomainError::DomainError;
};
struct DependentVectorsError : DomainError {
    using DomainError::DomainError;
};
struct NotPrimitiveError : DomainError {
    using DomainError::DomainError;
};
struct FanConditionError : DomainError {
    using DomainError::DomainError;
};
struct ClosedBaseError : DomainError {
    using DomainError::DomainError;
};
struct BundleFlagError : DomainError {
    using DomainError::DomainError;
};

// cobordism
struct UnknownMarkedFacetError : DomainError {
    using DomainError::DomainError;
};
struct HasFixedPointsError : DomainError {
    using DomainError::DomainError;
};
struct AmbiguousRestrictionError : DomainError {
    using DomainError::DomainError;
};

} // namespace torocob

#endif
