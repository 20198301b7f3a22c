#pragma once

#include <stdexcept>
#include <string>

namespace mldkit {

// Base class for all input-dependent failures. CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : DomainError {
    explicit ParseError(const std::string& msg) : DomainError("parse error: " + msg) {}
};

struct UnboundedRegion : DomainError {
    explicit UnboundedRegion(const std::string& msg) : DomainError("unbounded region: " + msg) {}
};

struct SingularSystem : DomainError {
    explicit SingularSystem(const std::string& msg) : DomainError(msg) {}
};

struct NegativeExponent : DomainError {
    explicit NegativeExponent(const std::string& msg) : DomainError(msg) {}
};

struct ZeroPolynomial : DomainError {
    explicit ZeroPolynomial(const std::string& msg) : DomainError(msg) {}
};

struct ZeroEquation : DomainError {
    explicit ZeroEquation(const std::string& msg) : DomainError(msg) {}
};

struct ZeroDivisor : DomainError {
    explicit ZeroDivisor(const std::string& msg) : DomainError(msg) {}
};

struct NotSemiInvariant : DomainError {
    explicit NotSemiInvariant(const std::string& msg) : DomainError(msg) {}
};

struct NotAdmissible : DomainError {
    explicit NotAdmissible(const std::string& msg) : DomainError(msg) {}
};

struct EmptyEnumeration : DomainError {
    explicit EmptyEnumeration(const std::string& msg) : DomainError(msg) {}
};

struct UnsupportedDimension : DomainError {
    explicit UnsupportedDimension(const std::string& msg) : DomainError(msg) {}
};

struct InvalidCone : DomainError {
    explicit InvalidCone(const std::string& msg) : DomainError(msg) {}
};

struct NotRCartier : DomainError {
    explicit NotRCartier(const std::string& msg) : DomainError(msg) {}
};

struct NotInCone : DomainError {
    explicit NotInCone(const std::string& msg) : DomainError(msg) {}
};

struct NotAFace : DomainError {
    explicit NotAFace(const std::string& msg) : DomainError(msg) {}
};

struct BelowThresholdAtZero : DomainError {
    explicit BelowThresholdAtZero(const std::string& msg) : DomainError(msg) {}
};

struct NotCoprime : DomainError {
    explicit NotCoprime(const std::string& msg) : DomainError(msg) {}
};

struct SideConditionViolated : DomainError {
    explicit SideConditionViolated(const std::string& msg) : DomainError(msg) {}
};

struct AmbiguousF : DomainError {
    explicit AmbiguousF(const std::string& msg) : DomainError(msg) {}
};

struct DegenerateInput : DomainError {
    explicit DegenerateInput(const std::string& msg) : DomainError(msg) {}
};

} // namespace mldkit
