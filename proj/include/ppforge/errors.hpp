#pragma once

#include <stdexcept>
#include <string>

namespace ppforge {

// Base of all ppforge errors. `name()` is the stable identifier printed by
// the CLI; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Input/usage errors (CLI exit code 1).
class UsageError : public Error {
    using Error::Error;
};

// Mathematical precondition failures (CLI exit code 2).
class MathError : public Error {
    using Error::Error;
};

struct MalformedInput : UsageError {
    explicit MalformedInput(const std::string& msg) : UsageError("MalformedInput", msg) {}
};
struct NonRationalScalar : UsageError {
    explicit NonRationalScalar(const std::string& msg) : UsageError("NonRationalScalar", msg) {}
};
struct DimensionMismatch : UsageError {
    explicit DimensionMismatch(const std::string& msg) : UsageError("DimensionMismatch", msg) {}
};
struct KindMismatch : UsageError {
    explicit KindMismatch(const std::string& msg) : UsageError("KindMismatch", msg) {}
};
struct UnknownCheck : UsageError {
    explicit UnknownCheck(const std::string& msg) : UsageError("UnknownCheck", msg) {}
};
struct ZeroWeight : UsageError {
    explicit ZeroWeight(const std::string& msg) : UsageError("ZeroWeight", msg) {}
};

struct NotInvertible : MathError {
    explicit NotInvertible(const std::string& msg) : MathError("NotInvertible", msg) {}
};
struct InvalidInput : MathError {
    explicit InvalidInput(const std::string& msg) : MathError("InvalidInput", msg) {}
};
struct NotRotaBaxter : MathError {
    explicit NotRotaBaxter(const std::string& msg) : MathError("NotRotaBaxter", msg) {}
};
struct NotSymplectic : MathError {
    explicit NotSymplectic(const std::string& msg) : MathError("NotSymplectic", msg) {}
};
struct NotABialgebra : MathError {
    explicit NotABialgebra(const std::string& msg) : MathError("NotABialgebra", msg) {}
};
struct NotLRInvariant : MathError {
    explicit NotLRInvariant(const std::string& msg) : MathError("NotLRInvariant", msg) {}
};
struct NotFactorizable : MathError {
    explicit NotFactorizable(const std::string& msg) : MathError("NotFactorizable", msg) {}
};
struct NotQuadraticRB : MathError {
    explicit NotQuadraticRB(const std::string& msg) : MathError("NotQuadraticRB", msg) {}
};
struct NotRBSymplectic : MathError {
    explicit NotRBSymplectic(const std::string& msg) : MathError("NotRBSymplectic", msg) {}
};

} // namespace ppforge
