#pragma once

#include <stdexcept>
#include <string>

namespace affinv {

// Exit-code categories used by the CLI: validation errors map to exit 2,
// failed numeric checks to exit 1, I/O and usage problems to exit 64.
enum class ErrorKind { Validation, CheckFailure, Io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct TooFewPoints : Error {
    explicit TooFewPoints(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct DegenerateBody : Error {
    explicit DegenerateBody(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct DimMismatch : Error {
    explicit DimMismatch(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct SingularMap : Error {
    explicit SingularMap(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& w) : Error(ErrorKind::CheckFailure, w) {}
};

struct ToleranceAmbiguity : Error {
    explicit ToleranceAmbiguity(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct InvalidGroup : Error {
    explicit InvalidGroup(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct EmptyFixedSet : Error {
    explicit EmptyFixedSet(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct OutsideNeighborhood : Error {
    explicit OutsideNeighborhood(const std::string& w) : Error(ErrorKind::CheckFailure, w) {}
};

struct TargetNotInterior : Error {
    explicit TargetNotInterior(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

struct MinDeltaReached : Error {
    explicit MinDeltaReached(const std::string& w) : Error(ErrorKind::CheckFailure, w) {}
};

struct EvaluationUnstable : Error {
    explicit EvaluationUnstable(const std::string& w) : Error(ErrorKind::CheckFailure, w) {}
};

struct IoError : Error {
    explicit IoError(const std::string& w) : Error(ErrorKind::Io, w) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error(ErrorKind::Validation, w) {}
};

}  // namespace affinv
