#ifndef WICKRING_ERRORS_HPP
#define WICKRING_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace wickring {

// Base class for all library errors. `kind()` is a stable machine-readable
// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DimensionError : Error {
    explicit DimensionError(const std::string& d) : Error("DimensionMismatch", d) {}
};

struct SpecMismatchError : Error {
    explicit SpecMismatchError(const std::string& d) : Error("SpecMismatch", d) {}
};

struct NotInvertibleError : Error {
    explicit NotInvertibleError(const std::string& d) : Error("NotInvertible", d) {}
};

struct CompositionDomainError : Error {
    explicit CompositionDomainError(const std::string& d) : Error("CompositionDomain", d) {}
};

struct DivergentConstantError : Error {
    explicit DivergentConstantError(const std::string& d) : Error("DivergentConstant", d) {}
};

struct SingularAtPointError : Error {
    SingularAtPointError(const std::string& d, double abs_det)
        : Error("SingularAtPoint", d), abs_det(abs_det) {}
    double abs_det;
};

struct InvalidRecursionError : Error {
    explicit InvalidRecursionError(const std::string& d) : Error("InvalidRecursion", d) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& d) : Error("Overflow", d) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& d) : Error("ResourceLimit", d) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& d) : Error("Precondition", d) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& d) : Error("Parse", d) {}
};

} // namespace wickring

#endif
