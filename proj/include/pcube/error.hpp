#ifndef PCUBE_ERROR_HPP
#define PCUBE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcube {

enum class Errc {
    InvalidArgument,
    ParseError,
    BadParams,
    // core
    NotConnected,
    NotIsometric,
    NotBipartite,
    HalfspaceNotConvex,
    UnknownVertex,
    UnknownCoordinate,
    TooManyFreeClasses,
    // minors
    EmptyRegion,
    BudgetExceeded,
    // hyperplane
    NotVCOne,
    // expansion
    NotIsometricPart,
    EdgeNotCovered,
    EmptyIntersection,
    // cells
    NotFullSubdivision,
    NotADisk,
    HostNotTwoDimensional,
    InvalidDiagram,
    // completion
    NotMaximal,
    NotConvex,
    NotGated,
    ClassNotCrossing,
    CycleTooShort,
    /// A structural guarantee failed to hold on the given input.
    InvariantViolation,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pcube

#endif
