#include "pcube/label.hpp"

#include "pcube/error.hpp"

namespace pcube {

std::string Label::to_bitstring(int m) const
{
    std::string out(static_cast<std::size_t>(m), '0');
    for (int i = 0; i < m; ++i) {
        if (has(i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

Label Label::from_bitstring(std::string_view text)
{
    if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
        throw Error(Errc::ParseError, "bitstring longer than 64 characters");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw Error(Errc::ParseError, "bitstring '" + std::string(text) + "' has a character other than 0/1");
        }
    }
    return Label{bits};
}

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::BadParams: return "BadParams";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotIsometric: return "NotIsometric";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::HalfspaceNotConvex: return "HalfspaceNotConvex";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownCoordinate: return "UnknownCoordinate";
    case Errc::TooManyFreeClasses: return "TooManyFreeClasses";
    case Errc::EmptyRegion: return "EmptyRegion";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotVCOne: return "NotVCOne";
    case Errc::NotIsometricPart: return "NotIsometricPart";
    case Errc::EdgeNotCovered: return "EdgeNotCovered";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::NotFullSubdivision: return "NotFullSubdivision";
    case Errc::NotADisk: return "NotADisk";
    case Errc::HostNotTwoDimensional: return "HostNotTwoDimensional";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotGated: return "NotGated";
    case Errc::ClassNotCrossing: return "ClassNotCrossing";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

} // namespace pcube
