#include "abdg/error.hpp"

namespace abdg {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateJet: return "DegenerateJet";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::NotImmersive: return "NotImmersive";
    case ErrorKind::NotTransversal: return "NotTransversal";
    case ErrorKind::DegenerateSurface: return "DegenerateSurface";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::SingularFrame: return "SingularFrame";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::ZeroW: return "ZeroW";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::DegenerateExpansionBasis: return "DegenerateExpansionBasis";
    case ErrorKind::AlphaZero: return "AlphaZero";
    case ErrorKind::InconsistentSignature: return "InconsistentSignature";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::GammaCritical: return "GammaCritical";
    case ErrorKind::SignChoiceFailed: return "SignChoiceFailed";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace abdg
