#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abdg {

enum class ErrorKind {
    DegenerateJet,
    DomainError,
    OrderExceeded,
    NotImmersive,
    NotTransversal,
    DegenerateSurface,
    ZeroScale,
    SingularFrame,
    OutsideDomain,
    NotTangent,
    CoincidentPoints,
    ZeroW,
    NotParallel,
    DegenerateExpansionBasis,
    AlphaZero,
    InconsistentSignature,
    Unclassifiable,
    GammaCritical,
    SignChoiceFailed,
    UnknownEntry,
    ParamOutOfRange,
    ConstructionFailed,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace abdg
