#pragma once

#include <stdexcept>
#include <string>

namespace fwps {

/// Failure categories surfaced by the library. The CLI maps these to
/// structured error objects; the enumerator names are the stable codes.
enum class Errc {
    ZeroVector,
    Overflow,
    Underflow,
    NotPrimitive,
    WrongCount,
    NotSpanning,
    NoPositiveRelation,
    NonpositiveWeight,
    DegenerateExtension,
    NotFreeInCodim1,
    CoverNotP2,
    NotPrimitiveRay,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::Overflow: return "Overflow";
    case Errc::Underflow: return "Underflow";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::WrongCount: return "WrongCount";
    case Errc::NotSpanning: return "NotSpanning";
    case Errc::NoPositiveRelation: return "NoPositiveRelation";
    case Errc::NonpositiveWeight: return "NonpositiveWeight";
    case Errc::DegenerateExtension: return "DegenerateExtension";
    case Errc::NotFreeInCodim1: return "NotFreeInCodim1";
    case Errc::CoverNotP2: return "CoverNotP2";
    case Errc::NotPrimitiveRay: return "NotPrimitiveRay";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int index = -1)
        : std::runtime_error(std::move(message)), code_(code), index_(index) {}

    Errc code() const noexcept { return code_; }
    /// Offending position (e.g. ray index) or -1 when not applicable.
    int index() const noexcept { return index_; }

private:
    Errc code_;
    int index_;
};

} // namespace fwps
