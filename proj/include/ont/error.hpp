#pragma once

#include <stdexcept>
#include <string>

namespace ont {

enum class Errc {
    NotSimple,
    Disconnected,
    NonPlanarEmbedding,
    NotTwoConnected,
    NotACycle,
    EdgeAbsent,
    VertexAbsent,
    NotNearTriangulation,
    NotMaximalOuterplanar,
    HypothesisViolated,
    PreconditionFailed,
    IncompatibleOnSharedEdges,
    OverlapTooLarge,
    NotStrong,
    HasBridge,
    Infeasible,
    CensusMismatch,
    AnchorUnmet,
    VerificationFailed,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace ont
