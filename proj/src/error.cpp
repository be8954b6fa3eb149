#include "ont/error.hpp"

namespace ont {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotSimple: return "NotSimple";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case Errc::NotTwoConnected: return "NotTwoConnected";
        case Errc::NotACycle: return "NotACycle";
        case Errc::EdgeAbsent: return "EdgeAbsent";
        case Errc::VertexAbsent: return "VertexAbsent";
        case Errc::NotNearTriangulation: return "NotNearTriangulation";
        case Errc::NotMaximalOuterplanar: return "NotMaximalOuterplanar";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::IncompatibleOnSharedEdges: return "IncompatibleOnSharedEdges";
        case Errc::OverlapTooLarge: return "OverlapTooLarge";
        case Errc::NotStrong: return "NotStrong";
        case Errc::HasBridge: return "HasBridge";
        case Errc::Infeasible: return "Infeasible";
        case Errc::CensusMismatch: return "CensusMismatch";
        case Errc::AnchorUnmet: return "AnchorUnmet";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace ont
