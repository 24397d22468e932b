#include "qwalk/errors.hpp"

namespace qwalk {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::NotRegular: return "NotRegular";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::AsymmetricEdge: return "AsymmetricEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::BadEpsilon: return "BadEpsilon";
        case ErrorCode::NotConnectedComponent: return "NotConnectedComponent";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::Unreachable: return "Unreachable";
    }
    return "UnknownError";
}

} // namespace qwalk
