#pragma once

#include <stdexcept>
#include <string>

namespace planardiam {

// Failure categories surfaced by the library. Construction errors come from
// malformed inputs, the rest guard operation preconditions.
enum class ErrorCode {
    NonPlanarEmbedding,
    MalformedRotation,
    NegativeLength,
    NotConnected,
    NoMarkedVertices,
    Unreached,
    RootUnmarked,
    NoBalancedEdge,
    EmptyPath,
    OutsidePrefix,
    NoPortals,
    ZeroScale,
    EmptySide,
    EmptySet,
    EmbeddingSpliceFailure,
    BadEpsilon,
    ParseError,
    ValidationError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
        case ErrorCode::MalformedRotation: return "MalformedRotation";
        case ErrorCode::NegativeLength: return "NegativeLength";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::NoMarkedVertices: return "NoMarkedVertices";
        case ErrorCode::Unreached: return "Unreached";
        case ErrorCode::RootUnmarked: return "RootUnmarked";
        case ErrorCode::NoBalancedEdge: return "NoBalancedEdge";
        case ErrorCode::EmptyPath: return "EmptyPath";
        case ErrorCode::OutsidePrefix: return "OutsidePrefix";
        case ErrorCode::NoPortals: return "NoPortals";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::EmptySide: return "EmptySide";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::EmbeddingSpliceFailure: return "EmbeddingSpliceFailure";
        case ErrorCode::BadEpsilon: return "BadEpsilon";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

class GraphError : public std::runtime_error {
public:
    GraphError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw GraphError(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace planardiam
