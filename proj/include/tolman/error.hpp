#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tolman {

enum class ErrorCode {
    ZeroVector,
    NoSuchFixedPoint,
    DegenerateWeight,
    MalformedEdge,
    MalformedGraph,
    EdgeFixedPointwise,
    AxisSubcircle,
    NotCoprime,
    IncompleteCocycle,
    NotHomogeneousCubic,
    DegreeOverflow,
    NotTopDegree,
    NotCubic,
    NotUnimodular,
    ParametricCombinatoricsUnstable,
    DegeneratePolytope,
    NotDelzantVertex,
    VertexOnCut,
    NotDestabilizing,
    InvalidKahlerParameters,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NoSuchFixedPoint: return "NoSuchFixedPoint";
        case ErrorCode::DegenerateWeight: return "DegenerateWeight";
        case ErrorCode::MalformedEdge: return "MalformedEdge";
        case ErrorCode::MalformedGraph: return "MalformedGraph";
        case ErrorCode::EdgeFixedPointwise: return "EdgeFixedPointwise";
        case ErrorCode::AxisSubcircle: return "AxisSubcircle";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::IncompleteCocycle: return "IncompleteCocycle";
        case ErrorCode::NotHomogeneousCubic: return "NotHomogeneousCubic";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::NotTopDegree: return "NotTopDegree";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::ParametricCombinatoricsUnstable: return "ParametricCombinatoricsUnstable";
        case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
        case ErrorCode::NotDelzantVertex: return "NotDelzantVertex";
        case ErrorCode::VertexOnCut: return "VertexOnCut";
        case ErrorCode::NotDestabilizing: return "NotDestabilizing";
        case ErrorCode::InvalidKahlerParameters: return "InvalidKahlerParameters";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every computational failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace tolman
