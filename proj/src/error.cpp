#include "qgraph/error.hpp"

namespace qgraph {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::MissingLength: return "MissingLength";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NonpositiveEigenvalue: return "NonpositiveEigenvalue";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NonIntegerDeterminant: return "NonIntegerDeterminant";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::EigenvalueOutOfRange: return "EigenvalueOutOfRange";
    case ErrorCode::HalfLinePole: return "HalfLinePole";
    case ErrorCode::HurwitzDomain: return "HurwitzDomain";
    case ErrorCode::SNotConvergent: return "SNotConvergent";
    case ErrorCode::NotEquilateral: return "NotEquilateral";
    case ErrorCode::RootRefinementFailure: return "RootRefinementFailure";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::LengthsOutOfWindow: return "LengthsOutOfWindow";
    case ErrorCode::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

} // namespace qgraph
