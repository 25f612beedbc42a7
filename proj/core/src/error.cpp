#include "critgroup/error.hpp"

namespace critgroup {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotTwoEdgeConnected: return "NotTwoEdgeConnected";
    case ErrorKind::NotSpanningTree: return "NotSpanningTree";
    case ErrorKind::NotSpanningForest: return "NotSpanningForest";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InfiniteCokernel: return "InfiniteCokernel";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSublattice: return "NotSublattice";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::BadOmitSet: return "BadOmitSet";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NoEdges: return "NoEdges";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotSemiregularBipartite: return "NotSemiregularBipartite";
    case ErrorKind::MorphismInvalid: return "MorphismInvalid";
    case ErrorKind::TooManyFactors: return "TooManyFactors";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
  }
  return "Unknown";
}

}  // namespace critgroup
