#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critgroup {

enum class ErrorKind {
  InvalidGraph,
  ParseError,
  NotConnected,
  NotTwoEdgeConnected,
  NotSpanningTree,
  NotSpanningForest,
  UnknownFamily,
  BadParams,
  TooLarge,
  InfiniteCokernel,
  DimensionMismatch,
  NotSublattice,
  RankMismatch,
  NotSquare,
  BadOmitSet,
  NotPrime,
  NoEdges,
  NotRegular,
  DegreeTooSmall,
  NotSemiregularBipartite,
  MorphismInvalid,
  TooManyFactors,
  HypothesisFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map them without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace critgroup
