#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace outpost {

enum class ErrorKind {
  kParse,
  kDuplicateNode,
  kNonContiguousIds,
  kDanglingEdge,
  kNegativeCost,
  kDisconnected,
  kInvalidArgument,
  kInfeasible,
  kCapacityExceeded,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries a machine-readable kind and
// the offending element (a node id, an edge index, a file path, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string element, const std::string& message)
      : std::runtime_error(message), kind_(kind), element_(std::move(element)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& element() const { return element_; }

 private:
  ErrorKind kind_;
  std::string element_;
};

}  // namespace outpost
