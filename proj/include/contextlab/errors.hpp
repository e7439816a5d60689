#pragma once

#include <stdexcept>
#include <string>

namespace contextlab {

/// Thrown when an operation that enumerates over vertex subsets is asked to
/// handle a graph beyond the supported size (see kMaxEnumerableVertices).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when marginals violate an exclusivity constraint that an operation
/// needs, e.g. a clique whose marginals sum past 1.
class InfeasibleMarginalsError : public std::runtime_error {
 public:
  explicit InfeasibleMarginalsError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by file/JSON readers; the message carries file and line/field context.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace contextlab
