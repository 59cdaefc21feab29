#ifndef LPA_ERROR_HPP
#define LPA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

enum class ErrorKind {
  UnknownVertex,
  UnknownEdge,
  DuplicateLabel,
  BadLabel,
  NotHereditary,
  NotSubgraph,
  NotASource,
  MoveRNotApplicable,
  LoopAtVertex,
  VertexIsSink,
  SourceVertex,
  SinkVertex,
  BadPartition,
  BadSpec,
  UnsupportedMoveKind,
  ZeroClass,
  EmptyGraph,
  EmptySet,
  ClassVanished,
  NotTotallyLooped,
  GraphMismatch,
  FieldMismatch,
  NotInCorner,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every module error. The kind is what callers dispatch on; the message is
/// a single human-readable line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lpa

#endif  // LPA_ERROR_HPP
