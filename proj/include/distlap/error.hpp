#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace distlap {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  Disconnected,
  DimensionMismatch,
  NotATree,
  TooSmall,
  NoConvergence,
  BadParams,
  InvalidDecomposition,
  NotPendantPath,
  WrongOrder,
  AlreadyAdjacent,
  OutOfRange,
  EmptyClass,
  UnknownLemma,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure surfaced by the library carries one of the codes above so the
// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace distlap
