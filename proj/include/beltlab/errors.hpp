#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace beltlab {

enum class ErrorKind {
  ZeroVector,
  ZeroGenerator,
  EmptySpan,
  ParallelGenerators,
  SingularLattice,
  InvalidBox,
  NonGenericFunctional,
  UnclassifiableWithVenkovPass,
  BoundaryResampleExhausted,
  VertexContact,
  KGContact,
  NoHalfGridMatch,
  RejectionExhausted,
  InvalidArgument,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every library failure; `kind()` carries the
// machine-readable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace beltlab
