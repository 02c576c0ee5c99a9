#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "f1cones/lattice.hpp"

namespace f1cones {

enum class ErrorKind {
  InvalidArgument,
  EmptyPresentation,
  ZeroRelation,
  UndecidedWithinBound,
  NotFinitelyGeneratedSaturation,
  ZeroElement,
  SNotInIdeal,
  ZeroIdeal,
  NotPointed,
  CharacterMismatch,
  DimensionBound,
  SelfGluedFaces,
  IncoherentTransition,
  NonIsomorphicGluing,
  NonConstantSystem,
  NotASubcomplex,
  NonConstantCharacters,
  ZeroCenter,
  NotLocallyFinite,
  IncompatibleIdeals,
  BudgetExceeded,
  SchemaError,
  InvariantError,
  UnknownCommand,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by algebraise when the character local system has monodromy.
/// Carries the offending loop (cone indices, starting at the basepoint) and
/// its monodromy automorphism of the character lattice.
class NonConstantCharactersError : public Error {
 public:
  NonConstantCharactersError(std::vector<std::size_t> loop, IntMatrix matrix)
      : Error(ErrorKind::NonConstantCharacters,
              "character local system has monodromy " + matrix.to_string()),
        loop_(std::move(loop)),
        matrix_(std::move(matrix)) {}
  const std::vector<std::size_t>& loop() const noexcept { return loop_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::vector<std::size_t> loop_;
  IntMatrix matrix_;
};

}  // namespace f1cones
