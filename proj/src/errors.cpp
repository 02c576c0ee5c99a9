#include "f1cones/errors.hpp"

namespace f1cones {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyPresentation: return "EmptyPresentation";
    case ErrorKind::ZeroRelation: return "ZeroRelation";
    case ErrorKind::UndecidedWithinBound: return "UndecidedWithinBound";
    case ErrorKind::NotFinitelyGeneratedSaturation: return "NotFinitelyGeneratedSaturation";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SNotInIdeal: return "SNotInIdeal";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::CharacterMismatch: return "CharacterMismatch";
    case ErrorKind::DimensionBound: return "DimensionBound";
    case ErrorKind::SelfGluedFaces: return "SelfGluedFaces";
    case ErrorKind::IncoherentTransition: return "IncoherentTransition";
    case ErrorKind::NonIsomorphicGluing: return "NonIsomorphicGluing";
    case ErrorKind::NonConstantSystem: return "NonConstantSystem";
    case ErrorKind::NotASubcomplex: return "NotASubcomplex";
    case ErrorKind::NonConstantCharacters: return "NonConstantCharacters";
    case ErrorKind::ZeroCenter: return "ZeroCenter";
    case ErrorKind::NotLocallyFinite: return "NotLocallyFinite";
    case ErrorKind::IncompatibleIdeals: return "IncompatibleIdeals";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvariantError: return "InvariantError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace f1cones
