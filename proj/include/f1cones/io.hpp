#pragma once

// JSON documents for algebras, cones, complexes, atlases and morphisms, and
// for verdicts. Serialization is canonical: parsing and re-serializing a
// document reproduces it byte for byte.

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "f1cones/complex.hpp"
#include "f1cones/criteria.hpp"
#include "f1cones/f1algebra.hpp"
#include "f1cones/functors.hpp"

namespace f1cones {

inline constexpr int kFormatVersion = 1;

enum class DocumentKind { Algebra, Cone, Complex, SchemeAtlas, FormalSchemeAtlas, Morphism };
const char* document_kind_name(DocumentKind k);

struct Document {
  DocumentKind kind = DocumentKind::Complex;
  std::variant<F1Algebra, PuncturedCone, ConeComplex, SchemeAtlas, FormalSchemeAtlas, ComplexMorphism> payload;

  const ConeComplex& complex() const { return std::get<ConeComplex>(payload); }
};

Document make_document(F1Algebra a);
Document make_document(PuncturedCone c);
Document make_document(ConeComplex s);
Document make_document(SchemeAtlas x);
Document make_document(FormalSchemeAtlas x);
Document make_document(ComplexMorphism f);

/// Throws SchemaError (with line or field path) for malformed input and
/// InvariantError when the described object fails validation.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);
std::string serialize(const Document& d);

/// Inline values in command-line arguments. `what` names the argument in
/// SchemaError messages.
IntVec parse_vec(const nlohmann::json& j, const std::string& what, std::optional<std::size_t> length = std::nullopt);
Element parse_element(const nlohmann::json& j, const CharacterGroup& g, const std::string& what);
/// A monomial ideal of a: an array of characters, or {"exponents": [...]}
/// with exponent vectors in the generators (needed for presented algebras).
MonomialIdeal parse_ideal(const nlohmann::json& j, const F1Algebra& a, const std::string& what);
/// Parses text as JSON, raising SchemaError with the line on failure.
nlohmann::json parse_json(const std::string& text, const std::string& what);

nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const JetReport& r);
nlohmann::json to_json(const ConeComplex& s);
nlohmann::json to_json(const ComplexMorphism& f);
nlohmann::json to_json(const FormalSchemeAtlas& x);
nlohmann::json to_json(const SchemeAtlas& x);
nlohmann::json to_json(const F1Algebra& a);
nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const IntVec& v);

}  // namespace f1cones
