#pragma once

// Document-level reports shared by the command-line tool and the Python
// bindings: descriptions of complexes and named property checks.

#include <string>

#include "json.hpp"

#include "f1cones/criteria.hpp"
#include "f1cones/io.hpp"

namespace f1cones {

/// The complex underlying an algebra, cone, complex or atlas document.
ConeComplex complex_of(const Document& d);
/// The atlas of an algebra, atlas or unpunctured complex document.
SchemeAtlas atlas_of(const Document& d);

/// Cones with their kept and punctured faces, chart primes and character
/// ranks, points (kept face classes), the longest specialization chain and
/// the number of connected components.
nlohmann::json describe(const Document& d);

/// property is one of separated, proper, overconvergent, quasicompact,
/// noetherian, normal, algebraisable. Throws UnknownCommand otherwise.
Verdict check_property(const std::string& property, const Document& d);

}  // namespace f1cones
