#include "f1cones/report.hpp"

#include <algorithm>

#include "f1cones/errors.hpp"
#include "f1cones/functors.hpp"

namespace f1cones {

using nlohmann::json;

ConeComplex complex_of(const Document& d) {
  switch (d.kind) {
    case DocumentKind::Complex: return d.complex();
    case DocumentKind::SchemeAtlas: return sigma(std::get<SchemeAtlas>(d.payload));
    case DocumentKind::FormalSchemeAtlas: return sigma(std::get<FormalSchemeAtlas>(d.payload));
    case DocumentKind::Algebra: return sigma(SchemeAtlas{{std::get<F1Algebra>(d.payload)}, {}});
    case DocumentKind::Cone: return ConeComplex::validate({std::get<PuncturedCone>(d.payload)}, {});
    case DocumentKind::Morphism: break;
  }
  throw Error(ErrorKind::InvalidArgument, "expected a complex, atlas, algebra or cone document");
}

SchemeAtlas atlas_of(const Document& d) {
  switch (d.kind) {
    case DocumentKind::SchemeAtlas: return std::get<SchemeAtlas>(d.payload);
    case DocumentKind::Algebra: return SchemeAtlas{{std::get<F1Algebra>(d.payload)}, {}};
    case DocumentKind::Complex: {
      FormalSchemeAtlas fa = spec(d.complex());
      for (const auto& t : fa.ideals)
        if (t) throw Error(ErrorKind::InvalidArgument, "the complex has punctures; pass an unpunctured complex or an atlas");
      return fa.atlas;
    }
    default: break;
  }
  throw Error(ErrorKind::InvalidArgument, "expected a scheme atlas, algebra or unpunctured complex document");
}

namespace {

json describe_complex(const ConeComplex& s) {
  json cones = json::array();
  std::size_t chain = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PuncturedCone& pc = s.cone(i);
    json rays = json::array();
    for (const auto& r : pc.cone().rays()) rays.push_back(to_json(r));
    json kept = json::array(), punctured = json::array();
    for (const Face& f : pc.cone().faces()) {
      bool is_punctured = pc.punctures().count(f) > 0;
      (is_punctured ? punctured : kept).push_back(f.rays);
      // Face lattices are graded, so a chain from f up to the cone has
      // dim(cone) - dim(f) + 1 members.
      if (!is_punctured) chain = std::max(chain, pc.cone().dim() - f.dim + 1);
    }
    cones.push_back({{"id", i},
                     {"dim", pc.cone().dim()},
                     {"character_rank", pc.cone().ambient_dim()},
                     {"rays", rays},
                     {"kept_faces", kept},
                     {"punctured_faces", punctured},
                     {"primes", primes(chart_algebra(pc.cone())).size()}});
  }
  json points = json::array();
  for (std::size_t c = 0; c < s.class_count(); ++c)
    for (const FaceNode& n : s.nodes())
      if (n.cls == c) {
        points.push_back({{"cone", n.cone}, {"face", n.face.rays}, {"dim", n.face.dim}});
        break;
      }
  return {{"cones", cones},
          {"gluings", s.gluings().size()},
          {"points", points},
          {"specialization_chain_length", chain},
          {"components", classify(s).components}};
}

}  // namespace

json describe(const Document& d) {
  if (d.kind == DocumentKind::Morphism) {
    const auto& f = std::get<ComplexMorphism>(d.payload);
    json assignments = json::array();
    for (const auto& a : f.assignments()) assignments.push_back(a.target);
    return {{"kind", "morphism"},
            {"source", describe_complex(f.source())},
            {"target", describe_complex(f.target())},
            {"assignments", assignments}};
  }
  json out = {{"kind", document_kind_name(d.kind)}, {"complex", describe_complex(complex_of(d))}};
  if (d.kind == DocumentKind::Algebra) {
    const auto& a = std::get<F1Algebra>(d.payload);
    out["algebra"] = a.to_string();
    out["normal"] = normalize(a).was_normal;
  }
  return out;
}

Verdict check_property(const std::string& property, const Document& d) {
  const bool morphism = d.kind == DocumentKind::Morphism;
  if (property == "separated")
    return morphism ? check_separated(std::get<ComplexMorphism>(d.payload)) : check_separated(complex_of(d));
  if (property == "proper")
    return morphism ? check_proper(std::get<ComplexMorphism>(d.payload)) : check_proper(complex_of(d));
  if (property == "overconvergent")
    return morphism ? check_overconvergent(std::get<ComplexMorphism>(d.payload)) : check_overconvergent(complex_of(d));

  static const char* kOthers[] = {"quasicompact", "noetherian", "normal", "algebraisable"};
  if (std::find(std::begin(kOthers), std::end(kOthers), property) == std::end(kOthers))
    throw Error(ErrorKind::UnknownCommand, "unknown property '" + property + "'");
  if (morphism) throw Error(ErrorKind::InvalidArgument, "check " + property + " expects a complex document");

  Verdict v;
  v.property = property;
  v.holds = true;
  if (property == "normal" && (d.kind == DocumentKind::Algebra || d.kind == DocumentKind::SchemeAtlas)) {
    SchemeAtlas x = atlas_of(d);
    for (std::size_t i = 0; i < x.charts.size() && v.holds; ++i) {
      Normalization n = normalize(x.charts[i]);
      if (n.was_normal) continue;
      v.holds = false;
      v.witness_kind = "not_saturated";
      v.cones = {i};
      v.detail = "chart " + std::to_string(i) + " normalizes to " + n.algebra.to_string();
    }
  } else if (property == "algebraisable") {
    try {
      algebraise(complex_of(d));
    } catch (const NonConstantCharactersError& e) {
      v.holds = false;
      v.witness_kind = "monodromy";
      v.cones = e.loop();
      v.detail = "matrix " + to_json(e.matrix()).dump();
    }
  } else {
    Classification k = classify(complex_of(d));
    v.holds = property == "quasicompact" ? k.quasi_compact : property == "noetherian" ? k.noetherian : k.normal;
  }
  return v;
}

}  // namespace f1cones
