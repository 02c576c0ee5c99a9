#include "f1cones/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "f1cones/errors.hpp"

namespace f1cones {

using nlohmann::json;

const char* document_kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Algebra: return "algebra";
    case DocumentKind::Cone: return "cone";
    case DocumentKind::Complex: return "complex";
    case DocumentKind::SchemeAtlas: return "scheme_atlas";
    case DocumentKind::FormalSchemeAtlas: return "formal_scheme_atlas";
    case DocumentKind::Morphism: return "morphism";
  }
  return "?";
}

Document make_document(F1Algebra a) { return {DocumentKind::Algebra, std::move(a)}; }
Document make_document(PuncturedCone c) { return {DocumentKind::Cone, std::move(c)}; }
Document make_document(ConeComplex s) { return {DocumentKind::Complex, std::move(s)}; }
Document make_document(SchemeAtlas x) { return {DocumentKind::SchemeAtlas, std::move(x)}; }
Document make_document(FormalSchemeAtlas x) { return {DocumentKind::FormalSchemeAtlas, std::move(x)}; }
Document make_document(ComplexMorphism f) { return {DocumentKind::Morphism, std::move(f)}; }

// ---------------------------------------------------------------------------
// Writing

namespace {

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

json group_json(const CharacterGroup& g) {
  json torsion = json::array();
  for (const auto& t : g.torsion()) torsion.push_back(integer_json(t));
  return {{"rank", g.rank()}, {"torsion", torsion}};
}

json element_json(const CharacterGroup& g, const Element& e) {
  if (g.is_free()) return to_json(e.free);
  return {{"free", to_json(e.free)}, {"torsion", to_json(e.torsion)}};
}

json cone_json(const Cone& c) {
  json ineqs = json::array();
  for (const auto& f : c.facets()) ineqs.push_back(element_json(c.group(), c.group().make(f)));
  for (const auto& e : c.equations()) {
    ineqs.push_back(element_json(c.group(), c.group().make(e)));
    ineqs.push_back(element_json(c.group(), c.group().make(negate(e))));
  }
  return {{"group", group_json(c.group())}, {"inequalities", ineqs}};
}

json punctured_json(const PuncturedCone& pc) {
  json punctures = json::array();
  for (const auto& f : pc.punctures()) punctures.push_back(to_json(f.cutter));
  return {{"cone", cone_json(pc.cone())}, {"punctures", punctures}};
}

json ideal_json(const MonomialIdeal& t) {
  json gens = json::array();
  for (const auto& g : t.generators()) gens.push_back(element_json(t.owner().characters(), g));
  return {{"generators", gens}};
}

}  // namespace

json to_json(const IntVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(const F1Algebra& a) {
  if (a.is_presented()) {
    json rels = json::array();
    for (const auto& r : a.relations()) rels.push_back(json::array({to_json(*r.lhs), to_json(*r.rhs)}));
    return {{"mode", "presented"}, {"generator_count", a.generator_count()}, {"relations", rels}};
  }
  json gens = json::array();
  for (const auto& g : a.generators()) gens.push_back(element_json(a.characters(), g));
  return {{"mode", "embedded"}, {"group", group_json(a.characters())}, {"generators", gens}};
}

json to_json(const ConeComplex& s) {
  json cones = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) cones.push_back({{"id", i}, {"punctured_cone", punctured_json(s.cone(i))}});
  json gluings = json::array();
  for (const auto& g : s.gluings())
    gluings.push_back({{"from", g.from},
                       {"from_cutter", to_json(g.from_cutter)},
                       {"to", g.to},
                       {"to_cutter", to_json(g.to_cutter)},
                       {"charmap", to_json(g.charmap)}});
  return {{"cones", cones}, {"gluings", gluings}};
}

json to_json(const ComplexMorphism& f) {
  json assignments = json::array();
  for (std::size_t i = 0; i < f.assignments().size(); ++i)
    assignments.push_back({{"cone", i},
                           {"target_cone", f.assignments()[i].target},
                           {"charmap", to_json(f.assignments()[i].charmap)}});
  return {{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"assignments", assignments}};
}

json to_json(const SchemeAtlas& x) {
  json charts = json::array();
  for (std::size_t i = 0; i < x.charts.size(); ++i) charts.push_back({{"id", i}, {"algebra", to_json(x.charts[i])}});
  json gluings = json::array();
  for (const auto& g : x.gluings)
    gluings.push_back({{"from", g.from},
                       {"from_f", element_json(x.charts[g.from].characters(), g.from_f)},
                       {"to", g.to},
                       {"to_f", element_json(x.charts[g.to].characters(), g.to_f)},
                       {"charmap", to_json(g.charmap)}});
  return {{"charts", charts}, {"gluings", gluings}};
}

json to_json(const FormalSchemeAtlas& x) {
  json out = to_json(x.atlas);
  json ideals = json::array();
  for (const auto& t : x.ideals) ideals.push_back(t ? ideal_json(*t) : json(nullptr));
  out["ideals"] = ideals;
  return out;
}

json to_json(const Verdict& v) {
  json out = {{"property", v.property}, {"holds", v.holds}};
  if (!v.holds) {
    json vectors = json::array();
    for (const auto& x : v.vectors) vectors.push_back(to_json(x));
    out["witness"] = {{"kind", v.witness_kind},
                      {"cones", v.cones},
                      {"face", v.face},
                      {"vectors", vectors},
                      {"detail", v.detail}};
  }
  return out;
}

json to_json(const Classification& c) {
  return {{"quasi_compact", c.quasi_compact}, {"rational_polyhedral", c.rational_polyhedral},
          {"noetherian", c.noetherian},       {"normal", c.normal},
          {"connected", c.connected},         {"components", c.components},
          {"cones", c.cones},                 {"points", c.points}};
}

json to_json(const JetReport& r) {
  auto sample = [](const std::optional<JetSample>& s) -> json {
    if (!s) return nullptr;
    return {{"cone", s->cone}, {"face", s->face}, {"direction", to_json(s->direction)}, {"lifts", s->lifts}};
  };
  return {{"samples", r.samples},
          {"missing", r.missing},
          {"multiple", r.multiple},
          {"first_missing", sample(r.first_missing)},
          {"first_multiple", sample(r.first_multiple)},
          {"overconvergent", to_json(r.overconvergent)},
          {"separated", to_json(r.separated)}};
}

std::string serialize(const Document& d) {
  json payload = std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PuncturedCone>)
          return punctured_json(x);
        else
          return to_json(x);
      },
      d.payload);
  json doc = {{"format_version", kFormatVersion}, {"kind", document_kind_name(d.kind)}, {"payload", payload}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Reading

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, "field " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

const json& at(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path + "/" + key, "missing");
  return *it;
}

const json& array_at(const json& j, const std::string& key, const std::string& path) {
  const json& a = at(j, key, path);
  if (!a.is_array()) schema_error(path + "/" + key, "expected an array");
  return a;
}

Integer read_integer(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      schema_error(path, "not an integer");
    }
  }
  schema_error(path, "expected an exact integer");
}

std::size_t read_index(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

IntVec read_vec(const json& j, const std::string& path, std::optional<std::size_t> length = std::nullopt) {
  if (!j.is_array()) schema_error(path, "expected an integer vector");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_integer(j[i], path + "/" + std::to_string(i)));
  if (length && v.size() != *length)
    schema_error(path, "expected length " + std::to_string(*length) + ", got " + std::to_string(v.size()));
  return v;
}

IntMatrix read_matrix(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    schema_error(path, "expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " integer matrix");
  std::vector<IntVec> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(read_vec(j[r], path + "/" + std::to_string(r), cols));
  return IntMatrix::from_rows(rs, cols);
}

CharacterGroup read_group(const json& j, const std::string& path) {
  std::size_t rank = read_index(at(j, "rank", path), path + "/rank");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    const json& t = array_at(j, "torsion", path);
    for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(read_integer(t[i], path + "/torsion/" + std::to_string(i)));
  }
  try {
    return CharacterGroup(rank, torsion);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

Element read_element(const json& j, const CharacterGroup& g, const std::string& path) {
  if (j.is_array()) {
    if (!g.is_free()) schema_error(path, "elements of a group with torsion need free and torsion parts");
    return g.make(read_vec(j, path, g.rank()));
  }
  IntVec free = read_vec(at(j, "free", path), path + "/free", g.rank());
  IntVec tors = read_vec(at(j, "torsion", path), path + "/torsion", g.torsion().size());
  return g.make(free, tors);
}

Cone read_cone(const json& j, const std::string& path) {
  CharacterGroup g = read_group(at(j, "group", path), path + "/group");
  const json& ineqs = array_at(j, "inequalities", path);
  std::vector<Element> es;
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    es.push_back(read_element(ineqs[i], g, path + "/inequalities/" + std::to_string(i)));
  return Cone(g, es);
}

PuncturedCone read_punctured(const json& j, const std::string& path) {
  Cone c = read_cone(at(j, "cone", path), path + "/cone");
  std::set<Face> punctures;
  if (j.contains("punctures")) {
    const json& ps = array_at(j, "punctures", path);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::string p = path + "/punctures/" + std::to_string(i);
      auto f = c.face_cut_by(read_vec(ps[i], p, c.ambient_dim()));
      if (!f) throw Error(ErrorKind::InvariantError, p + ": cutter does not cut a face");
      punctures.insert(*f);
    }
  }
  return PuncturedCone(c, punctures);
}

ConeComplex read_complex(const json& j, const std::string& path) {
  const json& cs = array_at(j, "cones", path);
  std::vector<PuncturedCone> cones(cs.size());
  std::vector<bool> seen(cs.size(), false);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string p = path + "/cones/" + std::to_string(i);
    std::size_t id = j["cones"][i].contains("id") ? read_index(cs[i]["id"], p + "/id") : i;
    if (id >= cs.size() || seen[id]) schema_error(p + "/id", "ids must be 0..n-1 without repetition");
    seen[id] = true;
    cones[id] = read_punctured(at(cs[i], "punctured_cone", p), p + "/punctured_cone");
  }
  std::vector<Gluing> gluings;
  if (j.contains("gluings")) {
    const json& gs = array_at(j, "gluings", path);
    for (std::size_t k = 0; k < gs.size(); ++k) {
      std::string p = path + "/gluings/" + std::to_string(k);
      Gluing g;
      g.from = read_index(at(gs[k], "from", p), p + "/from");
      g.to = read_index(at(gs[k], "to", p), p + "/to");
      if (g.from >= cones.size()) schema_error(p + "/from", "no such cone");
      if (g.to >= cones.size()) schema_error(p + "/to", "no such cone");
      std::size_t df = cones[g.from].cone().ambient_dim(), dt = cones[g.to].cone().ambient_dim();
      g.from_cutter = read_vec(at(gs[k], "from_cutter", p), p + "/from_cutter", df);
      g.to_cutter = read_vec(at(gs[k], "to_cutter", p), p + "/to_cutter", dt);
      g.charmap = read_matrix(at(gs[k], "charmap", p), p + "/charmap", df, dt);
      gluings.push_back(std::move(g));
    }
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

F1Algebra read_algebra(const json& j, const std::string& path) {
  std::string mode = j.contains("mode") ? at(j, "mode", path).get<std::string>() : "embedded";
  if (mode == "presented") {
    std::size_t n = read_index(at(j, "generator_count", path), path + "/generator_count");
    std::vector<Relation> rels;
    if (j.contains("relations")) {
      const json& rs = array_at(j, "relations", path);
      for (std::size_t i = 0; i < rs.size(); ++i) {
        std::string p = path + "/relations/" + std::to_string(i);
        if (!rs[i].is_array() || rs[i].size() != 2) schema_error(p, "expected a pair of exponent vectors");
        rels.push_back({read_vec(rs[i][0], p + "/0", n), read_vec(rs[i][1], p + "/1", n)});
      }
    }
    return from_presentation(n, rels);
  }
  if (mode != "embedded") schema_error(path + "/mode", "expected embedded or presented");
  CharacterGroup g = read_group(at(j, "group", path), path + "/group");
  const json& gs = array_at(j, "generators", path);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < gs.size(); ++i) gens.push_back(read_element(gs[i], g, path + "/generators/" + std::to_string(i)));
  return F1Algebra::embedded(g, gens);
}

SchemeAtlas read_atlas(const json& j, const std::string& path) {
  const json& cs = array_at(j, "charts", path);
  SchemeAtlas x;
  x.charts.resize(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string p = path + "/charts/" + std::to_string(i);
    std::size_t id = cs[i].contains("id") ? read_index(cs[i]["id"], p + "/id") : i;
    if (id >= cs.size()) schema_error(p + "/id", "ids must be 0..n-1");
    x.charts[id] = read_algebra(at(cs[i], "algebra", p), p + "/algebra");
  }
  if (j.contains("gluings")) {
    const json& gs = array_at(j, "gluings", path);
    for (std::size_t k = 0; k < gs.size(); ++k) {
      std::string p = path + "/gluings/" + std::to_string(k);
      ChartGluing g;
      g.from = read_index(at(gs[k], "from", p), p + "/from");
      g.to = read_index(at(gs[k], "to", p), p + "/to");
      if (g.from >= x.charts.size() || g.to >= x.charts.size()) schema_error(p, "no such chart");
      const CharacterGroup& kf = x.charts[g.from].characters();
      const CharacterGroup& kt = x.charts[g.to].characters();
      g.from_f = read_element(at(gs[k], "from_f", p), kf, p + "/from_f");
      g.to_f = read_element(at(gs[k], "to_f", p), kt, p + "/to_f");
      g.charmap = read_matrix(at(gs[k], "charmap", p), p + "/charmap", kf.rank(), kt.rank());
      x.gluings.push_back(std::move(g));
    }
  }
  validate_atlas(x);
  return x;
}

FormalSchemeAtlas read_formal(const json& j, const std::string& path) {
  FormalSchemeAtlas x;
  x.atlas = read_atlas(j, path);
  const json& is = array_at(j, "ideals", path);
  if (is.size() != x.atlas.charts.size()) schema_error(path + "/ideals", "one entry per chart expected");
  for (std::size_t i = 0; i < is.size(); ++i) {
    std::string p = path + "/ideals/" + std::to_string(i);
    if (is[i].is_null()) {
      x.ideals.push_back(std::nullopt);
      continue;
    }
    x.ideals.push_back(parse_ideal(is[i].contains("exponents") ? is[i] : at(is[i], "generators", p), x.atlas.charts[i],
                                   is[i].contains("exponents") ? p : p + "/generators"));
  }
  sigma(x);
  return x;
}

ComplexMorphism read_morphism(const json& j, const std::string& path) {
  ConeComplex source = read_complex(at(j, "source", path), path + "/source");
  ConeComplex target = read_complex(at(j, "target", path), path + "/target");
  const json& as = array_at(j, "assignments", path);
  std::vector<std::optional<ConeAssignment>> slots(source.size());
  for (std::size_t k = 0; k < as.size(); ++k) {
    std::string p = path + "/assignments/" + std::to_string(k);
    std::size_t i = read_index(at(as[k], "cone", p), p + "/cone");
    std::size_t t = read_index(at(as[k], "target_cone", p), p + "/target_cone");
    if (i >= source.size() || slots[i]) schema_error(p + "/cone", "no such cone or assigned twice");
    if (t >= target.size()) schema_error(p + "/target_cone", "no such cone");
    slots[i] = ConeAssignment{t, read_matrix(at(as[k], "charmap", p), p + "/charmap", source.cone(i).cone().ambient_dim(),
                                             target.cone(t).cone().ambient_dim())};
  }
  std::vector<ConeAssignment> assignments;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) schema_error(path + "/assignments", "cone " + std::to_string(i) + " is not assigned");
    assignments.push_back(*slots[i]);
  }
  return ComplexMorphism(std::move(source), std::move(target), std::move(assignments));
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

}  // namespace

IntVec parse_vec(const json& j, const std::string& what, std::optional<std::size_t> length) {
  return read_vec(j, what, length);
}

Element parse_element(const json& j, const CharacterGroup& g, const std::string& what) {
  return read_element(j, g, what);
}

MonomialIdeal parse_ideal(const json& j, const F1Algebra& a, const std::string& what) {
  if (j.is_object() && j.contains("exponents")) {
    const json& es = array_at(j, "exponents", what);
    std::vector<IntVec> exps;
    for (std::size_t k = 0; k < es.size(); ++k)
      exps.push_back(read_vec(es[k], what + "/exponents/" + std::to_string(k), a.generator_count()));
    return MonomialIdeal::from_exponents(a, exps);
  }
  if (!j.is_array()) schema_error(what, "expected an array of characters or {\"exponents\": [...]}");
  std::vector<Element> gens;
  for (std::size_t k = 0; k < j.size(); ++k) gens.push_back(read_element(j[k], a.characters(), what + "/" + std::to_string(k)));
  return MonomialIdeal(a, gens);
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, what + " line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaError, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  if (!j.is_object()) schema_error("", "expected an object");
  const json& version = at(j, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion)
    schema_error("/format_version", "unsupported format version");
  const json& kind = at(j, "kind", "");
  if (!kind.is_string()) schema_error("/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  const json& payload = at(j, "payload", "");
  try {
    if (k == "algebra") return make_document(read_algebra(payload, "/payload"));
    if (k == "cone") return make_document(read_punctured(payload, "/payload"));
    if (k == "complex") return make_document(read_complex(payload, "/payload"));
    if (k == "scheme_atlas") return make_document(read_atlas(payload, "/payload"));
    if (k == "formal_scheme_atlas") return make_document(read_formal(payload, "/payload"));
    if (k == "morphism") return make_document(read_morphism(payload, "/payload"));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("wrong value type: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError || e.kind() == ErrorKind::InvariantError) throw;
    throw Error(ErrorKind::InvariantError, std::string(error_kind_name(e.kind())) + ": " + e.what());
  }
  schema_error("/kind", "unknown document kind '" + k + "'");
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace f1cones
