// Python module f1cones._core. Documents cross the boundary as JSON text;
// the pure-Python package wraps results into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "f1cones/errors.hpp"
#include "f1cones/fixtures.hpp"
#include "f1cones/functors.hpp"
#include "f1cones/io.hpp"
#include "f1cones/report.hpp"

namespace py = pybind11;
using namespace f1cones;
using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

std::vector<std::optional<MonomialIdeal>> ideals_from(const SchemeAtlas& x, const std::string& text, bool allow_null) {
  json j = parse_json(text, "ideals");
  if (!j.is_array() || j.size() != x.charts.size())
    throw Error(ErrorKind::SchemaError, "ideals: expected one entry per chart");
  std::vector<std::optional<MonomialIdeal>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string what = "ideals/" + std::to_string(i);
    if (j[i].is_null() && allow_null) {
      out.push_back(std::nullopt);
      continue;
    }
    out.push_back(parse_ideal(j[i], x.charts[i], what));
  }
  return out;
}

std::vector<IntVec> vectors_from(const json& j, const std::string& what, std::size_t dim) {
  if (!j.is_array()) throw Error(ErrorKind::SchemaError, what + ": expected an array of vectors");
  std::vector<IntVec> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(parse_vec(j[k], what + "/" + std::to_string(k), dim));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cone complexes and F1-schemes";

  static py::exception<Error> error_type(m, "F1ConesError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("kind") = error_kind_name(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("canonicalize", [](const std::string& text) { return serialize(parse_document(text)); },
        "Parse a document and return its canonical serialization.");
  m.def("describe", [](const std::string& text) { return dump(describe(parse_document(text))); });
  m.def("check", [](const std::string& property, const std::string& text) {
    return dump(to_json(check_property(property, parse_document(text))));
  });
  m.def("classify", [](const std::string& text) { return dump(to_json(classify(complex_of(parse_document(text))))); });
  m.def("sigma", [](const std::string& text) { return serialize(make_document(complex_of(parse_document(text)))); },
        "The punctured cone complex of a document.");
  m.def("spec", [](const std::string& text) {
    return serialize(make_document(spec(complex_of(parse_document(text)))));
  });
  m.def("normalize", [](const std::string& text) {
    Document d = parse_document(text);
    if (d.kind == DocumentKind::Algebra) {
      Normalization n = normalize(std::get<F1Algebra>(d.payload));
      return py::make_tuple(serialize(make_document(n.algebra)), n.was_normal);
    }
    SchemeAtlas x = atlas_of(d);
    bool was_normal = true;
    for (const auto& c : x.charts) was_normal = was_normal && normalize(c).was_normal;
    return py::make_tuple(serialize(make_document(normalize_scheme(x))), was_normal);
  });
  m.def(
      "blow_up",
      [](const std::string& text, const std::string& ideals, bool normalize_charts) {
        SchemeAtlas x = atlas_of(parse_document(text));
        std::vector<MonomialIdeal> ts;
        for (auto& t : ideals_from(x, ideals, false)) ts.push_back(*t);
        BlowUp b = blow_up(x, ts, normalize_charts);
        return py::dict(py::arg("atlas") = serialize(make_document(b.atlas)),
                        py::arg("complex") = serialize(make_document(b.complex)),
                        py::arg("morphism") = serialize(make_document(b.morphism)),
                        py::arg("chart_was_normal") = b.chart_was_normal);
      },
      py::arg("text"), py::arg("ideals"), py::arg("normalize_charts") = false);
  m.def("complete", [](const std::string& text, const std::string& ideals) {
    SchemeAtlas x = atlas_of(parse_document(text));
    Completion c = complete(x, ideals_from(x, ideals, true));
    return py::make_tuple(serialize(make_document(c.formal)), c.krull_warnings);
  });
  m.def(
      "subdivide",
      [](const std::string& text, const std::string& functions, bool include_zero) {
        ConeComplex s = complex_of(parse_document(text));
        json j = parse_json(functions, "functions");
        if (!j.is_array() || j.size() != s.size())
          throw Error(ErrorKind::SchemaError, "functions: expected one list per cone");
        std::vector<std::vector<IntVec>> fs;
        for (std::size_t i = 0; i < s.size(); ++i)
          fs.push_back(vectors_from(j[i], "functions/" + std::to_string(i), s.cone(i).cone().ambient_dim()));
        Subdivision sub = subdivide(s, fs, include_zero);
        return py::make_tuple(serialize(make_document(sub.complex)), serialize(make_document(sub.morphism)));
      },
      py::arg("text"), py::arg("functions"), py::arg("include_zero") = false);
  m.def("algebraise", [](const std::string& text) {
    Algebraisation a = algebraise(complex_of(parse_document(text)));
    return serialize(make_document(FormalSchemeAtlas{a.atlas, a.markings}));
  });
  m.def("monodromy", [](const std::string& text) {
    ConeComplex s = complex_of(parse_document(text));
    json loops = json::array();
    for (const auto& l : monodromy(s, 0).loops) loops.push_back({{"cones", l.cones}, {"matrix", to_json(l.matrix)}});
    return dump(loops);
  });
  m.def("expansion_stages", [](const std::string& cone_text, const std::string& kind, const std::string& f,
                               const std::string& center, std::size_t stages) {
    Document d = parse_document(cone_text);
    if (d.kind != DocumentKind::Cone) throw Error(ErrorKind::InvalidArgument, "expected a cone document");
    const Cone& v = std::get<PuncturedCone>(d.payload).cone();
    ExpansionKind k;
    if (kind == "el") k = ExpansionKind::Etale;
    else if (kind == "Sur") k = ExpansionKind::Sur;
    else if (kind == "sur") k = ExpansionKind::SurSmall;
    else throw Error(ErrorKind::InvalidArgument, "kind must be el, Sur or sur");
    ExpansionDatum datum{v, parse_vec(parse_json(f, "f"), "f", v.ambient_dim()),
                         vectors_from(parse_json(center, "center"), "center", v.ambient_dim())};
    std::vector<std::string> out;
    for (const auto& s : expansion_stages(datum, k, stages).stages) out.push_back(serialize(make_document(s)));
    return out;
  });
  m.def("jet_oracle", [](const std::string& text, const std::string& group, long radius) {
    Document d = parse_document(text);
    JetGroup h;
    if (group == "Z") h = JetGroup::Z;
    else if (group == "Q") h = JetGroup::Q;
    else throw Error(ErrorKind::InvalidArgument, "group must be Z or Q");
    JetReport r = d.kind == DocumentKind::Morphism ? jet_oracle(std::get<ComplexMorphism>(d.payload), h, radius)
                                                   : jet_oracle(complex_of(d), h, radius);
    return dump(to_json(r));
  });
  m.def("fixture_names", [] {
    std::vector<std::string> out;
    for (const auto& n : fixtures::corpus()) out.push_back(n.name);
    return out;
  });
  m.def("fixture", [](const std::string& name) {
    for (const auto& n : fixtures::corpus())
      if (n.name == name) return serialize(make_document(n.complex));
    throw Error(ErrorKind::InvalidArgument, "no fixture named '" + name + "'");
  });
}
