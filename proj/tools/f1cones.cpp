// Command-line front end. Exit status: 0 when the checked property holds or
// the construction succeeds, 1 when it fails with a witness, 2 on errors.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "f1cones/complex.hpp"
#include "f1cones/criteria.hpp"
#include "f1cones/errors.hpp"
#include "f1cones/f1algebra.hpp"
#include "f1cones/fixtures.hpp"
#include "f1cones/functors.hpp"
#include "f1cones/io.hpp"
#include "f1cones/report.hpp"

using namespace f1cones;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Options {
  bool json_output = false;
};

std::string vec_text(const IntVec& v) { return to_json(v).dump(); }

std::string indices_text(const std::vector<std::size_t>& xs) { return json(xs).dump(); }

// ---------------------------------------------------------------------------
// Reports

void print_verdict(const Verdict& v, const Options& opt) {
  if (opt.json_output) {
    std::cout << to_json(v).dump(2) << "\n";
    return;
  }
  std::cout << v.property << ": " << (v.holds ? "true" : "false") << "\n";
  if (v.holds) return;
  std::cout << "witness: " << v.witness_kind << "\n";
  if (!v.cones.empty()) std::cout << "  cones: " << indices_text(v.cones) << "\n";
  if (!v.face.empty() || v.witness_kind == "cone_pair") std::cout << "  face rays: " << indices_text(v.face) << "\n";
  for (const auto& x : v.vectors) std::cout << "  vector: " << vec_text(x) << "\n";
  if (!v.detail.empty()) std::cout << "  " << v.detail << "\n";
}

int verdict_status(const Verdict& v) { return v.holds ? kHolds : kFails; }

void print_description(const json& r, std::ostream& out) {
  out << "complex: " << r["cones"].size() << " cones, " << r["gluings"].get<std::size_t>() << " gluings\n";
  for (const auto& c : r["cones"]) {
    out << "cone " << c["id"].get<std::size_t>() << ": dim " << c["dim"].get<std::size_t>() << ", character rank "
        << c["character_rank"].get<std::size_t>() << ", rays " << c["rays"].dump() << "\n";
    out << "  kept faces: " << c["kept_faces"].dump() << "\n";
    out << "  punctured faces: " << c["punctured_faces"].dump() << "\n";
    out << "  primes of chart: " << c["primes"].get<std::size_t>() << "\n";
  }
  out << "points: " << r["points"].size() << "\n";
  for (const auto& p : r["points"])
    out << "  cone " << p["cone"].get<std::size_t>() << " face " << p["face"].dump() << " (dim "
        << p["dim"].get<std::size_t>() << ")\n";
  out << "specialization chain length: " << r["specialization_chain_length"].get<std::size_t>() << "\n";
  out << "connected components: " << r["components"].get<std::size_t>() << "\n";
}

int cmd_describe(const Document& d, const Options& opt) {
  json r = describe(d);
  if (opt.json_output) {
    std::cout << r.dump(2) << "\n";
    return kHolds;
  }
  if (r["kind"] == "morphism") {
    std::cout << "morphism, cone assignments " << r["assignments"].dump() << "\nsource\n";
    print_description(r["source"], std::cout);
    std::cout << "target\n";
    print_description(r["target"], std::cout);
    return kHolds;
  }
  if (r.contains("algebra"))
    std::cout << "algebra " << r["algebra"].get<std::string>() << "\nnormal: " << (r["normal"] ? "true" : "false")
              << "\n";
  print_description(r["complex"], std::cout);
  return kHolds;
}

// ---------------------------------------------------------------------------
// Checks

int cmd_check(const std::string& property, const Document& d, const Options& opt) {
  Verdict v = check_property(property, d);
  print_verdict(v, opt);
  return verdict_status(v);
}

// ---------------------------------------------------------------------------
// Constructions

void emit(const Document& d) { std::cout << serialize(d); }

std::vector<std::optional<MonomialIdeal>> read_ideals(const SchemeAtlas& x, const std::vector<std::string>& texts,
                                                      bool allow_null) {
  if (texts.size() != x.charts.size())
    throw Error(ErrorKind::InvalidArgument, "one --ideal per chart expected (" + std::to_string(x.charts.size()) +
                                                " charts, " + std::to_string(texts.size()) + " given)");
  std::vector<std::optional<MonomialIdeal>> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    std::string what = "--ideal " + std::to_string(i);
    json j = parse_json(texts[i], what);
    if (j.is_null() && allow_null) {
      out.push_back(std::nullopt);
      continue;
    }
    out.push_back(parse_ideal(j, x.charts[i], what));
  }
  return out;
}

int cmd_normalize(const Document& d) {
  if (d.kind == DocumentKind::Algebra) {
    Normalization n = normalize(std::get<F1Algebra>(d.payload));
    std::cerr << "was_normal: " << (n.was_normal ? "true" : "false") << "\n";
    emit(make_document(n.algebra));
    return kHolds;
  }
  emit(make_document(normalize_scheme(atlas_of(d))));
  return kHolds;
}

int cmd_blowup(const Document& d, const std::vector<std::string>& ideal_texts, bool normalize_charts,
               const std::string& what) {
  SchemeAtlas x = atlas_of(d);
  std::vector<MonomialIdeal> ideals;
  for (auto& t : read_ideals(x, ideal_texts, false)) ideals.push_back(*t);
  BlowUp b = blow_up(x, ideals, normalize_charts);
  for (std::size_t i = 0; i < b.chart_was_normal.size(); ++i)
    if (!b.chart_was_normal[i]) std::cerr << "chart " << i << " is not normal\n";
  if (what == "complex") emit(make_document(b.complex));
  else if (what == "morphism") emit(make_document(b.morphism));
  else emit(make_document(b.atlas));
  return kHolds;
}

int cmd_complete(const Document& d, const std::vector<std::string>& ideal_texts) {
  SchemeAtlas x = atlas_of(d);
  Completion c = complete(x, read_ideals(x, ideal_texts, true));
  for (std::size_t i : c.krull_warnings)
    std::cerr << "KrullWarning: chart " << i << " does not embed into its completion\n";
  emit(make_document(c.formal));
  return kHolds;
}

int cmd_subdivide(const Document& d, const std::vector<std::string>& function_texts, bool include_zero,
                  const std::string& what) {
  ConeComplex s = complex_of(d);
  if (function_texts.size() != s.size())
    throw Error(ErrorKind::InvalidArgument, "one --function per cone expected (" + std::to_string(s.size()) +
                                                " cones, " + std::to_string(function_texts.size()) + " given)");
  std::vector<std::vector<IntVec>> functions;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::string name = "--function " + std::to_string(i);
    json j = parse_json(function_texts[i], name);
    if (!j.is_array()) throw Error(ErrorKind::SchemaError, name + ": expected an array of characters");
    std::vector<IntVec> fs;
    for (std::size_t k = 0; k < j.size(); ++k)
      fs.push_back(parse_vec(j[k], name + "/" + std::to_string(k), s.cone(i).cone().ambient_dim()));
    functions.push_back(fs);
  }
  Subdivision sub = subdivide(s, functions, include_zero);
  if (what == "morphism") emit(make_document(sub.morphism));
  else emit(make_document(sub.complex));
  return kHolds;
}

int cmd_algebraise(const Document& d, const Options& opt) {
  try {
    Algebraisation a = algebraise(complex_of(d));
    emit(make_document(FormalSchemeAtlas{a.atlas, a.markings}));
    return kHolds;
  } catch (const NonConstantCharactersError& e) {
    if (opt.json_output) {
      std::cout << json{{"algebraisable", false},
                        {"error", error_kind_name(e.kind())},
                        {"loop", e.loop()},
                        {"monodromy", to_json(e.matrix())}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "algebraisable: false\n"
                << "NonConstantCharacters: the character local system has monodromy\n"
                << "  loop: " << indices_text(e.loop()) << "\n"
                << "  matrix: " << to_json(e.matrix()).dump() << "\n";
    }
    return kFails;
  }
}

int cmd_expand(const Document& d, const std::string& kind_name, std::size_t stages, const std::string& f_text,
               const std::string& center_text, const Options& opt) {
  if (d.kind != DocumentKind::Cone) throw Error(ErrorKind::InvalidArgument, "expand expects a cone document");
  const Cone& v = std::get<PuncturedCone>(d.payload).cone();
  ExpansionKind kind;
  if (kind_name == "el") kind = ExpansionKind::Etale;
  else if (kind_name == "Sur") kind = ExpansionKind::Sur;
  else if (kind_name == "sur") kind = ExpansionKind::SurSmall;
  else throw Error(ErrorKind::InvalidArgument, "--kind must be el, Sur or sur");
  IntVec f = parse_vec(parse_json(f_text, "--f"), "--f", v.ambient_dim());
  json cj = parse_json(center_text, "--center");
  if (!cj.is_array()) throw Error(ErrorKind::SchemaError, "--center: expected an array of characters");
  std::vector<IntVec> center;
  for (std::size_t k = 0; k < cj.size(); ++k)
    center.push_back(parse_vec(cj[k], "--center/" + std::to_string(k), v.ambient_dim()));

  Expansion e = expansion_stages({v, f, center}, kind, stages);
  if (opt.json_output) {
    json out = {{"kind", expansion_kind_name(kind)}, {"stabilized", e.stabilized}, {"stages", json::array()}};
    for (const auto& s : e.stages) out["stages"].push_back(to_json(s));
    std::cout << out.dump(2) << "\n";
    return kHolds;
  }
  for (std::size_t k = 0; k < e.stages.size(); ++k) {
    const ConeComplex& s = e.stages[k];
    std::cout << expansion_kind_name(kind) << " stage " << k + 1 << ": " << s.size() << " cones\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      json rays = json::array();
      for (const auto& r : s.cone(i).cone().rays()) rays.push_back(to_json(r));
      std::cout << "  cone " << i << ": rays " << rays.dump() << ", punctured faces "
                << s.cone(i).punctures().size() << "\n";
    }
  }
  std::cout << "stabilized: " << (e.stabilized ? "true" : "false") << "\n";
  return kHolds;
}

int cmd_oracle(const Document& d, const std::string& group, long radius, const Options& opt) {
  JetGroup h;
  if (group == "Z") h = JetGroup::Z;
  else if (group == "Q") h = JetGroup::Q;
  else throw Error(ErrorKind::InvalidArgument, "--group must be Z or Q");
  JetReport r = d.kind == DocumentKind::Morphism ? jet_oracle(std::get<ComplexMorphism>(d.payload), h, radius)
                                                 : jet_oracle(complex_of(d), h, radius);
  bool unique = r.missing == 0 && r.multiple == 0;
  if (opt.json_output) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "jets sampled: " << r.samples << "\n"
              << "without lift: " << r.missing << "\n"
              << "with several lifts: " << r.multiple << "\n";
    auto sample = [](const char* label, const std::optional<JetSample>& s) {
      if (s)
        std::cout << label << ": cone " << s->cone << " face " << indices_text(s->face) << " direction "
                  << vec_text(s->direction) << " lifts " << s->lifts << "\n";
    };
    sample("first without lift", r.first_missing);
    sample("first with several lifts", r.first_multiple);
    std::cout << "oracle separated: " << (r.separated.holds ? "true" : "false") << "\n"
              << "oracle overconvergent: " << (r.overconvergent.holds ? "true" : "false") << "\n";
  }
  return unique ? kHolds : kFails;
}

int cmd_fixture(const std::string& name, bool list) {
  for (const auto& [n, s] : fixtures::corpus()) {
    if (list) std::cout << n << "\n";
    else if (n == name) {
      emit(make_document(s));
      return kHolds;
    }
  }
  if (list) return kHolds;
  throw Error(ErrorKind::InvalidArgument, "no fixture named '" + name + "'");
}

void report_error(const Error& e, const Options& opt) {
  if (opt.json_output)
    std::cout << json{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}}.dump(2) << "\n";
  std::cerr << "error: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Punctured cone complexes and F1-schemes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_output, "Machine-readable output");
  std::size_t degree_bound = 0, hilbert_bound = 0;
  app.add_option("--degree-bound", degree_bound, "Monomial degree bound of the integrality search");
  app.add_option("--hilbert-dim-bound", hilbert_bound, "Largest lattice rank accepted by Hilbert basis computations");

  std::string file, property, kind = "Sur", f_text, center_text, group = "Z", emit_what = "atlas", name;
  std::vector<std::string> ideals, functions;
  std::size_t stages = 1;
  long radius = 10;
  bool normalize_charts = false, include_zero = false, list = false;

  auto* describe = app.add_subcommand("describe", "Cones, points, punctures, primes and components");
  describe->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "Decide a property");
  check->add_option("property", property, "separated|proper|overconvergent|quasicompact|noetherian|normal|algebraisable")
      ->required();
  check->add_option("file", file)->required();

  auto* normalize_cmd = app.add_subcommand("normalize", "Normalize an algebra or scheme atlas");
  normalize_cmd->add_option("file", file)->required();

  auto* blowup = app.add_subcommand("blowup", "Blow up along monomial ideals, one --ideal per chart");
  blowup->add_option("file", file)->required();
  blowup->add_option("--ideal", ideals, "JSON array of characters, or {\"exponents\": [...]}")->required()->allow_extra_args(false);
  blowup->add_flag("--normalize", normalize_charts, "Normalize the Rees charts");
  blowup->add_option("--emit", emit_what, "atlas|complex|morphism")
      ->check(CLI::IsMember({"atlas", "complex", "morphism"}));

  auto* complete_cmd = app.add_subcommand("complete", "Formal completion, one --ideal (or null) per chart");
  complete_cmd->add_option("file", file)->required();
  complete_cmd->add_option("--ideal", ideals, "JSON array of characters, {\"exponents\": [...]} or null")->required()->allow_extra_args(false);

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Refine by max of characters, one --function per cone");
  subdivide_cmd->add_option("file", file)->required();
  subdivide_cmd->add_option("--function", functions, "JSON array of characters")->required()->allow_extra_args(false);
  subdivide_cmd->add_flag("--include-zero", include_zero, "Prepend the constant 0 to every function");
  subdivide_cmd->add_option("--emit", emit_what, "complex|morphism")->check(CLI::IsMember({"atlas", "complex", "morphism"}));

  auto* algebraise_cmd = app.add_subcommand("algebraise", "Formal scheme with an algebraic model");
  algebraise_cmd->add_option("file", file)->required();

  auto* expand = app.add_subcommand("expand", "Expansion stages of a cone datum");
  expand->add_option("file", file, "cone document")->required();
  expand->add_option("--kind", kind, "el|Sur|sur");
  expand->add_option("--stages", stages)->check(CLI::PositiveNumber);
  expand->add_option("--f", f_text, "JSON character cutting U")->required();
  expand->add_option("--center", center_text, "JSON array of characters generating Z")->required();

  auto* oracle = app.add_subcommand("oracle", "Count integer jet lifts on a box");
  oracle->add_option("file", file)->required();
  oracle->add_option("--group", group, "Z|Q");
  oracle->add_option("--radius", radius)->check(CLI::PositiveNumber);

  auto* fixture = app.add_subcommand("fixture", "Print a built-in complex");
  fixture->add_option("name", name);
  fixture->add_flag("--list", list, "List the built-in names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    bool unknown = app.get_subcommands().empty();
    std::string first = argc > 1 ? argv[1] : "";
    std::string message = unknown && !first.empty() && first[0] != '-' ? "unknown command '" + first + "'" : e.what();
    Error err(unknown ? ErrorKind::UnknownCommand : ErrorKind::InvalidArgument, message);
    report_error(err, opt);
    return kError;
  }

  if (degree_bound > 0) setenv("F1CONES_DEGREE_BOUND", std::to_string(degree_bound).c_str(), 1);
  if (hilbert_bound > 0) setenv("F1CONES_HILBERT_DIM_BOUND", std::to_string(hilbert_bound).c_str(), 1);

  try {
    if (fixture->parsed()) return cmd_fixture(name, list);
    Document d = read_document(file);
    if (describe->parsed()) return cmd_describe(d, opt);
    if (check->parsed()) return cmd_check(property, d, opt);
    if (normalize_cmd->parsed()) return cmd_normalize(d);
    if (blowup->parsed()) return cmd_blowup(d, ideals, normalize_charts, emit_what);
    if (complete_cmd->parsed()) return cmd_complete(d, ideals);
    if (subdivide_cmd->parsed()) return cmd_subdivide(d, functions, include_zero, emit_what);
    if (algebraise_cmd->parsed()) return cmd_algebraise(d, opt);
    if (expand->parsed()) return cmd_expand(d, kind, stages, f_text, center_text, opt);
    if (oracle->parsed()) return cmd_oracle(d, group, radius, opt);
  } catch (const Error& e) {
    report_error(e, opt);
    return kError;
  } catch (const std::exception& e) {
    report_error(Error(ErrorKind::InvariantError, e.what()), opt);
    return kError;
  }
  report_error(Error(ErrorKind::UnknownCommand, "no command"), opt);
  return kError;
}
