#include "hfarc/cli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hfarc/io.hpp"

namespace hfarc {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// Property holds when the structure is not contained in the forbidden object.
std::string property_verdict(Verdict v) {
  switch (v) {
    case Verdict::NotContained: return "pass";
    case Verdict::Contained: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

FieldElement hex_option(const Field& f, const std::string& name, const std::string& text) {
  std::uint32_t v = 0;
  try {
    v = parse_hex(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
  if (v >= f.order()) throw UsageError("--" + name + ": " + to_hex(v) + " outside GF(" + std::to_string(f.order()) + ")");
  return FieldElement{v};
}

int log2_order(std::uint32_t q) {
  if (q < 2 || (q & (q - 1)) != 0) throw UsageError("--q must be a power of 2, got " + std::to_string(q));
  return std::countr_zero(q);
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

struct Outcome {
  Json report;
  bool ok = true;
  std::optional<Table> table;
};

Json points_json(const std::vector<ProjPoint>& pts) {
  Json a = Json::array();
  for (const ProjPoint& p : pts) a.push_back(point_to_json(p));
  return a;
}

Json vec2_json(Vec2 v) { return Json::array({to_hex(v.a1), to_hex(v.a2)}); }

Json embedding_json(const Embedding& e) {
  return Json{{"vertex_points", points_json(e.vertex_points)}, {"factor_points", points_json(e.factor_points)}};
}

// Checks a minimum blocking set against its arc: every secant met exactly once,
// and the triangle collinearity property.
Json blocking_checks(const Arc& arc, const BlockingSet& b, bool& ok) {
  const bool blocks = is_blocking(arc, b.points) && b.points.size() + 1 == arc.size();
  Json j{{"blocks_all_secants", pass_fail(blocks)}};
  if (blocks) {
    const TriangleCheck t = triangle_collinearity(arc, b);
    j["triangle_collinearity"] = pass_fail(t.ok);
    j["triangles"] = t.triangles;
    if (t.witness) j["triangle_witness"] = Json::array({(*t.witness)[0], (*t.witness)[1], (*t.witness)[2]});
    ok = ok && t.ok;
  }
  ok = ok && blocks;
  return j;
}

// --- handlers ---------------------------------------------------------------

struct FieldOpts {
  int r = 0;
  std::string poly;
};

Outcome cmd_field(const FieldOpts& o) {
  std::optional<std::uint32_t> poly;
  if (!o.poly.empty()) {
    try {
      poly = parse_hex(o.poly);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
  }
  const Field f(field_make(o.r, poly));
  Outcome out;
  out.report["field"] = field_to_json(f.spec());
  out.report["order"] = f.order();
  out.report["generator"] = to_hex(f.generator());
  out.report["verdicts"] = Json{{"irreducible", "pass"}};
  return out;
}

struct ArcBuildOpts {
  std::string example;
  int r = 0;
  std::string h_basis = "0x1,0x2";
  int i = 1;
  std::string eta;
  std::string b;
};

std::vector<FieldElement> parse_basis(const Field& f, const std::string& text) {
  std::vector<FieldElement> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(hex_option(f, "h-basis", tok));
  if (out.empty()) throw UsageError("--h-basis: empty");
  return out;
}

Outcome cmd_arc_build(const ArcBuildOpts& o) {
  const Plane plane{Field(o.r)};
  const Field& f = plane.field();
  Outcome out;
  Json params;
  std::optional<Arc> arc;
  if (o.example == "n1") {
    const auto basis = parse_basis(f, o.h_basis);
    arc = example_n1(plane, basis);
    params["h_basis"] = Json::array();
    for (auto e : basis) params["h_basis"].push_back(to_hex(e));
  } else if (o.example == "n2") {
    const auto basis = parse_basis(f, o.h_basis);
    arc = example_n2(plane, basis, o.i);
    params["h_basis"] = Json::array();
    for (auto e : basis) params["h_basis"].push_back(to_hex(e));
    params["i"] = o.i;
  } else {
    if (o.eta.empty() != o.b.empty()) throw UsageError("--eta and --b go together");
    const auto cands = example_n3_candidates(plane);
    params["valid_candidates"] = cands.size();
    if (o.eta.empty()) {
      if (cands.empty()) {
        out.ok = false;
        out.report["example"] = o.example;
        out.report["params"] = params;
        out.report["verdicts"] = Json{{"arc", "fail"}};
        out.report["reason"] = "no (eta, b) puts the doubling point off every secant";
        return out;
      }
      arc = example_n3(plane, cands.front().eta, cands.front().b);
      params["eta"] = to_hex(cands.front().eta);
      params["b"] = to_hex(cands.front().b);
    } else {
      const FieldElement eta = hex_option(f, "eta", o.eta), b = hex_option(f, "b", o.b);
      arc = example_n3(plane, eta, b);
      params["eta"] = to_hex(eta);
      params["b"] = to_hex(b);
    }
  }
  const auto hl = hyperfocused_lines(*arc);
  const bool at_inf = std::find(hl.begin(), hl.end(), plane.line_at_infinity()) != hl.end();
  out.report["example"] = o.example;
  out.report["params"] = params;
  const Json a = arc_to_json(*arc);
  out.report["field"] = a["field"];
  out.report["points"] = a["points"];
  out.report["size"] = arc->size();
  out.report["hyperfocused_lines"] = Json::array();
  for (const auto& l : hl) out.report["hyperfocused_lines"].push_back(line_to_json(l));
  out.report["verdicts"] = Json{{"arc", "pass"}, {"hyperfocused_on_line_at_infinity", pass_fail(at_inf)}};
  out.ok = at_inf;
  return out;
}

Outcome cmd_arc_complete(int r, int s) {
  const CompletionReport rep = build_complete_translation_arc(r, s);
  Outcome out;
  out.report["r"] = rep.r;
  out.report["s"] = rep.s;
  Json base = Json::array();
  for (Vec2 v : rep.base.elements()) base.push_back(vec2_json(v));
  out.report["base"] = base;
  Json sup = Json::array();
  for (const Arc& a : rep.superarcs) sup.push_back(points_json(a.points()));
  out.report["superarcs"] = sup;
  Json chosen = Json::array();
  for (Vec2 v : rep.chosen) chosen.push_back(vec2_json(v));
  out.report["chosen"] = chosen;
  out.report["group_size"] = rep.group.size();
  if (rep.arc) {
    const Json a = arc_to_json(*rep.arc);
    out.report["field"] = a["field"];
    out.report["points"] = a["points"];
  } else {
    out.report["field"] = field_to_json(field_make(r));
    out.report["points"] = nullptr;
  }
  out.report["hyperoval"] = to_string(rep.hyperoval);
  out.report["subplane"] = to_string(rep.subplane);
  out.report["verdicts"] = Json{{"covers_affine", pass_fail(rep.covers_affine)},
                                {"not_in_hyperoval", property_verdict(rep.hyperoval)},
                                {"not_in_proper_subplane", property_verdict(rep.subplane)}};
  out.ok = rep.arc && rep.covers_affine && rep.hyperoval == Verdict::NotContained &&
           rep.subplane == Verdict::NotContained;
  return out;
}

Outcome cmd_arc_verify(const std::string& path) {
  Json j = read_json_file(path);
  PointSet ps;
  try {
    ps = points_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
  const Plane plane{Field(ps.field)};
  Outcome out;
  out.report["field"] = field_to_json(ps.field);
  out.report["points"] = points_json(ps.points);
  std::vector<ProjPoint> sorted = ps.points;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    out.ok = false;
    out.report["verdicts"] = Json{{"arc", "fail"}};
    out.report["witness"] = Json{{"duplicate", point_to_json(*dup)}};
    return out;
  }
  if (auto t = collinear_triple(plane, ps.points)) {
    out.ok = false;
    out.report["verdicts"] = Json{{"arc", "fail"}};
    out.report["witness"] = Json{{"collinear", Json::array({point_to_json(ps.points[(*t)[0]]),
                                                            point_to_json(ps.points[(*t)[1]]),
                                                            point_to_json(ps.points[(*t)[2]])})}};
    return out;
  }
  const Arc arc(plane, ps.points);
  out.report["size"] = arc.size();
  out.report["verdicts"] = Json{{"arc", "pass"}};
  if (arc.size() >= 3) {
    const auto hl = hyperfocused_lines(arc);
    Json lines = Json::array();
    for (const auto& l : hl) lines.push_back(line_to_json(l));
    out.report["properties"] = Json{{"hyperfocused", !hl.empty()}, {"hyperfocused_lines", lines}};
  }
  return out;
}

Outcome cmd_blocking_find(const std::string& path, bool all) {
  const Arc arc = load_arc(path);
  const Plane& plane = arc.plane();
  Outcome out;
  out.report["field"] = field_to_json(plane.field().spec());
  out.report["arc"] = points_json(arc.points());
  out.report["k"] = arc.size();
  const auto sets = min_blocking_sets(arc, all ? 0 : 1);
  Json arr = Json::array();
  bool ok = true;
  for (const BlockingSet& b : sets) {
    Json e = blocking_to_json(plane, b);
    e["checks"] = blocking_checks(arc, b, ok);
    arr.push_back(e);
  }
  out.report["complete"] = all;
  out.report["count"] = sets.size();
  out.report["blocking_sets"] = arr;
  out.report["verdicts"] = Json{{"minimum_blocking_set_exists", pass_fail(!sets.empty())},
                                {"checks", pass_fail(ok)}};
  out.ok = ok && !sets.empty();
  return out;
}

struct GhfOpts {
  std::uint32_t q = 0;
  std::string lambda, a1, a2;
};

Outcome cmd_ghf_build(const GhfOpts& o) {
  const Plane plane{Field(log2_order(o.q))};
  const Field& f = plane.field();
  Outcome out;
  const int given = !o.lambda.empty() + !o.a1.empty() + !o.a2.empty();
  if (given != 0 && given != 3) throw UsageError("--lambda, --a1 and --a2 go together");
  HomologyParams p;
  if (given == 0) {
    const auto all = otto_parameters(f);
    out.report["valid_parameters"] = all.size();
    if (all.empty()) {
      out.ok = false;
      out.report["field"] = field_to_json(f.spec());
      out.report["verdicts"] = Json{{"parameters", "fail"}};
      out.report["reason"] = "no (lambda, a1, a2) satisfies the homology conditions in this field";
      return out;
    }
    p = all.front();
  } else {
    p = HomologyParams{hex_option(f, "lambda", o.lambda), hex_option(f, "a1", o.a1), hex_option(f, "a2", o.a2)};
    if (!otto_parameters_valid(f, p)) {
      out.ok = false;
      out.report["field"] = field_to_json(f.spec());
      out.report["params"] = Json{{"lambda", to_hex(p.lambda)}, {"a1", to_hex(p.a1)}, {"a2", to_hex(p.a2)}};
      out.report["verdicts"] = Json{{"parameters", "fail"}};
      out.report["reason"] = "lambda must avoid {0,1} and a1, a2, a1+a2 must avoid {0, 1, lambda, lambda+1}";
      return out;
    }
  }
  const GhfResult g = example_otto(plane, p);
  const Json a = arc_to_json(g.arc);
  out.report["field"] = a["field"];
  out.report["params"] = Json{{"lambda", to_hex(p.lambda)}, {"a1", to_hex(p.a1)}, {"a2", to_hex(p.a2)}};
  out.report["homology"] = projectivity_to_json(plane.homology(p.lambda, p.a1, p.a2));
  out.report["points"] = a["points"];
  out.report["blocking"] = blocking_to_json(plane, g.blocking);
  bool ok = true;
  Json checks = blocking_checks(g.arc, g.blocking, ok);
  const bool nonlinear = !is_linear(plane, g.blocking.points);
  const bool fano = is_fano_subplane(plane, g.blocking.points);
  checks["secants"] = secants(g.arc).size();
  checks["non_linear"] = pass_fail(nonlinear);
  checks["fano_subplane"] = pass_fail(fano);
  out.report["verdicts"] = checks;
  out.ok = ok && nonlinear && fano;
  return out;
}

Outcome cmd_enumerate(int n, const std::string& catalog_out) {
  const auto classes = enumerate_factorizations(n);
  Outcome out;
  out.report["n"] = n;
  out.report["classes"] = classes.size();
  if (!catalog_out.empty()) {
    save_catalog(catalog_out, classes);
    out.report["catalog"] = catalog_out;
  } else {
    Json lines = Json::array();
    for (const auto& f : classes) lines.push_back(to_catalog_line(f));
    out.report["catalog"] = lines;
  }
  return out;
}

Outcome cmd_closure(const std::string& catalog) {
  const auto fs = load_catalog(catalog);
  Outcome out;
  Table t{{"index", "vertices", "contains_all", "depth", "family_size"}, {}};
  Json rows = Json::array();
  std::size_t forced = 0;
  int max_depth = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const ClosureResult c = closure(fs[i]);
    forced += c.contains_all;
    if (c.contains_all) max_depth = std::max(max_depth, c.depth);
    rows.push_back(Json{{"index", i},
                        {"vertices", fs[i].vertices()},
                        {"contains_all", c.contains_all},
                        {"depth", c.depth},
                        {"family_size", c.family.members.size()}});
    t.rows.push_back({std::to_string(i), std::to_string(fs[i].vertices()), c.contains_all ? "true" : "false",
                      std::to_string(c.depth), std::to_string(c.family.members.size())});
  }
  out.report["catalog"] = catalog;
  out.report["classes"] = fs.size();
  out.report["contains_all"] = forced;
  out.report["max_depth_when_contained"] = max_depth;
  out.report["results"] = rows;
  out.table = std::move(t);
  return out;
}

struct EmbedOpts {
  std::string catalog;
  std::uint32_t q = 0;
  std::size_t limit = 0;
  std::uint64_t budget = 0;
};

Outcome cmd_embed(const EmbedOpts& o) {
  const auto fs = load_catalog(o.catalog);
  const Plane plane{Field(log2_order(o.q))};
  Outcome out;
  Table t{{"index", "contains_all", "embeddings", "linear", "nonlinear", "exhaustive", "nodes"}, {}};
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const bool forced = closure(fs[i]).contains_all;
    const EmbedResult er = embed_search(fs[i], plane, o.limit, o.budget);
    std::size_t lin = 0;
    const Embedding* witness = nullptr;
    for (const Embedding& e : er.embeddings) {
      if (plane.all_collinear(e.factor_points)) {
        ++lin;
      } else if (!witness) {
        witness = &e;
      }
    }
    const std::size_t nonlin = er.embeddings.size() - lin;
    // A forced-linear class with a non-linear embedding contradicts the closure.
    if (forced && nonlin > 0) ok = false;
    Json row{{"index", i},       {"contains_all", forced}, {"embeddings", er.embeddings.size()},
             {"linear", lin},    {"nonlinear", nonlin},    {"exhaustive", er.exhaustive},
             {"nodes", er.nodes}};
    if (witness) row["nonlinear_witness"] = embedding_json(*witness);
    rows.push_back(row);
    t.rows.push_back({std::to_string(i), forced ? "true" : "false", std::to_string(er.embeddings.size()),
                      std::to_string(lin), std::to_string(nonlin), er.exhaustive ? "true" : "false",
                      std::to_string(er.nodes)});
  }
  out.report["catalog"] = o.catalog;
  out.report["field"] = field_to_json(plane.field().spec());
  out.report["results"] = rows;
  out.report["verdicts"] = Json{{"closure_consistent", pass_fail(ok)}};
  out.ok = ok;
  out.table = std::move(t);
  return out;
}

struct ClassifyOpts {
  std::uint32_t q = 0;
  int max_k = 10;
  std::uint64_t budget = 0;
};

Outcome cmd_classify(const ClassifyOpts& o, int threads) {
  const Plane plane{Field(log2_order(o.q))};
  const ClassificationReport rep = classify_ghf(plane, o.max_k, o.budget, threads);
  Outcome out;
  Table t{{"k", "class_index", "forced_linear", "closure_depth", "embeddings", "linear", "nonlinear", "exhaustive"},
          {}};
  Json rows = Json::array();
  for (const ClassVerdict& v : rep.classes) {
    rows.push_back(Json{{"k", 2 * v.n},
                        {"class_index", v.class_index},
                        {"forced_linear", v.forced_linear},
                        {"closure_depth", v.closure_depth},
                        {"embeddings", v.embeddings},
                        {"linear", v.linear_embeddings},
                        {"nonlinear", v.nonlinear_embeddings},
                        {"exhaustive", v.exhaustive}});
    t.rows.push_back({std::to_string(2 * v.n), std::to_string(v.class_index), v.forced_linear ? "true" : "false",
                      std::to_string(v.closure_depth), std::to_string(v.embeddings),
                      std::to_string(v.linear_embeddings), std::to_string(v.nonlinear_embeddings),
                      v.exhaustive ? "true" : "false"});
  }
  bool ok = true;
  Json nl = Json::array();
  for (const NonlinearClass& c : rep.nonlinear) {
    const Arc arc(plane, c.witness.vertex_points);
    BlockingSet b{c.witness.factor_points};
    std::sort(b.points.begin(), b.points.end());
    Json checks = blocking_checks(arc, b, ok);
    const bool nonlinear = !is_linear(plane, b.points);
    ok = ok && nonlinear;
    checks["non_linear"] = pass_fail(nonlinear);
    nl.push_back(Json{{"k", c.k},
                      {"class_index", c.class_index},
                      {"arc_form", points_json(c.arc_form)},
                      {"arc", arc_to_json(arc)},
                      {"blocking", blocking_to_json(plane, b)},
                      {"checks", checks}});
  }
  out.report["field"] = field_to_json(plane.field().spec());
  out.report["max_k"] = o.max_k;
  out.report["classes"] = rows;
  out.report["nonlinear_classes"] = nl;
  out.report["nonlinear_class_count"] = rep.nonlinear.size();
  out.report["verdicts"] = Json{{"witnesses", pass_fail(ok)}, {"exhaustive", rep.exhaustive ? "pass" : "inconclusive"}};
  out.ok = ok;
  out.table = std::move(t);
  return out;
}

// Argument echo without flags that must not influence output bytes.
Json command_echo(const std::vector<std::string>& args) {
  Json a = Json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& s = args[i];
    if (s == "--threads") {
      ++i;
      continue;
    }
    if (s.rfind("--threads=", 0) == 0 || s == "--timing") continue;
    a.push_back(s);
  }
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc and 1-factorization tools over GF(2^r)", "hfarc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timing = false;
  app.add_option("--out", out_path, "Write the report (or the catalog for `onefact enumerate`) to this file");
  app.add_option("--threads", threads, "Worker threads; never changes output")->check(CLI::Range(1, 256));
  app.add_option("--seed", seed, "Reserved; has no effect");
  app.add_option("--format", format, "Report format for tabular reports")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", timing, "Add wall-clock duration to the report");

  std::function<Outcome()> action;

  FieldOpts fo;
  auto* field = app.add_subcommand("field", "Describe GF(2^r)");
  field->add_option("--r", fo.r, "Extension degree")->required();
  field->add_option("--poly", fo.poly, "Reduction polynomial (hex)");
  field->callback([&] { action = [&] { return cmd_field(fo); }; });

  auto* arc = app.add_subcommand("arc", "Arc constructions and checks")->require_subcommand(1);
  arc->fallthrough();
  ArcBuildOpts ab;
  auto* build = arc->add_subcommand("build", "Build a named translation arc");
  build->add_option("--example", ab.example, "n1 | n2 | n3")->required()->check(CLI::IsMember({"n1", "n2", "n3"}));
  build->add_option("--r", ab.r, "Extension degree")->required();
  build->add_option("--h-basis", ab.h_basis, "Comma-separated hex basis of H (n1, n2)");
  build->add_option("--i", ab.i, "Frobenius exponent (n2)");
  build->add_option("--eta", ab.eta, "Doubling parameter eta (n3)");
  build->add_option("--b", ab.b, "Doubling parameter b (n3)");
  build->callback([&] { action = [&] { return cmd_arc_build(ab); }; });

  int cr = 0, cs = 0;
  auto* complete = arc->add_subcommand("complete", "Complete the translation arc over a subfield conic");
  complete->add_option("--r", cr, "Extension degree")->required();
  complete->add_option("--s", cs, "Subfield degree")->required();
  complete->callback([&] { action = [&] { return cmd_arc_complete(cr, cs); }; });

  std::string verify_in;
  auto* verify = arc->add_subcommand("verify", "Check an arc file");
  verify->add_option("--in", verify_in, "Arc JSON")->required();
  verify->callback([&] { action = [&] { return cmd_arc_verify(verify_in); }; });

  auto* blocking = app.add_subcommand("blocking", "Minimum blocking sets")->require_subcommand(1);
  blocking->fallthrough();
  std::string find_in;
  bool find_all = false;
  auto* find = blocking->add_subcommand("find", "Minimum blocking sets of the secants of an arc");
  find->add_option("--in", find_in, "Arc JSON")->required();
  find->add_flag("--all", find_all, "List every minimum blocking set");
  find->callback([&] { action = [&] { return cmd_blocking_find(find_in, find_all); }; });

  auto* ghf = app.add_subcommand("ghf", "Generalized hyperfocused constructions")->require_subcommand(1);
  ghf->fallthrough();
  GhfOpts go;
  auto* ghf_build = ghf->add_subcommand("build", "8-arc with a non-linear blocking set via a homology");
  ghf_build->add_option("--q", go.q, "Field order")->required();
  ghf_build->add_option("--lambda", go.lambda, "Homology ratio (hex)");
  ghf_build->add_option("--a1", go.a1, "Center coordinate (hex)");
  ghf_build->add_option("--a2", go.a2, "Center coordinate (hex)");
  ghf_build->callback([&] { action = [&] { return cmd_ghf_build(go); }; });

  auto* onefact = app.add_subcommand("onefact", "1-factorizations of complete graphs")->require_subcommand(1);
  onefact->fallthrough();
  int en = 0;
  auto* enumerate = onefact->add_subcommand("enumerate", "Isomorphism classes of 1-factorizations of K_2n");
  enumerate->add_option("--n", en, "Half the vertex count")->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(en, out_path); }; });

  std::string closure_catalog, report_format;
  auto* clos = onefact->add_subcommand("closure", "Triangle closure of every catalog entry");
  clos->add_option("--catalog", closure_catalog, "Catalog file")->required();
  clos->add_option("--report", report_format, "Same as --format")->check(CLI::IsMember({"json", "csv"}));
  clos->callback([&] { action = [&] { return cmd_closure(closure_catalog); }; });

  EmbedOpts eo;
  auto* embed = onefact->add_subcommand("embed", "Embed catalog entries as arcs with factor points");
  embed->add_option("--catalog", eo.catalog, "Catalog file")->required();
  embed->add_option("--q", eo.q, "Field order")->required();
  embed->add_option("--limit", eo.limit, "Stop after this many embeddings per class (0 = all)");
  embed->add_option("--budget", eo.budget, "Search node budget per class (0 = unbounded)");
  embed->callback([&] { action = [&] { return cmd_embed(eo); }; });

  ClassifyOpts co;
  auto* classify = app.add_subcommand("classify", "Classify generalized hyperfocused arcs up to size max-k");
  classify->add_option("--q", co.q, "Field order")->required();
  classify->add_option("--max-k", co.max_k, "Largest arc size")->required();
  classify->add_option("--budget", co.budget, "Embedding search node budget per class (0 = unbounded)");
  classify->callback([&] { action = [&] { return cmd_classify(co, threads); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }
  if (!report_format.empty()) format = report_format;

  const auto start = std::chrono::steady_clock::now();
  Outcome res;
  try {
    res = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {  // includes ContractError
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string text;
  if (format == "csv") {
    if (!res.table) {
      err << "error: --format csv applies only to tabular reports (closure, embed, classify)\n";
      return kExitUsage;
    }
    text = to_csv(*res.table);
  } else {
    Json report;
    report["command"] = command_echo(args);
    report["seed"] = seed;
    for (auto& [k, v] : res.report.items()) report[k] = v;
    report["ok"] = res.ok;
    if (timing) report["duration_ms"] = ms;
    text = report.dump(2) + "\n";
  }

  const bool catalog_owns_out = enumerate->parsed();
  try {
    if (!out_path.empty() && !catalog_owns_out) {
      write_text_file(out_path, text);
    } else {
      out << text;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!res.ok) err << "verification failed\n";
  return res.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace hfarc
