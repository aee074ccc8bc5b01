#include "hfarc/io.hpp"

#include <fstream>
#include <sstream>

namespace hfarc {

Json field_to_json(const FieldSpec& spec) { return Json{{"r", spec.r}, {"poly", to_hex(spec.poly)}}; }

FieldSpec field_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("field: expected an object");
  if (!j.contains("r") || !j["r"].is_number_integer()) throw InputError("field.r: expected an integer");
  const int r = j["r"].get<int>();
  std::optional<std::uint32_t> poly;
  if (j.contains("poly")) {
    if (!j["poly"].is_string()) throw InputError("field.poly: expected a hex string");
    try {
      poly = parse_hex(j["poly"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("field.poly: ") + e.what());
    }
  }
  try {
    return field_make(r, poly);
  } catch (const ContractError& e) {
    throw InputError(std::string("field: ") + e.what());
  }
}

Json point_to_json(const ProjPoint& p) { return Json::array({to_hex(p.c[0]), to_hex(p.c[1]), to_hex(p.c[2])}); }

Json line_to_json(const ProjLine& l) {
  return Json{{"line", Json::array({to_hex(l.c[0]), to_hex(l.c[1]), to_hex(l.c[2])})}};
}

Json projectivity_to_json(const Projectivity& phi) {
  Json a = Json::array();
  for (const FieldElement& e : phi.m) a.push_back(to_hex(e));
  return a;
}

Json arc_to_json(const Arc& arc) {
  Json pts = Json::array();
  for (const ProjPoint& p : arc.points()) pts.push_back(point_to_json(p));
  return Json{{"field", field_to_json(arc.plane().field().spec())}, {"points", pts}};
}

Json blocking_to_json(const Plane& plane, const BlockingSet& b) {
  Json pts = Json::array();
  for (const ProjPoint& p : b.points) pts.push_back(point_to_json(p));
  return Json{{"field", field_to_json(plane.field().spec())}, {"points", pts}, {"linear", is_linear(plane, b.points)}};
}

PointSet points_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object with \"field\" and \"points\"");
  if (!j.contains("field")) throw InputError("missing \"field\"");
  if (!j.contains("points") || !j["points"].is_array()) throw InputError("points: expected an array");
  PointSet out{field_from_json(j["field"]), {}};
  const Plane plane{Field(out.field)};
  const auto& pts = j["points"];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 3) throw InputError(where + ": expected 3 coordinates");
    std::array<std::uint32_t, 3> c{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string w = where + "[" + std::to_string(k) + "]";
      if (!pts[i][k].is_string()) throw InputError(w + ": expected a hex string");
      try {
        c[k] = parse_hex(pts[i][k].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw InputError(w + ": " + e.what());
      }
      if (c[k] >= plane.q()) throw InputError(w + ": " + to_hex(c[k]) + " outside GF(" + std::to_string(plane.q()) + ")");
    }
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw InputError(where + ": zero vector is not a point");
    out.points.push_back(plane.point(c[0], c[1], c[2]));
  }
  return out;
}

Arc arc_from_json(const Json& j) {
  PointSet ps = points_from_json(j);
  try {
    return Arc(Plane{Field(ps.field)}, std::move(ps.points));
  } catch (const ContractError& e) {
    throw InputError(std::string("points: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

Arc load_arc(const std::filesystem::path& path) {
  try {
    return arc_from_json(read_json_file(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + msg);
  }
}

void save_arc(const std::filesystem::path& path, const Arc& arc) {
  write_text_file(path, arc_to_json(arc).dump(2) + "\n");
}

std::string catalog_text(const std::vector<OneFactorization>& fs) {
  std::string out;
  for (const auto& f : fs) out += to_catalog_line(f) + "\n";
  return out;
}

std::vector<OneFactorization> parse_catalog(const std::string& text) {
  std::vector<OneFactorization> out;
  std::istringstream in(text);
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(parse_catalog_line(line));
    } catch (const std::invalid_argument& e) {
      throw InputError("line " + std::to_string(no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<OneFactorization> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_catalog(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void save_catalog(const std::filesystem::path& path, const std::vector<OneFactorization>& fs) {
  write_text_file(path, catalog_text(fs));
}

}  // namespace hfarc
