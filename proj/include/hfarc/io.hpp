#pragma once

// JSON encodings of fields, points, arcs and blocking sets, and the plain-text
// factorization catalog.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfarc/arcs.hpp"
#include "hfarc/blocking.hpp"
#include "hfarc/onefact.hpp"

namespace hfarc {

/// Malformed input. The message names the offending field or line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const Json& j);

Json point_to_json(const ProjPoint& p);
Json line_to_json(const ProjLine& l);
Json projectivity_to_json(const Projectivity& phi);

/// {"field": ..., "points": [...]}
Json arc_to_json(const Arc& arc);
/// As arc_to_json plus "linear".
Json blocking_to_json(const Plane& plane, const BlockingSet& b);

/// Field and raw point list; the points need not form an arc.
struct PointSet {
  FieldSpec field;
  std::vector<ProjPoint> points;
};

/// Reads "field" and "points" from j, ignoring other keys. Points must be
/// nonzero with coordinates in the field; they are normalized.
PointSet points_from_json(const Json& j);
/// Additionally requires an arc (InputError otherwise).
Arc arc_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Arc load_arc(const std::filesystem::path& path);
void save_arc(const std::filesystem::path& path, const Arc& arc);

/// One catalog line per factorization, newline terminated.
std::string catalog_text(const std::vector<OneFactorization>& fs);
/// Blank lines are skipped; errors carry the 1-based line number.
std::vector<OneFactorization> parse_catalog(const std::string& text);
std::vector<OneFactorization> load_catalog(const std::filesystem::path& path);
void save_catalog(const std::filesystem::path& path, const std::vector<OneFactorization>& fs);

}  // namespace hfarc
