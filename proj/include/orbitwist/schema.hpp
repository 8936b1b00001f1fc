#pragma once

#include "orbitwist/group.hpp"
#include "orbitwist/orbibundle.hpp"
#include "orbitwist/orbicurve.hpp"
#include "orbitwist/rational.hpp"

#include <json.hpp>

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbitwist {

// JSON input schemas. Every loader takes the source name used in error
// messages. Malformed JSON raises cli_io.ParseError (ErrorKind::Parse);
// well-formed JSON that violates a schema raises cli_io.SchemaError.

nlohmann::json load_json_file(const std::string& path);

struct GroupInput {
  std::shared_ptr<const FiniteGroup> group;
  /// Optional names for classes, e.g. {"T": 1}: name -> representative element.
  std::map<std::string, Element> labels;
};

/// {"order": n, "table": [[...]]} or {"degree": d, "perm_generators": [[[1,2],[3,4]], ...]},
/// either with an optional "labels" object.
GroupInput parse_group_json(const nlohmann::json& doc, const std::string& source);

/// {"components": [{"genus": g, "markings": [m, ...]}, ...],
///  "nodes": [{"a": [c, s], "b": [c, s], "mult": n}, ...]}.
/// A node may give "mult_a" and "mult_b" instead of "mult". A bare
/// {"genus": g, "markings": [...]} is read as a single smooth component.
NodalOrbicurve parse_curve_json(const nlohmann::json& doc, const std::string& source);

/// {"rank": n, "desing_degree": d, "points": [{"mult": m, "exponents": [...]}, ...]}.
OrbiBundleData parse_bundle_json(const nlohmann::json& doc, const std::string& source);

/// {"elements": [{"index": i, "order": m, "exponents": ["p/q", ...]}, ...]} or
/// {"from_permutation_action": true}. Rationals that were not in canonical
/// form are reported through `warnings`.
LinearRepData parse_rep_json(const nlohmann::json& doc, const FiniteGroup& group, const std::string& source,
                             std::vector<std::string>& warnings);

struct CharacterInput {
  std::vector<Element> column_elements;
  std::vector<std::vector<std::complex<double>>> rows;
};

/// {"classes": [element, ...], "chars": [[[re, im], ...], ...]}. Each column
/// is identified by an element of its class; entries may also be plain reals.
CharacterInput parse_chars_json(const nlohmann::json& doc, const std::string& source);

} // namespace orbitwist
