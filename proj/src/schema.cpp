#include "orbitwist/schema.hpp"

#include "orbitwist/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace orbitwist {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& source, const std::string& field, const std::string& reason) {
  fail(ErrorKind::Schema, "cli_io.SchemaError", source + ": " + field + ": " + reason);
}

const json& require(const json& doc, const char* key, const std::string& source) {
  if (!doc.is_object()) schema_error(source, "<root>", "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(source, key, "missing field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_number_integer()) schema_error(source, field, "expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_count(const json& v, const std::string& source, const std::string& field) {
  const auto x = as_int(v, source, field);
  if (x < 0) schema_error(source, field, "expected a non-negative integer");
  return static_cast<std::uint64_t>(x);
}

const json& as_array(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_array()) schema_error(source, field, "expected an array");
  return v;
}

std::uint32_t as_u32(const json& v, const std::string& source, const std::string& field) {
  const auto x = as_count(v, source, field);
  if (x > std::numeric_limits<std::uint32_t>::max()) schema_error(source, field, "value too large");
  return static_cast<std::uint32_t>(x);
}

MarkedOrbicurve parse_component(const json& c, const std::string& source, const std::string& field) {
  const auto genus = as_int(require(c, "genus", source), source, field + ".genus");
  std::vector<std::int64_t> markings;
  if (c.contains("markings"))
    for (const auto& m : as_array(c["markings"], source, field + ".markings"))
      markings.push_back(as_int(m, source, field + ".markings"));
  return make_marked_orbicurve(genus, markings);
}

Slot parse_slot(const json& v, const std::string& source, const std::string& field) {
  if (!v.is_array() || v.size() != 2) schema_error(source, field, "expected [component, slot]");
  return Slot{as_count(v[0], source, field), as_count(v[1], source, field)};
}

} // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cli_io.ParseError", path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, "cli_io.ParseError",
         path + ": byte " + std::to_string(e.byte) + ": " + std::string(e.what()));
  }
}

GroupInput parse_group_json(const json& doc, const std::string& source) {
  if (!doc.is_object()) schema_error(source, "<root>", "expected an object");
  GroupInput out;
  if (doc.contains("table")) {
    const auto order = as_count(require(doc, "order", source), source, "order");
    const auto& rows = as_array(doc["table"], source, "table");
    if (rows.size() != order) schema_error(source, "table", "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<Element>> table;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != order)
        schema_error(source, "table", "expected rows of length " + std::to_string(order));
      std::vector<Element> values;
      for (const auto& v : row) {
        const auto x = as_count(v, source, "table");
        if (x >= order) schema_error(source, "table", "table entry out of range");
        values.push_back(static_cast<Element>(x));
      }
      table.push_back(std::move(values));
    }
    out.group = std::make_shared<const FiniteGroup>(build_group_from_table(order, table));
  } else if (doc.contains("perm_generators")) {
    const auto degree = as_u32(require(doc, "degree", source), source, "degree");
    std::vector<CycleNotation> gens;
    for (const auto& gen : as_array(doc["perm_generators"], source, "perm_generators")) {
      CycleNotation cycles;
      for (const auto& cycle : as_array(gen, source, "perm_generators")) {
        Cycle c;
        for (const auto& p : as_array(cycle, source, "perm_generators")) {
          const auto point = as_u32(p, source, "perm_generators");
          if (point < 1 || point > degree)
            schema_error(source, "perm_generators", "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
          c.push_back(point);
        }
        cycles.push_back(std::move(c));
      }
      gens.push_back(std::move(cycles));
    }
    out.group = std::make_shared<const FiniteGroup>(build_group_from_permutations(gens, degree));
  } else {
    schema_error(source, "table", "expected either \"table\" or \"perm_generators\"");
  }

  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_object()) schema_error(source, "labels", "expected an object");
    for (const auto& [name, value] : labels.items()) {
      const auto x = as_count(value, source, "labels." + name);
      if (x >= out.group->order()) schema_error(source, "labels." + name, "element out of range");
      out.labels.emplace(name, static_cast<Element>(x));
    }
  }
  return out;
}

NodalOrbicurve parse_curve_json(const json& doc, const std::string& source) {
  if (!doc.is_object()) schema_error(source, "<root>", "expected an object");
  std::vector<MarkedOrbicurve> components;
  if (doc.contains("components")) {
    const auto& list = as_array(doc["components"], source, "components");
    for (std::size_t i = 0; i < list.size(); ++i)
      components.push_back(parse_component(list[i], source, "components[" + std::to_string(i) + "]"));
  } else {
    components.push_back(parse_component(doc, source, "<root>"));
  }

  std::vector<NodeSpec> nodes;
  if (doc.contains("nodes")) {
    for (const auto& n : as_array(doc["nodes"], source, "nodes")) {
      NodeSpec spec;
      spec.branch_a = parse_slot(require(n, "a", source), source, "nodes.a");
      spec.branch_b = parse_slot(require(n, "b", source), source, "nodes.b");
      if (n.contains("mult")) {
        spec.multiplicity_a = spec.multiplicity_b = as_u32(n["mult"], source, "nodes.mult");
      } else {
        spec.multiplicity_a = as_u32(require(n, "mult_a", source), source, "nodes.mult_a");
        spec.multiplicity_b = as_u32(require(n, "mult_b", source), source, "nodes.mult_b");
      }
      nodes.push_back(spec);
    }
  }
  return make_nodal_orbicurve(std::move(components), nodes);
}

OrbiBundleData parse_bundle_json(const json& doc, const std::string& source) {
  const auto rank = as_u32(require(doc, "rank", source), source, "rank");
  const auto desing = as_int(require(doc, "desing_degree", source), source, "desing_degree");
  std::vector<LocalExponents> points;
  if (doc.contains("points")) {
    for (const auto& p : as_array(doc["points"], source, "points")) {
      LocalExponents local;
      local.multiplicity = as_u32(require(p, "mult", source), source, "points.mult");
      for (const auto& e : as_array(require(p, "exponents", source), source, "points.exponents"))
        local.exponents.push_back(as_int(e, source, "points.exponents"));
      points.push_back(std::move(local));
    }
  }
  return make_orbibundle(rank, desing, std::move(points));
}

LinearRepData parse_rep_json(const json& doc, const FiniteGroup& group, const std::string& source,
                             std::vector<std::string>& warnings) {
  if (!doc.is_object()) schema_error(source, "<root>", "expected an object");
  if (doc.value("from_permutation_action", false)) return rep_from_permutation_action(group);

  const auto& elements = as_array(require(doc, "elements", source), source, "elements");
  std::optional<std::uint32_t> rank;
  std::vector<std::pair<Element, ElementExponents>> entries;
  for (const auto& e : elements) {
    const auto index = as_count(require(e, "index", source), source, "elements.index");
    if (index >= group.order()) schema_error(source, "elements.index", "element out of range");
    ElementExponents data;
    data.order = as_u32(require(e, "order", source), source, "elements.order");
    for (const auto& t : as_array(require(e, "exponents", source), source, "elements.exponents")) {
      if (!t.is_string()) schema_error(source, "elements.exponents", "expected \"p/q\" strings");
      const auto text = t.get<std::string>();
      auto parsed = parse_rational(text);
      if (parsed.canonicalized)
        warnings.push_back(source + ": rational \"" + text + "\" canonicalized to \"" + to_string(parsed.value) + "\"");
      data.angles.push_back(std::move(parsed.value));
    }
    if (rank && *rank != data.angles.size())
      schema_error(source, "elements.exponents", "all elements must list the same number of exponents");
    rank = static_cast<std::uint32_t>(data.angles.size());
    entries.emplace_back(static_cast<Element>(index), std::move(data));
  }
  if (!rank) schema_error(source, "elements", "no elements given");
  LinearRepData rep(*rank, group.order());
  for (auto& [x, data] : entries) rep.set(x, std::move(data));
  validate_rep(rep, group);
  return rep;
}

CharacterInput parse_chars_json(const json& doc, const std::string& source) {
  CharacterInput out;
  for (const auto& c : as_array(require(doc, "classes", source), source, "classes"))
    out.column_elements.push_back(static_cast<Element>(as_u32(c, source, "classes")));
  for (const auto& row : as_array(require(doc, "chars", source), source, "chars")) {
    std::vector<std::complex<double>> values;
    for (const auto& v : as_array(row, source, "chars")) {
      if (v.is_number()) {
        values.emplace_back(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        values.emplace_back(v[0].get<double>(), v[1].get<double>());
      } else {
        schema_error(source, "chars", "expected [re, im] pairs or reals");
      }
    }
    out.rows.push_back(std::move(values));
  }
  return out;
}

} // namespace orbitwist
