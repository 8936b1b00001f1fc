#include "orbitwist/cli.hpp"

#include "orbitwist/class_algebra.hpp"
#include "orbitwist/gw_calculus.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace orbitwist {

using nlohmann::json;

namespace {

[[noreturn]] void usage_error(const std::string& message) {
  fail(ErrorKind::Parse, "cli_io.ParseError", message);
}

[[noreturn]] void flag_error(const std::string& flag, const std::string& reason) {
  fail(ErrorKind::Schema, "cli_io.SchemaError", flag + ": " + reason);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (text.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& flag, const std::string& text) {
  std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size() || text.size() > 18) flag_error(flag, "expected an integer, got \"" + text + "\"");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) flag_error(flag, "expected an integer, got \"" + text + "\"");
  return std::stoll(text);
}

std::int64_t parse_nonnegative(const std::string& flag, const std::string& text) {
  const auto v = parse_int(flag, text);
  if (v < 0) flag_error(flag, "expected a non-negative integer, got \"" + text + "\"");
  return v;
}

Rational parse_flag_rational(const std::string& flag, const std::string& text, std::vector<std::string>& warnings) {
  auto parsed = parse_rational(text);
  if (parsed.canonicalized)
    warnings.push_back(flag + ": rational \"" + text + "\" canonicalized to \"" + to_string(parsed.value) + "\"");
  return parsed.value;
}

json rational_json(const Rational& r) { return to_string(r); }

std::string cell(const json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    return {};
  } else {
    s = v.dump();
  }
  std::string escaped;
  for (char c : s) {
    if (c == '\t') escaped += "\\t";
    else if (c == '\n') escaped += "\\n";
    else escaped += c;
  }
  return escaped;
}

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

const GroupInput& need_group(const CommandRequest& r) {
  if (!r.group) usage_error(r.subcommand + " requires --group");
  return *r.group;
}

ClassIndex resolve_class(const std::string& token, const GroupInput& group, const ClassAlgebra& algebra) {
  const bool numeric = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (numeric) {
    if (token.size() > 9) flag_error("--classes", "class index \"" + token + "\" out of range");
    return static_cast<ClassIndex>(std::stoul(token));
  }
  const auto it = group.labels.find(token);
  if (it == group.labels.end()) flag_error("--classes", "unknown class label \"" + token + "\"");
  return algebra.classes().class_of[it->second];
}

SurfaceGroupSpec surface_spec(const CommandRequest& r, const GroupInput& group, const ClassAlgebra& algebra) {
  SurfaceGroupSpec spec;
  spec.genus = r.genus.value_or(0);
  for (const auto& token : r.classes) spec.punctures.push_back(ClassConstraint{resolve_class(token, group, algebra)});
  for (auto m : r.exact_orders) spec.punctures.push_back(ExactOrderConstraint{m});
  validate_spec(algebra, spec);
  return spec;
}

json class_list(const SurfaceGroupSpec& spec) {
  json out = json::array();
  for (const auto& p : spec.punctures) {
    if (const auto* c = std::get_if<ClassConstraint>(&p)) out.push_back({{"class", c->cls}});
    else out.push_back({{"exact_order", std::get<ExactOrderConstraint>(p).order}});
  }
  return out;
}

// --- subcommands -----------------------------------------------------------

ResultDocument run_group(const CommandRequest& r) {
  const auto& input = need_group(r);
  const ClassAlgebra algebra(input.group);
  const auto& g = algebra.group();
  const auto& t = algebra.classes();

  ResultDocument out;
  Table table{{"class", "size", "representative", "centralizer_order", "inverse_class", "element_order", "labels"}, {}};
  json classes = json::array();
  for (ClassIndex c = 0; c < t.size(); ++c) {
    json labels = json::array();
    for (const auto& [name, x] : input.labels)
      if (t.class_of[x] == c) labels.push_back(name);
    json entry = {{"index", c},
                  {"size", t.class_size(c)},
                  {"representative", t.representative(c)},
                  {"centralizer_order", t.centralizer_orders[c]},
                  {"inverse_class", t.inverse_class[c]},
                  {"element_order", element_order(g, t.representative(c))},
                  {"elements", t.classes[c]},
                  {"labels", labels}};
    table.rows.push_back({std::to_string(c), std::to_string(t.class_size(c)), std::to_string(t.representative(c)),
                          std::to_string(t.centralizer_orders[c]), std::to_string(t.inverse_class[c]),
                          std::to_string(element_order(g, t.representative(c))), cell(labels)});
    classes.push_back(std::move(entry));
  }
  out.json = {{"order", g.order()}, {"identity", g.identity()}, {"num_classes", t.size()}, {"classes", classes}};
  out.table = std::move(table);
  return out;
}

ResultDocument run_curve(const CommandRequest& r) {
  if (!r.curve) usage_error("curve requires --curve");
  const auto& curve = *r.curve;
  // A map to a point quotient is constant on every component.
  std::set<std::size_t> constant;
  for (std::size_t c = 0; c < curve.components().size(); ++c) constant.insert(c);
  const auto stability = check_stability(curve, constant);

  ResultDocument out;
  Table table{{"component", "genus", "markings", "canonical_degree", "special_points"}, {}};
  json components = json::array();
  for (std::size_t c = 0; c < curve.components().size(); ++c) {
    const auto& comp = curve.components()[c];
    components.push_back({{"genus", comp.genus},
                          {"markings", comp.markings},
                          {"canonical_degree", rational_json(canonical_degree(comp))},
                          {"special_points", curve.special_points(c)}});
    table.rows.push_back({std::to_string(c), std::to_string(comp.genus), join(comp.markings),
                          to_string(canonical_degree(comp)), std::to_string(curve.special_points(c))});
  }
  json nodes = json::array();
  for (const auto& n : curve.nodes())
    nodes.push_back({{"a", {n.branch_a.component, n.branch_a.slot}},
                     {"b", {n.branch_b.component, n.branch_b.slot}},
                     {"mult", n.multiplicity}});
  out.json = {{"components", components},
              {"nodes", nodes},
              {"arithmetic_genus", arithmetic_genus(curve)},
              {"stable_as_curve", stability.stable_as_curve},
              {"stable_as_map", stability.stable_as_map},
              {"offending", stability.offending}};
  out.table = std::move(table);
  return out;
}

ResultDocument run_bundle(const CommandRequest& r) {
  if (!r.curve && !r.rep) usage_error("bundle requires --curve (with optional --bundle) or --group with --rep");
  ResultDocument out;
  out.json = json::object();
  if (r.curve) {
    const auto& nodal = *r.curve;
    if (nodal.components().size() != 1 || !nodal.nodes().empty())
      fail(ErrorKind::Domain, "orbibundle.UnsupportedCurve", "bundle data needs a single smooth component");
    const auto& curve = nodal.components().front();
    const auto bundle = r.bundle ? *r.bundle : canonical_bundle_of(curve);
    out.json["canonical_bundle"] = !r.bundle.has_value();
    out.json["rank"] = bundle.rank;
    out.json["desing_degree"] = bundle.desing_degree;
    out.json["chern_number"] = rational_json(chern_number(bundle, curve));
    out.json["riemann_roch_index"] = integer_json(riemann_roch_index(bundle, curve));
    out.json["canonical_degree"] = rational_json(canonical_degree(curve));
  }
  if (r.rep) {
    const auto& input = need_group(r);
    const ClassAlgebra algebra(input.group);
    Table table{{"class", "representative", "iota"}, {}};
    json shifts = json::array();
    for (ClassIndex c = 0; c < algebra.num_classes(); ++c) {
      const auto x = algebra.classes().representative(c);
      json iota = nullptr;
      try {
        iota = rational_json(degree_shifting(*r.rep, algebra, c));
      } catch (const Error& e) {
        if (e.code() != "orbibundle.MissingRepData") throw;
      }
      table.rows.push_back({std::to_string(c), std::to_string(x), cell(iota)});
      shifts.push_back({{"class", c}, {"representative", x}, {"iota", iota}});
    }
    out.json["degree_shifting"] = shifts;
    out.json["rep_rank"] = r.rep->rank();
    if (!r.curve) out.table = std::move(table);
  }
  return out;
}

ResultDocument run_homs(const CommandRequest& r) {
  const auto& input = need_group(r);
  const ClassAlgebra algebra(input.group);
  const auto spec = surface_spec(r, input, algebra);
  ResultDocument out;

  if (r.action == "count") {
    const Integer count = count_homs_convolution(algebra, spec);
    constexpr std::uint64_t kOracleBudget = 10'000'000;
    bool checked = false;
    if (brute_force_work(algebra, spec) <= kOracleBudget) {
      const Integer brute = count_homs_brute(algebra, spec, {kOracleBudget, r.threads});
      if (brute != count)
        fail(ErrorKind::Internal, "homcount.OracleMismatch",
             "convolution count " + count.get_str() + " differs from brute force " + brute.get_str());
      checked = true;
    }
    out.json = {{"count", integer_json(count)}, {"method", "convolution"}, {"oracle_checked", checked}};
    if (r.chars) {
      const auto table = make_character_table(algebra, r.chars->column_elements, r.chars->rows);
      const auto frob = count_homs_frobenius(algebra, spec, &table);
      out.json["frobenius_count"] = integer_json(frob.count);
      out.json["frobenius_agrees"] = frob.count == count;
    }
    return out;
  }

  const auto e = enumerate_characteristics(algebra, spec, r.up_to_conj);
  Table table{{"index", "handles", "punctures"}, {}};
  if (r.up_to_conj) table.header.push_back("orbit_size");
  json list = json::array();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < e.characteristics.size(); ++i) {
    const auto& c = e.characteristics[i];
    json item = {{"handles", c.handle_images}, {"punctures", c.puncture_images}};
    std::vector<std::string> row{std::to_string(i), cell(json(c.handle_images)), cell(json(c.puncture_images))};
    if (r.up_to_conj) {
      item["orbit_size"] = e.orbit_sizes[i];
      row.push_back(std::to_string(e.orbit_sizes[i]));
      total += e.orbit_sizes[i];
    }
    list.push_back(std::move(item));
    table.rows.push_back(std::move(row));
  }
  out.json = {{"characteristics", list}, {"count", e.characteristics.size()}};
  if (r.up_to_conj) out.json["total"] = total;
  out.table = std::move(table);
  return out;
}

ResultDocument run_ring(const CommandRequest& r) {
  const auto& input = need_group(r);
  const ClassAlgebra algebra(input.group);
  ResultDocument out;

  if (r.action == "table") {
    const auto t = product_table(algebra);
    const auto sectors = sectors_and_pairing(algebra);
    json tensor = json::array();
    Table table{{"i", "j", "k", "a_ijk"}, {}};
    for (ClassIndex i = 0; i < t.size; ++i) {
      json plane = json::array();
      for (ClassIndex j = 0; j < t.size; ++j) {
        json row = json::array();
        for (ClassIndex k = 0; k < t.size; ++k) {
          row.push_back(integer_json(t(i, j, k)));
          table.rows.push_back({std::to_string(i), std::to_string(j), std::to_string(k), t(i, j, k).get_str()});
        }
        plane.push_back(std::move(row));
      }
      tensor.push_back(std::move(plane));
    }
    json pairing = json::array();
    for (ClassIndex a = 0; a < sectors.pairing.size; ++a) {
      json row = json::array();
      for (ClassIndex b = 0; b < sectors.pairing.size; ++b) row.push_back(sectors.pairing(a, b));
      pairing.push_back(std::move(row));
    }
    json sizes = json::array();
    for (ClassIndex c = 0; c < algebra.num_classes(); ++c) sizes.push_back(algebra.classes().class_size(c));
    out.json = {{"num_classes", t.size}, {"class_sizes", sizes}, {"structure_constants", tensor}, {"pairing", pairing}};
    out.table = std::move(table);
    return out;
  }

  if (r.action == "assoc") {
    const auto report = check_associativity(product_table(algebra));
    out.json = {{"associative", report.associative}};
    if (report.counterexample) out.json["counterexample"] = *report.counterexample;
    return out;
  }

  // split
  if (!r.exact_orders.empty()) flag_error("--exact-orders", "ring split takes class constraints only");
  const auto spec = surface_spec(r, input, algebra);
  SectorType sector;
  for (const auto& p : spec.punctures) sector.classes.push_back(std::get<ClassConstraint>(p).cls);
  const auto report = splitting_identities(algebra, spec.genus, sector, {kDefaultBruteBudget, r.threads});
  Table table{{"identity", "genus_left", "punctures_left", "left", "right", "holds"}, {}};
  json separating = json::array();
  for (const auto& s : report.separating) {
    separating.push_back({{"genus_left", s.genus_left},
                          {"punctures_left", s.punctures_left},
                          {"left", integer_json(s.left)},
                          {"right", rational_json(s.right)},
                          {"holds", s.holds()}});
    table.rows.push_back({"separating", std::to_string(s.genus_left), std::to_string(s.punctures_left), s.left.get_str(),
                          to_string(s.right), s.holds() ? "true" : "false"});
  }
  out.json = {{"genus", spec.genus}, {"classes", class_list(spec)}, {"separating", separating}, {"holds", report.holds()}};
  if (report.non_separating) {
    const auto& ns = *report.non_separating;
    out.json["non_separating"] = {{"left", integer_json(ns.left)}, {"right", integer_json(ns.right)}, {"holds", ns.holds()}};
    table.rows.push_back({"non_separating", "", "", ns.left.get_str(), ns.right.get_str(), ns.holds() ? "true" : "false"});
  } else {
    out.json["non_separating"] = nullptr;
  }
  out.table = std::move(table);
  return out;
}

DimensionInput dimension_input(const CommandRequest& r, std::optional<std::size_t> default_k) {
  DimensionInput in;
  in.chern_pairing = r.chern.value_or(Rational(0));
  in.complex_dim = r.n.value_or(0);
  in.genus = r.genus.value_or(0);
  if (r.k) in.num_marked = *r.k;
  else if (r.shifts) in.num_marked = static_cast<std::int64_t>(r.shifts->size());
  else in.num_marked = static_cast<std::int64_t>(default_k.value_or(0));
  in.shifts = r.shifts.value_or(std::vector<Rational>(static_cast<std::size_t>(std::max<std::int64_t>(in.num_marked, 0)), Rational(0)));
  return in;
}

ResultDocument run_dim(const CommandRequest& r) {
  const auto v = virtual_dimension(dimension_input(r, std::nullopt));
  ResultDocument out;
  out.json = {{"d", rational_json(v.d)}, {"two_d", rational_json(v.two_d)}};
  return out;
}

ResultDocument run_select(const CommandRequest& r) {
  if (!r.insertions) usage_error("select requires --insertions");
  SelectionInput sel{r.deg_k.value_or(0), *r.insertions};
  auto dim = dimension_input(r, r.insertions->size());
  const auto result = selection_rule(sel, dim);
  ResultDocument out;
  out.json = {{"selected", result.selected},
              {"insertion_degree", rational_json(result.insertion_degree)},
              {"expected_degree", rational_json(result.expected_degree)}};
  return out;
}

} // namespace

json integer_json(const Integer& z) {
  if (fits_int64(z)) return to_int64(z);
  return z.get_str();
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Schema: return 2;
    case ErrorKind::Budget: return 4;
    case ErrorKind::Domain:
    case ErrorKind::Internal: return 3;
  }
  return 3;
}

std::vector<Rational> parse_rational_list(const std::string& text, std::vector<std::string>& warnings) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_flag_rational("--shifts", item, warnings));
  return out;
}

std::vector<Insertion> parse_insertions(const std::string& text, std::vector<std::string>& warnings) {
  std::vector<Insertion> out;
  for (const auto& item : split(text, ',')) {
    const auto plus = item.find('+');
    if (plus == std::string::npos || plus == 0) flag_error("--insertions", "expected deg+l, got \"" + item + "\"");
    Insertion ins;
    ins.orbifold_degree = parse_flag_rational("--insertions", item.substr(0, plus), warnings);
    ins.descendant_power = parse_int("--insertions", item.substr(plus + 1));
    if (ins.descendant_power < 0) flag_error("--insertions", "descendant power must be non-negative");
    if (ins.orbifold_degree < 0) flag_error("--insertions", "orbifold degree must be non-negative");
    out.push_back(std::move(ins));
  }
  return out;
}

CommandRequest parse_inputs(const std::vector<std::string>& args) {
  CLI::App app{"Exact invariants of orbifold curves, bundles and point quotients", "orbitwist"};
  std::string subcommand, action, group_path, curve_path, bundle_path, rep_path, chars_path;
  std::string genus, classes, exact_orders, chern, n, k, shifts, deg_k, insertions, out_mode = "json", threads;
  bool up_to_conj = false;
  app.add_option("subcommand", subcommand, "group | curve | bundle | homs | ring | dim | select")->required();
  app.add_option("action", action, "homs: count | enum; ring: table | assoc | split");
  app.add_option("--group", group_path, "group file (JSON)");
  app.add_option("--curve", curve_path, "curve file (JSON)");
  app.add_option("--bundle", bundle_path, "bundle file (JSON)");
  app.add_option("--rep", rep_path, "representation file (JSON)");
  app.add_option("--chars", chars_path, "character table file (JSON)");
  app.add_option("--genus", genus, "genus");
  app.add_option("--classes", classes, "comma-separated class indices or labels");
  app.add_option("--exact-orders", exact_orders, "comma-separated exact puncture orders");
  app.add_flag("--up-to-conj", up_to_conj, "one representative per conjugation orbit");
  app.add_option("--chern", chern, "c1(TX).A as p/q");
  app.add_option("--n", n, "complex dimension of the target");
  app.add_option("--k", k, "number of marked points");
  app.add_option("--shifts", shifts, "comma-separated degree shifts p/q");
  app.add_option("--degK", deg_k, "degree of the class on the Deligne-Mumford space");
  app.add_option("--insertions", insertions, "comma-separated deg+l insertions");
  app.add_option("--out", out_mode, "json | tsv");
  app.add_option("--threads", threads, "worker threads for brute-force counting");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Error& e) {
    usage_error(std::string(e.get_name()) + ": " + e.what());
  }

  CommandRequest r;
  r.subcommand = subcommand;
  r.action = action;
  static const std::set<std::string> subcommands{"group", "curve", "bundle", "homs", "ring", "dim", "select"};
  if (!subcommands.contains(subcommand)) usage_error("unknown subcommand \"" + subcommand + "\"");
  if (subcommand == "homs") {
    if (action != "count" && action != "enum") usage_error("homs expects count or enum");
  } else if (subcommand == "ring") {
    if (action != "table" && action != "assoc" && action != "split") usage_error("ring expects table, assoc or split");
  } else if (!action.empty()) {
    usage_error(subcommand + " takes no action argument");
  }

  if (out_mode == "json") r.out = OutputMode::Json;
  else if (out_mode == "tsv") r.out = OutputMode::Tsv;
  else flag_error("--out", "expected json or tsv");

  if (!threads.empty()) {
    const auto t = parse_int("--threads", threads);
    if (t < 1 || t > 256) flag_error("--threads", "expected 1..256");
    r.threads = static_cast<unsigned>(t);
  }
  if (!genus.empty()) r.genus = static_cast<std::uint32_t>(parse_nonnegative("--genus", genus));
  r.classes = split(classes, ',');
  for (const auto& m : split(exact_orders, ',')) {
    const auto v = parse_int("--exact-orders", m);
    if (v < 1) flag_error("--exact-orders", "orders must be positive");
    r.exact_orders.push_back(static_cast<std::uint32_t>(v));
  }
  r.up_to_conj = up_to_conj;
  if (!chern.empty()) r.chern = parse_flag_rational("--chern", chern, r.warnings);
  if (!n.empty()) r.n = parse_nonnegative("--n", n);
  if (!k.empty()) r.k = parse_nonnegative("--k", k);
  if (!shifts.empty()) r.shifts = parse_rational_list(shifts, r.warnings);
  if (!deg_k.empty()) r.deg_k = parse_int("--degK", deg_k);
  if (!insertions.empty()) r.insertions = parse_insertions(insertions, r.warnings);

  if (!group_path.empty()) r.group = parse_group_json(load_json_file(group_path), group_path);
  if (!curve_path.empty()) r.curve = parse_curve_json(load_json_file(curve_path), curve_path);
  if (!bundle_path.empty()) r.bundle = parse_bundle_json(load_json_file(bundle_path), bundle_path);
  if (!rep_path.empty()) {
    if (!r.group) usage_error("--rep requires --group");
    r.rep = parse_rep_json(load_json_file(rep_path), *r.group->group, rep_path, r.warnings);
  }
  if (!chars_path.empty()) r.chars = parse_chars_json(load_json_file(chars_path), chars_path);
  return r;
}

ResultDocument run_command(const CommandRequest& r) {
  if (r.subcommand == "group") return run_group(r);
  if (r.subcommand == "curve") return run_curve(r);
  if (r.subcommand == "bundle") return run_bundle(r);
  if (r.subcommand == "homs") return run_homs(r);
  if (r.subcommand == "ring") return run_ring(r);
  if (r.subcommand == "dim") return run_dim(r);
  if (r.subcommand == "select") return run_select(r);
  usage_error("unknown subcommand \"" + r.subcommand + "\"");
}

std::string format_output(const ResultDocument& result, OutputMode mode) {
  if (mode == OutputMode::Json) return result.json.dump() + "\n";

  Table fallback;
  const Table* table = result.table ? &*result.table : nullptr;
  if (!table) {
    std::vector<std::string> row;
    for (const auto& [key, value] : result.json.items()) {
      fallback.header.push_back(key);
      row.push_back(cell(value));
    }
    fallback.rows.push_back(std::move(row));
    table = &fallback;
  }
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
    out += '\n';
  };
  emit(table->header);
  for (const auto& row : table->rows) emit(row);
  return out;
}

} // namespace orbitwist
