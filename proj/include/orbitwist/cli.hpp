#pragma once

#include "orbitwist/error.hpp"
#include "orbitwist/gw_calculus.hpp"
#include "orbitwist/homcount.hpp"
#include "orbitwist/orbibundle.hpp"
#include "orbitwist/orbicurve.hpp"
#include "orbitwist/schema.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbitwist {

enum class OutputMode { Json, Tsv };

/// A fully validated command line. All referenced files have been read and
/// checked against their schemas by the time one of these exists.
struct CommandRequest {
  std::string subcommand;  // group | curve | bundle | homs | ring | dim | select
  std::string action;      // homs: count | enum; ring: table | assoc | split

  std::optional<GroupInput> group;
  std::optional<NodalOrbicurve> curve;
  std::optional<OrbiBundleData> bundle;
  std::optional<LinearRepData> rep;
  std::optional<CharacterInput> chars;

  std::optional<std::uint32_t> genus;
  std::vector<std::string> classes;      // raw tokens, resolved against the group
  std::vector<std::uint32_t> exact_orders;
  bool up_to_conj = false;
  std::optional<Rational> chern;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  std::optional<std::vector<Rational>> shifts;
  std::optional<std::int64_t> deg_k;
  std::optional<std::vector<Insertion>> insertions;
  OutputMode out = OutputMode::Json;
  unsigned threads = 1;

  /// Non-fatal notes such as canonicalized rationals.
  std::vector<std::string> warnings;
};

/// Parses argv-style arguments (without the program name). Errors are
/// cli_io.ParseError / cli_io.SchemaError, or a domain error raised while
/// validating an input file (e.g. group_core.NotAGroup).
CommandRequest parse_inputs(const std::vector<std::string>& args);

/// Parses a --shifts style list "p/q,p/q,...", recording canonicalization
/// warnings.
std::vector<Rational> parse_rational_list(const std::string& text, std::vector<std::string>& warnings);

/// Parses "deg+l,deg+l,..." insertion specs.
std::vector<Insertion> parse_insertions(const std::string& text, std::vector<std::string>& warnings);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ResultDocument {
  nlohmann::json json;
  /// Row view used for TSV output; when absent, TSV shows the top-level keys
  /// as a single row.
  std::optional<Table> table;
};

ResultDocument run_command(const CommandRequest& request);

/// JSON: sorted keys, compact, newline-terminated. TSV: header plus rows,
/// LF line endings.
std::string format_output(const ResultDocument& result, OutputMode mode);

/// Renders an exact integer as a JSON number when it fits in 64 bits and as
/// a decimal string otherwise.
nlohmann::json integer_json(const Integer& z);

/// Process exit code for an error kind: 2 parse/schema, 3 domain, 4 budget.
int exit_code_for(ErrorKind kind);

} // namespace orbitwist
