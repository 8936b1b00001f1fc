#include "orbitwist/cli.hpp"
#include "orbitwist/error.hpp"

#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr const char* kUsage = R"(usage: orbitwist <subcommand> [action] [options]

subcommands:
  group   --group FILE                          conjugacy classes and centralizers
  curve   --curve FILE                          canonical degrees, arithmetic genus, stability
  bundle  --curve FILE [--bundle FILE]          Chern number and Riemann-Roch index
          --group FILE --rep FILE               degree-shifting numbers per class
  homs    count|enum --group FILE [--genus N] [--classes a,b] [--exact-orders m,..]
          [--chars FILE] [--up-to-conj]         homomorphism counts and characteristics
  ring    table|assoc|split --group FILE [--genus N] [--classes a,b]
  dim     --chern p/q --n N --genus N --k N --shifts p/q,...
  select  --degK N --insertions deg+l,... [--chern p/q --n N --genus N --k N]

common options:
  --out json|tsv      output format (default json)
  --threads N         worker threads for brute-force counting (default 1)

exit codes: 0 success, 2 parse/schema error, 3 domain error, 4 budget exceeded
)";

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      std::cout << kUsage;
      return 0;
    }
  }
  try {
    const auto request = orbitwist::parse_inputs(args);
    for (const auto& w : request.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << orbitwist::format_output(orbitwist::run_command(request), request.out);
    return 0;
  } catch (const orbitwist::Error& e) {
    nlohmann::json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return orbitwist::exit_code_for(e.kind());
  }
}
