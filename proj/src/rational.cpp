#include "orbitwist/rational.hpp"

#include "orbitwist/error.hpp"

#include <cctype>
#include <limits>

namespace orbitwist {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

} // namespace

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

ParsedRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text))
    fail(ErrorKind::Parse, "cli_io.ParseError", "malformed rational \"" + std::string(text) + "\"");

  ParsedRational out;
  if (slash == std::string_view::npos) {
    out.value = Rational(parse_integer(num_text));
    return out;
  }

  const auto den_text = text.substr(slash + 1);
  if (!is_integer_text(den_text))
    fail(ErrorKind::Parse, "cli_io.ParseError", "malformed rational \"" + std::string(text) + "\"");
  Integer num = parse_integer(num_text);
  Integer den = parse_integer(den_text);
  if (den == 0)
    fail(ErrorKind::Parse, "cli_io.ParseError", "zero denominator in \"" + std::string(text) + "\"");

  out.value = Rational(num, den);
  out.value.canonicalize();
  out.canonicalized = out.value.get_num() != num || out.value.get_den() != den;
  return out;
}

Integer to_integer(const Rational& r) {
  if (r.get_den() != 1)
    fail(ErrorKind::Domain, "core.NotAnInteger", to_string(r) + " is not an integer");
  return r.get_num();
}

bool fits_int64(const Integer& z) {
  return z >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
         z <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z))
    fail(ErrorKind::Domain, "core.Overflow", z.get_str() + " does not fit in 64 bits");
  return std::stoll(z.get_str());
}

} // namespace orbitwist
