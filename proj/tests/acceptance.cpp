// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. `--regenerate-goldens` rewrites the CLI
// golden outputs instead of comparing against them.

#include "fixtures.hpp"

#include "orbitwist/error.hpp"
#include "orbitwist/gw_calculus.hpp"
#include "orbitwist/orbibundle.hpp"
#include "orbitwist/orbicurve.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace orbitwist;
using fixtures::ElementFunction;

namespace {

const std::string kCli = ORBITWIST_CLI;
const std::string kData = ORBITWIST_DATA;
const std::string kGolden = ORBITWIST_GOLDEN;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first few failure messages of a criterion.
struct Failures {
  std::size_t count = 0;
  std::ostringstream first;

  void add(const std::string& what) {
    if (count++ < 3) first << (count > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count == 0) return {true, ok_detail};
    return {false, std::to_string(count) + " failures: " + first.str()};
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

std::vector<std::shared_ptr<const FiniteGroup>> fixture_groups() {
  std::vector<std::shared_ptr<const FiniteGroup>> out;
  for (const auto& f : fixtures::fixture_set()) out.push_back(fixtures::make(f));
  return out;
}

std::string tuple_text(const std::string& group, std::uint32_t g, const std::vector<ClassIndex>& cls) {
  std::string s = group + " g=" + std::to_string(g) + " (";
  for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
  return s + ")";
}

// --- element-level oracles -------------------------------------------------

ElementFunction commutator_tally(const FiniteGroup& g) {
  ElementFunction t(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element ab = g.multiply(a, b);
      const Element ainv_binv = g.multiply(g.inverse(a), g.inverse(b));
      ++t[g.multiply(ab, ainv_binv)];
    }
  return t;
}

/// F_{g,k} = T^{*g} * 1_{C_1} * ... * 1_{C_k} on elements.
ElementFunction surface_function(const FiniteGroup& g, const ElementFunction& t, const ConjugacyClassTable& classes,
                                 std::uint32_t genus, const std::vector<ClassIndex>& cls) {
  ElementFunction f(g.order(), 0);
  f[g.identity()] = 1;
  for (std::uint32_t i = 0; i < genus; ++i) f = fixtures::brute_convolve(g, f, t);
  for (auto c : cls) f = fixtures::brute_convolve(g, f, fixtures::indicator_of(g, classes.classes[c]));
  return f;
}

// --- criteria --------------------------------------------------------------

Outcome criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Failures failures;
  std::size_t cases = 0;
  for (const auto& f : fixtures::fixture_set()) {
    ClassAlgebra a(fixtures::make(f));
    for (std::uint32_t genus = 0; genus <= 2; ++genus)
      for (const auto& cls : fixtures::class_tuples(a.num_classes(), 3)) {
        const auto spec = fixtures::spec_of(genus, cls);
        const auto brute = count_homs_brute(a, spec);
        const auto conv = count_homs_convolution(a, spec);
        ++cases;
        if (brute != conv)
          failures.add(tuple_text(f.name, genus, cls) + ": brute " + brute.get_str() + " vs convolution " + conv.get_str());
      }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60) failures.add("runtime " + fixed(elapsed, 1) + " s exceeds 60 s");
  return failures.outcome(std::to_string(cases) + " specs over 9 groups, " + fixed(elapsed, 2) + " s");
}

Outcome criterion_frobenius() {
  Failures failures;
  double worst = 0;
  std::size_t cases = 0;
  std::vector<std::pair<std::string, fixtures::CharTable (*)(const FiniteGroup&)>> tables = {
      {"Z2", fixtures::cyclic_chars}, {"Z3", fixtures::cyclic_chars}, {"Z4", fixtures::cyclic_chars},
      {"S3", fixtures::s3_chars},     {"S4", fixtures::s4_chars}};
  for (const auto& [name, make_chars] : tables) {
    ClassAlgebra a(fixtures::by_name(name));
    const auto chars = make_chars(a.group());
    const auto table = make_character_table(a, chars.columns, chars.rows);
    for (std::uint32_t genus = 0; genus <= 2; ++genus)
      for (const auto& cls : fixtures::class_tuples(a.num_classes(), 3)) {
        const auto spec = fixtures::spec_of(genus, cls);
        const auto frob = count_homs_frobenius(a, spec, &table);
        const auto exact = count_homs_convolution(a, spec);
        worst = std::max(worst, frob.deviation);
        ++cases;
        if (frob.count != exact || !(frob.deviation < 1e-6))
          failures.add(tuple_text(name, genus, cls) + ": frobenius " + frob.count.get_str() + " vs " + exact.get_str());
      }
  }

  ClassAlgebra s3(fixtures::by_name("S3"));
  const auto chars = fixtures::s3_chars(s3.group());
  const auto table = make_character_table(s3, chars.columns, chars.rows);
  const auto t = fixtures::class_with_cycle_type(s3, {2, 1});
  const auto r = fixtures::class_with_cycle_type(s3, {3});
  const std::vector<std::tuple<std::uint32_t, std::vector<ClassIndex>, long>> documented = {
      {0, {t, t, r}, 6}, {0, {t, t, t}, 0}, {1, {}, 18}};
  for (const auto& [genus, cls, expected] : documented) {
    const auto frob = count_homs_frobenius(s3, fixtures::spec_of(genus, cls), &table);
    if (frob.count != expected) failures.add("S3 documented value " + std::to_string(expected) + " got " + frob.count.get_str());
  }
  return failures.outcome(std::to_string(cases) + " specs, S3 values 6, 0, 18 reproduced, max |error| " +
                          [&] { std::ostringstream s; s << worst; return s.str(); }());
}

Outcome criterion_splitting() {
  Failures failures;
  std::size_t separating = 0, handle = 0;
  for (const auto& f : fixtures::fixture_set()) {
    ClassAlgebra a(fixtures::make(f));
    const auto& g = a.group();
    const auto& classes = a.classes();
    const auto pairing = sectors_and_pairing(a).pairing;

    // Handle identity against a direct commutator tally.
    const auto tally = commutator_tally(g);
    const auto kernel = handle_kernel_from_classes(a);
    const auto library_tally = commutator_kernel(a);
    for (Element x = 0; x < g.order(); ++x)
      if (a.value_at(kernel, x) != Rational(static_cast<long>(tally[x])) || library_tally != kernel)
        failures.add(f.name + ": handle kernel differs at element " + std::to_string(x));

    for (std::uint32_t genus = 0; genus <= 2; ++genus)
      for (const auto& cls : fixtures::class_tuples(a.num_classes(), 3)) {
        const auto total = count_homs_convolution(a, fixtures::spec_of(genus, cls));
        // Separating: F_{g,k}(e) = sum_x F_{g1,k1}(x) F_{g2,k2}(x^-1).
        for (std::uint32_t g1 = 0; g1 <= genus; ++g1)
          for (std::size_t k1 = 0; k1 <= cls.size(); ++k1) {
            const std::vector<ClassIndex> left(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(k1));
            const std::vector<ClassIndex> right(cls.begin() + static_cast<std::ptrdiff_t>(k1), cls.end());
            const auto f1 = surface_function(g, tally, classes, g1, left);
            const auto f2 = surface_function(g, tally, classes, genus - g1, right);
            long long sum = 0;
            for (Element x = 0; x < g.order(); ++x) sum += f1[x] * f2[g.inverse(x)];
            ++separating;
            if (Integer(static_cast<long>(sum)) != total)
              failures.add(tuple_text(f.name, genus, cls) + ": separating split g1=" + std::to_string(g1) +
                           " k1=" + std::to_string(k1));
          }
        // Non-separating: N_g = sum_C eta(C, I(C)) N_{g-1}(.., C, I(C)).
        if (genus >= 1) {
          Integer sum = 0;
          for (ClassIndex c = 0; c < classes.size(); ++c) {
            auto lower = cls;
            lower.push_back(c);
            lower.push_back(classes.inverse_class[c]);
            const auto fl = surface_function(g, tally, classes, genus - 1, lower);
            sum += Integer(static_cast<unsigned long>(pairing(c, classes.inverse_class[c]))) *
                   Integer(static_cast<long>(fl[g.identity()]));
          }
          ++handle;
          if (sum != total) failures.add(tuple_text(f.name, genus, cls) + ": non-separating identity");
        }
      }

    // The library's fully brute-force report on the cheaper range.
    for (std::uint32_t genus = 0; genus <= 1; ++genus)
      for (const auto& cls : fixtures::class_tuples(a.num_classes(), 2))
        if (!splitting_identities(a, genus, {cls}).holds())
          failures.add(tuple_text(f.name, genus, cls) + ": splitting_identities report fails");
  }

  // Worked instance: S3, g = 1, puncture R. 18 = |C(T)| N0(R,T,T) + |C(R)| N0(R,R,R) = 2*6 + 3*2.
  ClassAlgebra s3(fixtures::by_name("S3"));
  const auto t = fixtures::class_with_cycle_type(s3, {2, 1});
  const auto r = fixtures::class_with_cycle_type(s3, {3});
  const auto& cls = s3.classes();
  const Integer term_t = Integer(static_cast<unsigned long>(cls.centralizer_orders[t])) *
                      count_homs_brute(s3, fixtures::spec_of(0, {r, t, t}));
  const Integer term_r = Integer(static_cast<unsigned long>(cls.centralizer_orders[r])) *
                      count_homs_brute(s3, fixtures::spec_of(0, {r, r, r}));
  const auto report = splitting_identities(s3, 1, {{r}});
  if (term_t != 12 || term_r != 6 || !report.non_separating || report.non_separating->left != 18 ||
      report.non_separating->right != 18)
    failures.add("S3 worked instance 18 = 2*6 + 3*2 not reproduced");

  return failures.outcome(std::to_string(separating) + " separating and " + std::to_string(handle) +
                          " non-separating checks, handle kernel on 9 groups, S3 18 = 2*6 + 3*2");
}

Outcome criterion_associativity() {
  const auto start = std::chrono::steady_clock::now();
  Failures failures;
  auto groups = fixture_groups();
  groups.push_back(std::make_shared<const FiniteGroup>(build_group_from_table(1, {{0}})));
  for (const auto& g : groups) {
    const auto report = check_associativity(product_table(ClassAlgebra(g)));
    if (!report.associative) failures.add("order " + std::to_string(g->order()) + " group not associative");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10) failures.add("runtime " + fixed(elapsed, 1) + " s exceeds 10 s");
  return failures.outcome("9 fixture groups plus the trivial group, " + fixed(elapsed, 3) + " s");
}

/// 2g - 2 + sum (1 - 1/m) as "p/q", using a common denominator lcm(m_i).
std::string lcm_canonical_degree(std::int64_t g, const std::vector<std::int64_t>& m) {
  std::int64_t l = 1;
  for (auto x : m) l = std::lcm(l, x);
  std::int64_t num = (2 * g - 2) * l;
  for (auto x : m) num += l - l / x;
  const std::int64_t d = std::gcd(num, l);
  return std::to_string(num / d) + "/" + std::to_string(l / d);
}

Outcome criterion_chern_index() {
  Failures failures;
  std::mt19937_64 rng(20240601);

  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> grid = {{0, {3}}, {0, {2, 3, 7}}, {1, {}}, {0, {2, 2, 2, 2}}};
  while (grid.size() < 50) {
    std::vector<std::int64_t> m(rng() % 5);
    for (auto& x : m) x = 1 + static_cast<std::int64_t>(rng() % 12);
    grid.emplace_back(static_cast<std::int64_t>(rng() % 4), m);
  }
  for (const auto& [g, m] : grid) {
    const auto curve = make_marked_orbicurve(g, m);
    const auto value = to_string(canonical_degree(curve));
    if (value != lcm_canonical_degree(g, m)) failures.add("canonical degree " + value + " vs " + lcm_canonical_degree(g, m));
    if (chern_number(canonical_bundle_of(curve), curve) != canonical_degree(curve)) failures.add("K_Sigma mismatch");
  }
  if (to_string(canonical_degree(make_marked_orbicurve(0, {3}))) != "-4/3") failures.add("teardrop is not -4/3");
  if (to_string(canonical_degree(make_marked_orbicurve(0, {2, 3, 7}))) != "1/42") failures.add("(2,3,7) is not 1/42");

  // Elliptic involution: c1(K_T2) / 2 against the (2,2,2,2) quotient orbicurve.
  const auto torus = make_marked_orbicurve(1, {});
  const auto upstairs = to_integer(chern_number(canonical_bundle_of(torus), torus));
  const auto downstairs = quotient_chern_number(to_int64(upstairs), 2);
  const auto pillowcase = canonical_degree(make_marked_orbicurve(0, {2, 2, 2, 2}));
  if (downstairs != 0 || pillowcase != 0) failures.add("elliptic involution check is not 0 = 0");

  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = static_cast<std::int64_t>(rng() % 4);
    const auto rank = static_cast<std::uint32_t>(1 + rng() % 3);
    const auto desing = static_cast<std::int64_t>(rng() % 21) - 10;
    std::vector<std::int64_t> m(rng() % 5);
    std::vector<LocalExponents> points;
    // Exponent sum as an integer over the common denominator.
    std::int64_t l = 1;
    for (auto& x : m) {
      x = 1 + static_cast<std::int64_t>(rng() % 12);
      l = std::lcm(l, x);
    }
    std::int64_t exp_num = 0;
    for (auto x : m) {
      LocalExponents p{static_cast<std::uint32_t>(x), {}};
      for (std::uint32_t j = 0; j < rank; ++j) {
        p.exponents.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(x)));
        exp_num += p.exponents.back() * (l / x);
      }
      points.push_back(p);
    }
    const auto curve = make_marked_orbicurve(g, m);
    const auto bundle = make_orbibundle(rank, desing, points);
    const auto c1 = chern_number(bundle, curve);
    const auto index = riemann_roch_index(bundle, curve);
    const std::int64_t euler = 2 * static_cast<std::int64_t>(rank) * (1 - g);
    // 2 c1(E) - 2 sum e/m + 2n(1-g), with everything scaled by l.
    const Rational scaled_c1 = c1 * l;
    const bool c1_ok = scaled_c1 == Rational(desing * l + exp_num);
    const bool route_ok = 2 * scaled_c1 - 2 * exp_num + euler * l == Rational((2 * desing + euler) * l);
    if (!c1_ok) failures.add("c1 mismatch on trial " + std::to_string(trial));
    if (!route_ok) failures.add("index expressions differ on trial " + std::to_string(trial));
    if (index != 2 * desing + euler) failures.add("index value on trial " + std::to_string(trial));
    if (index % 2 != 0) failures.add("odd index on trial " + std::to_string(trial));
  }
  return failures.outcome("50-case grid incl. -4/3 and 1/42, elliptic involution 0 = 0, 1000 random bundles");
}

Outcome criterion_dimension() {
  Failures failures;
  struct Classical {
    const char* what;
    long chern;
    std::int64_t n, g, k, d;
  };
  // Complex dimensions of classical moduli of stable maps.
  const std::vector<Classical> cases = {
      {"lines in P2", 3, 2, 0, 0, 2},
      {"conics in P2", 6, 2, 0, 0, 5},
      {"rational cubics in P2", 9, 2, 0, 0, 8},
      {"rational quartics in P2", 12, 2, 0, 0, 11},
      {"rational cubics in P2 through 8 points", 9, 2, 0, 8, 16},
      {"degree one maps to P1", 2, 1, 0, 0, 0},
      {"double covers of P1", 4, 1, 0, 0, 2},
      {"genus 1 double covers of P1", 4, 1, 1, 0, 4},
      {"genus 2 double covers of P1", 4, 1, 2, 0, 6},
      {"genus 1 triple covers of P1", 6, 1, 1, 0, 6},
      {"M_{0,3}", 0, 0, 0, 3, 0},
      {"M_{0,4}", 0, 0, 0, 4, 1},
      {"M_{1,1}", 0, 0, 1, 1, 1},
      {"M_2", 0, 0, 2, 0, 3},
      {"M_3", 0, 0, 3, 0, 6},
      {"lines in P3", 4, 3, 0, 0, 4},
      {"conics in P3", 8, 3, 0, 0, 8},
      {"lines in P4", 5, 4, 0, 0, 6},
      {"rational curves on a quintic threefold", 0, 3, 0, 0, 0},
      {"genus 1 covers of an elliptic curve", 0, 1, 1, 0, 0},
  };
  for (const auto& c : cases) {
    DimensionInput in{Rational(c.chern), c.n, c.g, c.k, std::vector<Rational>(static_cast<std::size_t>(c.k), Rational(0))};
    const auto v = virtual_dimension(in);
    if (v.d != c.d || v.two_d != 2 * c.d) failures.add(std::string(c.what) + ": got " + to_string(v.d));
  }

  std::mt19937_64 rng(77);
  std::size_t selected = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = static_cast<std::int64_t>(rng() % 6);
    DimensionInput in;
    in.chern_pairing = fraction(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 6));
    in.complex_dim = static_cast<std::int64_t>(rng() % 6);
    in.genus = static_cast<std::int64_t>(rng() % 4);
    in.num_marked = k;
    Rational shift_sum = 0;
    for (std::int64_t i = 0; i < k; ++i) {
      in.shifts.push_back(fraction(static_cast<long>(rng() % 10), static_cast<long>(1 + rng() % 6)));
      shift_sum += in.shifts.back();
    }
    SelectionInput sel{static_cast<std::int64_t>(rng() % 8), {}};
    Rational lhs = sel.deg_k;
    for (std::int64_t i = 0; i < k; ++i) {
      sel.insertions.push_back({fraction(static_cast<long>(rng() % 12), static_cast<long>(1 + rng() % 4)),
                                static_cast<std::int64_t>(rng() % 3)});
      lhs += sel.insertions.back().orbifold_degree + 2 * sel.insertions.back().descendant_power;
    }
    const auto v = virtual_dimension(in);
    const auto res = selection_rule(sel, in);
    const Rational rhs = v.two_d + 2 * shift_sum;
    if (res.expected_degree != rhs) failures.add("expected degree is not 2d + 2 iota on trial " + std::to_string(trial));
    if (res.insertion_degree != lhs) failures.add("insertion degree on trial " + std::to_string(trial));
    if (res.selected != (lhs == rhs)) failures.add("selection flag on trial " + std::to_string(trial));

    // Adjust the last insertion so the degrees match exactly, when that is possible.
    if (k > 0) {
      auto& last = sel.insertions.back();
      const Rational needed = rhs - (lhs - last.orbifold_degree);
      if (needed >= 0) {
        last.orbifold_degree = needed;
        if (!selection_rule(sel, in).selected) failures.add("matched insertion not selected on trial " + std::to_string(trial));
        ++selected;
        last.orbifold_degree = needed + 1;
        if (selection_rule(sel, in).selected) failures.add("mismatched insertion selected on trial " + std::to_string(trial));
      }
    }
  }
  return failures.outcome("20 classical dimensions, 1000 random selection inputs (" + std::to_string(selected) +
                          " forced matches)");
}

Outcome criterion_degree_shifting() {
  Failures failures;
  std::size_t elements = 0;
  for (const auto& f : fixtures::fixture_set()) {
    auto g = fixtures::make(f);
    const auto rep = rep_from_permutation_action(*g);
    for (Element x = 0; x < g->order(); ++x) {
      const auto cycles = fixtures::cycle_type(*g, x).size();
      const Rational nonzero(static_cast<long>(f.degree - cycles));
      ++elements;
      if (degree_shifting(rep, x) + degree_shifting(rep, g->inverse(x)) != nonzero)
        failures.add(f.name + " element " + std::to_string(x));
    }
  }

  auto s3 = fixtures::by_name("S3");
  const auto rep = rep_from_permutation_action(*s3);
  if (degree_shifting(rep, s3->identity()) != 0) failures.add("S3 identity");
  if (degree_shifting(rep, fixtures::first_of_type(*s3, {2, 1})) != Rational(1, 2)) failures.add("S3 transposition");
  if (degree_shifting(rep, fixtures::first_of_type(*s3, {3})) != 1) failures.add("S3 3-cycle");

  LinearRepData sign(1, 2);
  sign.set(0, {1, {Rational(0)}});
  sign.set(1, {2, {Rational(1, 2)}});
  validate_rep(sign, *fixtures::by_name("Z2"));
  if (degree_shifting(sign, 1) != Rational(1, 2)) failures.add("Z2 acting by -1");

  LinearRepData diag(2, 3);
  diag.set(0, {1, {Rational(0), Rational(0)}});
  diag.set(1, {3, {Rational(1, 3), Rational(2, 3)}});
  diag.set(2, {3, {Rational(2, 3), Rational(1, 3)}});
  validate_rep(diag, *fixtures::by_name("Z3"));
  if (degree_shifting(diag, 1) != 1) failures.add("Z3 diag(w, w^2)");

  return failures.outcome(std::to_string(elements) + " elements over 9 permutation representations; 0, 1/2, 1 reproduced");
}

// --- CLI goldens -----------------------------------------------------------

struct GoldenCommand {
  std::string name;
  std::vector<std::string> args;
};

std::vector<GoldenCommand> golden_commands() {
  std::ifstream in(kGolden + "/commands.txt");
  if (!in) throw std::runtime_error("cannot read " + kGolden + "/commands.txt");
  std::vector<GoldenCommand> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    GoldenCommand c{line.substr(0, tab), {}};
    std::istringstream words(line.substr(tab + 1));
    std::string w;
    while (words >> w) {
      for (auto pos = w.find("@DATA@"); pos != std::string::npos; pos = w.find("@DATA@")) w.replace(pos, 6, kData);
      c.args.push_back(w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// stdout, then stderr, then the exit status, with the data path masked.
std::string run_cli(const std::vector<std::string>& args) {
  const auto err = std::filesystem::temp_directory_path() / "orbitwist_acceptance_stderr.txt";
  std::string cmd = shell_quote(kCli);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " 2>" + shell_quote(err.string()) + "; echo \"exit $?\"";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  std::ifstream e(err);
  const std::string stderr_text((std::istreambuf_iterator<char>(e)), std::istreambuf_iterator<char>());
  const auto exit_line = out.rfind("exit ");
  std::string result = out.substr(0, exit_line) + "--- stderr\n" + stderr_text + "--- " + out.substr(exit_line);
  for (auto pos = result.find(kData); pos != std::string::npos; pos = result.find(kData)) result.replace(pos, kData.size(), "@DATA@");
  return result;
}

Outcome criterion_determinism(bool regenerate) {
  Failures failures;
  const auto commands = golden_commands();
  std::set<std::string> subcommands;
  for (const auto& c : commands) {
    subcommands.insert(c.args.front());
    const auto first = run_cli(c.args);
    const auto path = kGolden + "/" + c.name + ".out";
    if (regenerate) {
      std::ofstream(path, std::ios::binary) << first;
      continue;
    }
    std::ifstream g(path, std::ios::binary);
    const std::string golden((std::istreambuf_iterator<char>(g)), std::istreambuf_iterator<char>());
    if (!g) failures.add(c.name + ": missing golden");
    else if (first != golden) failures.add(c.name + ": differs from golden");
    if (run_cli(c.args) != first) failures.add(c.name + ": second run differs");
    for (const char* threads : {"1", "8"}) {
      auto args = c.args;
      args.push_back("--threads");
      args.push_back(threads);
      if (run_cli(args) != first) failures.add(c.name + ": differs with --threads " + threads);
    }
  }
  if (commands.size() < 30) failures.add("only " + std::to_string(commands.size()) + " golden commands");
  for (const char* s : {"group", "curve", "bundle", "homs", "ring", "dim", "select"})
    if (!subcommands.contains(s)) failures.add(std::string("no golden for subcommand ") + s);
  return failures.outcome(std::to_string(commands.size()) + " commands, 4 runs each (plain x2, --threads 1, --threads 8)");
}

} // namespace

int main(int argc, char** argv) {
  const bool regenerate = argc > 1 && std::string(argv[1]) == "--regenerate-goldens";
  if (regenerate) {
    const auto o = criterion_determinism(true);
    std::cout << "goldens regenerated in " << kGolden << "\n";
    return o.pass ? 0 : 1;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 oracle equivalence (brute = convolution)", criterion_oracle_equivalence},
      {"2 Frobenius cross-check", criterion_frobenius},
      {"3 splitting identities", criterion_splitting},
      {"4 associativity", criterion_associativity},
      {"5 Chern and index layer", criterion_chern_index},
      {"6 dimension layer", criterion_dimension},
      {"7 degree shifting", criterion_degree_shifting},
      {"8 CLI determinism", [] { return criterion_determinism(false); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
  }
  std::cout << (failed ? "FAILED " + std::to_string(failed) + " of 8 criteria" : "all 8 criteria passed") << "\n";
  return failed ? 1 : 0;
}
