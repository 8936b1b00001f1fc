#include "orbitwist/homcount.hpp"

#include "orbitwist/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <thread>

namespace orbitwist {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

/// Per-puncture membership tables shared by the brute-force walkers.
struct SearchSpace {
  const FiniteGroup* group = nullptr;
  std::uint32_t genus = 0;
  std::vector<std::vector<Element>> allowed;  // allowed[j] in increasing order
  std::vector<std::vector<char>> member;      // member[j][x]

  std::size_t free_levels() const {
    // Handles are all free; every puncture but the last is free.
    return 2 * genus + (allowed.empty() ? 0 : allowed.size() - 1);
  }
  std::size_t level_size(std::size_t level) const {
    return level < 2 * genus ? group->order() : allowed[level - 2 * genus].size();
  }
  Element level_choice(std::size_t level, std::size_t i) const {
    return level < 2 * genus ? static_cast<Element>(i) : allowed[level - 2 * genus][i];
  }
};

SearchSpace make_search_space(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec) {
  validate_spec(algebra, spec);
  const auto& g = algebra.group();
  SearchSpace s;
  s.group = &g;
  s.genus = spec.genus;
  for (const auto& c : spec.punctures) {
    std::vector<char> member(g.order(), 0);
    std::vector<Element> allowed;
    if (const auto* cc = std::get_if<ClassConstraint>(&c)) {
      for (auto x : algebra.classes().classes[cc->cls]) member[x] = 1;
    } else {
      const auto m = std::get<ExactOrderConstraint>(c).order;
      for (Element x = 0; x < g.order(); ++x)
        if (element_order(g, x) == m) member[x] = 1;
    }
    for (Element x = 0; x < g.order(); ++x)
      if (member[x]) allowed.push_back(x);
    s.member.push_back(std::move(member));
    s.allowed.push_back(std::move(allowed));
  }
  return s;
}

/// Depth-first walk over the free generators. `tuple` holds the current
/// images in the order (a_1, b_1, ..., c_k); visit(tuple) is called at every
/// solution. If `first` is set, level 0 is pinned to that choice index.
template <class Visit>
void walk(const SearchSpace& s, std::vector<Element>& tuple, std::size_t level, Element prefix, Visit& visit) {
  const auto& g = *s.group;
  const std::size_t handle_levels = 2 * s.genus;
  if (level == s.free_levels()) {
    if (s.allowed.empty()) {
      if (prefix == g.identity()) visit(tuple);
      return;
    }
    const Element last = g.inverse(prefix);
    if (s.member.back()[last]) {
      tuple[level] = last;
      visit(tuple);
    }
    return;
  }
  const std::size_t n = s.level_size(level);
  for (std::size_t i = 0; i < n; ++i) {
    const Element x = s.level_choice(level, i);
    tuple[level] = x;
    Element next = prefix;
    if (level >= handle_levels) {
      next = g.multiply(prefix, x);
    } else if (level % 2 == 1) {
      next = g.multiply(prefix, g.commutator(tuple[level - 1], x));
    }
    walk(s, tuple, level + 1, next, visit);
  }
}

template <class Visit>
void walk_from(const SearchSpace& s, std::vector<Element>& tuple, std::size_t first_index, Visit& visit) {
  const auto& g = *s.group;
  const Element x = s.level_choice(0, first_index);
  tuple[0] = x;
  const Element prefix = 2 * s.genus > 0 ? g.identity() : x;
  walk(s, tuple, 1, prefix, visit);
}

std::uint64_t work_of(const SearchSpace& s) {
  std::uint64_t work = 1;
  for (std::size_t level = 0; level < s.free_levels(); ++level) work = saturating_mul(work, s.level_size(level));
  return work;
}

void require_budget(const SearchSpace& s, std::uint64_t budget) {
  const auto work = work_of(s);
  if (work > budget)
    fail(ErrorKind::Budget, "homcount.BudgetExceeded",
         "brute-force search needs " + std::to_string(work) + " steps, budget is " + std::to_string(budget));
}

} // namespace

void validate_spec(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec) {
  for (const auto& c : spec.punctures) {
    if (const auto* cc = std::get_if<ClassConstraint>(&c)) {
      if (cc->cls >= algebra.num_classes())
        fail(ErrorKind::Domain, "homcount.InvalidSpec",
             "class index " + std::to_string(cc->cls) + " out of range (group has " +
                 std::to_string(algebra.num_classes()) + " classes)");
    } else if (std::get<ExactOrderConstraint>(c).order == 0) {
      fail(ErrorKind::Domain, "homcount.InvalidSpec", "exact order must be positive");
    }
  }
}

std::uint64_t brute_force_work(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec) {
  return work_of(make_search_space(algebra, spec));
}

Integer count_homs_brute(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec, const CountOptions& options) {
  const auto s = make_search_space(algebra, spec);
  require_budget(s, options.budget);
  const std::size_t width = s.free_levels() + (s.allowed.empty() ? 0 : 1);

  if (s.free_levels() == 0) {
    std::uint64_t count = 0;
    std::vector<Element> tuple(width);
    auto visit = [&](const std::vector<Element>&) { ++count; };
    walk(s, tuple, 0, s.group->identity(), visit);
    return Integer(static_cast<unsigned long>(count));
  }

  const std::size_t first = s.level_size(0);
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(first)));
  std::vector<std::uint64_t> partial(threads, 0);
  auto run = [&](unsigned t) {
    std::vector<Element> tuple(width);
    std::uint64_t count = 0;
    auto visit = [&](const std::vector<Element>&) { ++count; };
    for (std::size_t i = t; i < first; i += threads) walk_from(s, tuple, i, visit);
    partial[t] = count;
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  Integer total = 0;
  for (auto c : partial) total += Integer(static_cast<unsigned long>(c));
  return total;
}

ClassFunction commutator_kernel(const ClassAlgebra& algebra) {
  const auto& g = algebra.group();
  std::vector<std::uint64_t> tally(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) ++tally[g.commutator(a, b)];

  auto t = algebra.zero();
  const auto& classes = algebra.classes();
  for (ClassIndex c = 0; c < classes.size(); ++c) {
    const auto value = tally[classes.representative(c)];
    for (auto x : classes.classes[c])
      if (tally[x] != value)
        fail(ErrorKind::Internal, "homcount.NotAClassFunction", "commutator tally is not constant on a class");
    t.values[c] = Rational(static_cast<unsigned long>(value));
  }
  return t;
}

ClassFunction handle_kernel_from_classes(const ClassAlgebra& algebra) {
  const auto& classes = algebra.classes();
  auto t = algebra.zero();
  for (ClassIndex c = 0; c < classes.size(); ++c) {
    auto term = convolve(algebra, algebra.indicator(c), algebra.indicator(classes.inverse_class[c]));
    const Rational weight(static_cast<unsigned long>(classes.centralizer_orders[c]));
    for (std::size_t k = 0; k < term.values.size(); ++k) t.values[k] += weight * term.values[k];
  }
  return t;
}

ClassFunction constraint_indicator(const ClassAlgebra& algebra, const PunctureConstraint& constraint) {
  if (const auto* cc = std::get_if<ClassConstraint>(&constraint)) return algebra.indicator(cc->cls);
  const auto m = std::get<ExactOrderConstraint>(constraint).order;
  auto f = algebra.zero();
  for (ClassIndex c = 0; c < algebra.num_classes(); ++c)
    if (element_order(algebra.group(), algebra.classes().representative(c)) == m) f.values[c] = 1;
  return f;
}

ClassFunction surface_class_function(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec) {
  validate_spec(algebra, spec);
  auto f = algebra.delta_identity();
  if (spec.genus > 0) {
    const auto t = commutator_kernel(algebra);
    for (std::uint32_t i = 0; i < spec.genus; ++i) f = convolve(algebra, f, t);
  }
  for (const auto& c : spec.punctures) f = convolve(algebra, f, constraint_indicator(algebra, c));
  return f;
}

Integer count_homs_convolution(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec) {
  const auto f = surface_class_function(algebra, spec);
  return to_integer(algebra.value_at(f, algebra.group().identity()));
}

Enumeration enumerate_characteristics(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec,
                                      bool up_to_conjugacy, std::size_t cap, std::uint64_t budget) {
  const auto s = make_search_space(algebra, spec);
  require_budget(s, budget);
  const std::size_t handles = 2 * spec.genus;
  const std::size_t width = s.free_levels() + (s.allowed.empty() ? 0 : 1);

  std::vector<std::vector<Element>> solutions;
  auto visit = [&](const std::vector<Element>& tuple) {
    if (solutions.size() >= cap)
      fail(ErrorKind::Budget, "homcount.CapExceeded",
           "more than " + std::to_string(cap) + " characteristics");
    solutions.push_back(tuple);
  };
  std::vector<Element> tuple(width);
  walk(s, tuple, 0, s.group->identity(), visit);

  auto to_characteristic = [&](const std::vector<Element>& t) {
    return Characteristic{{t.begin(), t.begin() + static_cast<std::ptrdiff_t>(handles)},
                          {t.begin() + static_cast<std::ptrdiff_t>(handles), t.end()}};
  };

  Enumeration out;
  out.up_to_conjugacy = up_to_conjugacy;
  if (!up_to_conjugacy) {
    for (const auto& t : solutions) out.characteristics.push_back(to_characteristic(t));
    return out;
  }

  // Conjugation preserves the relation and every constraint, so each orbit
  // lies inside the solution set and its first member in lexicographic order
  // is its least element.
  const auto& g = algebra.group();
  std::set<std::vector<Element>> seen;
  for (const auto& t : solutions) {
    if (seen.contains(t)) continue;
    std::uint64_t size = 0;
    std::vector<Element> image(t.size());
    for (Element h = 0; h < g.order(); ++h) {
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = g.conjugate(h, t[i]);
      if (seen.insert(image).second) ++size;
    }
    out.characteristics.push_back(to_characteristic(t));
    out.orbit_sizes.push_back(size);
  }
  return out;
}

CharacterTable make_character_table(const ClassAlgebra& algebra, const std::vector<Element>& column_elements,
                                    std::vector<std::vector<std::complex<double>>> rows) {
  const std::size_t r = algebra.num_classes();
  auto bad = [](const std::string& why) { fail(ErrorKind::Domain, "homcount.InvalidCharacterTable", why); };
  if (column_elements.size() != r)
    bad("character table has " + std::to_string(column_elements.size()) + " columns, group has " +
        std::to_string(r) + " classes");
  if (rows.size() != r) bad("character table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(r));
  CharacterTable t;
  std::vector<bool> covered(r, false);
  for (auto x : column_elements) {
    if (x >= algebra.group().order()) bad("column element " + std::to_string(x) + " out of range");
    const auto c = algebra.classes().class_of[x];
    if (covered[c]) bad("two columns name the same class");
    covered[c] = true;
    t.column_class.push_back(c);
  }
  for (const auto& row : rows)
    if (row.size() != r) bad("character row has wrong length");
  t.rows = std::move(rows);
  return t;
}

FrobeniusCount count_homs_frobenius(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec,
                                    const CharacterTable* table) {
  if (table == nullptr) fail(ErrorKind::Domain, "homcount.MissingCharacterTable", "no character table supplied");
  validate_spec(algebra, spec);

  const auto& classes = algebra.classes();
  std::vector<std::size_t> column_of(classes.size(), 0);
  for (std::size_t j = 0; j < table->column_class.size(); ++j) column_of[table->column_class[j]] = j;
  const std::size_t identity_column = column_of[classes.class_of[algebra.group().identity()]];

  std::vector<ClassIndex> punctures;
  for (const auto& c : spec.punctures) {
    const auto* cc = std::get_if<ClassConstraint>(&c);
    if (cc == nullptr)
      fail(ErrorKind::Domain, "homcount.UnsupportedConstraint",
           "the character formula takes class constraints only");
    punctures.push_back(cc->cls);
  }

  using Complex = std::complex<long double>;
  const long double order = static_cast<long double>(algebra.group().order());
  const int k = static_cast<int>(punctures.size());
  const int exponent = k + 2 * static_cast<int>(spec.genus) - 2;

  long double prefactor = std::pow(order, 2.0L * spec.genus - 1.0L);
  for (auto c : punctures) prefactor *= static_cast<long double>(classes.class_size(c));

  Complex sum = 0;
  for (const auto& row : table->rows) {
    Complex term = 1;
    for (auto c : punctures) term *= Complex(row[column_of[c]]);
    const Complex degree(row[identity_column]);
    sum += term / std::pow(degree, exponent);
  }
  const Complex value = prefactor * sum;
  const long double rounded = std::round(value.real());
  const double deviation = static_cast<double>(std::hypot(value.real() - rounded, value.imag()));
  if (!(deviation < 1e-6))
    fail(ErrorKind::Domain, "homcount.NonIntegralResult",
         "character sum is not integral (deviation " + std::to_string(deviation) + ")");
  if (rounded < 0)
    fail(ErrorKind::Domain, "homcount.NonIntegralResult", "character sum is negative");
  return FrobeniusCount{Integer(std::to_string(static_cast<unsigned long long>(rounded))), deviation};
}

} // namespace orbitwist
