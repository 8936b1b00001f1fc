#include "orbitwist/group.hpp"

#include "orbitwist/error.hpp"

#include <deque>
#include <random>
#include <string>
#include <unordered_map>

namespace orbitwist {

namespace {

[[noreturn]] void not_a_group(const std::string& reason) {
  fail(ErrorKind::Domain, "group_core.NotAGroup", reason);
}

using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

Perm compose(const Perm& x, const Perm& y) {
  Perm out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = x[y[p]];
  return out;
}

Perm perm_from_cycles(const CycleNotation& cycles, std::uint32_t degree) {
  Perm images(degree);
  for (std::uint32_t p = 0; p < degree; ++p) images[p] = p;
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : cycles) {
    for (auto point : cycle) {
      if (point < 1 || point > degree)
        fail(ErrorKind::Schema, "group_core.InvalidPermutation",
             "point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (seen[point - 1])
        fail(ErrorKind::Schema, "group_core.InvalidPermutation",
             "point " + std::to_string(point) + " repeated in one generator");
      seen[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return images;
}

} // namespace

FiniteGroup build_group_from_table(std::size_t order,
                                   const std::vector<std::vector<Element>>& table) {
  if (order == 0) not_a_group("empty table");
  if (table.size() != order) not_a_group("table has wrong number of rows");
  for (const auto& row : table)
    if (row.size() != order) not_a_group("table row has wrong length");

  FiniteGroup g;
  g.order_ = order;
  g.table_.reserve(order * order);
  for (const auto& row : table)
    for (auto v : row) {
      if (v >= order) not_a_group("table entry out of range");
      g.table_.push_back(v);
    }

  // A left identity and left inverses plus associativity give a group.
  bool found = false;
  for (Element e = 0; e < order && !found; ++e) {
    bool left_identity = true;
    for (Element x = 0; x < order && left_identity; ++x) left_identity = g.multiply(e, x) == x;
    if (left_identity) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) not_a_group("no identity element");

  g.inverses_.assign(order, 0);
  for (Element x = 0; x < order; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < order && !has_inverse; ++y) {
      if (g.multiply(y, x) == g.identity_) {
        g.inverses_[x] = y;
        has_inverse = true;
      }
    }
    if (!has_inverse) not_a_group("no inverse for element " + std::to_string(x));
  }

  auto check_triple = [&](Element x, Element y, Element z) {
    if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z)))
      not_a_group("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                  std::to_string(z) + ")");
  };
  if (order <= 64) {
    for (Element x = 0; x < order; ++x)
      for (Element y = 0; y < order; ++y)
        for (Element z = 0; z < order; ++z) check_triple(x, y, z);
  } else {
    std::mt19937_64 rng(0x6f72626974776973ull);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order - 1));
    for (int t = 0; t < 100000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  // Two-sided identity and inverses follow from the axioms above; verify
  // anyway since the check is linear.
  for (Element x = 0; x < order; ++x) {
    if (g.multiply(x, g.identity_) != x) not_a_group("identity is not two-sided");
    if (g.multiply(x, g.inverses_[x]) != g.identity_) not_a_group("inverse is not two-sided");
  }
  return g;
}

FiniteGroup build_group_from_permutations(const std::vector<CycleNotation>& generators,
                                          std::uint32_t degree, std::size_t order_cap) {
  std::vector<Perm> gens;
  gens.reserve(generators.size());
  for (const auto& cycles : generators) gens.push_back(perm_from_cycles(cycles, degree));

  Perm id(degree);
  for (std::uint32_t p = 0; p < degree; ++p) id[p] = p;

  std::vector<Perm> elements{id};
  std::unordered_map<Perm, Element, PermHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : gens) {
      Perm next = compose(elements[head], gen);
      if (index.contains(next)) continue;
      if (elements.size() >= order_cap)
        fail(ErrorKind::Budget, "group_core.OrderCapExceeded",
             "generated group exceeds order cap " + std::to_string(order_cap));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  FiniteGroup g;
  g.order_ = n;
  g.identity_ = 0;
  g.table_.resize(n * n);
  g.inverses_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element z = index.at(compose(elements[x], elements[y]));
      g.table_[x * n + y] = z;
      if (z == 0) g.inverses_[x] = static_cast<Element>(y);
    }
  }
  g.action_ = PermutationAction{degree, std::move(elements)};
  return g;
}

std::size_t element_order(const FiniteGroup& group, Element x) {
  std::size_t m = 1;
  for (Element power = x; power != group.identity(); power = group.multiply(power, x)) ++m;
  return m;
}

} // namespace orbitwist
