#pragma once

// Fixture groups and brute-force oracles shared by the unit and acceptance
// suites. Everything here works directly on Cayley tables or permutations and
// never calls into the class-algebra code paths it is used to check.

#include "orbitwist/class_algebra.hpp"
#include "orbitwist/group.hpp"
#include "orbitwist/homcount.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

namespace fixtures {

using orbitwist::ClassAlgebra;
using orbitwist::CycleNotation;
using orbitwist::Element;
using orbitwist::FiniteGroup;

struct NamedGroup {
  std::string name;
  std::uint32_t degree;
  std::vector<CycleNotation> generators;
  std::size_t expected_order;
};

inline std::vector<NamedGroup> fixture_set() {
  return {
      {"Z2", 2, {{{1, 2}}}, 2},
      {"Z3", 3, {{{1, 2, 3}}}, 3},
      {"Z4", 4, {{{1, 2, 3, 4}}}, 4},
      {"Z2xZ2", 4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}, 4},
      {"S3", 3, {{{1, 2}}, {{1, 2, 3}}}, 6},
      {"D4", 4, {{{1, 2, 3, 4}}, {{1, 3}}}, 8},
      {"Q8", 8, {{{1, 2, 4, 7}, {3, 6, 8, 5}}, {{1, 3, 4, 8}, {2, 5, 7, 6}}}, 8},
      {"A4", 4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, 12},
      {"S4", 4, {{{1, 2}}, {{1, 2, 3, 4}}}, 24},
  };
}

inline std::shared_ptr<const FiniteGroup> make(const NamedGroup& g) {
  return std::make_shared<const FiniteGroup>(orbitwist::build_group_from_permutations(g.generators, g.degree));
}

inline std::shared_ptr<const FiniteGroup> by_name(const std::string& name) {
  for (const auto& g : fixture_set())
    if (g.name == name) return make(g);
  throw std::runtime_error("no fixture group " + name);
}

/// S3 Cayley table written out by hand from the six permutations of {0,1,2}
/// in the order e, (01), (12), (02), (012), (021), composing right to left.
inline std::vector<std::vector<Element>> s3_table() {
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::vector<int> z(3);
      for (int p = 0; p < 3; ++p) z[p] = perms[x][perms[y][p]];
      table[x][y] = static_cast<Element>(std::find(perms.begin(), perms.end(), z) - perms.begin());
    }
  return table;
}

/// Sorted cycle lengths of a permutation-group element.
inline std::vector<std::uint32_t> cycle_type(const FiniteGroup& g, Element x) {
  const auto& images = g.permutation_action()->images[x];
  std::vector<bool> seen(images.size(), false);
  std::vector<std::uint32_t> lengths;
  for (std::uint32_t s = 0; s < images.size(); ++s) {
    if (seen[s]) continue;
    std::uint32_t len = 0;
    for (auto p = s; !seen[p]; p = images[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

/// Class containing the first element with the given cycle type.
inline orbitwist::ClassIndex class_with_cycle_type(const ClassAlgebra& a, std::vector<std::uint32_t> type) {
  std::sort(type.rbegin(), type.rend());
  for (Element x = 0; x < a.group().order(); ++x)
    if (cycle_type(a.group(), x) == type) return a.classes().class_of[x];
  throw std::runtime_error("no element of that cycle type");
}

// --- brute-force oracles ---------------------------------------------------

inline std::vector<std::vector<Element>> brute_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  std::vector<bool> seen(g.order(), false);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) {
      // h x h^-1 computed with an explicit inverse search.
      Element hinv = 0;
      while (g.multiply(h, hinv) != g.identity()) ++hinv;
      const Element y = g.multiply(g.multiply(h, x), hinv);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

/// Class functions as plain per-element integer vectors.
using ElementFunction = std::vector<long long>;

inline ElementFunction brute_convolve(const FiniteGroup& g, const ElementFunction& f, const ElementFunction& h) {
  ElementFunction out(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) out[g.multiply(x, y)] += f[x] * h[y];
  return out;
}

inline ElementFunction indicator_of(const FiniteGroup& g, const std::vector<Element>& set) {
  ElementFunction f(g.order(), 0);
  for (auto x : set) f[x] = 1;
  return f;
}

/// Number of (c_1, ..., c_k) with c_j in sets[j] and c_1 ... c_k = e, by
/// scanning every tuple (no forcing of the last coordinate).
inline long long brute_product_one(const FiniteGroup& g, const std::vector<std::vector<Element>>& sets) {
  long long count = 0;
  std::vector<std::size_t> idx(sets.size(), 0);
  for (const auto& s : sets)
    if (s.empty()) return 0;
  while (true) {
    Element prod = g.identity();
    for (std::size_t j = 0; j < sets.size(); ++j) prod = g.multiply(prod, sets[j][idx[j]]);
    if (prod == g.identity()) ++count;
    std::size_t j = 0;
    while (j < sets.size() && ++idx[j] == sets[j].size()) idx[j++] = 0;
    if (j == sets.size()) break;
  }
  return count;
}

// --- character tables ------------------------------------------------------

struct CharTable {
  std::vector<Element> columns;
  std::vector<std::vector<std::complex<double>>> rows;
};

/// Characters of a cyclic permutation group generated by element 1.
inline CharTable cyclic_chars(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> power(n);
  Element x = g.identity();
  for (std::size_t j = 0; j < n; ++j) {
    power[j] = x;
    x = g.multiply(x, 1);
  }
  CharTable t;
  t.columns = power;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::complex<double>> row;
    for (std::size_t j = 0; j < n; ++j)
      row.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n)));
    t.rows.push_back(row);
  }
  return t;
}

inline Element first_of_type(const FiniteGroup& g, std::vector<std::uint32_t> type) {
  std::sort(type.rbegin(), type.rend());
  for (Element x = 0; x < g.order(); ++x)
    if (cycle_type(g, x) == type) return x;
  throw std::runtime_error("no element of that cycle type");
}

inline CharTable s3_chars(const FiniteGroup& g) {
  CharTable t;
  t.columns = {first_of_type(g, {1, 1, 1}), first_of_type(g, {2, 1}), first_of_type(g, {3})};
  t.rows = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  return t;
}

inline CharTable s4_chars(const FiniteGroup& g) {
  CharTable t;
  t.columns = {first_of_type(g, {1, 1, 1, 1}), first_of_type(g, {2, 1, 1}), first_of_type(g, {2, 2}),
               first_of_type(g, {3, 1}), first_of_type(g, {4})};
  t.rows = {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {3, 1, -1, 0, -1}, {3, -1, -1, 0, 1}, {2, 0, 2, -1, 0}};
  return t;
}

/// Every tuple (C_1, ..., C_k) of class indices with k <= max_k.
inline std::vector<std::vector<orbitwist::ClassIndex>> class_tuples(std::size_t classes, std::size_t max_k) {
  std::vector<std::vector<orbitwist::ClassIndex>> out{{}};
  std::vector<std::vector<orbitwist::ClassIndex>> layer{{}};
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::vector<orbitwist::ClassIndex>> next;
    for (const auto& t : layer)
      for (orbitwist::ClassIndex c = 0; c < classes; ++c) {
        auto u = t;
        u.push_back(c);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline orbitwist::SurfaceGroupSpec spec_of(std::uint32_t genus, const std::vector<orbitwist::ClassIndex>& classes) {
  orbitwist::SurfaceGroupSpec s{genus, {}};
  for (auto c : classes) s.punctures.push_back(orbitwist::ClassConstraint{c});
  return s;
}

} // namespace fixtures
