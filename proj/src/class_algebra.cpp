#include "orbitwist/class_algebra.hpp"

#include "orbitwist/error.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace orbitwist {

ConjugacyClassTable conjugacy_table(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr ClassIndex kUnassigned = static_cast<ClassIndex>(-1);
  std::vector<ClassIndex> provisional(n, kUnassigned);
  std::vector<std::vector<Element>> classes;

  for (Element x = 0; x < n; ++x) {
    if (provisional[x] != kUnassigned) continue;
    std::vector<Element> members;
    for (Element g = 0; g < n; ++g) {
      const Element y = group.conjugate(g, x);
      if (provisional[y] == kUnassigned) {
        provisional[y] = classes.size();
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }

  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });

  ConjugacyClassTable t;
  t.class_of.assign(n, 0);
  for (ClassIndex c = 0; c < classes.size(); ++c)
    for (auto x : classes[c]) t.class_of[x] = c;
  t.centralizer_orders.reserve(classes.size());
  t.inverse_class.reserve(classes.size());
  for (const auto& members : classes) {
    t.centralizer_orders.push_back(n / members.size());
    t.inverse_class.push_back(t.class_of[group.inverse(members.front())]);
  }
  t.classes = std::move(classes);
  return t;
}

struct ClassAlgebra::Cache {
  std::once_flag once;
  StructureConstants constants;
};

ClassAlgebra::ClassAlgebra(std::shared_ptr<const FiniteGroup> group)
    : group_(std::move(group)),
      classes_(conjugacy_table(*group_)),
      cache_(std::make_shared<Cache>()) {}

const StructureConstants& ClassAlgebra::structure_constants() const {
  std::call_once(cache_->once, [this] {
    const std::size_t r = classes_.size();
    StructureConstants a(r);
    std::vector<std::uint64_t> hits(r);
    for (ClassIndex i = 0; i < r; ++i) {
      for (ClassIndex j = 0; j < r; ++j) {
        std::fill(hits.begin(), hits.end(), 0);
        for (auto x : classes_.classes[i])
          for (auto y : classes_.classes[j]) ++hits[classes_.class_of[group_->multiply(x, y)]];
        for (ClassIndex k = 0; k < r; ++k) a.at(i, j, k) = hits[k] / classes_.class_size(k);
      }
    }
    cache_->constants = std::move(a);
  });
  return cache_->constants;
}

ClassFunction ClassAlgebra::zero() const {
  return ClassFunction{std::vector<Rational>(classes_.size(), Rational(0))};
}

ClassFunction ClassAlgebra::indicator(ClassIndex c) const {
  if (c >= classes_.size())
    fail(ErrorKind::Domain, "group_core.InvalidClass", "class index " + std::to_string(c) + " out of range");
  auto f = zero();
  f.values[c] = 1;
  return f;
}

ClassFunction ClassAlgebra::delta_identity() const {
  return indicator(classes_.class_of[group_->identity()]);
}

Rational ClassAlgebra::pair_inverse(const ClassFunction& f, const ClassFunction& g) const {
  if (f.values.size() != classes_.size() || g.values.size() != classes_.size())
    fail(ErrorKind::Domain, "group_core.DimensionMismatch", "class function has wrong length");
  Rational total = 0;
  for (ClassIndex c = 0; c < classes_.size(); ++c)
    total += Rational(static_cast<unsigned long>(classes_.class_size(c))) * f.values[c] *
             g.values[classes_.inverse_class[c]];
  return total;
}

ClassFunction convolve(const ClassAlgebra& algebra, const ClassFunction& f, const ClassFunction& g) {
  const std::size_t r = algebra.num_classes();
  if (f.values.size() != r || g.values.size() != r)
    fail(ErrorKind::Domain, "group_core.DimensionMismatch",
         "class functions have " + std::to_string(f.values.size()) + " and " +
             std::to_string(g.values.size()) + " values, expected " + std::to_string(r));

  const auto& a = algebra.structure_constants();
  auto h = algebra.zero();
  Rational term;
  for (ClassIndex i = 0; i < r; ++i) {
    if (sgn(f.values[i]) == 0) continue;
    for (ClassIndex j = 0; j < r; ++j) {
      if (sgn(g.values[j]) == 0) continue;
      term = f.values[i] * g.values[j];
      for (ClassIndex k = 0; k < r; ++k) {
        const auto coeff = a(i, j, k);
        if (coeff != 0) h.values[k] += term * Rational(static_cast<unsigned long>(coeff));
      }
    }
  }
  return h;
}

} // namespace orbitwist
