#pragma once

#include "orbitwist/group.hpp"
#include "orbitwist/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace orbitwist {

using ClassIndex = std::size_t;

/// Conjugacy classes ordered by (size, minimal element). Each class lists its
/// elements in increasing order, so classes[c].front() is its representative.
struct ConjugacyClassTable {
  std::vector<std::vector<Element>> classes;
  std::vector<ClassIndex> class_of;
  std::vector<std::size_t> centralizer_orders;
  std::vector<ClassIndex> inverse_class;

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t class_size(ClassIndex c) const noexcept { return classes[c].size(); }
  Element representative(ClassIndex c) const noexcept { return classes[c].front(); }
};

ConjugacyClassTable conjugacy_table(const FiniteGroup& group);

/// A function on G that is constant on conjugacy classes, stored per class.
struct ClassFunction {
  std::vector<Rational> values;

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

/// Structure constants of the class algebra: C_i * C_j = sum_k a(i,j,k) C_k as
/// multisets, i.e. a(i,j,k) = #{(x, y) in C_i x C_j : xy = z} for any fixed z
/// in C_k.
class StructureConstants {
public:
  explicit StructureConstants(std::size_t classes = 0)
      : r_(classes), a_(classes * classes * classes, 0) {}

  std::size_t classes() const noexcept { return r_; }
  std::uint64_t operator()(ClassIndex i, ClassIndex j, ClassIndex k) const noexcept {
    return a_[(i * r_ + j) * r_ + k];
  }
  std::uint64_t& at(ClassIndex i, ClassIndex j, ClassIndex k) noexcept {
    return a_[(i * r_ + j) * r_ + k];
  }

private:
  std::size_t r_;
  std::vector<std::uint64_t> a_;
};

/// The centre of the group algebra, spanned by class sums.
///
/// Owns a shared handle on the group together with its class table. The
/// structure constants are computed on first use under std::call_once, so a
/// ClassAlgebra may be shared by concurrent readers.
class ClassAlgebra {
public:
  explicit ClassAlgebra(std::shared_ptr<const FiniteGroup> group);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  const ConjugacyClassTable& classes() const noexcept { return classes_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }

  const StructureConstants& structure_constants() const;

  ClassFunction zero() const;
  ClassFunction indicator(ClassIndex c) const;
  ClassFunction delta_identity() const;

  Rational value_at(const ClassFunction& f, Element x) const {
    return f.values[classes_.class_of[x]];
  }

  /// sum over x in G of f(x) g(x^-1).
  Rational pair_inverse(const ClassFunction& f, const ClassFunction& g) const;

private:
  struct Cache;

  std::shared_ptr<const FiniteGroup> group_;
  ConjugacyClassTable classes_;
  std::shared_ptr<Cache> cache_;
};

/// h(z) = sum_{xy = z} f(x) g(y), evaluated through the structure constants.
/// Throws Error(Domain, "group_core.DimensionMismatch") if either argument has
/// the wrong number of class values.
ClassFunction convolve(const ClassAlgebra& algebra, const ClassFunction& f, const ClassFunction& g);

} // namespace orbitwist
