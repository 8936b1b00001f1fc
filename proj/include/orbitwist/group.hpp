#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace orbitwist {

using Element = std::uint32_t;

/// One permutation given as cycles over points 1..degree.
using Cycle = std::vector<std::uint32_t>;
using CycleNotation = std::vector<Cycle>;

/// Images of points 0..degree-1 for every group element, kept when a group
/// is generated from permutations so that its natural linear action on
/// C^degree is available later.
struct PermutationAction {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> images;  // images[element][point]
};

/// A finite group stored as its full Cayley table.
///
/// Elements are the indices 0..order-1. Products are O(1) table lookups.
/// Instances are immutable once built and can be shared between threads.
class FiniteGroup {
public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element multiply(Element x, Element y) const noexcept { return table_[x * order_ + y]; }
  Element inverse(Element x) const noexcept { return inverses_[x]; }
  Element conjugate(Element g, Element x) const noexcept {
    return multiply(multiply(g, x), inverses_[g]);
  }
  Element commutator(Element a, Element b) const noexcept {
    return multiply(multiply(a, b), multiply(inverses_[a], inverses_[b]));
  }

  std::span<const Element> row(Element x) const noexcept {
    return {table_.data() + x * order_, order_};
  }
  std::span<const Element> inverses() const noexcept { return inverses_; }

  const std::optional<PermutationAction>& permutation_action() const noexcept {
    return action_;
  }

private:
  friend FiniteGroup build_group_from_table(std::size_t, const std::vector<std::vector<Element>>&);
  friend FiniteGroup build_group_from_permutations(const std::vector<CycleNotation>&,
                                                   std::uint32_t, std::size_t);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::optional<PermutationAction> action_;
};

/// Validates a Cayley table. Throws Error(Domain, "group_core.NotAGroup")
/// naming the first failed axiom. Associativity is checked on every triple
/// for order <= 64 and on 10^5 pseudo-random (fixed seed) triples above.
FiniteGroup build_group_from_table(std::size_t order,
                                   const std::vector<std::vector<Element>>& table);

inline constexpr std::size_t kDefaultOrderCap = 20000;

/// Breadth-first closure of the generators under composition, where
/// (x*y)(p) = x(y(p)). Element 0 is the identity and the remaining indices
/// follow discovery order. Throws Error(Budget, "group_core.OrderCapExceeded")
/// once more than order_cap elements are found, and Error(Schema,
/// "group_core.InvalidPermutation") for out-of-range or repeated points.
FiniteGroup build_group_from_permutations(const std::vector<CycleNotation>& generators,
                                          std::uint32_t degree,
                                          std::size_t order_cap = kDefaultOrderCap);

/// Smallest m >= 1 with x^m = identity.
std::size_t element_order(const FiniteGroup& group, Element x);

} // namespace orbitwist
