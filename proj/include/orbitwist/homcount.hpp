#pragma once

#include "orbitwist/class_algebra.hpp"
#include "orbitwist/rational.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace orbitwist {

/// The puncture image must lie in a given conjugacy class.
struct ClassConstraint {
  ClassIndex cls = 0;
  friend bool operator==(const ClassConstraint&, const ClassConstraint&) = default;
};

/// The puncture image must have exactly this order, i.e. the local
/// homomorphism from Z_m is injective.
struct ExactOrderConstraint {
  std::uint32_t order = 1;
  friend bool operator==(const ExactOrderConstraint&, const ExactOrderConstraint&) = default;
};

using PunctureConstraint = std::variant<ClassConstraint, ExactOrderConstraint>;

/// pi_1 of a genus-g surface with k punctures,
/// <a_1, b_1, ..., a_g, b_g, c_1, ..., c_k | prod [a_i, b_i] prod c_j = 1>,
/// together with a constraint on the image of each puncture loop c_j.
struct SurfaceGroupSpec {
  std::uint32_t genus = 0;
  std::vector<PunctureConstraint> punctures;
};

/// A homomorphism from the surface group, recorded by generator images.
/// [a, b] = a b a^-1 b^-1.
struct Characteristic {
  std::vector<Element> handle_images;    // a_1, b_1, ..., a_g, b_g
  std::vector<Element> puncture_images;  // c_1, ..., c_k

  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
};

inline constexpr std::uint64_t kDefaultBruteBudget = 1'000'000'000;
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

struct CountOptions {
  std::uint64_t budget = kDefaultBruteBudget;
  unsigned threads = 1;
};

/// Throws Error(Domain, "homcount.InvalidSpec") for an out-of-range class or
/// a zero order.
void validate_spec(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec);

/// Number of leaves the brute-force search visits (saturating).
std::uint64_t brute_force_work(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec);

/// Direct enumeration of all generator images satisfying the relation. The
/// last puncture image is forced by the relation and then tested against its
/// constraint. Work is split across threads on the first free generator; the
/// result does not depend on the thread count. Throws
/// Error(Budget, "homcount.BudgetExceeded") if brute_force_work > budget.
Integer count_homs_brute(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec, const CountOptions& options = {});

/// T(c) = #{(a, b) in G^2 : [a, b] = c}, by direct O(|G|^2) tally.
ClassFunction commutator_kernel(const ClassAlgebra& algebra);

/// sum_C (|G|/|C|) 1_C * 1_{C^-1}, the class-algebra form of the kernel above.
ClassFunction handle_kernel_from_classes(const ClassAlgebra& algebra);

/// Indicator of the elements allowed by one puncture constraint.
ClassFunction constraint_indicator(const ClassAlgebra& algebra, const PunctureConstraint& constraint);

/// F = T^{*g} * 1_{C_1} * ... * 1_{C_k}: F(x) is the number of generator
/// tuples meeting the constraints whose relator product equals x, so F(e)
/// counts homomorphisms.
ClassFunction surface_class_function(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec);

/// F(identity) of surface_class_function, as an exact integer.
Integer count_homs_convolution(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec);

/// Solutions in lexicographic order of (a_1, b_1, ..., c_k). With
/// up_to_conjugacy, keeps the lexicographically least member of each orbit
/// of simultaneous conjugation and records the orbit sizes.
struct Enumeration {
  std::vector<Characteristic> characteristics;
  std::vector<std::uint64_t> orbit_sizes;  // empty unless up_to_conjugacy
  bool up_to_conjugacy = false;
};

/// Throws Error(Budget, "homcount.CapExceeded") once more than `cap`
/// solutions exist, and homcount.BudgetExceeded as count_homs_brute does.
Enumeration enumerate_characteristics(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec,
                                      bool up_to_conjugacy, std::size_t cap = kDefaultEnumerationCap,
                                      std::uint64_t budget = kDefaultBruteBudget);

/// Complex character table supplied by the caller. Column j holds the values
/// on class column_class[j]; rows are irreducible characters.
struct CharacterTable {
  std::vector<ClassIndex> column_class;
  std::vector<std::vector<std::complex<double>>> rows;
};

/// Maps the columns (given by representative elements) onto the class table
/// and checks the table is square. Throws
/// Error(Domain, "homcount.InvalidCharacterTable").
CharacterTable make_character_table(const ClassAlgebra& algebra, const std::vector<Element>& column_elements,
                                    std::vector<std::vector<std::complex<double>>> rows);

struct FrobeniusCount {
  Integer count;
  /// |value - round(value)| including any imaginary residue.
  double deviation = 0.0;
};

/// |G|^{2g-1} prod|C_j| sum_chi prod_j chi(c_j) / chi(1)^{k+2g-2}, rounded.
/// Errors: homcount.MissingCharacterTable (null table),
/// homcount.UnsupportedConstraint (exact-order punctures),
/// homcount.NonIntegralResult (deviation >= 1e-6).
FrobeniusCount count_homs_frobenius(const ClassAlgebra& algebra, const SurfaceGroupSpec& spec,
                                    const CharacterTable* table);

} // namespace orbitwist
