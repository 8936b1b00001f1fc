#pragma once

#include "orbitwist/class_algebra.hpp"
#include "orbitwist/homcount.hpp"
#include "orbitwist/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace orbitwist {

/// Twisted sectors of a point quotient [pt/G], one per conjugacy class.
struct SectorType {
  std::vector<ClassIndex> classes;
};

/// eta(C_a, C_b) = |C_G(C_a)| if C_b = I(C_a), else 0.
///
/// The weight |C_G(C)| = |G|/|C| is the normalization under which gluing a
/// handle, T = sum_C (|G|/|C|) 1_C * 1_{C^-1}, is an exact counting identity.
struct SectorPairing {
  std::size_t size = 0;
  std::vector<std::uint64_t> entries;  // row-major size x size

  std::uint64_t operator()(ClassIndex a, ClassIndex b) const { return entries[a * size + b]; }
};

struct Sectors {
  std::vector<ClassIndex> sectors;
  SectorPairing pairing;
};

Sectors sectors_and_pairing(const ClassAlgebra& algebra);

/// N_0(C_1, C_2, C_3) = #{(c_1, c_2, c_3) in C_1 x C_2 x C_3 : c_1 c_2 c_3 = e}.
Integer three_point_count(const ClassAlgebra& algebra, ClassIndex c1, ClassIndex c2, ClassIndex c3);

/// Class-sum structure constants K_i K_j = sum_k a_ijk K_k, obtained as
/// a_ijk = N_0(C_i, C_j, I(C_k)) / |C_k|.
struct ProductTable {
  std::size_t size = 0;
  std::vector<Integer> coefficients;  // [(i * size + j) * size + k]

  const Integer& operator()(ClassIndex i, ClassIndex j, ClassIndex k) const {
    return coefficients[(i * size + j) * size + k];
  }
};

/// Throws Error(Internal, "gw_calculus.NonIntegralCoefficient") if some
/// N_0 is not divisible by |C_k|.
ProductTable product_table(const ClassAlgebra& algebra);

struct AssociativityReport {
  bool associative = true;
  /// First (a, b, c, d) in lexicographic order with
  /// ((K_a K_b) K_c)_d != (K_a (K_b K_c))_d.
  std::optional<std::array<ClassIndex, 4>> counterexample;
};

AssociativityReport check_associativity(const ProductTable& table);

struct DimensionInput {
  Rational chern_pairing;   // c_1(TX) . A
  std::int64_t complex_dim = 0;
  std::int64_t genus = 0;
  std::int64_t num_marked = 0;
  std::vector<Rational> shifts;  // iota_(g_i), one per marked point
};

struct VirtualDimension {
  Rational d;
  Rational two_d;
};

/// d = c_1(TX).A + (n - 3)(1 - g) + k - sum iota.
/// Throws Error(Domain, "gw_calculus.InvalidDimensionInput") if the shift
/// count differs from k or a shift is negative.
VirtualDimension virtual_dimension(const DimensionInput& input);

struct Insertion {
  Rational orbifold_degree;     // degree after shifting
  std::int64_t descendant_power = 0;
};

struct SelectionInput {
  std::int64_t deg_k = 0;
  std::vector<Insertion> insertions;
};

struct SelectionResult {
  bool selected = false;
  Rational insertion_degree;  // deg K + sum (deg_orb + 2 l)
  Rational expected_degree;   // 2 c_1 . A + 2 (n - 3)(1 - g) + 2k
};

/// An invariant can be nonzero only when the two degrees agree. Throws
/// Error(Domain, "gw_calculus.ArityMismatch") when the insertion count
/// differs from num_marked, and gw_calculus.InvalidSelectionInput for negative
/// degrees or powers.
SelectionResult selection_rule(const SelectionInput& input, const DimensionInput& dim);

struct SeparatingSplit {
  std::uint32_t genus_left = 0;
  std::size_t punctures_left = 0;  // the first punctures_left classes go left
  Integer left;                     // N_g(C_1..C_k)
  Rational right;                   // sum_C N_{g1}(.., I(C)) N_{g2}(.., C) / |C|
  bool holds() const { return Rational(left) == right; }
};

struct NonSeparatingSplit {
  Integer left;   // N_g(C_1..C_k)
  Integer right;  // sum_C eta(C, I(C)) N_{g-1}(C_1..C_k, C, I(C))
  bool holds() const { return left == right; }
};

struct SplittingReport {
  std::vector<SeparatingSplit> separating;
  std::optional<NonSeparatingSplit> non_separating;  // genus >= 1 only
  bool holds() const;
};

/// Checks both gluing identities with every count evaluated by brute force,
/// independently of the class algebra. The separating identity is tested for
/// every split g = g1 + g2 and every prefix of the punctures.
/// Throws homcount.BudgetExceeded when a count exceeds the budget.
SplittingReport splitting_identities(const ClassAlgebra& algebra, std::uint32_t genus, const SectorType& sector,
                                     const CountOptions& options = {});

} // namespace orbitwist
