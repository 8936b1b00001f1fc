#pragma once

#include "orbitwist/group.hpp"
#include "orbitwist/class_algebra.hpp"
#include "orbitwist/orbicurve.hpp"
#include "orbitwist/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orbitwist {

/// Local data of an orbifold bundle at one cone point: the generator of Z_m
/// acts on the fibre by diag(exp(2 pi i e_j / m)).
struct LocalExponents {
  std::uint32_t multiplicity = 1;
  std::vector<std::int64_t> exponents;

  friend bool operator==(const LocalExponents&, const LocalExponents&) = default;
};

/// An orbifold vector bundle over a marked orbicurve, recorded by its
/// desingularization degree c_1(|E|) and its local exponents.
struct OrbiBundleData {
  std::uint32_t rank = 1;
  std::int64_t desing_degree = 0;
  std::vector<LocalExponents> points;

  friend bool operator==(const OrbiBundleData&, const OrbiBundleData&) = default;
};

/// Checks rank > 0, one exponent per fibre direction and 0 <= e < m.
/// Throws Error(Domain, "orbibundle.InvalidBundle").
OrbiBundleData make_orbibundle(std::uint32_t rank, std::int64_t desing_degree, std::vector<LocalExponents> points);

/// c_1(E) = c_1(|E|) + sum_i sum_j m_{i,j} / m_i.
/// Throws Error(Domain, "orbibundle.PointMismatch") when the bundle's points
/// do not line up with the curve's markings.
Rational chern_number(const OrbiBundleData& bundle, const MarkedOrbicurve& curve);

/// 2 c_1(|E|) + 2n(1 - g). The value is recomputed as
/// 2 c_1(E) - 2 sum m_{i,j}/m_i + 2n(1 - g) and the two must agree.
Integer riemann_roch_index(const OrbiBundleData& bundle, const MarkedOrbicurve& curve);

/// K_Sigma: rank one, desingularization degree 2g - 2, exponent m_i - 1 at
/// each marked point.
OrbiBundleData canonical_bundle_of(const MarkedOrbicurve& curve);

/// c_1(E)[Sigma] = c_1(E~)[Sigma~] / |G| for E = E~/G over Sigma = Sigma~/G.
Rational quotient_chern_number(std::int64_t upstairs_c1, std::int64_t group_order);

/// Eigenvalue data of one group element acting on C^n. Each angle t in [0, 1)
/// stands for the eigenvalue exp(2 pi i t); its denominator divides `order`.
struct ElementExponents {
  std::uint32_t order = 1;
  std::vector<Rational> angles;
};

/// A linear representation of a finite group known through the eigenvalue
/// angles of (some of) its elements.
class LinearRepData {
public:
  LinearRepData(std::uint32_t rank, std::size_t group_order);

  std::uint32_t rank() const noexcept { return rank_; }
  std::size_t group_order() const noexcept { return data_.size(); }

  /// Throws Error(Domain, "orbibundle.InvalidRepData") for angles outside
  /// [0, 1), a wrong count, or a denominator not dividing the order.
  void set(Element x, ElementExponents exponents);
  const std::optional<ElementExponents>& at(Element x) const { return data_.at(x); }

private:
  std::uint32_t rank_;
  std::vector<std::optional<ElementExponents>> data_;
};

/// Angles of a permutation matrix: an l-cycle contributes 0, 1/l, ..., (l-1)/l.
/// Returned sorted.
std::vector<Rational> exponents_from_permutation(const PermutationAction& action, Element x);

/// The natural representation on C^degree of a permutation group.
/// Throws Error(Domain, "orbibundle.MissingRepData") if the group carries no
/// permutation action.
LinearRepData rep_from_permutation_action(const FiniteGroup& group);

/// iota_(g) = sum of angles. Throws Error(Domain, "orbibundle.MissingRepData").
Rational degree_shifting(const LinearRepData& rep, Element x);
Rational degree_shifting(const LinearRepData& rep, const ClassAlgebra& algebra, ClassIndex c);

/// Checks identity angles vanish and that g^-1 carries the complementary angles
/// {(1 - t) mod 1} of g, wherever both are present. Throws
/// Error(Domain, "orbibundle.InvalidRepData") on the first violation.
void validate_rep(const LinearRepData& rep, const FiniteGroup& group);

} // namespace orbitwist
