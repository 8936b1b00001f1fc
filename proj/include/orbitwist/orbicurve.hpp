#pragma once

#include "orbitwist/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace orbitwist {

/// A compact orbicurve of genus g with k marked points. A marked point of
/// multiplicity m is a cone point uniformized by z -> z^m; m = 1 is a smooth
/// marked point and is kept as such.
struct MarkedOrbicurve {
  std::uint32_t genus = 0;
  std::vector<std::uint32_t> markings;

  std::size_t num_markings() const noexcept { return markings.size(); }
  friend bool operator==(const MarkedOrbicurve&, const MarkedOrbicurve&) = default;
};

/// Throws Error(Domain, "orbicurve.InvalidMultiplicity") for a zero multiplicity.
MarkedOrbicurve make_marked_orbicurve(std::int64_t genus, const std::vector<std::int64_t>& multiplicities);

/// 2g - 2 + sum_i (1 - 1/m_i).
Rational canonical_degree(const MarkedOrbicurve& curve);

/// Special-point position on a component. A component's own markings occupy
/// slots 0..k-1; node branches may use any other slot number.
struct Slot {
  std::size_t component = 0;
  std::size_t slot = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// A node as declared by the caller. Each branch carries its own declared
/// multiplicity; the two must agree.
struct NodeSpec {
  Slot branch_a;
  Slot branch_b;
  std::uint32_t multiplicity_a = 1;
  std::uint32_t multiplicity_b = 1;
};

struct Node {
  Slot branch_a;
  Slot branch_b;
  std::uint32_t multiplicity = 1;
};

/// A connected nodal orbicurve: orbicurve components glued at balanced nodes.
/// The dual graph has one vertex per component and one edge per node
/// (self-nodes are loops).
class NodalOrbicurve {
public:
  const std::vector<MarkedOrbicurve>& components() const noexcept { return components_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Global marked points in component order: (component, slot).
  const std::vector<Slot>& marking_assignment() const noexcept { return markings_; }

  /// Number of special points on a component: its markings plus one per node
  /// branch landing on it (two for a self-node).
  std::size_t special_points(std::size_t component) const;

private:
  friend NodalOrbicurve make_nodal_orbicurve(std::vector<MarkedOrbicurve>, const std::vector<NodeSpec>&);

  std::vector<MarkedOrbicurve> components_;
  std::vector<Node> nodes_;
  std::vector<Slot> markings_;
};

/// Validates and assembles a nodal curve. Errors (all Domain):
/// "orbicurve.InvalidSlot", "orbicurve.SlotConflict",
/// "orbicurve.NodeMultiplicityMismatch", "orbicurve.InvalidMultiplicity",
/// "orbicurve.Disconnected".
NodalOrbicurve make_nodal_orbicurve(std::vector<MarkedOrbicurve> components,
                                    const std::vector<NodeSpec>& nodes);

/// sum of component genera + first Betti number of the dual graph.
std::uint64_t arithmetic_genus(const NodalOrbicurve& curve);

struct StabilityReport {
  bool stable_as_curve = true;
  bool stable_as_map = true;
  /// Components with k + 2g < 3, in increasing order.
  std::vector<std::size_t> offending;
};

/// Curve stability requires k + 2g >= 3 on every component; map stability
/// requires it only on the components listed as carrying a constant map.
StabilityReport check_stability(const NodalOrbicurve& curve, const std::set<std::size_t>& constant_components);

} // namespace orbitwist
