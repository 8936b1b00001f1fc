#include "orbitwist/orbicurve.hpp"

#include "orbitwist/error.hpp"

#include <numeric>
#include <string>

namespace orbitwist {

namespace {

std::string slot_text(const Slot& s) {
  return "(" + std::to_string(s.component) + ", " + std::to_string(s.slot) + ")";
}

} // namespace

MarkedOrbicurve make_marked_orbicurve(std::int64_t genus, const std::vector<std::int64_t>& multiplicities) {
  if (genus < 0) fail(ErrorKind::Domain, "orbicurve.InvalidGenus", "genus must be non-negative");
  MarkedOrbicurve c;
  c.genus = static_cast<std::uint32_t>(genus);
  c.markings.reserve(multiplicities.size());
  for (auto m : multiplicities) {
    if (m <= 0)
      fail(ErrorKind::Domain, "orbicurve.InvalidMultiplicity",
           "multiplicity " + std::to_string(m) + " is not positive");
    c.markings.push_back(static_cast<std::uint32_t>(m));
  }
  return c;
}

Rational canonical_degree(const MarkedOrbicurve& curve) {
  Rational d = 2 * static_cast<long>(curve.genus) - 2;
  for (auto m : curve.markings) d += Rational(1) - fraction(1, m);
  return d;
}

std::size_t NodalOrbicurve::special_points(std::size_t component) const {
  std::size_t k = components_[component].num_markings();
  for (const auto& node : nodes_) {
    if (node.branch_a.component == component) ++k;
    if (node.branch_b.component == component) ++k;
  }
  return k;
}

NodalOrbicurve make_nodal_orbicurve(std::vector<MarkedOrbicurve> components, const std::vector<NodeSpec>& nodes) {
  if (components.empty()) fail(ErrorKind::Domain, "orbicurve.Disconnected", "curve has no components");
  for (const auto& c : components)
    for (auto m : c.markings)
      if (m == 0) fail(ErrorKind::Domain, "orbicurve.InvalidMultiplicity", "multiplicity 0 is not positive");

  std::set<Slot> used;
  for (std::size_t c = 0; c < components.size(); ++c)
    for (std::size_t s = 0; s < components[c].num_markings(); ++s) used.insert({c, s});

  NodalOrbicurve curve;
  curve.markings_.assign(used.begin(), used.end());

  // Union-find over components for connectivity of the dual graph.
  std::vector<std::size_t> parent(components.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& spec : nodes) {
    for (const auto& branch : {spec.branch_a, spec.branch_b}) {
      if (branch.component >= components.size())
        fail(ErrorKind::Domain, "orbicurve.InvalidSlot", "node branch " + slot_text(branch) + " names no component");
      if (!used.insert(branch).second)
        fail(ErrorKind::Domain, "orbicurve.SlotConflict", "slot " + slot_text(branch) + " is already occupied");
    }
    if (spec.multiplicity_a == 0 || spec.multiplicity_b == 0)
      fail(ErrorKind::Domain, "orbicurve.InvalidMultiplicity", "node multiplicity must be positive");
    if (spec.multiplicity_a != spec.multiplicity_b)
      fail(ErrorKind::Domain, "orbicurve.NodeMultiplicityMismatch",
           "node branches " + slot_text(spec.branch_a) + " and " + slot_text(spec.branch_b) +
               " declare multiplicities " + std::to_string(spec.multiplicity_a) + " and " +
               std::to_string(spec.multiplicity_b));
    curve.nodes_.push_back({spec.branch_a, spec.branch_b, spec.multiplicity_a});
    parent[find(spec.branch_a.component)] = find(spec.branch_b.component);
  }

  for (std::size_t c = 1; c < components.size(); ++c)
    if (find(c) != find(0))
      fail(ErrorKind::Domain, "orbicurve.Disconnected",
           "component " + std::to_string(c) + " is not connected to component 0");

  curve.components_ = std::move(components);
  return curve;
}

std::uint64_t arithmetic_genus(const NodalOrbicurve& curve) {
  std::uint64_t g = 0;
  for (const auto& c : curve.components()) g += c.genus;
  // Connected dual graph: rank H_1 = E - V + 1.
  return g + curve.nodes().size() + 1 - curve.components().size();
}

StabilityReport check_stability(const NodalOrbicurve& curve, const std::set<std::size_t>& constant_components) {
  StabilityReport report;
  for (std::size_t c = 0; c < curve.components().size(); ++c) {
    const bool stable = curve.special_points(c) + 2 * curve.components()[c].genus >= 3;
    if (stable) continue;
    report.stable_as_curve = false;
    report.offending.push_back(c);
    if (constant_components.contains(c)) report.stable_as_map = false;
  }
  return report;
}

} // namespace orbitwist
