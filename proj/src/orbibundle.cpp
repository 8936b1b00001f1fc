#include "orbitwist/orbibundle.hpp"

#include "orbitwist/error.hpp"

#include <algorithm>
#include <string>

namespace orbitwist {

namespace {

[[noreturn]] void invalid_rep(const std::string& why) {
  fail(ErrorKind::Domain, "orbibundle.InvalidRepData", why);
}

void check_points(const OrbiBundleData& bundle, const MarkedOrbicurve& curve) {
  if (bundle.points.size() != curve.num_markings())
    fail(ErrorKind::Domain, "orbibundle.PointMismatch",
         "bundle has " + std::to_string(bundle.points.size()) + " points, curve has " +
             std::to_string(curve.num_markings()) + " markings");
  for (std::size_t i = 0; i < curve.num_markings(); ++i)
    if (bundle.points[i].multiplicity != curve.markings[i])
      fail(ErrorKind::Domain, "orbibundle.PointMismatch",
           "point " + std::to_string(i) + " has multiplicity " + std::to_string(bundle.points[i].multiplicity) +
               " but the curve marking has " + std::to_string(curve.markings[i]));
}

Rational exponent_sum(const OrbiBundleData& bundle) {
  Rational s = 0;
  for (const auto& p : bundle.points)
    for (auto e : p.exponents) s += fraction(e, p.multiplicity);
  return s;
}

} // namespace

OrbiBundleData make_orbibundle(std::uint32_t rank, std::int64_t desing_degree, std::vector<LocalExponents> points) {
  if (rank == 0) fail(ErrorKind::Domain, "orbibundle.InvalidBundle", "rank must be positive");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.multiplicity == 0)
      fail(ErrorKind::Domain, "orbibundle.InvalidBundle", "point " + std::to_string(i) + " has multiplicity 0");
    if (p.exponents.size() != rank)
      fail(ErrorKind::Domain, "orbibundle.InvalidBundle",
           "point " + std::to_string(i) + " lists " + std::to_string(p.exponents.size()) +
               " exponents for rank " + std::to_string(rank));
    for (auto e : p.exponents)
      if (e < 0 || e >= static_cast<std::int64_t>(p.multiplicity))
        fail(ErrorKind::Domain, "orbibundle.InvalidBundle",
             "exponent " + std::to_string(e) + " at point " + std::to_string(i) + " outside [0, " +
                 std::to_string(p.multiplicity) + ")");
  }
  return OrbiBundleData{rank, desing_degree, std::move(points)};
}

Rational chern_number(const OrbiBundleData& bundle, const MarkedOrbicurve& curve) {
  check_points(bundle, curve);
  return Rational(bundle.desing_degree) + exponent_sum(bundle);
}

Integer riemann_roch_index(const OrbiBundleData& bundle, const MarkedOrbicurve& curve) {
  check_points(bundle, curve);
  const Integer euler_term = 2 * Integer(bundle.rank) * (1 - Integer(curve.genus));
  const Integer via_desing = 2 * Integer(bundle.desing_degree) + euler_term;
  const Rational via_chern = 2 * chern_number(bundle, curve) - 2 * exponent_sum(bundle) + Rational(euler_term);
  if (via_chern != Rational(via_desing))
    fail(ErrorKind::Internal, "orbibundle.IndexMismatch",
         "index routes disagree: " + to_string(via_desing) + " vs " + to_string(via_chern));
  return via_desing;
}

OrbiBundleData canonical_bundle_of(const MarkedOrbicurve& curve) {
  OrbiBundleData k;
  k.rank = 1;
  k.desing_degree = 2 * static_cast<std::int64_t>(curve.genus) - 2;
  for (auto m : curve.markings) k.points.push_back({m, {static_cast<std::int64_t>(m) - 1}});
  return k;
}

Rational quotient_chern_number(std::int64_t upstairs_c1, std::int64_t group_order) {
  if (group_order < 1)
    fail(ErrorKind::Domain, "orbibundle.InvalidGroupOrder", "group order must be positive");
  return fraction(upstairs_c1, group_order);
}

LinearRepData::LinearRepData(std::uint32_t rank, std::size_t group_order) : rank_(rank), data_(group_order) {}

void LinearRepData::set(Element x, ElementExponents exponents) {
  if (x >= data_.size()) invalid_rep("element " + std::to_string(x) + " out of range");
  if (exponents.order == 0) invalid_rep("element order must be positive");
  if (exponents.angles.size() != rank_)
    invalid_rep("element " + std::to_string(x) + " lists " + std::to_string(exponents.angles.size()) +
                " exponents for rank " + std::to_string(rank_));
  for (auto& t : exponents.angles) {
    if (t < 0 || t >= 1) invalid_rep("exponent " + to_string(t) + " outside [0, 1)");
    if (exponents.order % t.get_den() != 0)
      invalid_rep("exponent " + to_string(t) + " incompatible with element order " + std::to_string(exponents.order));
  }
  std::sort(exponents.angles.begin(), exponents.angles.end());
  data_[x] = std::move(exponents);
}

std::vector<Rational> exponents_from_permutation(const PermutationAction& action, Element x) {
  const auto& images = action.images.at(x);
  std::vector<bool> visited(action.degree, false);
  std::vector<Rational> angles;
  angles.reserve(action.degree);
  for (std::uint32_t start = 0; start < action.degree; ++start) {
    if (visited[start]) continue;
    unsigned long length = 0;
    for (auto p = start; !visited[p]; p = images[p]) {
      visited[p] = true;
      ++length;
    }
    for (unsigned long a = 0; a < length; ++a) angles.push_back(fraction(a, length));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

LinearRepData rep_from_permutation_action(const FiniteGroup& group) {
  const auto& action = group.permutation_action();
  if (!action)
    fail(ErrorKind::Domain, "orbibundle.MissingRepData", "group was not built from permutations");
  LinearRepData rep(action->degree, group.order());
  for (Element x = 0; x < group.order(); ++x)
    rep.set(x, {static_cast<std::uint32_t>(element_order(group, x)), exponents_from_permutation(*action, x)});
  return rep;
}

Rational degree_shifting(const LinearRepData& rep, Element x) {
  if (x >= rep.group_order() || !rep.at(x))
    fail(ErrorKind::Domain, "orbibundle.MissingRepData", "no exponent data for element " + std::to_string(x));
  Rational iota = 0;
  for (const auto& t : rep.at(x)->angles) iota += t;
  return iota;
}

Rational degree_shifting(const LinearRepData& rep, const ClassAlgebra& algebra, ClassIndex c) {
  if (c >= algebra.num_classes())
    fail(ErrorKind::Domain, "group_core.InvalidClass", "class index " + std::to_string(c) + " out of range");
  for (auto x : algebra.classes().classes[c])
    if (x < rep.group_order() && rep.at(x)) return degree_shifting(rep, x);
  fail(ErrorKind::Domain, "orbibundle.MissingRepData", "no exponent data for class " + std::to_string(c));
}

void validate_rep(const LinearRepData& rep, const FiniteGroup& group) {
  if (rep.group_order() != group.order()) invalid_rep("representation sized for a different group");
  for (Element x = 0; x < group.order(); ++x) {
    const auto& data = rep.at(x);
    if (!data) continue;
    if (data->order != element_order(group, x))
      invalid_rep("element " + std::to_string(x) + " declared with order " + std::to_string(data->order));
    if (x == group.identity())
      for (const auto& t : data->angles)
        if (t != 0) invalid_rep("identity has a nonzero exponent");
    const auto& inv = rep.at(group.inverse(x));
    if (!inv) continue;
    std::vector<Rational> complement;
    for (const auto& t : data->angles) complement.push_back(t == 0 ? Rational(0) : Rational(1 - t));
    std::sort(complement.begin(), complement.end());
    if (complement != inv->angles)
      invalid_rep("exponents of element " + std::to_string(x) + " and its inverse are not complementary");
  }
}

} // namespace orbitwist
