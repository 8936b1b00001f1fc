#include "orbitwist/gw_calculus.hpp"

#include "orbitwist/error.hpp"

#include <string>

namespace orbitwist {

Sectors sectors_and_pairing(const ClassAlgebra& algebra) {
  const auto& classes = algebra.classes();
  const std::size_t r = classes.size();
  Sectors out;
  out.pairing.size = r;
  out.pairing.entries.assign(r * r, 0);
  for (ClassIndex c = 0; c < r; ++c) {
    out.sectors.push_back(c);
    out.pairing.entries[c * r + classes.inverse_class[c]] = classes.centralizer_orders[c];
  }
  return out;
}

Integer three_point_count(const ClassAlgebra& algebra, ClassIndex c1, ClassIndex c2, ClassIndex c3) {
  SurfaceGroupSpec spec{0, {ClassConstraint{c1}, ClassConstraint{c2}, ClassConstraint{c3}}};
  return count_homs_convolution(algebra, spec);
}

ProductTable product_table(const ClassAlgebra& algebra) {
  const auto& classes = algebra.classes();
  const std::size_t r = classes.size();
  ProductTable t;
  t.size = r;
  t.coefficients.assign(r * r * r, Integer(0));
  for (ClassIndex i = 0; i < r; ++i) {
    for (ClassIndex j = 0; j < r; ++j) {
      // (1_i * 1_j) takes the value a_ijk on C_k; the three-point route must agree.
      const auto pair = convolve(algebra, algebra.indicator(i), algebra.indicator(j));
      for (ClassIndex k = 0; k < r; ++k) {
        const Integer n0 = three_point_count(algebra, i, j, classes.inverse_class[k]);
        const Integer size(static_cast<unsigned long>(classes.class_size(k)));
        if (n0 % size != 0)
          fail(ErrorKind::Internal, "gw_calculus.NonIntegralCoefficient",
               "N_0 = " + n0.get_str() + " not divisible by class size " + size.get_str());
        Integer a = n0 / size;
        if (Rational(a) != pair.values[k])
          fail(ErrorKind::Internal, "gw_calculus.InconsistentCoefficient",
               "three-point count and class product disagree at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")");
        t.coefficients[(i * r + j) * r + k] = std::move(a);
      }
    }
  }
  return t;
}

AssociativityReport check_associativity(const ProductTable& table) {
  const std::size_t r = table.size;
  AssociativityReport report;
  Integer lhs, rhs;
  for (ClassIndex a = 0; a < r; ++a)
    for (ClassIndex b = 0; b < r; ++b)
      for (ClassIndex c = 0; c < r; ++c)
        for (ClassIndex d = 0; d < r; ++d) {
          lhs = 0;
          rhs = 0;
          for (ClassIndex m = 0; m < r; ++m) {
            lhs += table(a, b, m) * table(m, c, d);
            rhs += table(b, c, m) * table(a, m, d);
          }
          if (lhs != rhs) {
            report.associative = false;
            report.counterexample = std::array<ClassIndex, 4>{a, b, c, d};
            return report;
          }
        }
  return report;
}

VirtualDimension virtual_dimension(const DimensionInput& in) {
  if (in.num_marked < 0 || static_cast<std::size_t>(in.num_marked) != in.shifts.size())
    fail(ErrorKind::Domain, "gw_calculus.InvalidDimensionInput",
         std::to_string(in.shifts.size()) + " shifts given for " + std::to_string(in.num_marked) + " marked points");
  if (in.genus < 0) fail(ErrorKind::Domain, "gw_calculus.InvalidDimensionInput", "genus must be non-negative");
  Rational shift_total = 0;
  for (const auto& s : in.shifts) {
    if (s < 0) fail(ErrorKind::Domain, "gw_calculus.InvalidDimensionInput", "negative degree shift " + to_string(s));
    shift_total += s;
  }
  VirtualDimension v;
  v.d = in.chern_pairing + Rational((in.complex_dim - 3) * (1 - in.genus) + in.num_marked) - shift_total;
  v.two_d = 2 * v.d;
  return v;
}

SelectionResult selection_rule(const SelectionInput& input, const DimensionInput& dim) {
  if (dim.num_marked < 0 || input.insertions.size() != static_cast<std::size_t>(dim.num_marked))
    fail(ErrorKind::Domain, "gw_calculus.ArityMismatch",
         std::to_string(input.insertions.size()) + " insertions for " + std::to_string(dim.num_marked) +
             " marked points");
  SelectionResult out;
  out.insertion_degree = Rational(input.deg_k);
  for (const auto& ins : input.insertions) {
    if (ins.orbifold_degree < 0 || ins.descendant_power < 0)
      fail(ErrorKind::Domain, "gw_calculus.InvalidSelectionInput",
           "insertion degrees and descendant powers must be non-negative");
    out.insertion_degree += ins.orbifold_degree + Rational(2 * ins.descendant_power);
  }
  out.expected_degree =
      2 * dim.chern_pairing + Rational(2 * (dim.complex_dim - 3) * (1 - dim.genus) + 2 * dim.num_marked);
  out.selected = out.insertion_degree == out.expected_degree;
  return out;
}

bool SplittingReport::holds() const {
  for (const auto& s : separating)
    if (!s.holds()) return false;
  return !non_separating || non_separating->holds();
}

SplittingReport splitting_identities(const ClassAlgebra& algebra, std::uint32_t genus, const SectorType& sector,
                                     const CountOptions& options) {
  const auto& classes = algebra.classes();
  auto spec_of = [](std::uint32_t g, auto first, auto last) {
    SurfaceGroupSpec s{g, {}};
    for (auto it = first; it != last; ++it) s.punctures.push_back(ClassConstraint{*it});
    return s;
  };
  const auto& cs = sector.classes;
  const Integer total = count_homs_brute(algebra, spec_of(genus, cs.begin(), cs.end()), options);

  SplittingReport report;
  for (std::uint32_t g1 = 0; g1 <= genus; ++g1) {
    for (std::size_t k1 = 0; k1 <= cs.size(); ++k1) {
      const auto mid = cs.begin() + static_cast<std::ptrdiff_t>(k1);
      SeparatingSplit split{g1, k1, total, Rational(0)};
      for (ClassIndex c = 0; c < classes.size(); ++c) {
        auto left = spec_of(g1, cs.begin(), mid);
        left.punctures.push_back(ClassConstraint{classes.inverse_class[c]});
        auto right = spec_of(genus - g1, mid, cs.end());
        right.punctures.push_back(ClassConstraint{c});
        split.right += fraction(count_homs_brute(algebra, left, options) * count_homs_brute(algebra, right, options),
                                Integer(static_cast<unsigned long>(classes.class_size(c))));
      }
      report.separating.push_back(std::move(split));
    }
  }

  if (genus >= 1) {
    NonSeparatingSplit ns{total, Integer(0)};
    const auto pairing = sectors_and_pairing(algebra).pairing;
    for (ClassIndex c = 0; c < classes.size(); ++c) {
      auto lower = spec_of(genus - 1, cs.begin(), cs.end());
      lower.punctures.push_back(ClassConstraint{c});
      lower.punctures.push_back(ClassConstraint{classes.inverse_class[c]});
      ns.right += Integer(static_cast<unsigned long>(pairing(c, classes.inverse_class[c]))) *
                  count_homs_brute(algebra, lower, options);
    }
    report.non_separating = std::move(ns);
  }
  return report;
}

} // namespace orbitwist
