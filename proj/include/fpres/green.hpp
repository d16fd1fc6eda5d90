#ifndef FPRES_GREEN_HPP_
#define FPRES_GREEN_HPP_

#include <vector>

#include "fpres/semigroup.hpp"

namespace fpres {

/// Green's relations of a finite semigroup, computed from principal-ideal
/// equality over S^1 (an identity is adjoined only if absent). Classes are
/// sorted ascending and listed by least element, so all outputs are
/// deterministic. D is the join of R and L.
struct GreenStructure {
  std::vector<ElemSet> r_classes;
  std::vector<ElemSet> l_classes;
  std::vector<ElemSet> h_classes;
  std::vector<ElemSet> d_classes;
  std::vector<Elem> r_of, l_of, h_of, d_of;  // element -> class index
  std::vector<bool> h_is_group;              // H-class contains an idempotent

  std::size_t num_r() const { return r_classes.size(); }
  std::size_t num_l() const { return l_classes.size(); }
};

GreenStructure green_classes(FiniteSemigroup const& s);

/// The H-class of an idempotent e as a group, with the index map into s.
/// Group axioms are asserted on the result. Throws NotIdempotent.
SubSemigroup maximal_subgroup(FiniteSemigroup const& s, Elem e);

/// Simple <=> no proper two-sided ideal: y in S^1 x S^1 for all x, y.
bool is_simple(FiniteSemigroup const& s);

/// A finite simple semigroup is completely simple, so this just forwards
/// to is_simple; kept separate because callers care about the stronger
/// property by name.
bool is_completely_simple(FiniteSemigroup const& s);

/// The kernel: the minimum two-sided ideal (intersection of all principal
/// two-sided ideals; for a finite semigroup this is the smallest one).
ElemSet minimal_ideal(FiniteSemigroup const& s);

/// The principal two-sided ideal S^1 x S^1.
ElemSet principal_two_sided_ideal(FiniteSemigroup const& s, Elem x);

bool is_left_ideal(FiniteSemigroup const& s, ElemSet const& j);
bool is_right_ideal(FiniteSemigroup const& s, ElemSet const& j);
bool is_two_sided_ideal(FiniteSemigroup const& s, ElemSet const& j);

/// True iff g (with its own table) is a group: monoid where every element
/// has a two-sided inverse.
bool is_group(FiniteSemigroup const& g);

/// Inverse of x in a group table.
Elem group_inverse(FiniteSemigroup const& g, Elem x);

/// True iff s is a left group: completely simple with a single L-class.
bool is_left_group(FiniteSemigroup const& s);

}  // namespace fpres

#endif  // FPRES_GREEN_HPP_
