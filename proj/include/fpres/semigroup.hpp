#ifndef FPRES_SEMIGROUP_HPP_
#define FPRES_SEMIGROUP_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpres/error.hpp"

namespace fpres {

/// Index of an element in a multiplication table. All element identity is
/// positional; names are cosmetic display labels.
using Elem = std::uint32_t;

/// A sorted, duplicate-free set of element indices.
using ElemSet = std::vector<Elem>;

ElemSet sorted_unique(ElemSet v);
bool contains(ElemSet const& set, Elem x);

/// A finite semigroup given by its complete multiplication table.
///
/// Construction validates the table exhaustively: entries in range and
/// associativity over all triples, failing with NonAssociative naming the
/// first violating triple. A two-sided identity is detected automatically;
/// a hint that names a non-identity raises BadIdentity.
///
/// Values are immutable after construction and safe to share across threads.
class FiniteSemigroup {
 public:
  /// `table` is row-major with `order * order` entries; `table[i*order+j]`
  /// is the product of elements i and j.
  FiniteSemigroup(std::size_t order, std::vector<Elem> table,
                  std::optional<Elem> identity_hint = std::nullopt,
                  std::vector<std::string> names = {});

  static FiniteSemigroup from_rows(std::vector<std::vector<Elem>> const& rows,
                                   std::optional<Elem> identity_hint = std::nullopt,
                                   std::vector<std::string> names = {});

  std::size_t order() const noexcept { return order_; }
  Elem product(Elem x, Elem y) const { return table_[x * order_ + y]; }
  std::optional<Elem> identity() const noexcept { return identity_; }
  bool is_monoid() const noexcept { return identity_.has_value(); }
  std::vector<Elem> const& table() const noexcept { return table_; }
  std::string const& name(Elem x) const { return names_[x]; }
  std::vector<std::string> const& names() const noexcept { return names_; }

  bool is_idempotent(Elem x) const { return product(x, x) == x; }

  bool same_table(FiniteSemigroup const& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::optional<Elem> identity_;
  std::vector<std::string> names_;
};

using SgPtr = std::shared_ptr<const FiniteSemigroup>;

/// A subsemigroup materialized with its own table. Element `i` of
/// `semigroup` is element `elements[i]` of the ambient semigroup.
struct SubSemigroup {
  FiniteSemigroup semigroup;
  ElemSet elements;

  Elem to_ambient(Elem x) const { return elements[x]; }
  std::optional<Elem> from_ambient(Elem a) const;
};

/// Builds the table of a multiplicatively closed subset. Throws if the
/// subset is not closed.
SubSemigroup sub_semigroup(FiniteSemigroup const& s, ElemSet const& closed_subset);

/// Adjoins a fresh two-sided identity, unconditionally (even if the input
/// already is a monoid). The new element sits at the last index.
FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

/// The set { x : x*x = x }, ascending.
ElemSet idempotents(FiniteSemigroup const& s);

/// Smallest multiplicatively closed subset containing `gens` (fixpoint of
/// product saturation). Throws EmptyGeneratingSet on empty input.
ElemSet generated_subsemigroup(FiniteSemigroup const& s, ElemSet const& gens);

/// Smallest right unitary subsemigroup containing `gens`: alternates product
/// closure with the saturation step { s : exists t in T with s*t in T } until
/// a fixpoint is reached. Throws EmptyGeneratingSet on empty input.
ElemSet right_unitary_closure(FiniteSemigroup const& s, ElemSet const& gens);

/// True iff T is a subsemigroup with: s*t in T and t in T imply s in T.
bool is_right_unitary_subsemigroup(FiniteSemigroup const& s, ElemSet const& t);

FiniteSemigroup direct_product(FiniteSemigroup const& a, FiniteSemigroup const& b);

/// eSe, the largest submonoid with identity e. Throws NotIdempotent.
SubSemigroup local_submonoid(FiniteSemigroup const& s, Elem e);

/// The opposite semigroup (transposed table). Used to run left-module
/// machinery for right-sided questions.
FiniteSemigroup opposite(FiniteSemigroup const& s);

FiniteSemigroup left_zero_semigroup(std::size_t n);
FiniteSemigroup right_zero_semigroup(std::size_t n);
FiniteSemigroup cyclic_group(std::size_t n);
FiniteSemigroup trivial_monoid_table();

/// Adjoins a two-sided zero element (at the last index).
FiniteSemigroup adjoin_zero(FiniteSemigroup const& s);

/// A submonoid of an ambient semigroup realized standalone. The standalone
/// table has the subset's own two-sided identity detected; element i of
/// `monoid` is `elements[i]` of the ambient.
struct SubMonoid {
  SgPtr ambient;
  SgPtr monoid;
  ElemSet elements;

  Elem to_ambient(Elem x) const { return elements[x]; }
  std::optional<Elem> from_ambient(Elem a) const;
};

/// Requires `subset` closed under the ambient product and possessing a
/// two-sided identity within itself; throws NotAMonoid otherwise.
SubMonoid make_submonoid(SgPtr ambient, ElemSet subset);

}  // namespace fpres

#endif  // FPRES_SEMIGROUP_HPP_
