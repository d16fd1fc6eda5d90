#ifndef FPRES_CATALOG_HPP_
#define FPRES_CATALOG_HPP_

#include <string>
#include <vector>

#include "fpres/semigroup.hpp"
#include "fpres/semilattice.hpp"

namespace fpres {

/// Built-in test corpus: small semigroups covering groups, zero semigroups,
/// bands, left groups, Rees matrix semigroups and strong semilattices.
struct CatalogEntry {
  std::string name;
  FiniteSemigroup semigroup;
  bool completely_simple = false;
};

std::vector<CatalogEntry> const& catalog();

/// Monoid completions of every catalog entry (identity adjoined where
/// absent, name suffixed with ^1), in catalog order.
std::vector<CatalogEntry> catalog_monoids();

/// The completely simple members, as semigroups.
std::vector<CatalogEntry> catalog_completely_simple();

FiniteSemigroup klein_four();

/// Two-element chain of Z2 components glued by the identity map.
StrongSemilatticeData two_chain_z2();
/// The same chain glued by the homomorphism sending g to 1.
StrongSemilatticeData two_chain_z2_collapse();
/// Diamond semilattice of trivial monoids (the semilattice itself).
StrongSemilatticeData diamond_semilattice();

}  // namespace fpres

#endif  // FPRES_CATALOG_HPP_
