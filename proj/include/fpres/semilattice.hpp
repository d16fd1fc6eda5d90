#ifndef FPRES_SEMILATTICE_HPP_
#define FPRES_SEMILATTICE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "fpres/semigroup.hpp"

namespace fpres {

/// A strong semilattice of monoids S[Y; A_alpha; phi_{alpha,beta}]:
/// a finite meet-semilattice Y, a monoid per index, and a coherent system of
/// connecting monoid homomorphisms downwards.
struct StrongSemilatticeData {
  std::size_t size = 0;                 // |Y|
  std::vector<std::pair<std::size_t, std::size_t>> le_pairs;  // (b, a) meaning b <= a
  std::vector<FiniteSemigroup> components;                    // each a monoid
  /// homs[{a,b}] (for b <= a, b != a) maps elements of components[a] into
  /// components[b]; phi_{a,a} is implicitly the identity.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>> homs;
};

/// Validated order/meet data derived from StrongSemilatticeData.
struct SemilatticeOrder {
  std::size_t size;
  std::vector<bool> le;  // le[a*size+b] : a <= b
  std::vector<std::size_t> meet;  // meet[a*size+b]

  bool leq(std::size_t a, std::size_t b) const { return le[a * size + b]; }
  std::size_t meet_of(std::size_t a, std::size_t b) const { return meet[a * size + b]; }
};

/// Validates the order (reflexive-transitive closure of le_pairs,
/// antisymmetry) and that every pair has a meet. Throws NotASemilattice.
SemilatticeOrder semilattice_order(StrongSemilatticeData const& data);

/// The built semigroup with the component embedding: element x of component
/// alpha sits at offset[alpha] + x.
struct StrongSemilattice {
  FiniteSemigroup semigroup;
  SemilatticeOrder order;
  std::vector<std::size_t> offset;  // per component
  std::vector<std::size_t> component_of;  // per element of semigroup

  Elem embed(std::size_t alpha, Elem x) const {
    return static_cast<Elem>(offset[alpha] + x);
  }
};

/// Validates every invariant (homs are monoid homomorphisms, the composition
/// law phi_{a,b} phi_{b,c} = phi_{a,c}), builds the product
/// ab = (a phi_{alpha, alpha^beta})(b phi_{beta, alpha^beta}) and re-validates
/// associativity exhaustively. Throws HomNotMonoidHom / CompositionViolation /
/// NotASemilattice.
StrongSemilattice make_strong_semilattice(StrongSemilatticeData const& data);

/// The minimum of Y: the meet of all elements, verified to be below every
/// element (a two-sided zero of Y); absent only if validation fails.
std::optional<std::size_t> semilattice_minimum(StrongSemilatticeData const& data);

}  // namespace fpres

#endif  // FPRES_SEMILATTICE_HPP_
