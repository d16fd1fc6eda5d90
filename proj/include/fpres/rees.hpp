#ifndef FPRES_REES_HPP_
#define FPRES_REES_HPP_

#include <vector>

#include "fpres/green.hpp"
#include "fpres/semigroup.hpp"

namespace fpres {

/// Rees matrix data M[G; I, Omega; P]: a group, index sets for the R- and
/// L-classes, and an Omega x I structure matrix of group elements. Rows of P
/// are indexed by Omega, columns by I; the distinguished index of the normal
/// form sits at position 0. `normalized` means the first row and first
/// column of P are the identity.
struct ReesMatrixData {
  FiniteSemigroup group;
  std::size_t num_i = 1;      // |I|
  std::size_t num_omega = 1;  // |Omega|
  std::vector<Elem> p;        // row-major Omega x I, entries are group elements

  Elem p_at(std::size_t omega, std::size_t i) const { return p[omega * num_i + i]; }
  bool is_normalized() const;
};

/// The built semigroup together with the triple coordinatization
/// (i, g, omega) <-> element index.
struct ReesSemigroup {
  FiniteSemigroup semigroup;
  ReesMatrixData data;

  Elem encode(std::size_t i, Elem g, std::size_t omega) const;
  struct Triple {
    std::size_t i;
    Elem g;
    std::size_t omega;
  };
  Triple decode(Elem x) const;
};

/// Builds M[G; I, Omega; P] with multiplication
/// (i,g,omega)(j,h,mu) = (i, g * p[omega][j] * h, mu).
/// Throws NotAGroup / BadMatrixShape.
ReesSemigroup make_rees(ReesMatrixData const& data);

/// An elementwise-verified isomorphism between two semigroups.
struct Isomorphism {
  std::vector<Elem> map;  // domain index -> codomain index
};

/// Verifies that `map` is a product-preserving bijection from a to b.
bool check_isomorphism(FiniteSemigroup const& a, FiniteSemigroup const& b,
                       std::vector<Elem> const& map);

/// Change of coordinates bringing P to normal form (first row and column
/// identity), plus the verified isomorphism from the input's built
/// semigroup to the normalized one.
struct NormalizeResult {
  ReesMatrixData data;
  Isomorphism iso;  // make_rees(input) -> make_rees(normalized)
};
NormalizeResult normalize_rees(ReesMatrixData const& data);

/// Rees decomposition of a finite completely simple semigroup: picks the
/// least-index idempotent e, G = the maximal subgroup at e, I/Omega from the
/// R-/L-classes (e's classes first), least-index H-class representatives,
/// and returns data plus a verified isomorphism make_rees(data) -> u.
/// Throws NotCompletelySimple.
struct ReesDecomposition {
  ReesMatrixData data;
  Isomorphism iso;              // from make_rees(data).semigroup to u
  Elem e;                       // chosen idempotent in u
  std::vector<ElemSet> r_classes, l_classes;  // in the chosen order
};
ReesDecomposition rees_decomposition(FiniteSemigroup const& u);

/// Subgroup of G generated by the entries of a normalized structure matrix.
/// Throws NotNormalized.
ElemSet idempotent_entry_subgroup(ReesMatrixData const& data);

FiniteSemigroup make_left_group(FiniteSemigroup const& g, std::size_t k);
FiniteSemigroup make_right_group(FiniteSemigroup const& g, std::size_t k);
FiniteSemigroup make_rectangular_band(std::size_t m, std::size_t n);

}  // namespace fpres

#endif  // FPRES_REES_HPP_
