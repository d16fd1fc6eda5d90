#ifndef FPRES_FP1_HPP_
#define FPRES_FP1_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpres/cayley.hpp"
#include "fpres/rees.hpp"
#include "fpres/resolution.hpp"
#include "fpres/semilattice.hpp"
#include "fpres/transfer.hpp"

namespace fpres {

/// The two sides of the connectivity criterion, computed independently:
/// right-unitary generation and undirected connectivity of the right Cayley
/// graph. They must agree; a disagreement is a defect, not a tolerated state.
struct FP1Witness {
  ElemSet a;
  bool connected = false;
  bool closure_is_all = false;

  bool agrees() const { return connected == closure_is_all; }
  bool passes() const { return connected && closure_is_all; }
};

/// Both criteria for the subset `a` of the monoid `s`. The right-unitary
/// closure of the empty set in a monoid is taken to be {1} (every nonempty
/// right-unitary subsemigroup of a monoid contains the identity).
FP1Witness kobayashi_check(FiniteSemigroup const& s, ElemSet const& a);

/// Smallest subset (by size, then lexicographic) whose check passes, searched
/// exhaustively by increasing size up to `size_cap`.
std::optional<std::pair<std::size_t, ElemSet>> minimal_ru_genset(FiniteSemigroup const& s,
                                                                 std::size_t size_cap);

/// Least |A| with <K u A> = G, by increasing-size exhaustive search; the
/// witness found is written to *witness when given. Throws NotASubgroup.
std::size_t relative_rank(FiniteSemigroup const& g, ElemSet const& k,
                          ElemSet* witness = nullptr);

/// The completely simple criterion, instantiated constructively: Rees
/// decomposition, normalization, the subgroup K generated by the structure
/// matrix entries, its relative rank in H with a witness X, and the
/// certificate that F u X right-unitarily generates U^1 (F the idempotents
/// of the distinguished L-class).
struct CsFp1Report {
  std::size_t r_class_count = 0;  // |I|, the number of right ideals
  std::size_t l_class_count = 0;  // |Omega|
  std::size_t h_order = 0;
  std::size_t k_order = 0;        // |K|
  std::size_t rank = 0;           // rank(H : K)
  ElemSet witness;                // F u X inside U^1
  FP1Witness check;               // on U^1
  bool passes() const { return check.passes() && check.agrees(); }
};
CsFp1Report cs_fp1_certificate(FiniteSemigroup const& u);

/// A witness for J^1 = J u {1} lifts to S when J is a left ideal: verifies
/// the input witness, then certifies connectivity for S with the same set.
/// Throws NotALeftIdeal / InputNotAWitness.
FP1Witness ideal_witness_lift(FiniteSemigroup const& s, ElemSet const& j, ElemSet const& a);

/// From a witness A for S, builds B = F u AF inside the completely simple
/// minimal ideal J (F the idempotents of a fixed L-class of J) and certifies
/// that B witnesses T = J u {1}. Throws InputNotAWitness.
struct MinimalIdealTransfer {
  ElemSet b;          // inside S
  ElemSet t;          // J u {1} inside S
  FP1Witness check;   // on the standalone monoid T
};
MinimalIdealTransfer minimal_ideal_certificate_transfer(FiniteSemigroup const& s,
                                                        ElemSet const& a);

/// Resolve the bottom component A_e directly, lift along the ideal A_e of S
/// (or S^1), and certify the lifted resolution; also resolves S directly for
/// the exactness cross-check.
struct SemilatticeFpReport {
  std::size_t minimum = 0;
  std::vector<std::size_t> bottom_ranks, lifted_ranks, direct_ranks;
  bool lift_pass = false;
  bool direct_pass = false;
  bool all_pass() const { return lift_pass && direct_pass; }
};
SemilatticeFpReport semilattice_fp_report(StrongSemilatticeData const& data, std::size_t n);

/// Left and right reports side by side: the right-sided run uses the left
/// machinery on the opposite (transposed) table. bi = both.
struct BiFpReport {
  std::vector<std::size_t> left_ranks, right_ranks;
  bool left_pass = false;
  bool right_pass = false;
  bool bi_pass() const { return left_pass && right_pass; }
};
BiFpReport bi_fp_report(FiniteSemigroup const& s, std::size_t n);

/// Monoid completion used for FP questions about semigroups: the input if it
/// is a monoid, otherwise the input with an identity adjoined.
FiniteSemigroup monoid_completion(FiniteSemigroup const& s);

}  // namespace fpres

#endif  // FPRES_FP1_HPP_
