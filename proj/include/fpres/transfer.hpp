#ifndef FPRES_TRANSFER_HPP_
#define FPRES_TRANSFER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fpres/green.hpp"
#include "fpres/resolution.hpp"

namespace fpres {

struct CheckItem {
  std::string name;
  bool pass = false;
};

/// Verification record attached to every transfer construction. A bundle is
/// only handed out when every check passed; otherwise the constructor throws
/// a TransferVerificationError carrying this report.
struct TransferReport {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> context;  // ordered key/value
  std::vector<CheckItem> checks;
  ExactnessReport output_exactness;

  bool all_pass() const;
  std::string summary() const;
  void require(std::string name, bool pass) { checks.push_back({std::move(name), pass}); }
};

struct TransferVerificationError : Error {
  explicit TransferVerificationError(TransferReport rep)
      : Error("VerificationFailed", rep.summary()), report(std::move(rep)) {}
  TransferReport report;
};

struct TransferBundle {
  Resolution input;
  Resolution output;
  std::vector<std::vector<ModuleElement>> y_sets;  // in output modules, per degree
  TransferReport report;
};

/// A verified decomposition of a right ideal R of S as N x B with N a monoid
/// and B a right zero semigroup: coords[k] is the (n, b) pair of ideal[k].
struct RightIdealDecomposition {
  ElemSet ideal;                              // R, subset of S
  FiniteSemigroup n_monoid;                   // N
  FiniteSemigroup b_semigroup;                // B, must be right zero
  std::vector<std::pair<Elem, Elem>> coords;  // parallel to ideal
  Elem distinguished_b;                       // y, fixing M = N x {y}
};

/// Restriction along the exact functor A -> eA for e = (1, y): turns a free
/// resolution over ZS into one over ZN with every rank multiplied by |B|.
/// The restricted maps are re-expressed in the basis F.X through the unique
/// factorization r = m f of ideal elements.
TransferBundle phi_restrict(Resolution const& res_s, RightIdealDecomposition const& dec);

/// Specializes phi_restrict to R = eS for an idempotent e in the completely
/// simple minimal ideal of S: builds the H x F decomposition with
/// F = E(S) n R and returns a resolution of the maximal subgroup at e.
TransferBundle maximal_subgroup_restrict(Resolution const& res_s, Elem e);

/// Lift along an ideal with a two-sided identity: given a standard-form
/// resolution of the ideal T (over T's own monoid ring), produces a
/// resolution of S with the alternating (1-e)/e boundary pattern, constructs
/// the kernel generating sets Y_k and certifies <Y_k> = ker d'_k.
TransferBundle ideal_lift(Resolution const& res_t, SgPtr s, ElemSet const& ideal);

/// Setting for the completely simple descent: S = U^1, distinguished
/// idempotent e, its L-class L, T = L u {1}, and the other idempotents F of
/// e's R-class with their L-classes.
struct DescentContext {
  SgPtr S;                    // U^1 (identity at the last index)
  std::size_t u_order = 0;    // U occupies indices 0..u_order-1
  Elem e = 0;                 // least idempotent of U
  ElemSet L;                  // L-class of e in U
  SubMonoid T;                // L u {1} as a standalone monoid
  ElemSet F;                  // idempotents of R_e minus e
  std::vector<ElemSet> L_f;   // per member of F, its L-class
  std::size_t num_r_classes = 0;
  std::size_t num_l_classes = 0;
};

DescentContext make_descent_context(FiniteSemigroup const& u);

/// Unique decomposition of a ring element over S = U^1 into its part
/// supported on T and the parts supported on the L-classes of the F
/// idempotents.
struct RingDecomposition {
  RingElement part_t;                 // supported on T
  std::vector<RingElement> part_f;    // parallel to ctx.F, supported on L_f
};
RingDecomposition decompose_ring_element(RingElement const& lam, DescentContext const& ctx);

/// Descent S -> T for a completely simple U with finitely many left ideals.
/// Requires every recorded X_j of res_s to generate ker d_j over ZT; if not,
/// the resolution is rebuilt with the change-of-scalars upgrade X u FX and
/// the report records that this happened. Verifies the full comparison-map
/// suite: theta/phi additivity and ZT-equivariance, phi.theta = id on full
/// bases, kernel containments both ways, the generating property of phi(Y),
/// <Y_m> = ker d'_m, and exactness of the output.
TransferBundle cs_descend(Resolution const& res_s, DescentContext const& ctx);

/// Setting for the left-group lift: T = L^1 for a left group L, F = E(L),
/// distinguished idempotent e, H its maximal subgroup.
struct LeftGroupContext {
  SgPtr T;        // L^1
  std::size_t l_order = 0;
  ElemSet F;      // E(L)
  Elem e = 0;
  SubMonoid H;    // maximal subgroup at e, standalone group
};

LeftGroupContext make_left_group_context(FiniteSemigroup const& l);
/// The same data extracted from a descent context (shares its T).
LeftGroupContext left_group_context_of(DescentContext const& ctx);

/// Lift H -> T = L^1 for a left group L: standard-form input over ZH,
/// output over ZT with the (f-1)/f[f] boundary branches, Y_m construction,
/// lattice certification and the rank formula rank(B_m) = sum |X_i| + |F|.
TransferBundle left_group_lift(Resolution const& res_h, LeftGroupContext const& ctx);

/// End-to-end demonstration on a completely simple U: resolve the maximal
/// subgroup H and lift to T = L^1; resolve S = U^1 with ZT-generating kernel
/// sets and descend to T; certify both T-resolutions and report all ranks
/// and the R-/L-class counts.
struct PipelineReport {
  std::size_t u_order = 0;
  std::size_t h_order = 0;
  std::size_t r_class_count = 0;  // number of right ideals
  std::size_t l_class_count = 0;  // number of left ideals
  std::vector<std::size_t> h_ranks, lift_ranks, s_ranks, descent_ranks;
  bool lift_pass = false;
  bool descent_pass = false;
  bool all_pass() const { return lift_pass && descent_pass; }
};
PipelineReport completely_simple_pipeline(FiniteSemigroup const& u, std::size_t n);

/// Copy of r with maps[degree] perturbed by delta at one coefficient.
/// Exists for mutation-sensitivity testing of verify_exact.
Resolution with_mutated_map(Resolution const& r, std::size_t degree, std::size_t label_pos,
                            std::size_t comp, Elem elem, Int const& delta);

/// Throws HypothesisViolation unless res is in standard form: A_0 the rank-1
/// module, d_0 the augmentation, A_{j+1} free on labels matching X_j with
/// d_{j+1}[x] = x.
void check_standard_form(Resolution const& res, std::string const& what);

}  // namespace fpres

#endif  // FPRES_TRANSFER_HPP_
