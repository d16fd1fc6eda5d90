#ifndef FPRES_RESOLUTION_HPP_
#define FPRES_RESOLUTION_HPP_

#include <optional>
#include <vector>

#include "fpres/ring.hpp"

namespace fpres {

/// A partial free resolution of the trivial left module Z over the monoid
/// ring: modules A_0..A_n, maps d_0..d_n with d_0 the augmentation, and the
/// recorded kernel generating sets X_j (basis of A_{j+1} corresponds to X_j,
/// with d_{j+1}[x] = x).
///
/// When `scalar_subring` is set (a submonoid T of the acting monoid, as a
/// subset of its elements), every recorded X_j generates ker d_j as a module
/// over ZT rather than merely over the full ring.
struct Resolution {
  SgPtr monoid;
  std::vector<ModPtr> modules;                        // A_0..A_n
  std::vector<ModuleMap> maps;                        // d_0..d_n
  std::vector<std::vector<ModuleElement>> kernel_gens;  // X_0..X_{n-1}
  std::optional<ElemSet> scalar_subring;

  std::size_t length() const { return maps.size() - 1; }
};

/// The length-0 resolution: A_0 = ZS, d_0 = the augmentation.
Resolution augmentation_resolution(SgPtr monoid,
                                   std::optional<ElemSet> scalar_subring = std::nullopt);

/// The Z-lattice spanned by { t.x : t in scalars, x in xs } in the flattened
/// coordinates of `module`. `scalars` defaults to the full acting monoid
/// (the module span). An empty xs yields the zero lattice.
RowLattice module_span(ModPtr const& module, std::vector<ModuleElement> const& xs,
                       std::optional<ElemSet> const& scalars = std::nullopt);

/// A finite set X whose scalar span is exactly the integer kernel lattice of
/// f. Greedy: walk a Z-kernel basis in HNF row order and keep any vector not
/// already in the span of what was kept. The postcondition is re-verified
/// before returning (self-certifying).
std::vector<ModuleElement> kernel_module_generators(
    ModuleMap const& f, std::optional<ElemSet> const& scalars = std::nullopt);

/// Repeatedly extracts kernel generators X_j, builds A_{j+1} free on labels
/// [x], and extends the map by [x] -> x, until the resolution has the target
/// length. Respects r.scalar_subring.
void extend_resolution(Resolution& r, std::size_t target_length);

struct DegreeVerdict {
  std::size_t degree = 0;
  std::size_t rank = 0;          // rank of A_degree
  bool composition_zero = true;  // d_degree . d_{degree+1} == 0 (when defined)
  bool exact = true;             // im d_{degree+1} == ker d_degree as Z-lattices
  std::size_t image_rank = 0;
  std::size_t kernel_rank = 0;
};

struct ExactnessReport {
  bool augmentation_surjective = false;
  std::vector<DegreeVerdict> degrees;  // indices 0..n-1

  bool all_pass() const;
  /// Smallest failing degree, or npos when everything passes.
  std::size_t first_failure() const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Certifies d.d = 0 symbolically and per-degree lattice equality of image
/// and kernel; failures are report entries, never exceptions.
ExactnessReport verify_exact(Resolution const& r);

/// Change of scalars: X is a generating set of a submodule over the full
/// ring; returns X together with F.X = { f.x } and verifies that the ZT-span
/// of the union equals the full-ring span of X. Throws LatticeMismatch when
/// the verification fails.
std::vector<ModuleElement> zt_generators_from_zs(std::vector<ModuleElement> const& xs,
                                                 ElemSet const& t_submonoid,
                                                 ElemSet const& f_idempotents);

}  // namespace fpres

#endif  // FPRES_RESOLUTION_HPP_
