#ifndef FPRES_RING_HPP_
#define FPRES_RING_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fpres/intmatrix.hpp"
#include "fpres/semigroup.hpp"

namespace fpres {

/// The shared one-element monoid over which the trivial module Z lives.
SgPtr trivial_monoid();

/// An element of the integral monoid ring ZS: a finite formal Z-combination
/// of monoid elements. No explicit zero coefficients are stored.
class RingElement {
 public:
  explicit RingElement(SgPtr monoid) : monoid_(std::move(monoid)) {}
  static RingElement of(SgPtr monoid, Elem s, Int coeff = 1);

  SgPtr const& monoid() const noexcept { return monoid_; }
  std::map<Elem, Int> const& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add(Elem s, Int const& c);
  Int coeff(Elem s) const;

  RingElement& operator+=(RingElement const& other);
  RingElement& operator-=(RingElement const& other);
  RingElement operator+(RingElement const& other) const;
  RingElement operator-(RingElement const& other) const;
  RingElement operator-() const;
  RingElement operator*(Int const& c) const;
  /// Convolution through the multiplication table.
  RingElement operator*(RingElement const& other) const;
  bool operator==(RingElement const& other) const;

  /// Sum of coefficients; the image under the standard augmentation.
  Int augmentation() const;

  std::string to_string() const;

 private:
  void check_same_ring(RingElement const& other) const;
  SgPtr monoid_;
  std::map<Elem, Int> coeffs_;
};

/// Basis labels are structured because the transfer boundary formulas
/// dispatch on the label's origin:
///   Unit      the single generator of a rank-1 module A0 = ZS
///   Gen       [x] for x the `index`-th kernel generator in X_stratum
///   Pair      [f, x] with f an idempotent (ambient element id) and x as above
///   Idem      [f] (or the distinguished [e]) for an idempotent f
struct Label {
  enum class Kind : std::uint8_t { Unit, Gen, Pair, Idem };
  Kind kind = Kind::Unit;
  int stratum = -1;
  int index = -1;
  Elem idem = 0;

  static Label make_unit() { return Label{Kind::Unit, -1, -1, 0}; }
  static Label make_gen(int stratum, int index) {
    return Label{Kind::Gen, stratum, index, 0};
  }
  static Label make_pair(Elem f, int stratum, int index) {
    return Label{Kind::Pair, stratum, index, f};
  }
  static Label make_idem(Elem f) { return Label{Kind::Idem, -1, -1, f}; }

  auto operator<=>(Label const&) const = default;
  std::string text() const;
};

/// A finitely generated free left module over the monoid ring of `monoid`,
/// with an ordered list of distinct basis labels.
class FreeModule {
 public:
  FreeModule(SgPtr monoid, std::vector<Label> labels);

  SgPtr const& monoid() const noexcept { return monoid_; }
  std::vector<Label> const& labels() const noexcept { return labels_; }
  std::size_t rank() const noexcept { return labels_.size(); }
  std::size_t position(Label const& l) const;  // throws if absent

  bool same_as(FreeModule const& other) const {
    return monoid_ == other.monoid_ && labels_ == other.labels_;
  }

 private:
  SgPtr monoid_;
  std::vector<Label> labels_;
};

using ModPtr = std::shared_ptr<const FreeModule>;

ModPtr make_module(SgPtr monoid, std::vector<Label> labels);

/// The trivial module Z, modeled as the rank-1 free module over the trivial
/// monoid so that the augmentation fits the ModuleMap shape uniformly.
ModPtr integers_module();

/// An element of a free module: one ring element per basis label.
class ModuleElement {
 public:
  explicit ModuleElement(ModPtr module);
  static ModuleElement basis(ModPtr module, std::size_t position);

  ModPtr const& module() const noexcept { return module_; }
  RingElement const& component(std::size_t i) const { return comps_[i]; }
  RingElement& component(std::size_t i) { return comps_[i]; }
  bool is_zero() const;

  ModuleElement& operator+=(ModuleElement const& other);
  ModuleElement& operator-=(ModuleElement const& other);
  ModuleElement operator+(ModuleElement const& other) const;
  ModuleElement operator-(ModuleElement const& other) const;
  ModuleElement operator*(Int const& c) const;
  bool operator==(ModuleElement const& other) const;

  std::string to_string() const;

 private:
  ModPtr module_;
  std::vector<RingElement> comps_;
};

/// lam . m, the left action extended bilinearly. If m lives over the trivial
/// monoid the scalar acts through its augmentation (the trivial-module
/// action); otherwise the rings must agree.
ModuleElement scalar_act(RingElement const& lam, ModuleElement const& m);

/// A homomorphism of free left modules, given by the images of the domain
/// basis. Application and composition are exact.
class ModuleMap {
 public:
  ModuleMap(ModPtr domain, ModPtr codomain, std::vector<ModuleElement> images);

  ModPtr const& domain() const noexcept { return domain_; }
  ModPtr const& codomain() const noexcept { return codomain_; }
  std::vector<ModuleElement> const& images() const noexcept { return images_; }
  ModuleElement const& image_of(std::size_t i) const { return images_[i]; }

  ModuleElement apply(ModuleElement const& m) const;
  /// this after f  (domain of the result = domain of f).
  ModuleMap compose(ModuleMap const& f) const;
  bool is_zero_map() const;

  /// Returns a copy with images[label_pos].component(comp).coeff(elem) shifted
  /// by delta. Used by mutation-sensitivity tests.
  ModuleMap with_bumped_coefficient(std::size_t label_pos, std::size_t comp, Elem elem,
                                    Int const& delta) const;

 private:
  ModPtr domain_;
  ModPtr codomain_;
  std::vector<ModuleElement> images_;
};

/// The standard augmentation ZS -> Z sending every monoid element to 1,
/// packaged as a ModuleMap from the rank-1 module over S. Throws NotAMonoid.
ModuleMap augmentation(SgPtr monoid);

/// Flattening: a free ZS-module of rank r is a Z-module of rank r*|S| with
/// basis { s.[b] }, ordered basis-major (all s for label 0, then label 1, ...).
std::size_t flat_dim(FreeModule const& m);
IntRow flatten(ModuleElement const& x);
ModuleElement unflatten(ModPtr module, IntRow const& row);

/// The integer matrix of f in the flattened bases under the row convention:
/// flatten(f(m)) == flatten(m) * z_matrix_of(f).
IntMatrix z_matrix_of(ModuleMap const& f);

}  // namespace fpres

#endif  // FPRES_RING_HPP_
