#include "fpres/resolution.hpp"

#include <algorithm>

namespace fpres {

Resolution augmentation_resolution(SgPtr monoid, std::optional<ElemSet> scalar_subring) {
  ModuleMap eps = augmentation(monoid);
  if (scalar_subring.has_value()) {
    ElemSet const& t = *scalar_subring;
    if (!contains(t, *monoid->identity())) {
      throw NotAMonoidError("scalar subring must contain the identity");
    }
    for (Elem a : t) {
      for (Elem b : t) {
        if (!contains(t, monoid->product(a, b))) {
          throw NotAMonoidError("scalar subring must be closed under the product");
        }
      }
    }
  }
  Resolution r;
  r.monoid = monoid;
  r.modules = {eps.domain()};
  r.maps = {std::move(eps)};
  r.scalar_subring = std::move(scalar_subring);
  return r;
}

RowLattice module_span(ModPtr const& module, std::vector<ModuleElement> const& xs,
                       std::optional<ElemSet> const& scalars) {
  if (xs.empty()) {
    return RowLattice::zero(flat_dim(*module));
  }
  SgPtr monoid = module->monoid();
  IntMatrix gens(0, flat_dim(*module));
  auto act_rows = [&](ModuleElement const& x) {
    if (scalars.has_value()) {
      for (Elem t : *scalars) {
        gens.append_row(flatten(scalar_act(RingElement::of(monoid, t), x)));
      }
    } else {
      for (Elem t = 0; t < monoid->order(); ++t) {
        gens.append_row(flatten(scalar_act(RingElement::of(monoid, t), x)));
      }
    }
  };
  for (auto const& x : xs) {
    if (!x.module()->same_as(*module)) {
      throw RingMismatchError("span elements from different modules");
    }
    act_rows(x);
  }
  return RowLattice(gens);
}

std::vector<ModuleElement> kernel_module_generators(
    ModuleMap const& f, std::optional<ElemSet> const& scalars) {
  IntMatrix ker = kernel_basis(z_matrix_of(f));
  std::vector<ModuleElement> gens;
  if (ker.rows() == 0) {
    return gens;
  }
  RowLattice span = RowLattice::zero(ker.cols());
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    IntRow row = ker.row(r);
    if (span.contains(row)) {
      continue;
    }
    gens.push_back(unflatten(f.domain(), row));
    span = module_span(f.domain(), gens, scalars);
  }
  // self-certification: the scalar span must reproduce the kernel lattice
  RowLattice kernel_lattice(ker);
  if (!(span == kernel_lattice)) {
    throw LatticeMismatchError("kernel generator span does not match the kernel lattice");
  }
  return gens;
}

void extend_resolution(Resolution& r, std::size_t target_length) {
  while (r.length() < target_length) {
    std::size_t j = r.length();
    std::vector<ModuleElement> xs;
    if (r.kernel_gens.size() > j) {
      xs = r.kernel_gens[j];
    } else {
      xs = kernel_module_generators(r.maps[j], r.scalar_subring);
      r.kernel_gens.push_back(xs);
    }
    std::vector<Label> labels;
    labels.reserve(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t) {
      labels.push_back(Label::make_gen(static_cast<int>(j), static_cast<int>(t)));
    }
    ModPtr next = make_module(r.monoid, std::move(labels));
    r.modules.push_back(next);
    r.maps.emplace_back(next, r.modules[j], xs);
  }
}

bool ExactnessReport::all_pass() const {
  if (!augmentation_surjective) {
    return false;
  }
  return std::all_of(degrees.begin(), degrees.end(), [](DegreeVerdict const& d) {
    return d.composition_zero && d.exact;
  });
}

std::size_t ExactnessReport::first_failure() const {
  if (!augmentation_surjective) {
    return 0;
  }
  for (auto const& d : degrees) {
    if (!d.composition_zero || !d.exact) {
      return d.degree;
    }
  }
  return npos;
}

ExactnessReport verify_exact(Resolution const& r) {
  ExactnessReport report;
  // surjectivity of d_0 onto Z: the image lattice must be all of Z
  RowLattice im0{z_matrix_of(r.maps[0])};
  report.augmentation_surjective =
      im0.rank() == 1 && im0.basis().at(0, 0) == 1;
  for (std::size_t j = 0; j + 1 <= r.length(); ++j) {
    DegreeVerdict v;
    v.degree = j;
    v.rank = r.modules[j]->rank();
    ModuleMap composite = r.maps[j].compose(r.maps[j + 1]);
    v.composition_zero = composite.is_zero_map();
    RowLattice image{z_matrix_of(r.maps[j + 1])};
    RowLattice kernel{kernel_basis(z_matrix_of(r.maps[j]))};
    v.image_rank = image.rank();
    v.kernel_rank = kernel.rank();
    v.exact = image == kernel;
    report.degrees.push_back(std::move(v));
  }
  return report;
}

std::vector<ModuleElement> zt_generators_from_zs(std::vector<ModuleElement> const& xs,
                                                 ElemSet const& t_submonoid,
                                                 ElemSet const& f_idempotents) {
  if (xs.empty()) {
    return xs;
  }
  ModPtr module = xs.front().module();
  SgPtr monoid = module->monoid();
  std::vector<ModuleElement> out = xs;
  for (Elem f : f_idempotents) {
    RingElement ff = RingElement::of(monoid, f);
    for (auto const& x : xs) {
      out.push_back(scalar_act(ff, x));
    }
  }
  RowLattice zs_span = module_span(module, xs);
  RowLattice zt_span = module_span(module, out, t_submonoid);
  if (!(zs_span == zt_span)) {
    throw LatticeMismatchError(
        "ZT-span of X u FX differs from the full-ring span of X");
  }
  return out;
}

}  // namespace fpres
