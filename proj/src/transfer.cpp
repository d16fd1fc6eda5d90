#include "fpres/transfer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace fpres {

bool TransferReport::all_pass() const {
  if (!output_exactness.all_pass()) {
    return false;
  }
  return std::all_of(checks.begin(), checks.end(),
                     [](CheckItem const& c) { return c.pass; });
}

std::string TransferReport::summary() const {
  std::ostringstream os;
  os << construction << ":";
  for (auto const& c : checks) {
    if (!c.pass) {
      os << " FAIL(" << c.name << ")";
    }
  }
  if (!output_exactness.all_pass()) {
    os << " FAIL(output_exactness at degree "
       << output_exactness.first_failure() << ")";
  }
  if (all_pass()) {
    os << " all checks passed";
  }
  return os.str();
}

namespace {

constexpr int kEquivSamplesPerDegree = 40;

RingElement map_ring(RingElement const& x, SgPtr const& target,
                     std::vector<Elem> const& elem_map) {
  RingElement out(target);
  for (auto const& [s, c] : x.coeffs()) {
    out.add(elem_map[s], c);
  }
  return out;
}

// ambient ring element with support in sub.elements -> element of the sub ring
RingElement restrict_ring(RingElement const& x, SubMonoid const& sub) {
  RingElement out(sub.monoid);
  for (auto const& [s, c] : x.coeffs()) {
    auto pos = sub.from_ambient(s);
    if (!pos.has_value()) {
      throw HypothesisViolationError("ring element not supported on the submonoid");
    }
    out.add(*pos, c);
  }
  return out;
}

RingElement lift_ring(RingElement const& x, SgPtr const& ambient, ElemSet const& to_amb) {
  RingElement out(ambient);
  for (auto const& [s, c] : x.coeffs()) {
    out.add(to_amb[s], c);
  }
  return out;
}

// copies components of x into the larger module `into`, translating ring
// coefficients along elem_map (source ring index -> target ring index);
// labels of x's module must all occur in `into`.
ModuleElement include_into(ModuleElement const& x, ModPtr const& into,
                           std::vector<Elem> const& elem_map) {
  ModuleElement out(into);
  for (std::size_t i = 0; i < x.module()->rank(); ++i) {
    if (x.component(i).is_zero()) {
      continue;
    }
    std::size_t pos = into->position(x.module()->labels()[i]);
    out.component(pos) = map_ring(x.component(i), into->monoid(), elem_map);
  }
  return out;
}

ModuleElement ring_at_label(ModPtr const& module, Label const& label,
                            RingElement const& coeff) {
  ModuleElement out(module);
  out.component(module->position(label)) = coeff;
  return out;
}

RingElement random_ring_element(std::mt19937_64& rng, SgPtr const& monoid,
                                ElemSet const& allowed) {
  std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  RingElement out(monoid);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    int c = coeff(rng);
    if (c == 0) {
      c = 1;
    }
    out.add(allowed[pick(rng)], c);
  }
  return out;
}

ModuleElement random_module_element(std::mt19937_64& rng, ModPtr const& module,
                                    ElemSet const& allowed) {
  ModuleElement out(module);
  std::uniform_int_distribution<std::size_t> pick(0, module->rank() - 1);
  std::uniform_int_distribution<int> comps(1, 2);
  int k = comps(rng);
  for (int i = 0; i < k; ++i) {
    std::size_t p = pick(rng);
    out.component(p) += random_ring_element(rng, module->monoid(), allowed);
  }
  return out;
}

ElemSet all_elements(FiniteSemigroup const& s) {
  ElemSet out(s.order());
  for (Elem x = 0; x < s.order(); ++x) {
    out[x] = x;
  }
  return out;
}

RowLattice kernel_lattice_of(ModuleMap const& f) {
  return RowLattice(kernel_basis(z_matrix_of(f)));
}

bool all_in_kernel(ModuleMap const& f, std::vector<ModuleElement> const& ys) {
  return std::all_of(ys.begin(), ys.end(),
                     [&f](ModuleElement const& y) { return f.apply(y).is_zero(); });
}

void throw_if_failed(TransferReport& rep, Resolution const& output) {
  rep.output_exactness = verify_exact(output);
  if (!rep.all_pass()) {
    throw TransferVerificationError(rep);
  }
}

}  // namespace

void check_standard_form(Resolution const& res, std::string const& what) {
  auto fail = [&what](std::string const& why) {
    throw HypothesisViolationError(what + ": " + why);
  };
  if (res.modules.empty() || res.modules[0]->rank() != 1
      || res.modules[0]->labels()[0] != Label::make_unit()) {
    fail("A_0 must be the rank-1 free module");
  }
  if (!res.maps[0].codomain()->same_as(*integers_module())
      || !(res.maps[0].image_of(0) == ModuleElement::basis(integers_module(), 0))) {
    fail("d_0 must be the standard augmentation");
  }
  if (res.kernel_gens.size() < res.length()) {
    fail("kernel generating sets X_j must be recorded");
  }
  for (std::size_t j = 1; j <= res.length(); ++j) {
    auto const& xs = res.kernel_gens[j - 1];
    if (res.modules[j]->rank() != xs.size()) {
      fail("A_" + std::to_string(j) + " basis must correspond to X_" + std::to_string(j - 1));
    }
    for (std::size_t t = 0; t < xs.size(); ++t) {
      if (res.modules[j]->labels()[t] != Label::make_gen(static_cast<int>(j - 1),
                                                         static_cast<int>(t))) {
        fail("A_" + std::to_string(j) + " labels must be the [x] labels of X_"
             + std::to_string(j - 1));
      }
      if (!(res.maps[j].image_of(t) == xs[t])) {
        fail("d_" + std::to_string(j) + " must extend [x] -> x");
      }
    }
  }
}

Resolution with_mutated_map(Resolution const& r, std::size_t degree, std::size_t label_pos,
                            std::size_t comp, Elem elem, Int const& delta) {
  Resolution out = r;
  out.maps[degree] =
      out.maps[degree].with_bumped_coefficient(label_pos, comp, elem, delta);
  return out;
}

// ---------------------------------------------------------------------------
// phi restriction (right ideal isomorphic to N x B)
// ---------------------------------------------------------------------------

TransferBundle phi_restrict(Resolution const& res_s, RightIdealDecomposition const& dec) {
  SgPtr S = res_s.monoid;
  if (!is_right_ideal(*S, dec.ideal)) {
    throw NotARightIdealError("the designated subset is not a right ideal");
  }
  FiniteSemigroup const& b_sg = dec.b_semigroup;
  for (Elem x = 0; x < b_sg.order(); ++x) {
    for (Elem y = 0; y < b_sg.order(); ++y) {
      if (b_sg.product(x, y) != y) {
        throw NotRightZeroError("B is not a right zero semigroup");
      }
    }
  }
  if (!dec.n_monoid.is_monoid()) {
    throw NotAMonoidError("the N factor must be a monoid");
  }
  std::size_t nn = dec.n_monoid.order();
  std::size_t nb = b_sg.order();
  if (dec.ideal.size() != nn * nb || dec.coords.size() != dec.ideal.size()
      || dec.distinguished_b >= nb) {
    throw IsoCheckFailedError("coordinate map has the wrong shape");
  }
  std::map<std::pair<Elem, Elem>, Elem> from_coords;
  std::vector<Elem> pos_in_ideal(S->order(), static_cast<Elem>(-1));
  for (std::size_t k = 0; k < dec.ideal.size(); ++k) {
    auto [n, b] = dec.coords[k];
    if (n >= nn || b >= nb
        || !from_coords.emplace(std::make_pair(n, b), dec.ideal[k]).second) {
      throw IsoCheckFailedError("coordinates are not a bijection onto N x B");
    }
    pos_in_ideal[dec.ideal[k]] = static_cast<Elem>(k);
  }
  for (std::size_t k = 0; k < dec.ideal.size(); ++k) {
    for (std::size_t k2 = 0; k2 < dec.ideal.size(); ++k2) {
      Elem prod = S->product(dec.ideal[k], dec.ideal[k2]);
      if (pos_in_ideal[prod] == static_cast<Elem>(-1)) {
        throw IsoCheckFailedError("ideal is not closed under the product");
      }
      auto [n1, b1] = dec.coords[k];
      auto [n2, b2] = dec.coords[k2];
      auto have = dec.coords[pos_in_ideal[prod]];
      if (have != std::make_pair(dec.n_monoid.product(n1, n2), b2)) {
        throw IsoCheckFailedError("coordinates do not preserve the product");
      }
    }
  }
  Elem one_n = *dec.n_monoid.identity();
  std::vector<Elem> f_of_b(nb);
  for (Elem b = 0; b < nb; ++b) {
    f_of_b[b] = from_coords.at({one_n, b});
  }
  Elem e_amb = f_of_b[dec.distinguished_b];
  for (Elem r : dec.ideal) {
    if (S->product(e_amb, r) != r) {
      throw IsoCheckFailedError("e = (1, y) is not a left identity on the ideal");
    }
  }

  TransferReport rep;
  rep.construction = "phi_restrict";
  rep.context.emplace_back("b_size", std::to_string(nb));
  rep.context.emplace_back("ideal_size", std::to_string(dec.ideal.size()));
  rep.context.emplace_back("e", S->name(e_amb));
  rep.require("right_ideal", true);
  rep.require("b_right_zero", true);
  rep.require("iso_verified", true);

  SgPtr N = std::make_shared<const FiniteSemigroup>(dec.n_monoid);
  std::size_t len = res_s.length();

  Resolution out;
  out.monoid = N;
  std::vector<ModPtr> bmods;
  for (std::size_t i = 0; i <= len; ++i) {
    std::vector<Label> labels;
    labels.reserve(res_s.modules[i]->rank() * nb);
    for (std::size_t p = 0; p < res_s.modules[i]->rank(); ++p) {
      for (Elem b = 0; b < nb; ++b) {
        labels.push_back(Label::make_pair(f_of_b[b], 0, static_cast<int>(p * nb + b)));
      }
    }
    bmods.push_back(make_module(N, std::move(labels)));
  }

  // expresses a ZS element supported on the ideal in the F.X basis
  auto express = [&](ModuleElement const& img_s, std::size_t degree) {
    ModuleElement out_elt(bmods[degree]);
    for (std::size_t p = 0; p < img_s.module()->rank(); ++p) {
      for (auto const& [r, c] : img_s.component(p).coeffs()) {
        if (pos_in_ideal[r] == static_cast<Elem>(-1)) {
          throw IsoCheckFailedError("restricted image escaped the ideal");
        }
        auto [nval, bval] = dec.coords[pos_in_ideal[r]];
        out_elt.component(p * nb + bval).add(nval, c);
      }
    }
    return out_elt;
  };
  // maps an expressed element back into the ZS module (for faithfulness checks)
  auto unexpress = [&](ModuleElement const& b_elt, std::size_t degree) {
    ModuleElement out_elt(res_s.modules[degree]);
    for (std::size_t p = 0; p < res_s.modules[degree]->rank(); ++p) {
      for (Elem b = 0; b < nb; ++b) {
        for (auto const& [nval, c] : b_elt.component(p * nb + b).coeffs()) {
          out_elt.component(p).add(from_coords.at({static_cast<Elem>(nval), b}), c);
        }
      }
    }
    return out_elt;
  };

  out.modules = bmods;
  bool faithful = true;
  for (std::size_t i = 0; i <= len; ++i) {
    std::vector<ModuleElement> images;
    images.reserve(bmods[i]->rank());
    for (std::size_t p = 0; p < res_s.modules[i]->rank(); ++p) {
      for (Elem b = 0; b < nb; ++b) {
        RingElement f_ring = RingElement::of(S, f_of_b[b]);
        ModuleElement img_s = res_s.maps[i].apply(
            scalar_act(f_ring, ModuleElement::basis(res_s.modules[i], p)));
        if (i == 0) {
          images.push_back(img_s);  // already in Z
        } else {
          ModuleElement expressed = express(img_s, i - 1);
          faithful = faithful && unexpress(expressed, i - 1) == img_s;
          images.push_back(std::move(expressed));
        }
      }
    }
    out.maps.emplace_back(bmods[i], i == 0 ? integers_module() : bmods[i - 1],
                          std::move(images));
  }
  rep.require("restriction_faithful", faithful);
  bool ranks_ok = true;
  for (std::size_t i = 0; i <= len; ++i) {
    ranks_ok = ranks_ok && bmods[i]->rank() == res_s.modules[i]->rank() * nb;
  }
  rep.require("rank_multiplied_by_b", ranks_ok);

  throw_if_failed(rep, out);
  return TransferBundle{res_s, std::move(out), {}, std::move(rep)};
}

TransferBundle maximal_subgroup_restrict(Resolution const& res_s, Elem e) {
  SgPtr S = res_s.monoid;
  if (e >= S->order() || !S->is_idempotent(e)) {
    throw NotIdempotentError(e);
  }
  ElemSet u = minimal_ideal(*S);
  SubSemigroup u_sub = sub_semigroup(*S, u);
  if (!is_completely_simple(u_sub.semigroup)) {
    throw NotCompletelySimpleError("the minimal ideal is not completely simple");
  }
  if (!contains(u, e)) {
    throw HypothesisViolationError("idempotent must lie in the minimal ideal");
  }
  ElemSet r;
  r.push_back(e);
  for (Elem s = 0; s < S->order(); ++s) {
    r.push_back(S->product(e, s));
  }
  r = sorted_unique(r);
  ElemSet f;
  for (Elem x : r) {
    if (S->is_idempotent(x)) {
      f.push_back(x);
    }
  }
  SubSemigroup h = maximal_subgroup(*S, e);
  SubSemigroup f_sub = sub_semigroup(*S, f);

  std::vector<std::pair<Elem, Elem>> coords(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    Elem x = r[k];
    auto n = h.from_ambient(S->product(x, e));
    if (!n.has_value()) {
      throw IsoCheckFailedError("x*e left the maximal subgroup");
    }
    Elem b = static_cast<Elem>(f.size());
    for (std::size_t fi = 0; fi < f.size(); ++fi) {
      if (S->product(x, f[fi]) == x) {
        b = static_cast<Elem>(fi);
        break;
      }
    }
    if (b == f.size()) {
      throw IsoCheckFailedError("no idempotent of R acts as a right identity on x");
    }
    coords[k] = {*n, b};
  }
  Elem y = static_cast<Elem>(std::find(f.begin(), f.end(), e) - f.begin());

  RightIdealDecomposition dec{r, h.semigroup, f_sub.semigroup, std::move(coords), y};
  TransferBundle bundle = phi_restrict(res_s, dec);
  bundle.report.construction = "maximal_subgroup_restrict";
  bundle.report.context.emplace_back("minimal_ideal_size", std::to_string(u.size()));
  bundle.report.context.emplace_back("l_class_count", std::to_string(f.size()));
  bundle.report.context.emplace_back("h_order", std::to_string(h.elements.size()));
  return bundle;
}

// ---------------------------------------------------------------------------
// ideal with two-sided identity: lift T -> S
// ---------------------------------------------------------------------------

TransferBundle ideal_lift(Resolution const& res_t, SgPtr s, ElemSet const& ideal) {
  if (!s->is_monoid()) {
    throw NotAMonoidError("ideal_lift requires the containing monoid");
  }
  ElemSet t_set = sorted_unique(ideal);
  if (!is_two_sided_ideal(*s, t_set)) {
    throw NotAnIdealError("the designated subset is not a two-sided ideal");
  }
  SubMonoid t_sub;
  try {
    t_sub = make_submonoid(s, t_set);
  } catch (NotAMonoidError const&) {
    throw NoTwoSidedIdentityError("the ideal has no two-sided identity element");
  }
  if (!res_t.monoid->same_table(*t_sub.monoid)) {
    throw HypothesisViolationError("resolution is not over the ideal's own monoid");
  }
  check_standard_form(res_t, "ideal_lift");
  Elem e_amb = t_sub.to_ambient(*t_sub.monoid->identity());
  RingElement e_ring = RingElement::of(s, e_amb);
  RingElement one_minus_e = RingElement::of(s, *s->identity()) - e_ring;

  std::size_t n = res_t.length();
  TransferReport rep;
  rep.construction = "ideal_lift";
  rep.context.emplace_back("ideal_size", std::to_string(t_set.size()));
  rep.context.emplace_back("e", s->name(e_amb));
  rep.context.emplace_back("degenerate", t_set.size() == s->order() ? "true" : "false");

  Label e_label = Label::make_idem(e_amb);
  Resolution out;
  out.monoid = s;
  std::vector<ModPtr> bmods;
  bmods.push_back(augmentation(s).domain());
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Label> labels;
    for (std::size_t j = i; j-- > 0;) {  // j = i-1 down to 0
      for (std::size_t t = 0; t < res_t.kernel_gens[j].size(); ++t) {
        labels.push_back(Label::make_gen(static_cast<int>(j), static_cast<int>(t)));
      }
    }
    labels.push_back(e_label);
    bmods.push_back(make_module(s, std::move(labels)));
  }

  auto include = [&](ModuleElement const& x, std::size_t degree) {
    return include_into(x, bmods[degree], t_sub.elements);
  };

  out.modules = bmods;
  out.maps.push_back(augmentation(s));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<ModuleElement> images;
    for (Label const& label : bmods[i]->labels()) {
      if (label.kind == Label::Kind::Gen) {
        std::size_t j = static_cast<std::size_t>(label.stratum);
        std::size_t t = static_cast<std::size_t>(label.index);
        if (j == i - 1) {
          images.push_back(include(res_t.kernel_gens[j][t], i - 1));
        } else if ((i - 2 - j) % 2 == 0) {
          images.push_back(ring_at_label(bmods[i - 1], label, one_minus_e));
        } else {
          images.push_back(ring_at_label(bmods[i - 1], label, e_ring));
        }
      } else {  // [e]
        if (i % 2 == 0) {
          images.push_back(ring_at_label(bmods[i - 1], e_label, e_ring));
        } else if (i == 1) {
          images.push_back(ring_at_label(bmods[0], Label::make_unit(), one_minus_e));
        } else {
          images.push_back(ring_at_label(bmods[i - 1], e_label, one_minus_e));
        }
      }
    }
    out.maps.emplace_back(bmods[i], bmods[i - 1], std::move(images));
  }

  // kernel generating sets Y_k
  std::vector<std::vector<ModuleElement>> ys;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ModuleElement> yk;
    for (auto const& x : res_t.kernel_gens[k]) {
      yk.push_back(include(x, k));
    }
    if (k == 0) {
      yk.push_back(ring_at_label(bmods[0], Label::make_unit(), one_minus_e));
    } else {
      for (std::size_t j = k; j-- > 0;) {
        bool odd_offset = (k - 1 - j) % 2 == 0;  // j = k-1, k-3, ...
        RingElement const& coeff = odd_offset ? one_minus_e : e_ring;
        for (std::size_t t = 0; t < res_t.kernel_gens[j].size(); ++t) {
          yk.push_back(ring_at_label(
              bmods[k], Label::make_gen(static_cast<int>(j), static_cast<int>(t)), coeff));
        }
      }
      yk.push_back(ring_at_label(bmods[k], e_label, k % 2 == 1 ? e_ring : one_minus_e));
    }
    ys.push_back(std::move(yk));
  }

  for (std::size_t k = 0; k < n; ++k) {
    rep.require("Y" + std::to_string(k) + "_in_kernel", all_in_kernel(out.maps[k], ys[k]));
    rep.require("Y" + std::to_string(k) + "_generates_kernel",
                module_span(bmods[k], ys[k]) == kernel_lattice_of(out.maps[k]));
  }
  // Y_k live in the bundle: the output is not in standard form, so they are
  // not basis-matched kernel_gens

  throw_if_failed(rep, out);
  return TransferBundle{res_t, std::move(out), std::move(ys), std::move(rep)};
}

// ---------------------------------------------------------------------------
// completely simple descent S = U^1 -> T = L^1
// ---------------------------------------------------------------------------

DescentContext make_descent_context(FiniteSemigroup const& u) {
  if (!is_completely_simple(u)) {
    throw NotCompletelySimpleError("descent requires a completely simple semigroup");
  }
  DescentContext ctx;
  ctx.u_order = u.order();
  GreenStructure green = green_classes(u);
  ctx.num_r_classes = green.num_r();
  ctx.num_l_classes = green.num_l();
  ElemSet idems = idempotents(u);
  ctx.e = idems.front();
  ctx.L = green.l_classes[green.l_of[ctx.e]];
  ElemSet r_class = green.r_classes[green.r_of[ctx.e]];
  for (Elem x : r_class) {
    if (x != ctx.e && u.is_idempotent(x)) {
      ctx.F.push_back(x);
      ctx.L_f.push_back(green.l_classes[green.l_of[x]]);
    }
  }
  if (ctx.F.size() + 1 != ctx.num_l_classes) {
    throw HypothesisViolationError("idempotents of R_e do not enumerate the L-classes");
  }
  ctx.S = std::make_shared<const FiniteSemigroup>(adjoin_identity(u));
  ElemSet t_set = ctx.L;
  t_set.push_back(static_cast<Elem>(ctx.u_order));  // the adjoined identity
  ctx.T = make_submonoid(ctx.S, std::move(t_set));
  return ctx;
}

RingDecomposition decompose_ring_element(RingElement const& lam, DescentContext const& ctx) {
  RingDecomposition dec{RingElement(lam.monoid()), {}};
  dec.part_f.assign(ctx.F.size(), RingElement(lam.monoid()));
  for (auto const& [s, c] : lam.coeffs()) {
    if (ctx.T.from_ambient(s).has_value()) {
      dec.part_t.add(s, c);
      continue;
    }
    bool placed = false;
    for (std::size_t fi = 0; fi < ctx.F.size() && !placed; ++fi) {
      if (contains(ctx.L_f[fi], s)) {
        dec.part_f[fi].add(s, c);
        placed = true;
      }
    }
    if (!placed) {
      throw HypothesisViolationError("support escaped T and the L-classes of F");
    }
  }
  return dec;
}

namespace {

// Shared state for the descent comparison maps theta and phi.
struct DescentMachine {
  DescentContext const& ctx;
  Resolution const& res;  // standard-form input over ZS
  SgPtr S, Tm;
  RingElement e_ring_s;            // e in ZS
  RingElement one_minus_e_t, e_t;  // (1-e) and e in ZT
  std::vector<ModPtr> bmods;

  DescentMachine(DescentContext const& c, Resolution const& r)
      : ctx(c),
        res(r),
        S(r.monoid),
        Tm(c.T.monoid),
        e_ring_s(RingElement::of(S, c.e)),
        one_minus_e_t(c.T.monoid),
        e_t(RingElement::of(c.T.monoid, *c.T.from_ambient(c.e))) {
    one_minus_e_t = RingElement::of(Tm, *Tm->identity()) - e_t;
    std::size_t n = res.length();
    std::vector<Label> b0;
    b0.push_back(Label::make_idem(ctx.e));
    for (Elem f : ctx.F) {
      b0.push_back(Label::make_idem(f));
    }
    bmods.push_back(make_module(Tm, std::move(b0)));
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<Label> labels;
      for (std::size_t t = 0; t < res.kernel_gens[m - 1].size(); ++t) {
        labels.push_back(Label::make_gen(static_cast<int>(m - 1), static_cast<int>(t)));
      }
      for (std::size_t i = m; i-- > 0;) {  // i = m-1 .. 0
        for (std::size_t t = 0; t < res.kernel_gens[i].size(); ++t) {
          for (Elem f : ctx.F) {
            labels.push_back(Label::make_pair(f, static_cast<int>(i), static_cast<int>(t)));
          }
        }
      }
      for (Elem f : ctx.F) {
        labels.push_back(Label::make_idem(f));
      }
      bmods.push_back(make_module(Tm, std::move(labels)));
    }
  }

  RingElement to_t(RingElement const& amb) const { return restrict_ring(amb, ctx.T); }
  RingElement to_s(RingElement const& t) const { return lift_ring(t, S, ctx.T.elements); }

  ModuleElement theta(std::size_t m, ModuleElement const& a) const {
    ModuleElement out(bmods[m]);
    if (m == 0) {
      RingDecomposition dec = decompose_ring_element(a.component(0), ctx);
      out.component(bmods[0]->position(Label::make_idem(ctx.e))) = to_t(dec.part_t);
      for (std::size_t fi = 0; fi < ctx.F.size(); ++fi) {
        out.component(bmods[0]->position(Label::make_idem(ctx.F[fi]))) =
            to_t(dec.part_f[fi] * e_ring_s);
      }
      return out;
    }
    for (std::size_t t = 0; t < a.module()->rank(); ++t) {
      if (a.component(t).is_zero()) {
        continue;
      }
      RingDecomposition dec = decompose_ring_element(a.component(t), ctx);
      Label xl = Label::make_gen(static_cast<int>(m - 1), static_cast<int>(t));
      out.component(bmods[m]->position(xl)) += to_t(dec.part_t);
      for (std::size_t fi = 0; fi < ctx.F.size(); ++fi) {
        if (dec.part_f[fi].is_zero()) {
          continue;
        }
        Label pl = Label::make_pair(ctx.F[fi], static_cast<int>(m - 1), static_cast<int>(t));
        out.component(bmods[m]->position(pl)) += to_t(dec.part_f[fi] * e_ring_s);
      }
    }
    return out;
  }

  ModuleElement phi(std::size_t m, ModuleElement const& b) const {
    ModuleElement out(res.modules[m]);
    if (m == 0) {
      RingElement acc = to_s(b.component(bmods[0]->position(Label::make_idem(ctx.e))));
      for (Elem f : ctx.F) {
        acc += to_s(b.component(bmods[0]->position(Label::make_idem(f))))
               * RingElement::of(S, f);
      }
      out.component(0) = acc;
      return out;
    }
    for (std::size_t p = 0; p < bmods[m]->rank(); ++p) {
      if (b.component(p).is_zero()) {
        continue;
      }
      Label const& label = bmods[m]->labels()[p];
      if (label.kind == Label::Kind::Gen) {
        out.component(static_cast<std::size_t>(label.index)) += to_s(b.component(p));
      } else if (label.kind == Label::Kind::Pair
                 && label.stratum == static_cast<int>(m - 1)) {
        out.component(static_cast<std::size_t>(label.index)) +=
            to_s(b.component(p)) * RingElement::of(S, label.idem);
      }
      // other [f,x] strata and [f] are discarded
    }
    return out;
  }
};

Resolution standardize_for_descent(DescentContext const& ctx, std::size_t n) {
  Resolution r = augmentation_resolution(ctx.S, ctx.T.elements);
  while (r.length() < n) {
    std::size_t j = r.length();
    std::vector<ModuleElement> zs_gens = kernel_module_generators(r.maps[j]);
    r.kernel_gens.push_back(zt_generators_from_zs(zs_gens, ctx.T.elements, ctx.F));
    extend_resolution(r, j + 1);
  }
  return r;
}

}  // namespace

TransferBundle cs_descend(Resolution const& res_s, DescentContext const& ctx) {
  if (!res_s.monoid->same_table(*ctx.S)) {
    throw HypothesisViolationError("resolution is not over U^1 of the context");
  }
  check_standard_form(res_s, "cs_descend");

  TransferReport rep;
  rep.construction = "cs_descend";
  rep.context.emplace_back("u_order", std::to_string(ctx.u_order));
  rep.context.emplace_back("e", ctx.S->name(ctx.e));
  rep.context.emplace_back("f_count", std::to_string(ctx.F.size()));
  {
    std::string f_names;
    for (Elem f : ctx.F) {
      f_names += (f_names.empty() ? "" : " ") + ctx.S->name(f);
    }
    rep.context.emplace_back("f_set", f_names);
  }
  rep.context.emplace_back("t_order", std::to_string(ctx.T.elements.size()));

  std::size_t n = res_s.length();
  // every X_j must generate ker d_j over ZT; rebuild with the change-of-
  // scalars upgrade when that fails
  bool zt_ok = true;
  for (std::size_t j = 0; j < n && zt_ok; ++j) {
    zt_ok = module_span(res_s.modules[j], res_s.kernel_gens[j], ctx.T.elements)
            == kernel_lattice_of(res_s.maps[j]);
  }
  Resolution upgraded;
  Resolution const* input = &res_s;
  if (!zt_ok) {
    upgraded = standardize_for_descent(ctx, n);
    input = &upgraded;
  }
  rep.context.emplace_back("zt_upgrade_applied", zt_ok ? "false" : "true");
  Resolution const& res = *input;

  DescentMachine mach(ctx, res);
  SgPtr S = res.monoid;
  SgPtr Tm = ctx.T.monoid;

  Resolution out;
  out.monoid = Tm;
  out.modules = mach.bmods;
  {
    // d'_0: [e] and every [f] map to 1
    std::vector<ModuleElement> images(mach.bmods[0]->rank(),
                                      ModuleElement::basis(integers_module(), 0));
    out.maps.emplace_back(mach.bmods[0], integers_module(), std::move(images));
  }
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<ModuleElement> images;
    for (Label const& label : mach.bmods[m]->labels()) {
      if (label.kind == Label::Kind::Gen) {
        images.push_back(mach.theta(
            m - 1, res.kernel_gens[m - 1][static_cast<std::size_t>(label.index)]));
      } else if (label.kind == Label::Kind::Pair) {
        std::size_t i = static_cast<std::size_t>(label.stratum);
        std::size_t t = static_cast<std::size_t>(label.index);
        if (i == m - 1) {
          images.push_back(mach.theta(
              m - 1, scalar_act(RingElement::of(S, label.idem), res.kernel_gens[i][t])));
        } else if ((m - 2 - i) % 2 == 0) {
          images.push_back(ring_at_label(mach.bmods[m - 1], label, mach.one_minus_e_t));
        } else {
          images.push_back(ring_at_label(mach.bmods[m - 1], label, mach.e_t));
        }
      } else {  // [f]
        images.push_back(ring_at_label(mach.bmods[m - 1], label,
                                       m % 2 == 0 ? mach.e_t : mach.one_minus_e_t));
      }
    }
    out.maps.emplace_back(mach.bmods[m], mach.bmods[m - 1], std::move(images));
  }

  // Y_m
  std::vector<std::vector<ModuleElement>> ys;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<ModuleElement> ym;
    for (auto const& x : res.kernel_gens[m]) {
      ym.push_back(mach.theta(m, x));
    }
    if (m >= 1) {
      for (std::size_t i = m; i-- > 0;) {
        bool odd_offset = (m - 1 - i) % 2 == 0;  // i = m-1, m-3, ...
        RingElement const& coeff = odd_offset ? mach.one_minus_e_t : mach.e_t;
        for (std::size_t t = 0; t < res.kernel_gens[i].size(); ++t) {
          for (Elem f : ctx.F) {
            ym.push_back(ring_at_label(
                mach.bmods[m],
                Label::make_pair(f, static_cast<int>(i), static_cast<int>(t)), coeff));
          }
        }
      }
    }
    for (Elem f : ctx.F) {
      ym.push_back(ring_at_label(mach.bmods[m], Label::make_idem(f),
                                 m % 2 == 0 ? mach.one_minus_e_t : mach.e_t));
    }
    ys.push_back(std::move(ym));
  }

  // --- the comparison-map suite ---
  ElemSet s_all = all_elements(*S);
  ElemSet t_all = all_elements(*Tm);
  std::mt19937_64 rng(0x37a1b2c3d4e5f607ULL);

  bool theta_equiv = true, phi_equiv = true, theta_add = true, phi_add = true;
  for (std::size_t m = 0; m <= n; ++m) {
    if (res.modules[m]->rank() == 0) {
      continue;
    }
    for (int it = 0; it < kEquivSamplesPerDegree; ++it) {
      RingElement lam_amb = random_ring_element(rng, S, ctx.T.elements);
      ModuleElement alpha = random_module_element(rng, res.modules[m], s_all);
      ModuleElement beta = random_module_element(rng, res.modules[m], s_all);
      theta_equiv = theta_equiv
                    && mach.theta(m, scalar_act(lam_amb, alpha))
                           == scalar_act(mach.to_t(lam_amb), mach.theta(m, alpha));
      theta_add = theta_add
                  && mach.theta(m, alpha + beta) == mach.theta(m, alpha) + mach.theta(m, beta);
      RingElement mu_t = random_ring_element(rng, Tm, t_all);
      ModuleElement l = random_module_element(rng, mach.bmods[m], t_all);
      ModuleElement l2 = random_module_element(rng, mach.bmods[m], t_all);
      phi_equiv = phi_equiv
                  && mach.phi(m, scalar_act(mu_t, l))
                         == scalar_act(mach.to_s(mu_t), mach.phi(m, l));
      phi_add = phi_add && mach.phi(m, l + l2) == mach.phi(m, l) + mach.phi(m, l2);
    }
  }
  rep.require("theta_additive", theta_add);
  rep.require("theta_zt_equivariant", theta_equiv);
  rep.require("phi_additive", phi_add);
  rep.require("phi_zt_equivariant", phi_equiv);

  bool phitheta = true;
  for (std::size_t m = 0; m <= n && phitheta; ++m) {
    for (std::size_t p = 0; p < res.modules[m]->rank() && phitheta; ++p) {
      for (Elem s = 0; s < S->order() && phitheta; ++s) {
        ModuleElement x =
            scalar_act(RingElement::of(S, s), ModuleElement::basis(res.modules[m], p));
        phitheta = mach.phi(m, mach.theta(m, x)) == x;
      }
    }
  }
  rep.require("phi_theta_identity_on_basis", phitheta);

  bool theta_ker = true, phi_ker = true;
  for (std::size_t m = 0; m <= n; ++m) {
    IntMatrix ka = kernel_basis(z_matrix_of(res.maps[m]));
    for (std::size_t r = 0; r < ka.rows(); ++r) {
      ModuleElement v = unflatten(res.modules[m], ka.row(r));
      theta_ker = theta_ker && out.maps[m].apply(mach.theta(m, v)).is_zero();
    }
    IntMatrix kb = kernel_basis(z_matrix_of(out.maps[m]));
    for (std::size_t r = 0; r < kb.rows(); ++r) {
      ModuleElement v = unflatten(mach.bmods[m], kb.row(r));
      phi_ker = phi_ker && res.maps[m].apply(mach.phi(m, v)).is_zero();
    }
  }
  rep.require("theta_maps_kernel_to_kernel", theta_ker);
  rep.require("phi_maps_kernel_to_kernel", phi_ker);

  for (std::size_t m = 0; m < n; ++m) {
    rep.require("Y" + std::to_string(m) + "_in_kernel", all_in_kernel(out.maps[m], ys[m]));
    rep.require("Y" + std::to_string(m) + "_generates_kernel",
                module_span(mach.bmods[m], ys[m]) == kernel_lattice_of(out.maps[m]));
    std::vector<ModuleElement> phi_y;
    phi_y.reserve(ys[m].size());
    for (auto const& y : ys[m]) {
      phi_y.push_back(mach.phi(m, y));
    }
    rep.require("phiY" + std::to_string(m) + "_generates_input_kernel",
                module_span(res.modules[m], phi_y, ctx.T.elements)
                    == kernel_lattice_of(res.maps[m]));
  }
  // Y_k live in the bundle: the output is not in standard form, so they are
  // not basis-matched kernel_gens

  throw_if_failed(rep, out);
  return TransferBundle{res, std::move(out), std::move(ys), std::move(rep)};
}

// ---------------------------------------------------------------------------
// left group lift H -> T = L^1
// ---------------------------------------------------------------------------

namespace {

LeftGroupContext left_group_context_impl(SgPtr t, std::size_t l_order, Elem e) {
  LeftGroupContext ctx;
  ctx.T = std::move(t);
  ctx.l_order = l_order;
  ctx.e = e;
  for (Elem x = 0; x < l_order; ++x) {
    if (ctx.T->is_idempotent(x)) {
      ctx.F.push_back(x);
    }
  }
  ElemSet l_elems(l_order);
  for (Elem x = 0; x < l_order; ++x) {
    l_elems[x] = x;
  }
  SubSemigroup l_part = sub_semigroup(*ctx.T, l_elems);
  SubSemigroup h = maximal_subgroup(l_part.semigroup, e);
  ctx.H = SubMonoid{ctx.T, std::make_shared<const FiniteSemigroup>(h.semigroup),
                    h.elements};  // L indices coincide with T indices
  return ctx;
}

}  // namespace

LeftGroupContext make_left_group_context(FiniteSemigroup const& l) {
  if (!is_left_group(l)) {
    throw NotALeftGroupError("not a completely simple semigroup with one L-class");
  }
  SgPtr t = std::make_shared<const FiniteSemigroup>(adjoin_identity(l));
  ElemSet idems = idempotents(l);
  return left_group_context_impl(std::move(t), l.order(), idems.front());
}

LeftGroupContext left_group_context_of(DescentContext const& ctx) {
  Elem e_pos = *ctx.T.from_ambient(ctx.e);
  return left_group_context_impl(ctx.T.monoid, ctx.T.elements.size() - 1, e_pos);
}

TransferBundle left_group_lift(Resolution const& res_h, LeftGroupContext const& ctx) {
  if (!res_h.monoid->same_table(*ctx.H.monoid)) {
    throw HypothesisViolationError("resolution is not over the maximal subgroup");
  }
  check_standard_form(res_h, "left_group_lift");
  SgPtr Tm = ctx.T;
  RingElement one_t = RingElement::of(Tm, *Tm->identity());
  RingElement e_t = RingElement::of(Tm, ctx.e);
  RingElement one_minus_e = one_t - e_t;

  std::size_t n = res_h.length();
  TransferReport rep;
  rep.construction = "left_group_lift";
  rep.context.emplace_back("l_order", std::to_string(ctx.l_order));
  rep.context.emplace_back("f_count", std::to_string(ctx.F.size()));
  {
    std::string f_names;
    for (Elem f : ctx.F) {
      f_names += (f_names.empty() ? "" : " ") + Tm->name(f);
    }
    rep.context.emplace_back("f_set", f_names);
  }
  rep.context.emplace_back("h_order", std::to_string(ctx.H.elements.size()));
  rep.context.emplace_back("e", Tm->name(ctx.e));

  Resolution out;
  out.monoid = Tm;
  std::vector<ModPtr> bmods;
  bmods.push_back(augmentation(Tm).domain());
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Label> labels;
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t t = 0; t < res_h.kernel_gens[i].size(); ++t) {
        labels.push_back(Label::make_gen(static_cast<int>(i), static_cast<int>(t)));
      }
    }
    for (Elem f : ctx.F) {
      labels.push_back(Label::make_idem(f));
    }
    bmods.push_back(make_module(Tm, std::move(labels)));
  }

  auto include = [&](ModuleElement const& x, std::size_t degree) {
    return include_into(x, bmods[degree], ctx.H.elements);
  };

  out.modules = bmods;
  out.maps.push_back(augmentation(Tm));
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<ModuleElement> images;
    for (Label const& label : bmods[m]->labels()) {
      if (label.kind == Label::Kind::Gen) {
        std::size_t i = static_cast<std::size_t>(label.stratum);
        std::size_t t = static_cast<std::size_t>(label.index);
        if (i == m - 1) {
          images.push_back(include(res_h.kernel_gens[i][t], m - 1));
        } else if ((m - 2 - i) % 2 == 0) {
          images.push_back(ring_at_label(bmods[m - 1], label, one_minus_e));
        } else {
          images.push_back(ring_at_label(bmods[m - 1], label, e_t));
        }
      } else {  // [f]
        RingElement f_minus_one = RingElement::of(Tm, label.idem) - one_t;
        if (m == 1) {
          images.push_back(ring_at_label(bmods[0], Label::make_unit(), f_minus_one));
        } else if (m % 2 == 1) {
          images.push_back(ring_at_label(bmods[m - 1], label, f_minus_one));
        } else {
          images.push_back(
              ring_at_label(bmods[m - 1], label, RingElement::of(Tm, label.idem)));
        }
      }
    }
    out.maps.emplace_back(bmods[m], bmods[m - 1], std::move(images));
  }

  std::vector<std::vector<ModuleElement>> ys;
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<ModuleElement> ym;
    for (auto const& x : res_h.kernel_gens[m]) {
      ym.push_back(include(x, m));
    }
    if (m == 0) {
      for (Elem f : ctx.F) {
        ym.push_back(
            ring_at_label(bmods[0], Label::make_unit(), one_t - RingElement::of(Tm, f)));
      }
    } else {
      for (std::size_t i = m; i-- > 0;) {
        bool odd_offset = (m - 1 - i) % 2 == 0;
        RingElement const& coeff = odd_offset ? one_minus_e : e_t;
        for (std::size_t t = 0; t < res_h.kernel_gens[i].size(); ++t) {
          ym.push_back(ring_at_label(
              bmods[m], Label::make_gen(static_cast<int>(i), static_cast<int>(t)), coeff));
        }
      }
      for (Elem f : ctx.F) {
        RingElement f_t = RingElement::of(Tm, f);
        ym.push_back(
            ring_at_label(bmods[m], Label::make_idem(f), m % 2 == 0 ? one_t - f_t : f_t));
      }
    }
    ys.push_back(std::move(ym));
  }

  bool rank_formula = bmods[0]->rank() == 1;
  for (std::size_t m = 1; m <= n; ++m) {
    std::size_t expected = ctx.F.size();
    for (std::size_t i = 0; i < m; ++i) {
      expected += res_h.kernel_gens[i].size();
    }
    rank_formula = rank_formula && bmods[m]->rank() == expected;
  }
  rep.require("rank_formula", rank_formula);
  for (std::size_t m = 0; m < n; ++m) {
    rep.require("Y" + std::to_string(m) + "_in_kernel", all_in_kernel(out.maps[m], ys[m]));
    rep.require("Y" + std::to_string(m) + "_generates_kernel",
                module_span(bmods[m], ys[m]) == kernel_lattice_of(out.maps[m]));
  }
  // Y_k live in the bundle: the output is not in standard form, so they are
  // not basis-matched kernel_gens

  throw_if_failed(rep, out);
  return TransferBundle{res_h, std::move(out), std::move(ys), std::move(rep)};
}

PipelineReport completely_simple_pipeline(FiniteSemigroup const& u, std::size_t n) {
  PipelineReport report;
  report.u_order = u.order();
  DescentContext ctx = make_descent_context(u);
  report.r_class_count = ctx.num_r_classes;
  report.l_class_count = ctx.num_l_classes;

  LeftGroupContext lg = left_group_context_of(ctx);
  report.h_order = lg.H.elements.size();

  Resolution res_h = augmentation_resolution(lg.H.monoid);
  extend_resolution(res_h, n);
  for (auto const& mod : res_h.modules) {
    report.h_ranks.push_back(mod->rank());
  }
  TransferBundle lift = left_group_lift(res_h, lg);
  for (auto const& mod : lift.output.modules) {
    report.lift_ranks.push_back(mod->rank());
  }
  report.lift_pass = lift.report.all_pass();

  Resolution res_s = augmentation_resolution(ctx.S, ctx.T.elements);
  extend_resolution(res_s, n);
  for (auto const& mod : res_s.modules) {
    report.s_ranks.push_back(mod->rank());
  }
  TransferBundle descent = cs_descend(res_s, ctx);
  for (auto const& mod : descent.output.modules) {
    report.descent_ranks.push_back(mod->rank());
  }
  report.descent_pass = descent.report.all_pass();
  return report;
}

}  // namespace fpres
