#include "fpres/fp1.hpp"

#include <algorithm>

namespace fpres {

FiniteSemigroup monoid_completion(FiniteSemigroup const& s) {
  return s.is_monoid() ? s : adjoin_identity(s);
}

FP1Witness kobayashi_check(FiniteSemigroup const& s, ElemSet const& a) {
  if (!s.is_monoid()) {
    throw NotAMonoidError("the connectivity criterion is stated for monoids");
  }
  FP1Witness w;
  w.a = sorted_unique(a);
  ElemSet closure =
      w.a.empty() ? ElemSet{*s.identity()} : right_unitary_closure(s, w.a);
  w.closure_is_all = closure.size() == s.order();
  w.connected = is_connected_undirected(right_cayley_graph(s, w.a));
  return w;
}

namespace {

// visits subsets of {0..n-1} of the given size in lexicographic order;
// stops early when body returns true
template <typename Body>
void for_each_subset(std::size_t n, std::size_t size, Body&& body) {
  if (size > n) {
    return;
  }
  if (size == 0) {
    body(ElemSet{});
    return;
  }
  ElemSet idx(size);
  for (std::size_t i = 0; i < size; ++i) {
    idx[i] = static_cast<Elem>(i);
  }
  for (;;) {
    if (body(idx)) {
      return;
    }
    std::size_t i = size;
    bool advanced = false;
    while (i-- > 0) {
      if (idx[i] + (size - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < size; ++j) {
          idx[j] = idx[j - 1] + 1;
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      return;
    }
  }
}

}  // namespace

std::optional<std::pair<std::size_t, ElemSet>> minimal_ru_genset(FiniteSemigroup const& s,
                                                                 std::size_t size_cap) {
  if (s.order() > 10) {
    throw Error("SearchCapExceeded",
                "exhaustive witness search is capped at order 10; sample "
                "subsets directly with kobayashi_check instead");
  }
  for (std::size_t size = 0; size <= std::min(size_cap, s.order()); ++size) {
    std::optional<ElemSet> found;
    for_each_subset(s.order(), size, [&](ElemSet const& a) {
      if (kobayashi_check(s, a).passes()) {
        found = a;
        return true;
      }
      return false;
    });
    if (found.has_value()) {
      return std::make_pair(size, *found);
    }
  }
  return std::nullopt;
}

std::size_t relative_rank(FiniteSemigroup const& g, ElemSet const& k, ElemSet* witness) {
  if (!is_group(g)) {
    throw NotAGroupError("relative rank is computed inside a group");
  }
  ElemSet sub = sorted_unique(k);
  if (sub.empty() || !contains(sub, *g.identity())) {
    throw NotASubgroupError("K must contain the identity");
  }
  for (Elem x : sub) {
    if (x >= g.order() || !contains(sub, group_inverse(g, x))) {
      throw NotASubgroupError("K is not closed under inverses");
    }
    for (Elem y : sub) {
      if (!contains(sub, g.product(x, y))) {
        throw NotASubgroupError("K is not closed under the product");
      }
    }
  }
  for (std::size_t size = 0; size <= g.order(); ++size) {
    std::optional<ElemSet> found;
    for_each_subset(g.order(), size, [&](ElemSet const& a) {
      ElemSet gens = sub;
      gens.insert(gens.end(), a.begin(), a.end());
      if (generated_subsemigroup(g, sorted_unique(gens)).size() == g.order()) {
        found = a;
        return true;
      }
      return false;
    });
    if (found.has_value()) {
      if (witness != nullptr) {
        *witness = *found;
      }
      return size;
    }
  }
  throw NotAGroupError("generation search failed");  // unreachable for groups
}

CsFp1Report cs_fp1_certificate(FiniteSemigroup const& u) {
  ReesDecomposition dec = rees_decomposition(u);  // throws NotCompletelySimple
  NormalizeResult norm = normalize_rees(dec.data);
  FiniteSemigroup const& g = norm.data.group;

  CsFp1Report report;
  report.r_class_count = dec.data.num_i;
  report.l_class_count = dec.data.num_omega;
  report.h_order = g.order();

  ElemSet k = idempotent_entry_subgroup(norm.data);
  report.k_order = k.size();
  ElemSet x_g;
  report.rank = relative_rank(g, k, &x_g);

  // translate the witness X from G-coordinates back into U
  ReesSemigroup before = make_rees(dec.data);
  ReesSemigroup after = make_rees(norm.data);
  std::vector<Elem> norm_inv(after.semigroup.order());
  for (Elem x = 0; x < before.semigroup.order(); ++x) {
    norm_inv[norm.iso.map[x]] = x;
  }
  ElemSet x_u;
  for (Elem gg : x_g) {
    Elem in_norm = after.encode(0, gg, 0);
    x_u.push_back(dec.iso.map[norm_inv[in_norm]]);
  }

  // F: idempotents of the distinguished L-class (the one containing e)
  GreenStructure green = green_classes(u);
  ElemSet witness;
  for (Elem x : green.l_classes[green.l_of[dec.e]]) {
    if (u.is_idempotent(x)) {
      witness.push_back(x);
    }
  }
  witness.insert(witness.end(), x_u.begin(), x_u.end());
  report.witness = sorted_unique(std::move(witness));

  FiniteSemigroup u1 = adjoin_identity(u);
  report.check = kobayashi_check(u1, report.witness);
  return report;
}

FP1Witness ideal_witness_lift(FiniteSemigroup const& s, ElemSet const& j, ElemSet const& a) {
  if (!s.is_monoid()) {
    throw NotAMonoidError("ideal_witness_lift requires a monoid");
  }
  ElemSet ideal = sorted_unique(j);
  if (!is_left_ideal(s, ideal)) {
    throw NotALeftIdealError("the designated subset is not a left ideal");
  }
  ElemSet t_set = ideal;
  t_set.push_back(*s.identity());
  t_set = sorted_unique(t_set);
  SubMonoid t_sub = make_submonoid(std::make_shared<const FiniteSemigroup>(s), t_set);

  ElemSet a_sorted = sorted_unique(a);
  bool meets_ideal = std::any_of(a_sorted.begin(), a_sorted.end(),
                                 [&ideal](Elem x) { return contains(ideal, x); });
  if (!meets_ideal) {
    throw InputNotAWitnessError("the witness must meet the ideal");
  }
  ElemSet a_in_t;
  for (Elem x : a_sorted) {
    auto pos = t_sub.from_ambient(x);
    if (!pos.has_value()) {
      throw InputNotAWitnessError("witness element outside J u {1}");
    }
    a_in_t.push_back(*pos);
  }
  if (!kobayashi_check(*t_sub.monoid, a_in_t).passes()) {
    throw InputNotAWitnessError("the set does not witness J u {1}");
  }

  FP1Witness lifted = kobayashi_check(s, a_sorted);
  if (!lifted.passes() || !lifted.agrees()) {
    throw VerificationFailedError("lifted witness failed the connectivity check");
  }
  return lifted;
}

MinimalIdealTransfer minimal_ideal_certificate_transfer(FiniteSemigroup const& s,
                                                        ElemSet const& a) {
  if (!s.is_monoid()) {
    throw NotAMonoidError("certificate transfer requires a monoid");
  }
  ElemSet a_sorted = sorted_unique(a);
  if (!kobayashi_check(s, a_sorted).passes()) {
    throw InputNotAWitnessError("the set does not witness S");
  }
  ElemSet j = minimal_ideal(s);
  SubSemigroup j_sub = sub_semigroup(s, j);
  if (!is_completely_simple(j_sub.semigroup)) {
    throw NotCompletelySimpleError("minimal ideal is not completely simple");
  }
  // F = E(S) n L for a fixed L-class L of J: the class of J's least idempotent
  ElemSet j_idems;
  for (Elem x : j) {
    if (s.is_idempotent(x)) {
      j_idems.push_back(x);
    }
  }
  GreenStructure green_j = green_classes(j_sub.semigroup);
  Elem e_local = *j_sub.from_ambient(j_idems.front());
  ElemSet f;
  for (Elem x_local : green_j.l_classes[green_j.l_of[e_local]]) {
    Elem x = j_sub.to_ambient(x_local);
    if (s.is_idempotent(x)) {
      f.push_back(x);
    }
  }
  MinimalIdealTransfer out;
  out.b = f;
  for (Elem x : a_sorted) {
    for (Elem ff : f) {
      out.b.push_back(s.product(x, ff));
    }
  }
  out.b = sorted_unique(out.b);
  out.t = j;
  out.t.push_back(*s.identity());
  out.t = sorted_unique(out.t);

  SubMonoid t_sub = make_submonoid(std::make_shared<const FiniteSemigroup>(s), out.t);
  ElemSet b_in_t;
  for (Elem x : out.b) {
    b_in_t.push_back(*t_sub.from_ambient(x));
  }
  out.check = kobayashi_check(*t_sub.monoid, b_in_t);
  if (!out.check.passes() || !out.check.agrees()) {
    throw VerificationFailedError("transferred certificate failed on J u {1}");
  }
  return out;
}

SemilatticeFpReport semilattice_fp_report(StrongSemilatticeData const& data, std::size_t n) {
  SemilatticeFpReport report;
  auto minimum = semilattice_minimum(data);
  if (!minimum.has_value()) {
    throw NotASemilatticeError("the semilattice has no minimum");
  }
  report.minimum = *minimum;
  StrongSemilattice built = make_strong_semilattice(data);
  SgPtr s = std::make_shared<const FiniteSemigroup>(monoid_completion(built.semigroup));

  ElemSet bottom;
  for (Elem x = 0; x < data.components[*minimum].order(); ++x) {
    bottom.push_back(built.embed(*minimum, x));
  }
  SubMonoid bottom_sub = make_submonoid(s, bottom);
  Resolution res_bottom = augmentation_resolution(bottom_sub.monoid);
  extend_resolution(res_bottom, n);
  for (auto const& mod : res_bottom.modules) {
    report.bottom_ranks.push_back(mod->rank());
  }
  TransferBundle lift = ideal_lift(res_bottom, s, bottom);
  for (auto const& mod : lift.output.modules) {
    report.lifted_ranks.push_back(mod->rank());
  }
  report.lift_pass = lift.report.all_pass();

  Resolution direct = augmentation_resolution(s);
  extend_resolution(direct, n);
  for (auto const& mod : direct.modules) {
    report.direct_ranks.push_back(mod->rank());
  }
  report.direct_pass = verify_exact(direct).all_pass();
  return report;
}

BiFpReport bi_fp_report(FiniteSemigroup const& s, std::size_t n) {
  BiFpReport report;
  {
    SgPtr left = std::make_shared<const FiniteSemigroup>(monoid_completion(s));
    Resolution res = augmentation_resolution(left);
    extend_resolution(res, n);
    for (auto const& mod : res.modules) {
      report.left_ranks.push_back(mod->rank());
    }
    report.left_pass = verify_exact(res).all_pass();
  }
  {
    SgPtr right = std::make_shared<const FiniteSemigroup>(monoid_completion(opposite(s)));
    Resolution res = augmentation_resolution(right);
    extend_resolution(res, n);
    for (auto const& mod : res.modules) {
      report.right_ranks.push_back(mod->rank());
    }
    report.right_pass = verify_exact(res).all_pass();
  }
  return report;
}

}  // namespace fpres
