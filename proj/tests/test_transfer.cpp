#include <doctest.h>

#include "fpres/catalog.hpp"
#include "fpres/rees.hpp"
#include "fpres/transfer.hpp"

using namespace fpres;

namespace {

SgPtr shared(FiniteSemigroup s) {
  return std::make_shared<const FiniteSemigroup>(std::move(s));
}

Resolution resolve(SgPtr m, std::size_t n,
                   std::optional<ElemSet> scalars = std::nullopt) {
  Resolution r = augmentation_resolution(std::move(m), std::move(scalars));
  extend_resolution(r, n);
  return r;
}

ElemSet all_of(FiniteSemigroup const& s) {
  ElemSet out(s.order());
  for (Elem i = 0; i < s.order(); ++i) {
    out[i] = i;
  }
  return out;
}

}  // namespace

TEST_SUITE("transfer.ideal_lift") {
  TEST_CASE("zero ideal: a monoid with zero resolves through T = {0}") {
    SgPtr s = shared(adjoin_zero(cyclic_group(2)));  // {1, g, 0}
    SubMonoid zero = make_submonoid(s, {2});
    Resolution res_t = resolve(zero.monoid, 3);
    TransferBundle bundle = ideal_lift(res_t, s, {2});
    CHECK(bundle.report.all_pass());
    CHECK(bundle.output.length() == 3);
    // X_j of the trivial monoid are empty, so B_i = ZS[e] alone
    CHECK(bundle.output.modules[1]->rank() == 1);
    CHECK(bundle.output.modules[2]->rank() == 1);
    CHECK(bundle.output.modules[3]->rank() == 1);
    CHECK(verify_exact(bundle.output).all_pass());
  }

  TEST_CASE("clifford two-chain lifts from the bottom component") {
    StrongSemilattice built = make_strong_semilattice(two_chain_z2());
    SgPtr s = shared(built.semigroup);
    ElemSet bottom = {built.embed(1, 0), built.embed(1, 1)};
    SubMonoid bottom_sub = make_submonoid(s, bottom);
    Resolution res_t = resolve(bottom_sub.monoid, 3);
    TransferBundle bundle = ideal_lift(res_t, s, bottom);
    CHECK(bundle.report.all_pass());
    // cross-check: the direct resolution of S is exact as well
    CHECK(verify_exact(resolve(s, 3)).all_pass());
  }

  TEST_CASE("degenerate lift along T = S") {
    SgPtr s = shared(cyclic_group(3));
    Resolution res_t = resolve(s, 3);
    TransferBundle bundle = ideal_lift(res_t, s, all_of(*s));
    CHECK(bundle.report.all_pass());
    for (std::size_t i = 1; i <= 3; ++i) {
      // one extra [e] summand per degree on top of the accumulated strata
      std::size_t expected = 1;
      for (std::size_t j = 0; j < i; ++j) {
        expected += res_t.kernel_gens[j].size();
      }
      CHECK(bundle.output.modules[i]->rank() == expected);
    }
  }

  TEST_CASE("hypotheses are enforced") {
    SgPtr s = shared(adjoin_zero(cyclic_group(2)));
    SubMonoid zero = make_submonoid(s, {2});
    Resolution res_t = resolve(zero.monoid, 2);
    // {g} is not an ideal
    CHECK_THROWS_AS(ideal_lift(res_t, s, {1}), NotAnIdealError);
    // the band inside band^1 is an ideal without identity
    SgPtr band1 = shared(adjoin_identity(make_rectangular_band(2, 2)));
    Resolution res_whole = resolve(band1, 1);
    CHECK_THROWS_AS(ideal_lift(res_whole, band1, {0, 1, 2, 3}),
                    NoTwoSidedIdentityError);
    // resolution over the wrong monoid
    SgPtr z2z = shared(adjoin_zero(cyclic_group(2)));
    CHECK_THROWS_AS(ideal_lift(res_t, band1, {0, 1, 2, 3}), Error);
  }
}

TEST_SUITE("transfer.phi_restrict") {
  TEST_CASE("group with adjoined identity: |B| = 1 keeps ranks") {
    SgPtr s = shared(adjoin_identity(cyclic_group(2)));
    Resolution res_s = resolve(s, 3);
    TransferBundle bundle = maximal_subgroup_restrict(res_s, 0);
    CHECK(bundle.report.all_pass());
    for (std::size_t i = 0; i <= 3; ++i) {
      CHECK(bundle.output.modules[i]->rank() == res_s.modules[i]->rank());
    }
    CHECK(bundle.output.monoid->order() == 2);
  }

  TEST_CASE("band with identity: trivial subgroup, doubled ranks") {
    SgPtr s = shared(adjoin_identity(make_rectangular_band(2, 2)));
    Resolution res_s = resolve(s, 3);
    TransferBundle bundle = maximal_subgroup_restrict(res_s, 0);
    CHECK(bundle.report.all_pass());
    CHECK(bundle.output.monoid->order() == 1);
    for (std::size_t i = 0; i <= 3; ++i) {
      CHECK(bundle.output.modules[i]->rank() == 2 * res_s.modules[i]->rank());
    }
  }

  TEST_CASE("left group with identity: resolution of the group factor") {
    SgPtr s = shared(adjoin_identity(make_left_group(cyclic_group(2), 2)));
    Resolution res_s = resolve(s, 2);
    ElemSet idems = idempotents(*s);
    TransferBundle bundle = maximal_subgroup_restrict(res_s, idems.front());
    CHECK(bundle.report.all_pass());
    CHECK(bundle.output.monoid->order() == 2);  // H = Z2
    CHECK(is_group(*bundle.output.monoid));
  }

  TEST_CASE("choice of idempotent does not matter") {
    SgPtr s = shared(adjoin_identity(make_rectangular_band(2, 2)));
    Resolution res_s = resolve(s, 2);
    for (Elem e : idempotents(*s)) {
      if (e == *s->identity()) {
        continue;  // the identity is not in the minimal ideal
      }
      TransferBundle bundle = maximal_subgroup_restrict(res_s, e);
      CHECK(bundle.report.all_pass());
    }
  }

  TEST_CASE("a Rees semigroup with identity doubles ranks into Z2") {
    ReesMatrixData data{cyclic_group(2), 2, 2, {0, 0, 0, 1}};
    SgPtr s = shared(adjoin_identity(make_rees(data).semigroup));
    Resolution res_s = resolve(s, 2);
    ElemSet idems = idempotents(*s);
    TransferBundle bundle = maximal_subgroup_restrict(res_s, idems.front());
    CHECK(bundle.report.all_pass());
    CHECK(bundle.output.monoid->order() == 2);
    for (std::size_t i = 0; i <= 2; ++i) {
      CHECK(bundle.output.modules[i]->rank() == 2 * res_s.modules[i]->rank());
    }
  }

  TEST_CASE("restriction to a zero ideal lands over the trivial monoid") {
    SgPtr s = shared(adjoin_zero(cyclic_group(2)));
    Resolution res_s = resolve(s, 2);
    RightIdealDecomposition dec{
        {2}, trivial_monoid_table(), right_zero_semigroup(1), {{0, 0}}, 0};
    TransferBundle bundle = phi_restrict(res_s, dec);
    CHECK(bundle.report.all_pass());
    CHECK(bundle.output.monoid->order() == 1);
    // over the trivial monoid the next kernel is empty: ranks collapse
    CHECK(kernel_module_generators(bundle.output.maps[2]).empty());
  }

  TEST_CASE("hypotheses are enforced") {
    SgPtr s = shared(adjoin_identity(make_rectangular_band(2, 2)));
    Resolution res_s = resolve(s, 1);
    CHECK_THROWS_AS(maximal_subgroup_restrict(res_s, 4), HypothesisViolationError);
    CHECK_THROWS_AS(maximal_subgroup_restrict(res_s, 1000), NotIdempotentError);

    // a hand-built decomposition with a non-right-zero B table is rejected
    RightIdealDecomposition dec{{0, 1, 2, 3},
                                trivial_monoid_table(),
                                left_zero_semigroup(4),
                                {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
                                0};
    CHECK_THROWS_AS(phi_restrict(res_s, dec), NotRightZeroError);
    // an L-class of the band is not a right ideal
    RightIdealDecomposition dec2{{0, 2},
                                 trivial_monoid_table(),
                                 right_zero_semigroup(2),
                                 {{0, 0}, {0, 1}},
                                 0};
    CHECK_THROWS_AS(phi_restrict(res_s, dec2), NotARightIdealError);
  }
}

TEST_SUITE("transfer.cs_descend") {
  TEST_CASE("left group input has empty F and keeps ranks") {
    FiniteSemigroup u = make_left_group(cyclic_group(2), 2);
    DescentContext ctx = make_descent_context(u);
    CHECK(ctx.F.empty());
    Resolution res_s = resolve(ctx.S, 2, ctx.T.elements);
    TransferBundle bundle = cs_descend(res_s, ctx);
    CHECK(bundle.report.all_pass());
    // with F empty the [x] strata are all there is (plus no [f] columns)
    for (std::size_t m = 1; m <= 2; ++m) {
      CHECK(bundle.output.modules[m]->rank() == res_s.modules[m]->rank());
    }
  }

  TEST_CASE("2x2 band: the full comparison suite passes with |F| = 1") {
    FiniteSemigroup u = make_rectangular_band(2, 2);
    DescentContext ctx = make_descent_context(u);
    CHECK(ctx.F.size() == 1);
    Resolution res_s = resolve(ctx.S, 3, ctx.T.elements);
    TransferBundle bundle = cs_descend(res_s, ctx);
    CHECK(bundle.report.all_pass());
    for (auto const& check : bundle.report.checks) {
      CAPTURE(check.name);
      CHECK(check.pass);
    }
  }

  TEST_CASE("Rees semigroup over Z2 passes including the phi(Y) lattice law") {
    ReesMatrixData data{cyclic_group(2), 2, 2, {0, 0, 0, 1}};
    FiniteSemigroup u = make_rees(data).semigroup;
    DescentContext ctx = make_descent_context(u);
    Resolution res_s = resolve(ctx.S, 2, ctx.T.elements);
    TransferBundle bundle = cs_descend(res_s, ctx);
    CHECK(bundle.report.all_pass());
    bool saw_phi_y = false;
    for (auto const& check : bundle.report.checks) {
      saw_phi_y = saw_phi_y || check.name.rfind("phiY", 0) == 0;
    }
    CHECK(saw_phi_y);
  }

  TEST_CASE("plain resolutions are upgraded to ZT-generating form") {
    FiniteSemigroup u = make_rectangular_band(2, 2);
    DescentContext ctx = make_descent_context(u);
    Resolution res_plain = resolve(ctx.S, 2);  // no scalar subring
    TransferBundle bundle = cs_descend(res_plain, ctx);
    CHECK(bundle.report.all_pass());
    bool found = false;
    for (auto const& [k, v] : bundle.report.context) {
      if (k == "zt_upgrade_applied") {
        found = true;
        CHECK(v == "true");
      }
    }
    CHECK(found);
  }

  TEST_CASE("decompose_ring_element splits along T and the L_f") {
    FiniteSemigroup u = make_rectangular_band(2, 2);
    DescentContext ctx = make_descent_context(u);
    RingElement lam(ctx.S);
    lam.add(*ctx.S->identity(), 2);
    lam.add(ctx.L.front(), -1);
    RingDecomposition dec = decompose_ring_element(lam, ctx);
    CHECK(dec.part_t == lam);
    for (auto const& part : dec.part_f) {
      CHECK(part.is_zero());
    }
    // a single element of L_f lands in the f-part
    RingElement single = RingElement::of(ctx.S, ctx.L_f.front().front());
    RingDecomposition dec2 = decompose_ring_element(single, ctx);
    CHECK(dec2.part_t.is_zero());
    CHECK(dec2.part_f.front() == single);
    // parts always re-sum to the input
    RingElement mixed(ctx.S);
    for (Elem x = 0; x < ctx.S->order(); ++x) {
      mixed.add(x, static_cast<int>(x) - 2);
    }
    RingDecomposition dec3 = decompose_ring_element(mixed, ctx);
    RingElement sum = dec3.part_t;
    for (auto const& part : dec3.part_f) {
      sum += part;
    }
    CHECK(sum == mixed);
  }

  TEST_CASE("context construction rejects non-simple input") {
    CHECK_THROWS_AS(make_descent_context(adjoin_zero(cyclic_group(2))),
                    NotCompletelySimpleError);
  }
}

TEST_SUITE("transfer.left_group_lift") {
  TEST_CASE("a group is a left group with one idempotent") {
    LeftGroupContext ctx = make_left_group_context(cyclic_group(2));
    CHECK(ctx.F == ElemSet{0});
    Resolution res_h = resolve(ctx.H.monoid, 3);
    TransferBundle bundle = left_group_lift(res_h, ctx);
    CHECK(bundle.report.all_pass());  // exercises the m = 1 branch (f-1)
  }

  TEST_CASE("Z2 x LZ2 lifts exactly and agrees with the direct resolution") {
    FiniteSemigroup l = make_left_group(cyclic_group(2), 2);
    LeftGroupContext ctx = make_left_group_context(l);
    Resolution res_h = resolve(ctx.H.monoid, 3);
    TransferBundle bundle = left_group_lift(res_h, ctx);
    CHECK(bundle.report.all_pass());
    Resolution direct = resolve(ctx.T, 3);
    CHECK(verify_exact(direct).all_pass());
  }

  TEST_CASE("trivial group factor: ranks are |F| beyond degree zero") {
    FiniteSemigroup l = make_left_group(trivial_monoid_table(), 3);
    LeftGroupContext ctx = make_left_group_context(l);
    CHECK(ctx.F.size() == 3);
    Resolution res_h = resolve(ctx.H.monoid, 3);
    TransferBundle bundle = left_group_lift(res_h, ctx);
    CHECK(bundle.report.all_pass());
    for (std::size_t m = 1; m <= 3; ++m) {
      CHECK(bundle.output.modules[m]->rank() == 3);
    }
  }

  TEST_CASE("rejects non left groups") {
    CHECK_THROWS_AS(make_left_group_context(right_zero_semigroup(2)),
                    NotALeftGroupError);
  }
}

TEST_SUITE("transfer.pipeline") {
  TEST_CASE("a group collapses all three paths") {
    PipelineReport rep = completely_simple_pipeline(cyclic_group(2), 2);
    CHECK(rep.all_pass());
    CHECK(rep.h_order == 2);
    CHECK(rep.r_class_count == 1);
    CHECK(rep.l_class_count == 1);
  }

  TEST_CASE("2x2 band pipeline to length 3") {
    PipelineReport rep = completely_simple_pipeline(make_rectangular_band(2, 2), 3);
    CHECK(rep.all_pass());
    CHECK(rep.r_class_count == 2);
    CHECK(rep.l_class_count == 2);
    CHECK(rep.h_order == 1);
  }

  TEST_CASE("mutation of a transfer output is detected") {
    SgPtr s = shared(adjoin_zero(cyclic_group(2)));
    SubMonoid zero = make_submonoid(s, {2});
    Resolution res_t = resolve(zero.monoid, 3);
    TransferBundle bundle = ideal_lift(res_t, s, {2});
    REQUIRE(verify_exact(bundle.output).all_pass());
    Resolution bad = with_mutated_map(bundle.output, 2, 0, 0, 0, Int(1));
    CHECK_FALSE(verify_exact(bad).all_pass());
  }
}
