#include <doctest.h>

#include <array>
#include <random>

#include "fpres/catalog.hpp"
#include "fpres/rees.hpp"
#include "fpres/semigroup.hpp"

using namespace fpres;

namespace {

bool table_associative(std::vector<std::vector<Elem>> const& rows) {
  std::size_t n = rows.size();
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      for (Elem k = 0; k < n; ++k) {
        if (rows[rows[i][j]][k] != rows[i][rows[j][k]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// full transformation monoid on 3 points, from all 27 maps
FiniteSemigroup t3() {
  std::vector<std::array<int, 3>> maps;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        maps.push_back({a, b, c});
      }
    }
  }
  auto index_of = [&maps](std::array<int, 3> const& f) {
    return static_cast<Elem>(f[0] * 9 + f[1] * 3 + f[2]);
  };
  std::vector<std::vector<Elem>> rows(27, std::vector<Elem>(27));
  for (std::size_t i = 0; i < 27; ++i) {
    for (std::size_t j = 0; j < 27; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) {
        comp[x] = maps[j][maps[i][x]];  // apply i, then j
      }
      rows[i][j] = index_of(comp);
    }
  }
  return FiniteSemigroup::from_rows(rows);
}

// oracle: smallest right unitary subsemigroup containing a, by enumerating
// all subsets (usable for |S| <= 8)
ElemSet brute_right_unitary_closure(FiniteSemigroup const& s, ElemSet const& a) {
  std::size_t n = s.order();
  ElemSet best;
  bool have = false;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    ElemSet t;
    for (Elem x = 0; x < n; ++x) {
      if (mask & (1u << x)) {
        t.push_back(x);
      }
    }
    bool contains_a =
        std::all_of(a.begin(), a.end(), [&t](Elem x) { return contains(t, x); });
    if (!contains_a || !is_right_unitary_subsemigroup(s, t)) {
      continue;
    }
    if (!have || t.size() < best.size()) {
      best = t;
      have = true;
    }
  }
  REQUIRE(have);
  return best;
}

}  // namespace

TEST_SUITE("semigroup") {
  TEST_CASE("one-element table is the trivial monoid") {
    FiniteSemigroup s = FiniteSemigroup::from_rows({{0}});
    CHECK(s.order() == 1);
    CHECK(s.identity() == Elem{0});
  }

  TEST_CASE("z2 table is a group with identity 0") {
    FiniteSemigroup s = FiniteSemigroup::from_rows({{0, 1}, {1, 0}});
    CHECK(s.identity() == Elem{0});
    CHECK(s.product(1, 1) == 0);
  }

  TEST_CASE("a mutated table is rejected with the violating triple") {
    // oracle: exhaustive triple check on the mutated table
    std::vector<std::vector<Elem>> rows = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};  // Z3
    REQUIRE(table_associative(rows));
    rows[1][2] = 1;  // break it
    REQUIRE_FALSE(table_associative(rows));
    CHECK_THROWS_AS(FiniteSemigroup::from_rows(rows), NonAssociativeError);
    try {
      FiniteSemigroup::from_rows(rows);
    } catch (NonAssociativeError const& err) {
      // the reported triple really violates associativity
      CHECK(rows[rows[err.i][err.j]][err.k] != rows[err.i][rows[err.j][err.k]]);
    }
  }

  TEST_CASE("identity hint must name the identity") {
    CHECK_THROWS_AS(FiniteSemigroup::from_rows({{0, 1}, {1, 0}}, Elem{1}),
                    BadIdentityError);
    CHECK_NOTHROW(FiniteSemigroup::from_rows({{0, 1}, {1, 0}}, Elem{0}));
    // a semigroup without identity rejects any hint
    CHECK_THROWS_AS(FiniteSemigroup::from_rows({{0, 0}, {1, 1}}, Elem{0}),
                    BadIdentityError);
  }

  TEST_CASE("adjoin_identity always adds a fresh element at the end") {
    FiniteSemigroup t = adjoin_identity(trivial_monoid_table());
    CHECK(t.order() == 2);
    CHECK(t.identity() == Elem{1});
    CHECK(t.is_idempotent(0));

    FiniteSemigroup band1 = adjoin_identity(make_rectangular_band(2, 2));
    CHECK(band1.order() == 5);
    CHECK(band1.identity() == Elem{4});

    FiniteSemigroup z2e = adjoin_identity(cyclic_group(2));
    CHECK(z2e.order() == 3);
    CHECK(z2e.identity() == Elem{2});
    // direct table inspection: the old identity is idempotent but no longer
    // the identity, so there are exactly two idempotents
    CHECK(idempotents(z2e) == ElemSet{0, 2});
    CHECK(z2e.product(0, 2) == 0);
  }

  TEST_CASE("idempotents of groups, bands and T3") {
    CHECK(idempotents(cyclic_group(6)) == ElemSet{0});
    CHECK(idempotents(make_rectangular_band(2, 3)).size() == 6);

    FiniteSemigroup full = t3();
    CHECK(generated_subsemigroup(full, idempotents(full)).size() <= 27);
    // oracle: direct scan of the 27 maps for f(f(x)) = f(x)
    std::size_t brute = 0;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          std::array<int, 3> f{a, b, c};
          bool idem = true;
          for (int x = 0; x < 3; ++x) {
            idem = idem && f[f[x]] == f[x];
          }
          brute += idem;
        }
      }
    }
    CHECK(idempotents(full).size() == brute);
    CHECK(brute == 10);
  }

  TEST_CASE("generated subsemigroups in Z6") {
    FiniteSemigroup z6 = cyclic_group(6);
    ElemSet all(6);
    for (Elem i = 0; i < 6; ++i) {
      all[i] = i;
    }
    CHECK(generated_subsemigroup(z6, all) == all);
    CHECK(generated_subsemigroup(z6, {2}) == ElemSet{0, 2, 4});
    // oracle: closure by repeated multiplication
    ElemSet closure = {2, 3};
    for (;;) {
      ElemSet next = closure;
      for (Elem x : closure) {
        for (Elem y : closure) {
          next.push_back(z6.product(x, y));
        }
      }
      next = sorted_unique(next);
      if (next == closure) {
        break;
      }
      closure = next;
    }
    CHECK(generated_subsemigroup(z6, {2, 3}) == closure);
    CHECK(closure.size() == 6);
    CHECK_THROWS_AS(generated_subsemigroup(z6, {}), EmptyGeneratingSetError);
  }

  TEST_CASE("right unitary closure against the brute-force oracle") {
    // monoid examples of order <= 8: closures coincide with the smallest
    // right unitary subsemigroup containing A
    std::vector<FiniteSemigroup> monoids = {
        cyclic_group(4), adjoin_identity(make_rectangular_band(2, 2)),
        adjoin_identity(left_zero_semigroup(3)), adjoin_zero(cyclic_group(2))};
    std::mt19937_64 rng(11);
    for (auto const& s : monoids) {
      for (int trial = 0; trial < 10; ++trial) {
        ElemSet a;
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(s.order() - 1));
        a.push_back(pick(rng));
        if (trial % 2) {
          a.push_back(pick(rng));
        }
        a = sorted_unique(a);
        CHECK(right_unitary_closure(s, a) == brute_right_unitary_closure(s, a));
      }
    }
  }

  TEST_CASE("an R-class of the band with the identity is right unitary") {
    FiniteSemigroup u = make_rectangular_band(2, 2);
    FiniteSemigroup s = adjoin_identity(u);
    // R-class of element 0 in the band is {0, 1} (row of the left-zero part)
    ElemSet a = {0, 1, 4};
    CHECK(is_right_unitary_subsemigroup(s, a));
    ElemSet closure = right_unitary_closure(s, a);
    CHECK(closure == a);  // excludes the other R-class {2, 3}
  }

  TEST_CASE("whole semigroup is its own closure") {
    FiniteSemigroup s = adjoin_identity(make_rectangular_band(2, 3));
    ElemSet all(s.order());
    for (Elem i = 0; i < s.order(); ++i) {
      all[i] = i;
    }
    CHECK(right_unitary_closure(s, all) == all);
  }

  TEST_CASE("direct products") {
    FiniteSemigroup z2 = cyclic_group(2);
    FiniteSemigroup prod = direct_product(trivial_monoid_table(), z2);
    CHECK(prod.same_table(z2));

    FiniteSemigroup band = direct_product(left_zero_semigroup(2), right_zero_semigroup(3));
    CHECK(band.same_table(make_rectangular_band(2, 3)));
    CHECK(idempotents(band).size() == 6);
  }

  TEST_CASE("local submonoid at the identity is everything") {
    FiniteSemigroup z6 = cyclic_group(6);
    SubSemigroup local = local_submonoid(z6, 0);
    CHECK(local.semigroup.same_table(z6));
    CHECK_THROWS_AS(local_submonoid(z6, 1), NotIdempotentError);
  }

  TEST_CASE("local submonoid at a band idempotent is that idempotent alone") {
    FiniteSemigroup band = make_rectangular_band(2, 3);
    for (Elem e : idempotents(band)) {
      SubSemigroup local = local_submonoid(band, e);
      CHECK(local.elements == ElemSet{e});
    }
  }

  TEST_CASE("opposite reverses products") {
    FiniteSemigroup lz = left_zero_semigroup(3);
    FiniteSemigroup op = opposite(lz);
    CHECK(op.same_table(right_zero_semigroup(3)));
  }

  TEST_CASE("sub_semigroup requires closure") {
    FiniteSemigroup z6 = cyclic_group(6);
    CHECK_THROWS(sub_semigroup(z6, {1}));  // 1+1=2 missing
    SubSemigroup sub = sub_semigroup(z6, {0, 2, 4});
    CHECK(sub.semigroup.order() == 3);
    CHECK(sub.semigroup.is_monoid());
    CHECK(sub.from_ambient(4) == Elem{2});
    CHECK(sub.to_ambient(2) == Elem{4});
  }

  TEST_CASE("random single-entry mutations are accepted iff still associative") {
    // property: the constructor's verdict always matches the exhaustive
    // triple-check oracle
    std::mt19937_64 rng(101);
    for (auto const& entry : catalog()) {
      if (entry.semigroup.order() > 6) {
        continue;
      }
      std::size_t n = entry.semigroup.order();
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
        for (Elem i = 0; i < n; ++i) {
          for (Elem j = 0; j < n; ++j) {
            rows[i][j] = entry.semigroup.product(i, j);
          }
        }
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        rows[pick(rng)][pick(rng)] = pick(rng);
        bool oracle = table_associative(rows);
        bool accepted = true;
        try {
          FiniteSemigroup::from_rows(rows);
        } catch (NonAssociativeError const&) {
          accepted = false;
        }
        CHECK(accepted == oracle);
      }
    }
  }

  TEST_CASE("make_submonoid needs an internal identity") {
    auto s = std::make_shared<const FiniteSemigroup>(adjoin_zero(cyclic_group(2)));
    // {zero} is a monoid on its own
    SubMonoid zero = make_submonoid(s, {2});
    CHECK(zero.monoid->order() == 1);
    // {g} is not closed; {0,.. } closed but has no identity inside:
    CHECK_THROWS(make_submonoid(s, {1}));
  }
}
