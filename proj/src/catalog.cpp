#include "fpres/catalog.hpp"

#include "fpres/fp1.hpp"
#include "fpres/rees.hpp"
#include "fpres/semilattice.hpp"

namespace fpres {

FiniteSemigroup klein_four() {
  // xor table: 0 = 1, 1 = a, 2 = b, 3 = c
  std::vector<Elem> table(16);
  for (Elem i = 0; i < 4; ++i) {
    for (Elem j = 0; j < 4; ++j) {
      table[i * 4 + j] = i ^ j;
    }
  }
  return FiniteSemigroup(4, std::move(table), 0, {"1", "a", "b", "c"});
}

StrongSemilatticeData two_chain_z2() {
  StrongSemilatticeData data;
  data.size = 2;
  data.le_pairs = {{1, 0}};  // bottom 1 <= top 0
  data.components = {cyclic_group(2), cyclic_group(2)};
  data.homs[{0, 1}] = {0, 1};  // identity isomorphism
  return data;
}

StrongSemilatticeData two_chain_z2_collapse() {
  StrongSemilatticeData data;
  data.size = 2;
  data.le_pairs = {{1, 0}};
  data.components = {cyclic_group(2), cyclic_group(2)};
  data.homs[{0, 1}] = {0, 0};  // g -> 1
  return data;
}

StrongSemilatticeData diamond_semilattice() {
  StrongSemilatticeData data;
  data.size = 4;  // 0 = top, 1, 2 = middle, 3 = bottom
  data.le_pairs = {{1, 0}, {2, 0}, {3, 1}, {3, 2}};
  for (int i = 0; i < 4; ++i) {
    data.components.push_back(trivial_monoid_table());
  }
  for (auto [b, a] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 0}, {2, 0}, {3, 1}, {3, 2}, {3, 0}}) {
    data.homs[{a, b}] = {0};
  }
  return data;
}

namespace {

ReesMatrixData rees_z2_2x2(bool normalized) {
  // Omega x I matrices: normalized has p = ((1,1),(1,g));
  // the raw variant has p = ((g,1),(1,g))
  return ReesMatrixData{cyclic_group(2), 2, 2,
                        normalized ? std::vector<Elem>{0, 0, 0, 1}
                                   : std::vector<Elem>{1, 0, 0, 1}};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&out](std::string name, FiniteSemigroup sg, bool cs) {
    out.push_back(CatalogEntry{std::move(name), std::move(sg), cs});
  };
  add("trivial", trivial_monoid_table(), true);
  add("z2", cyclic_group(2), true);
  add("z3", cyclic_group(3), true);
  add("z6", cyclic_group(6), true);
  add("klein4", klein_four(), true);
  add("left_zero_2", left_zero_semigroup(2), true);
  add("left_zero_3", left_zero_semigroup(3), true);
  add("right_zero_2", right_zero_semigroup(2), true);
  add("right_zero_3", right_zero_semigroup(3), true);
  add("band_2x2", make_rectangular_band(2, 2), true);
  add("band_2x3", make_rectangular_band(2, 3), true);
  add("left_group_z2_2", make_left_group(cyclic_group(2), 2), true);
  add("left_group_z3_2", make_left_group(cyclic_group(3), 2), true);
  add("rees_z2_2x2_norm", make_rees(rees_z2_2x2(true)).semigroup, true);
  add("rees_z2_2x2_raw", make_rees(rees_z2_2x2(false)).semigroup, true);
  add("z2_zero", adjoin_zero(cyclic_group(2)), false);
  add("z6_zero", adjoin_zero(cyclic_group(6)), false);
  add("klein4_zero", adjoin_zero(klein_four()), false);
  add("clifford_two_chain", make_strong_semilattice(two_chain_z2()).semigroup, false);
  add("semilattice_diamond", make_strong_semilattice(diamond_semilattice()).semigroup,
      false);
  return out;
}

}  // namespace

std::vector<CatalogEntry> const& catalog() {
  static std::vector<CatalogEntry> const instance = build_catalog();
  return instance;
}

std::vector<CatalogEntry> catalog_monoids() {
  std::vector<CatalogEntry> out;
  for (auto const& entry : catalog()) {
    if (entry.semigroup.is_monoid()) {
      out.push_back(entry);
    } else {
      out.push_back(CatalogEntry{entry.name + "^1", adjoin_identity(entry.semigroup),
                                 false});
    }
  }
  return out;
}

std::vector<CatalogEntry> catalog_completely_simple() {
  std::vector<CatalogEntry> out;
  for (auto const& entry : catalog()) {
    if (entry.completely_simple) {
      out.push_back(entry);
    }
  }
  return out;
}

}  // namespace fpres
