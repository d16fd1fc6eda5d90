#include "fpres/green.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fpres {

namespace {

// xS^1 and S^1x as bitsets, one word per 64 elements.
using Bits = std::vector<std::uint64_t>;

Bits right_ideal_bits(FiniteSemigroup const& s, Elem x) {
  Bits b((s.order() + 63) / 64, 0);
  auto set = [&b](Elem v) { b[v >> 6] |= std::uint64_t(1) << (v & 63); };
  set(x);
  for (Elem y = 0; y < s.order(); ++y) {
    set(s.product(x, y));
  }
  return b;
}

Bits left_ideal_bits(FiniteSemigroup const& s, Elem x) {
  Bits b((s.order() + 63) / 64, 0);
  auto set = [&b](Elem v) { b[v >> 6] |= std::uint64_t(1) << (v & 63); };
  set(x);
  for (Elem y = 0; y < s.order(); ++y) {
    set(s.product(y, x));
  }
  return b;
}

// Groups elements by key equality; classes come out ordered by least element.
std::pair<std::vector<ElemSet>, std::vector<Elem>> partition_by(
    std::size_t n, std::vector<Bits> const& keys) {
  std::vector<ElemSet> classes;
  std::vector<Elem> class_of(n, 0);
  std::map<Bits, Elem> index_of;
  for (Elem x = 0; x < n; ++x) {
    auto [it, fresh] = index_of.try_emplace(keys[x], static_cast<Elem>(classes.size()));
    if (fresh) {
      classes.push_back({});
    }
    class_of[x] = it->second;
    classes[it->second].push_back(x);
  }
  // re-sort classes by least element (map order is by bitset content)
  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&classes](std::size_t a, std::size_t b) {
              return classes[a].front() < classes[b].front();
            });
  std::vector<ElemSet> sorted_classes(classes.size());
  std::vector<Elem> new_index(classes.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted_classes[i] = std::move(classes[perm[i]]);
    new_index[perm[i]] = static_cast<Elem>(i);
  }
  for (Elem x = 0; x < n; ++x) {
    class_of[x] = new_index[class_of[x]];
  }
  return {std::move(sorted_classes), std::move(class_of)};
}

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Elem find(Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
};

}  // namespace

GreenStructure green_classes(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::vector<Bits> rkeys(n), lkeys(n);
  for (Elem x = 0; x < n; ++x) {
    rkeys[x] = right_ideal_bits(s, x);
    lkeys[x] = left_ideal_bits(s, x);
  }
  GreenStructure g;
  std::tie(g.r_classes, g.r_of) = partition_by(n, rkeys);
  std::tie(g.l_classes, g.l_of) = partition_by(n, lkeys);

  // H = R meet L: pair (r_of, l_of)
  std::map<std::pair<Elem, Elem>, Elem> hidx;
  std::vector<ElemSet> hclasses;
  std::vector<Elem> h_of(n);
  for (Elem x = 0; x < n; ++x) {
    auto key = std::make_pair(g.r_of[x], g.l_of[x]);
    auto [it, fresh] = hidx.try_emplace(key, static_cast<Elem>(hclasses.size()));
    if (fresh) {
      hclasses.push_back({});
    }
    h_of[x] = it->second;
    hclasses[it->second].push_back(x);
  }
  {
    std::vector<std::size_t> perm(hclasses.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&hclasses](std::size_t a, std::size_t b) {
      return hclasses[a].front() < hclasses[b].front();
    });
    std::vector<ElemSet> sorted(hclasses.size());
    std::vector<Elem> newidx(hclasses.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      sorted[i] = std::move(hclasses[perm[i]]);
      newidx[perm[i]] = static_cast<Elem>(i);
    }
    for (Elem x = 0; x < n; ++x) {
      h_of[x] = newidx[h_of[x]];
    }
    g.h_classes = std::move(sorted);
    g.h_of = std::move(h_of);
  }

  // D = join of R and L (equals R∘L for finite semigroups)
  UnionFind uf(n);
  for (auto const& cls : g.r_classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      uf.unite(cls[0], cls[i]);
    }
  }
  for (auto const& cls : g.l_classes) {
    for (std::size_t i = 1; i < cls.size(); ++i) {
      uf.unite(cls[0], cls[i]);
    }
  }
  std::map<Elem, Elem> didx;
  g.d_of.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem root = uf.find(x);
    auto [it, fresh] = didx.try_emplace(root, static_cast<Elem>(g.d_classes.size()));
    if (fresh) {
      g.d_classes.push_back({});
    }
    g.d_of[x] = it->second;
    g.d_classes[it->second].push_back(x);
  }

  g.h_is_group.assign(g.h_classes.size(), false);
  for (Elem x = 0; x < n; ++x) {
    if (s.is_idempotent(x)) {
      g.h_is_group[g.h_of[x]] = true;
    }
  }
  return g;
}

bool is_group(FiniteSemigroup const& g) {
  if (!g.is_monoid()) {
    return false;
  }
  Elem e = *g.identity();
  for (Elem x = 0; x < g.order(); ++x) {
    bool has_inverse = false;
    for (Elem y = 0; y < g.order(); ++y) {
      if (g.product(x, y) == e && g.product(y, x) == e) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

Elem group_inverse(FiniteSemigroup const& g, Elem x) {
  Elem e = *g.identity();
  for (Elem y = 0; y < g.order(); ++y) {
    if (g.product(x, y) == e && g.product(y, x) == e) {
      return y;
    }
  }
  throw NotAGroupError("element " + std::to_string(x) + " has no inverse");
}

SubSemigroup maximal_subgroup(FiniteSemigroup const& s, Elem e) {
  if (!s.is_idempotent(e)) {
    throw NotIdempotentError(e);
  }
  GreenStructure g = green_classes(s);
  SubSemigroup h = sub_semigroup(s, g.h_classes[g.h_of[e]]);
  if (!is_group(h.semigroup)) {
    throw NotAGroupError("H-class of the idempotent is not a group");
  }
  return h;
}

ElemSet principal_two_sided_ideal(FiniteSemigroup const& s, Elem x) {
  std::size_t n = s.order();
  std::vector<bool> in(n, false);
  in[x] = true;
  ElemSet seed;
  seed.push_back(x);
  for (Elem y = 0; y < n; ++y) {
    for (Elem v : {s.product(x, y), s.product(y, x)}) {
      if (!in[v]) {
        in[v] = true;
        seed.push_back(v);
      }
    }
  }
  // SxS
  for (Elem y = 0; y < n; ++y) {
    Elem yx = s.product(y, x);
    for (Elem z = 0; z < n; ++z) {
      Elem v = s.product(yx, z);
      if (!in[v]) {
        in[v] = true;
        seed.push_back(v);
      }
    }
  }
  return sorted_unique(seed);
}

bool is_simple(FiniteSemigroup const& s) {
  for (Elem x = 0; x < s.order(); ++x) {
    if (principal_two_sided_ideal(s, x).size() != s.order()) {
      return false;
    }
  }
  return true;
}

bool is_completely_simple(FiniteSemigroup const& s) {
  return is_simple(s);
}

ElemSet minimal_ideal(FiniteSemigroup const& s) {
  ElemSet best = principal_two_sided_ideal(s, 0);
  for (Elem x = 1; x < s.order(); ++x) {
    ElemSet cand = principal_two_sided_ideal(s, x);
    if (cand.size() < best.size()) {
      best = std::move(cand);
    }
  }
  return best;
}

bool is_left_ideal(FiniteSemigroup const& s, ElemSet const& j) {
  if (j.empty()) {
    return false;
  }
  for (Elem x = 0; x < s.order(); ++x) {
    for (Elem t : j) {
      if (!contains(j, s.product(x, t))) {
        return false;
      }
    }
  }
  return true;
}

bool is_right_ideal(FiniteSemigroup const& s, ElemSet const& j) {
  if (j.empty()) {
    return false;
  }
  for (Elem t : j) {
    for (Elem x = 0; x < s.order(); ++x) {
      if (!contains(j, s.product(t, x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_two_sided_ideal(FiniteSemigroup const& s, ElemSet const& j) {
  return is_left_ideal(s, j) && is_right_ideal(s, j);
}

bool is_left_group(FiniteSemigroup const& s) {
  if (!is_completely_simple(s)) {
    return false;
  }
  return green_classes(s).num_l() == 1;
}

}  // namespace fpres
