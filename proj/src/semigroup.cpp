#include "fpres/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace fpres {

ElemSet sorted_unique(ElemSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(ElemSet const& set, Elem x) {
  return std::binary_search(set.begin(), set.end(), x);
}

namespace {

std::optional<Elem> find_identity(std::size_t n, std::vector<Elem> const& table) {
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = table[e * n + x] == x && table[x * n + e] == x;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("s" + std::to_string(i + 1));
  }
  return names;
}

}  // namespace

FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<Elem> table,
                                 std::optional<Elem> identity_hint,
                                 std::vector<std::string> names)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) {
    throw Error("BadTable", "order must be positive");
  }
  if (table_.size() != order_ * order_) {
    throw Error("BadTable", "table must have order*order entries");
  }
  for (Elem v : table_) {
    if (v >= order_) {
      throw Error("BadTable", "table entry out of range");
    }
  }
  for (Elem i = 0; i < order_; ++i) {
    for (Elem j = 0; j < order_; ++j) {
      Elem ij = table_[i * order_ + j];
      for (Elem k = 0; k < order_; ++k) {
        if (table_[ij * order_ + k] != table_[i * order_ + table_[j * order_ + k]]) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  identity_ = find_identity(order_, table_);
  if (identity_hint.has_value()) {
    if (*identity_hint >= order_ || identity_ != identity_hint) {
      throw BadIdentityError("element " + std::to_string(*identity_hint)
                             + " is not a two-sided identity");
    }
  }
  if (names.empty()) {
    names_ = default_names(order_);
  } else {
    if (names.size() != order_) {
      throw Error("BadTable", "names list must match order");
    }
    names_ = std::move(names);
  }
}

FiniteSemigroup FiniteSemigroup::from_rows(std::vector<std::vector<Elem>> const& rows,
                                           std::optional<Elem> identity_hint,
                                           std::vector<std::string> names) {
  std::size_t n = rows.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (auto const& row : rows) {
    if (row.size() != n) {
      throw Error("BadTable", "table must be square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(n, std::move(flat), identity_hint, std::move(names));
}

std::optional<Elem> SubSemigroup::from_ambient(Elem a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - elements.begin());
}

SubSemigroup sub_semigroup(FiniteSemigroup const& s, ElemSet const& closed_subset) {
  ElemSet elems = sorted_unique(closed_subset);
  if (elems.empty()) {
    throw EmptyGeneratingSetError();
  }
  std::size_t m = elems.size();
  std::vector<Elem> pos(s.order(), 0);
  for (std::size_t i = 0; i < m; ++i) {
    pos[elems[i]] = static_cast<Elem>(i);
  }
  std::vector<Elem> table(m * m);
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(s.name(elems[i]));
    for (std::size_t j = 0; j < m; ++j) {
      Elem p = s.product(elems[i], elems[j]);
      if (!contains(elems, p)) {
        throw Error("NotClosed", "subset is not closed under the product");
      }
      table[i * m + j] = pos[p];
    }
  }
  return SubSemigroup{FiniteSemigroup(m, std::move(table), std::nullopt, std::move(names)),
                      std::move(elems)};
}

FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::size_t m = n + 1;
  std::vector<Elem> table(m * m);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * m + j] = s.product(i, j);
    }
  }
  Elem one = static_cast<Elem>(n);
  for (Elem i = 0; i < m; ++i) {
    table[i * m + one] = i;
    table[one * m + i] = i;
  }
  std::vector<std::string> names = s.names();
  std::string id_name = "1";
  while (std::find(names.begin(), names.end(), id_name) != names.end()) {
    id_name += "'";
  }
  names.push_back(id_name);
  return FiniteSemigroup(m, std::move(table), one, std::move(names));
}

FiniteSemigroup adjoin_zero(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::size_t m = n + 1;
  std::vector<Elem> table(m * m);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * m + j] = s.product(i, j);
    }
  }
  Elem zero = static_cast<Elem>(n);
  for (Elem i = 0; i < m; ++i) {
    table[i * m + zero] = zero;
    table[zero * m + i] = zero;
  }
  std::vector<std::string> names = s.names();
  std::string z_name = "0";
  while (std::find(names.begin(), names.end(), z_name) != names.end()) {
    z_name += "'";
  }
  names.push_back(z_name);
  return FiniteSemigroup(m, std::move(table), std::nullopt, std::move(names));
}

ElemSet idempotents(FiniteSemigroup const& s) {
  ElemSet out;
  for (Elem x = 0; x < s.order(); ++x) {
    if (s.is_idempotent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

ElemSet generated_subsemigroup(FiniteSemigroup const& s, ElemSet const& gens) {
  if (gens.empty()) {
    throw EmptyGeneratingSetError();
  }
  std::vector<bool> in(s.order(), false);
  ElemSet frontier = sorted_unique(gens);
  for (Elem g : frontier) {
    in[g] = true;
  }
  ElemSet all = frontier;
  while (!frontier.empty()) {
    ElemSet next;
    for (Elem x : all) {
      for (Elem y : frontier) {
        for (Elem p : {s.product(x, y), s.product(y, x)}) {
          if (!in[p]) {
            in[p] = true;
            next.push_back(p);
          }
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return sorted_unique(all);
}

bool is_right_unitary_subsemigroup(FiniteSemigroup const& s, ElemSet const& t) {
  for (Elem x : t) {
    for (Elem y : t) {
      if (!contains(t, s.product(x, y))) {
        return false;
      }
    }
  }
  for (Elem x = 0; x < s.order(); ++x) {
    for (Elem y : t) {
      if (contains(t, s.product(x, y)) && !contains(t, x)) {
        return false;
      }
    }
  }
  return true;
}

ElemSet right_unitary_closure(FiniteSemigroup const& s, ElemSet const& gens) {
  if (gens.empty()) {
    throw EmptyGeneratingSetError();
  }
  ElemSet t = sorted_unique(gens);
  for (;;) {
    ElemSet grown = generated_subsemigroup(s, t);
    // saturation: any s0 with s0*t in T joins T
    bool changed = grown.size() != t.size();
    t = std::move(grown);
    std::vector<bool> in(s.order(), false);
    for (Elem x : t) {
      in[x] = true;
    }
    for (Elem x = 0; x < s.order(); ++x) {
      if (in[x]) {
        continue;
      }
      for (Elem y : t) {
        if (in[s.product(x, y)]) {
          in[x] = true;
          changed = true;
          break;
        }
      }
    }
    if (!changed) {
      return t;
    }
    t.clear();
    for (Elem x = 0; x < s.order(); ++x) {
      if (in[x]) {
        t.push_back(x);
      }
    }
  }
}

FiniteSemigroup direct_product(FiniteSemigroup const& a, FiniteSemigroup const& b) {
  std::size_t na = a.order();
  std::size_t nb = b.order();
  std::size_t n = na * nb;
  std::vector<Elem> table(n * n);
  auto enc = [nb](Elem x, Elem y) { return static_cast<Elem>(x * nb + y); };
  for (Elem xa = 0; xa < na; ++xa) {
    for (Elem xb = 0; xb < nb; ++xb) {
      for (Elem ya = 0; ya < na; ++ya) {
        for (Elem yb = 0; yb < nb; ++yb) {
          table[enc(xa, xb) * n + enc(ya, yb)] = enc(a.product(xa, ya), b.product(xb, yb));
        }
      }
    }
  }
  std::vector<std::string> names(n);
  for (Elem xa = 0; xa < na; ++xa) {
    for (Elem xb = 0; xb < nb; ++xb) {
      names[enc(xa, xb)] = "(" + a.name(xa) + "," + b.name(xb) + ")";
    }
  }
  return FiniteSemigroup(n, std::move(table), std::nullopt, std::move(names));
}

SubSemigroup local_submonoid(FiniteSemigroup const& s, Elem e) {
  if (!s.is_idempotent(e)) {
    throw NotIdempotentError(e);
  }
  ElemSet elems;
  for (Elem x = 0; x < s.order(); ++x) {
    if (s.product(s.product(e, x), e) == x) {
      elems.push_back(x);
    }
  }
  return sub_semigroup(s, elems);
}

FiniteSemigroup opposite(FiniteSemigroup const& s) {
  std::size_t n = s.order();
  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * n + j] = s.product(j, i);
    }
  }
  return FiniteSemigroup(n, std::move(table), std::nullopt, s.names());
}

FiniteSemigroup left_zero_semigroup(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * n + j] = i;
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("l" + std::to_string(i + 1));
  }
  return FiniteSemigroup(n, std::move(table), std::nullopt, std::move(names));
}

FiniteSemigroup right_zero_semigroup(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * n + j] = j;
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("r" + std::to_string(i + 1));
  }
  return FiniteSemigroup(n, std::move(table), std::nullopt, std::move(names));
}

FiniteSemigroup cyclic_group(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<Elem>((i + j) % n);
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  }
  return FiniteSemigroup(n, std::move(table), 0, std::move(names));
}

FiniteSemigroup trivial_monoid_table() {
  return FiniteSemigroup(1, {0}, 0, {"1"});
}

std::optional<Elem> SubMonoid::from_ambient(Elem a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - elements.begin());
}

SubMonoid make_submonoid(SgPtr ambient, ElemSet subset) {
  SubSemigroup sub = sub_semigroup(*ambient, std::move(subset));
  if (!sub.semigroup.is_monoid()) {
    throw NotAMonoidError("subset has no two-sided identity of its own");
  }
  return SubMonoid{std::move(ambient),
                   std::make_shared<const FiniteSemigroup>(std::move(sub.semigroup)),
                   std::move(sub.elements)};
}

}  // namespace fpres
