#include "fpres/semilattice.hpp"

#include <algorithm>

namespace fpres {

SemilatticeOrder semilattice_order(StrongSemilatticeData const& data) {
  std::size_t n = data.size;
  if (n == 0 || data.components.size() != n) {
    throw NotASemilatticeError("need one monoid component per semilattice element");
  }
  SemilatticeOrder ord;
  ord.size = n;
  ord.le.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a) {
    ord.le[a * n + a] = true;
  }
  for (auto const& [b, a] : data.le_pairs) {
    if (a >= n || b >= n) {
      throw NotASemilatticeError("order pair index out of range");
    }
    ord.le[b * n + a] = true;
  }
  // transitive closure
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!ord.le[a * n + k]) {
        continue;
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (ord.le[k * n + b]) {
          ord.le[a * n + b] = true;
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (ord.le[a * n + b] && ord.le[b * n + a]) {
        throw NotASemilatticeError("order is not antisymmetric");
      }
    }
  }
  // meets must exist: greatest lower bound of every pair
  ord.meet.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> lower;
      for (std::size_t c = 0; c < n; ++c) {
        if (ord.le[c * n + a] && ord.le[c * n + b]) {
          lower.push_back(c);
        }
      }
      std::size_t best = n;
      for (std::size_t c : lower) {
        bool greatest = std::all_of(lower.begin(), lower.end(), [&](std::size_t d) {
          return ord.le[d * n + c];
        });
        if (greatest) {
          best = c;
          break;
        }
      }
      if (best == n) {
        throw NotASemilatticeError("pair (" + std::to_string(a) + ", " + std::to_string(b)
                                   + ") has no meet");
      }
      ord.meet[a * n + b] = best;
    }
  }
  return ord;
}

namespace {

// phi_{a,b} applied to x, with phi_{a,a} the identity map.
Elem apply_hom(StrongSemilatticeData const& data, std::size_t a, std::size_t b, Elem x) {
  if (a == b) {
    return x;
  }
  auto it = data.homs.find({a, b});
  if (it == data.homs.end()) {
    throw HomNotMonoidHomError(a, b, "missing connecting homomorphism");
  }
  if (it->second.size() != data.components[a].order()) {
    throw HomNotMonoidHomError(a, b, "map has wrong domain size");
  }
  Elem y = it->second[x];
  if (y >= data.components[b].order()) {
    throw HomNotMonoidHomError(a, b, "map image out of range");
  }
  return y;
}

}  // namespace

StrongSemilattice make_strong_semilattice(StrongSemilatticeData const& data) {
  SemilatticeOrder ord = semilattice_order(data);
  std::size_t n = data.size;
  for (std::size_t a = 0; a < n; ++a) {
    if (!data.components[a].is_monoid()) {
      throw NotASemilatticeError("component " + std::to_string(a) + " is not a monoid");
    }
  }
  // each hom is a monoid homomorphism
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !ord.leq(b, a)) {
        continue;
      }
      FiniteSemigroup const& src = data.components[a];
      FiniteSemigroup const& dst = data.components[b];
      if (apply_hom(data, a, b, *src.identity()) != *dst.identity()) {
        throw HomNotMonoidHomError(a, b, "identity not preserved");
      }
      for (Elem x = 0; x < src.order(); ++x) {
        for (Elem y = 0; y < src.order(); ++y) {
          Elem lhs = apply_hom(data, a, b, src.product(x, y));
          Elem rhs = dst.product(apply_hom(data, a, b, x), apply_hom(data, a, b, y));
          if (lhs != rhs) {
            throw HomNotMonoidHomError(a, b, "product not preserved");
          }
        }
      }
    }
  }
  // composition law on chains c <= b <= a
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!ord.leq(b, a)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!ord.leq(c, b)) {
          continue;
        }
        for (Elem x = 0; x < data.components[a].order(); ++x) {
          if (apply_hom(data, b, c, apply_hom(data, a, b, x))
              != apply_hom(data, a, c, x)) {
            throw CompositionViolationError(a, b, c);
          }
        }
      }
    }
  }

  StrongSemilattice out{FiniteSemigroup(1, {0}), ord, {}, {}};
  out.offset.resize(n);
  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    out.offset[a] = total;
    total += data.components[a].order();
  }
  out.component_of.resize(total);
  std::vector<std::string> names(total);
  for (std::size_t a = 0; a < n; ++a) {
    for (Elem x = 0; x < data.components[a].order(); ++x) {
      out.component_of[out.offset[a] + x] = a;
      names[out.offset[a] + x] =
          "A" + std::to_string(a + 1) + ":" + data.components[a].name(x);
    }
  }
  std::vector<Elem> table(total * total);
  for (std::size_t a = 0; a < n; ++a) {
    for (Elem x = 0; x < data.components[a].order(); ++x) {
      for (std::size_t b = 0; b < n; ++b) {
        for (Elem y = 0; y < data.components[b].order(); ++y) {
          std::size_t m = ord.meet_of(a, b);
          Elem prod = data.components[m].product(apply_hom(data, a, m, x),
                                                 apply_hom(data, b, m, y));
          table[(out.offset[a] + x) * total + (out.offset[b] + y)] =
              static_cast<Elem>(out.offset[m] + prod);
        }
      }
    }
  }
  // the constructor re-validates associativity exhaustively
  out.semigroup = FiniteSemigroup(total, std::move(table), std::nullopt, std::move(names));
  return out;
}

std::optional<std::size_t> semilattice_minimum(StrongSemilatticeData const& data) {
  SemilatticeOrder ord = semilattice_order(data);
  std::size_t m = 0;
  for (std::size_t a = 1; a < ord.size; ++a) {
    m = ord.meet_of(m, a);
  }
  for (std::size_t a = 0; a < ord.size; ++a) {
    if (!ord.leq(m, a) || ord.meet_of(m, a) != m || ord.meet_of(a, m) != m) {
      return std::nullopt;
    }
  }
  return m;
}

}  // namespace fpres
