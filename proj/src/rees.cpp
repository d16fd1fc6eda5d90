#include "fpres/rees.hpp"

#include <algorithm>

namespace fpres {

bool ReesMatrixData::is_normalized() const {
  if (!group.is_monoid()) {
    return false;
  }
  Elem one = *group.identity();
  for (std::size_t i = 0; i < num_i; ++i) {
    if (p_at(0, i) != one) {
      return false;
    }
  }
  for (std::size_t w = 0; w < num_omega; ++w) {
    if (p_at(w, 0) != one) {
      return false;
    }
  }
  return true;
}

Elem ReesSemigroup::encode(std::size_t i, Elem g, std::size_t omega) const {
  return static_cast<Elem>((i * data.group.order() + g) * data.num_omega + omega);
}

ReesSemigroup::Triple ReesSemigroup::decode(Elem x) const {
  std::size_t omega = x % data.num_omega;
  std::size_t rest = x / data.num_omega;
  Elem g = static_cast<Elem>(rest % data.group.order());
  std::size_t i = rest / data.group.order();
  return Triple{i, g, omega};
}

ReesSemigroup make_rees(ReesMatrixData const& data) {
  if (!is_group(data.group)) {
    throw NotAGroupError("Rees matrix semigroups require a group");
  }
  if (data.num_i == 0 || data.num_omega == 0
      || data.p.size() != data.num_i * data.num_omega) {
    throw BadMatrixShapeError("P must be a nonempty Omega x I matrix");
  }
  for (Elem g : data.p) {
    if (g >= data.group.order()) {
      throw BadMatrixShapeError("P entry is not a group element");
    }
  }
  std::size_t ng = data.group.order();
  std::size_t n = data.num_i * ng * data.num_omega;
  ReesSemigroup out{FiniteSemigroup(1, {0}), data};
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < data.num_i; ++i) {
    for (Elem g = 0; g < ng; ++g) {
      for (std::size_t w = 0; w < data.num_omega; ++w) {
        Elem x = out.encode(i, g, w);
        names[x] = "(" + std::to_string(i + 1) + "," + data.group.name(g) + ","
                   + std::to_string(w + 1) + ")";
        for (std::size_t j = 0; j < data.num_i; ++j) {
          for (Elem h = 0; h < ng; ++h) {
            for (std::size_t mu = 0; mu < data.num_omega; ++mu) {
              Elem y = out.encode(j, h, mu);
              Elem mid = data.group.product(data.group.product(g, data.p_at(w, j)), h);
              table[x * n + y] = out.encode(i, mid, mu);
            }
          }
        }
      }
    }
  }
  out.semigroup = FiniteSemigroup(n, std::move(table), std::nullopt, std::move(names));
  return out;
}

bool check_isomorphism(FiniteSemigroup const& a, FiniteSemigroup const& b,
                       std::vector<Elem> const& map) {
  if (a.order() != b.order() || map.size() != a.order()) {
    return false;
  }
  std::vector<bool> hit(b.order(), false);
  for (Elem x = 0; x < a.order(); ++x) {
    if (map[x] >= b.order() || hit[map[x]]) {
      return false;
    }
    hit[map[x]] = true;
  }
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < a.order(); ++y) {
      if (map[a.product(x, y)] != b.product(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

NormalizeResult normalize_rees(ReesMatrixData const& data) {
  ReesSemigroup before = make_rees(data);  // validates
  FiniteSemigroup const& g = data.group;
  // q[w][i] = inv(b_w) * p[w][i] * inv(a_i) with a_i = inv(p[0][0]) * p[0][i],
  // b_w = p[w][0]; the map (i, x, w) -> (i, a_i * x * b_w, w) is then an
  // isomorphism and q has identity first row and column.
  std::vector<Elem> a(data.num_i), b(data.num_omega);
  Elem p00_inv = group_inverse(g, data.p_at(0, 0));
  for (std::size_t i = 0; i < data.num_i; ++i) {
    a[i] = g.product(p00_inv, data.p_at(0, i));
  }
  for (std::size_t w = 0; w < data.num_omega; ++w) {
    b[w] = data.p_at(w, 0);
  }
  ReesMatrixData norm = data;
  for (std::size_t w = 0; w < data.num_omega; ++w) {
    for (std::size_t i = 0; i < data.num_i; ++i) {
      norm.p[w * data.num_i + i] = g.product(
          g.product(group_inverse(g, b[w]), data.p_at(w, i)), group_inverse(g, a[i]));
    }
  }
  ReesSemigroup after = make_rees(norm);
  std::vector<Elem> map(before.semigroup.order());
  for (Elem x = 0; x < before.semigroup.order(); ++x) {
    auto [i, gg, w] = before.decode(x);
    map[x] = after.encode(i, g.product(g.product(a[i], gg), b[w]), w);
  }
  if (!check_isomorphism(before.semigroup, after.semigroup, map)) {
    throw IsoCheckFailedError("normalization change of coordinates failed to verify");
  }
  return NormalizeResult{std::move(norm), Isomorphism{std::move(map)}};
}

ReesDecomposition rees_decomposition(FiniteSemigroup const& u) {
  if (!is_completely_simple(u)) {
    throw NotCompletelySimpleError("input has a proper two-sided ideal");
  }
  GreenStructure green = green_classes(u);
  ElemSet idems = idempotents(u);
  if (idems.empty()) {
    throw NotCompletelySimpleError("no idempotent found");
  }
  Elem e = idems.front();

  // order classes with e's class first, the rest by least element
  auto ordered_classes = [](std::vector<ElemSet> const& classes, Elem klass_of_e) {
    std::vector<std::size_t> order;
    order.push_back(klass_of_e);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (c != klass_of_e) {
        order.push_back(c);
      }
    }
    std::vector<ElemSet> out;
    out.reserve(classes.size());
    for (std::size_t c : order) {
      out.push_back(classes[c]);
    }
    return out;
  };
  std::vector<ElemSet> r_classes = ordered_classes(green.r_classes, green.r_of[e]);
  std::vector<ElemSet> l_classes = ordered_classes(green.l_classes, green.l_of[e]);

  SubSemigroup h = maximal_subgroup(u, e);

  // H-class representatives: r_i least element of H_{i,0}, q_w least of H_{0,w}
  auto h_class_least = [&u, &green](ElemSet const& r_cls, ElemSet const& l_cls) {
    for (Elem x : r_cls) {  // classes are sorted ascending
      if (green.l_of[x] == green.l_of[l_cls.front()]) {
        return x;
      }
    }
    throw NotCompletelySimpleError("empty H-class in the egg box");
  };
  std::vector<Elem> reps_r(r_classes.size());  // r_i in H_{i,0}
  std::vector<Elem> reps_q(l_classes.size());  // q_w in H_{0,w}
  reps_r[0] = e;  // distinguished representatives; makes P = (1) for groups
  reps_q[0] = e;
  for (std::size_t i = 1; i < r_classes.size(); ++i) {
    reps_r[i] = h_class_least(r_classes[i], l_classes[0]);
  }
  for (std::size_t w = 1; w < l_classes.size(); ++w) {
    reps_q[w] = h_class_least(r_classes[0], l_classes[w]);
  }

  ReesMatrixData data{h.semigroup, r_classes.size(), l_classes.size(), {}};
  data.p.resize(data.num_i * data.num_omega);
  for (std::size_t w = 0; w < data.num_omega; ++w) {
    for (std::size_t i = 0; i < data.num_i; ++i) {
      Elem prod = u.product(reps_q[w], reps_r[i]);  // lands in H_{0,0}
      auto pos = h.from_ambient(prod);
      if (!pos.has_value()) {
        throw NotCompletelySimpleError("structure entry left the maximal subgroup");
      }
      data.p[w * data.num_i + i] = *pos;
    }
  }

  ReesSemigroup built = make_rees(data);
  std::vector<Elem> map(built.semigroup.order());
  for (Elem x = 0; x < built.semigroup.order(); ++x) {
    auto [i, g, w] = built.decode(x);
    map[x] = u.product(u.product(reps_r[i], h.to_ambient(g)), reps_q[w]);
  }
  if (!check_isomorphism(built.semigroup, u, map)) {
    throw IsoCheckFailedError("Rees coordinatization failed to verify");
  }
  return ReesDecomposition{std::move(data), Isomorphism{std::move(map)}, e,
                           std::move(r_classes), std::move(l_classes)};
}

ElemSet idempotent_entry_subgroup(ReesMatrixData const& data) {
  if (!data.is_normalized()) {
    throw NotNormalizedError();
  }
  ElemSet entries = sorted_unique(ElemSet(data.p.begin(), data.p.end()));
  return generated_subsemigroup(data.group, entries);
}

FiniteSemigroup make_left_group(FiniteSemigroup const& g, std::size_t k) {
  if (!is_group(g)) {
    throw NotAGroupError("left groups require a group factor");
  }
  return direct_product(g, left_zero_semigroup(k));
}

FiniteSemigroup make_right_group(FiniteSemigroup const& g, std::size_t k) {
  if (!is_group(g)) {
    throw NotAGroupError("right groups require a group factor");
  }
  return direct_product(g, right_zero_semigroup(k));
}

FiniteSemigroup make_rectangular_band(std::size_t m, std::size_t n) {
  return direct_product(left_zero_semigroup(m), right_zero_semigroup(n));
}

}  // namespace fpres
