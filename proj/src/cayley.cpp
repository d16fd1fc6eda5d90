#include "fpres/cayley.hpp"

#include <queue>

namespace fpres {

CayleyGraph right_cayley_graph(FiniteSemigroup const& s, ElemSet const& a) {
  CayleyGraph g;
  g.vertex_count = s.order();
  g.labels = sorted_unique(a);
  for (Elem x = 0; x < s.order(); ++x) {
    for (Elem gen : g.labels) {
      g.arcs.push_back({x, gen, s.product(x, gen)});
    }
  }
  return g;
}

bool is_connected_undirected(CayleyGraph const& g) {
  if (g.vertex_count == 0) {
    return true;
  }
  std::vector<std::vector<Elem>> adj(g.vertex_count);
  for (auto const& arc : g.arcs) {
    adj[arc.source].push_back(arc.target);
    adj[arc.target].push_back(arc.source);
  }
  std::vector<bool> seen(g.vertex_count, false);
  std::queue<Elem> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    Elem v = queue.front();
    queue.pop();
    for (Elem w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push(w);
      }
    }
  }
  return count == g.vertex_count;
}

}  // namespace fpres
