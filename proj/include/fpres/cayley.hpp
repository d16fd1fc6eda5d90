#ifndef FPRES_CAYLEY_HPP_
#define FPRES_CAYLEY_HPP_

#include <vector>

#include "fpres/semigroup.hpp"

namespace fpres {

struct CayleyArc {
  Elem source;
  Elem label;  // the generator, an element of the designated subset
  Elem target;
};

/// Right Cayley graph on all of S (not only the part reachable from the
/// label set): one arc x --a--> x*a per vertex x and label a.
struct CayleyGraph {
  std::size_t vertex_count = 0;
  ElemSet labels;
  std::vector<CayleyArc> arcs;
};

/// `a` need not generate s; it may be empty.
CayleyGraph right_cayley_graph(FiniteSemigroup const& s, ElemSet const& a);

/// Connectivity of the underlying undirected graph, by breadth-first search.
bool is_connected_undirected(CayleyGraph const& g);

}  // namespace fpres

#endif  // FPRES_CAYLEY_HPP_
