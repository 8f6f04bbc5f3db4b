#pragma once

#include <string>
#include <vector>

#include "media/graph.hpp"
#include "media/medium.hpp"
#include "media/partial_cube.hpp"

namespace media {

// Plain graph constructors (also used by the test corpus).
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_star(int leaves);
Graph make_hypercube(int d);
Graph make_grid(const std::vector<int>& side_lengths);  // side = vertex count per axis
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);

/// Medium for a partial-cube graph: cut coordinates drive the token actions.
Medium medium_from_graph(const Graph& g);

/// Families: hypercube(d), grid(b0,...), permutations(n), weak-orders(n),
/// partial-orders(n).  Sizes are capped so every family stays desk-scale
/// (hypercube d<=10, permutations n<=7, weak-orders n<=5, partial-orders
/// n<=5, grid <=4096 states).  grid parameters are vertex counts per axis.
Medium generate_family(const std::string& name, const std::vector<int>& params);

/// Graphs behind the irregular families (exposed for tests).
Graph permutations_graph(int n);
Graph weak_orders_graph(int n);
Graph partial_orders_graph(int n);

}  // namespace media
