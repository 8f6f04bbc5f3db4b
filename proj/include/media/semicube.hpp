#pragma once

#include <cstdint>
#include <vector>

#include "media/graph.hpp"
#include "media/partial_cube.hpp"

namespace media {

/// Vertex set {v | coords(v)[coord] == polarity}.
struct Semicube {
    int coord = 0;
    int polarity = 0;
    std::vector<int> members;  // sorted vertex ids
};

/// Node 2i+chi is semicube (i, chi).  An edge joins two semicubes that cover
/// all vertices with nonempty intersection.
struct SemicubeGraph {
    int tau = 0;
    std::vector<Semicube> nodes;               // size 2*tau
    std::vector<std::pair<int, int>> edges;    // node id pairs, first < second

    static int node_id(int coord, int polarity) { return 2 * coord + polarity; }
};

struct Matching {
    std::vector<std::pair<int, int>> edges;  // pairwise disjoint node pairs
    int size() const { return static_cast<int>(edges.size()); }
};

/// Isometric embedding into Z^d with per-axis minimum 0 and contiguous
/// values on every axis.
struct LatticeEmbedding {
    int dim = 0;
    Coords coords;
};

SemicubeGraph semicube_graph(const HypercubeEmbedding& emb);

/// Maximum cardinality matching in a general graph (blossom contraction).
Matching maximum_matching(const SemicubeGraph& sg);

/// Mate array form, usable on arbitrary graphs; mate[v] == -1 when exposed.
std::vector<int> maximum_matching_mates(int num_nodes, const std::vector<std::pair<int, int>>& edges);

int lattice_dimension(int tau, const Matching& m);

/// Extends the matching with the complement edges (u_{i,0}, u_{i,1}); the
/// components are then d paths, and coordinate k counts the semicubes at even
/// positions along path k containing the vertex.  `flip_paths` reverses every
/// path orientation (yields the per-axis reflection of the default result).
LatticeEmbedding lattice_embedding(const HypercubeEmbedding& emb, const Matching& m,
                                   bool flip_paths = false);

}  // namespace media
