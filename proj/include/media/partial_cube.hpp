#pragma once

#include <optional>
#include <vector>

#include "media/graph.hpp"
#include "media/medium.hpp"

namespace media {

/// Integer coordinate vectors, one per vertex (row order = vertex order).
using Coords = std::vector<std::vector<int>>;

/// Partition of the edges into Djokovic-Winkler classes.
struct EdgeClassPartition {
    std::vector<int> class_of;  // per edge id
    int class_count = 0;        // tau

    std::vector<std::vector<int>> edges_by_class() const;
};

/// Isometric 0/1 labeling of the vertices; dimension() == tau.
struct HypercubeEmbedding {
    Coords coords;
    int dimension = 0;
    std::vector<std::string> state_names;  // carried along for media built from it

    int bit(int v, int i) const { return coords[v][i]; }
};

struct IsometryWitness {
    int u = 0, v = 0;
    long long graph_dist = 0;
    long long l1_dist = 0;
};

/// Empty result means coords is an isometric embedding of g (graph distance
/// equals L1 distance for every vertex pair).
std::optional<IsometryWitness> isometry_violation(const Graph& g, const Coords& coords);
bool is_isometric_embedding(const Graph& g, const Coords& coords);

/// Djokovic-Winkler relation: edges uv, xy related iff
/// d(u,x)+d(v,y) != d(u,y)+d(v,x).  For partial cubes the relation is an
/// equivalence whose classes are returned; throws NotPartialCube when the
/// graph is not connected/bipartite, the relation is not transitive, or some
/// class's removal does not leave exactly two sides.
EdgeClassPartition theta_classes(const Graph& g);

/// Coordinates from the class cuts: base vertex 0 gets all zeros and
/// coords(v)[i] = 1 iff cut i separates v from the base.  Validates isometry.
HypercubeEmbedding hypercube_embedding(const Graph& g, const EdgeClassPartition& classes);

/// Per-class sides as used by hypercube_embedding: side_of[i][v] in {0,1},
/// with side 0 containing vertex 0.
std::vector<std::vector<int>> class_sides(const Graph& g, const EdgeClassPartition& classes);

/// Vertices of the embedding become states; token (i, chi) sets coordinate i
/// to chi when the resulting vertex exists.  Output satisfies the axioms.
Medium medium_from_partial_cube(const HypercubeEmbedding& emb);

/// Unary-encodes general lattice coordinates into 0/1 hypercube coordinates
/// (distance preserving; axis with values 0..b contributes b bits).
Coords lattice_to_hypercube(const Coords& lattice);

}  // namespace media
