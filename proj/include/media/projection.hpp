#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "media/graph.hpp"
#include "media/semicube.hpp"

namespace media {

/// Integer projection vectors mapping Z^d to Z^2 via p -> (X.p, Y.p).
struct ProjectionVectors {
    std::vector<long long> x;
    std::vector<long long> y;
};

struct PlanarPlacement {
    struct Edge {
        int u = 0, v = 0;
        int axis = 0;  // lattice axis the edge moves along
    };
    std::vector<std::pair<long long, long long>> pos;  // per vertex
    std::vector<Edge> edges;
};

/// Outcome of the five drawing-property checks.
struct PropertyReport {
    struct Check {
        bool applicable = true;
        bool pass = true;
        std::string witness;
    };
    Check distinct_coordinates;   // 1
    Check straight_edges;         // 2 (by representation)
    Check vertex_edge_separation; // 3
    Check translates_iff_parallel;// 4
    Check product_area;           // 5 (interval products only)
    long long width = 0, height = 0;  // bounding box in lattice points
    long long area = 0;               // width * height
    bool all_pass(bool include_product = false) const {
        return distinct_coordinates.pass && straight_edges.pass && vertex_edge_separation.pass &&
               translates_iff_parallel.pass && (!include_product || product_area.pass);
    }
};

/// Slice-separating projection vectors for a normalized embedding:
/// X_0 = 0 and, for i > 0, X_i is one more than the largest overlap between
/// consecutive slices' partial sums (clamped to >= 1); Y symmetric from the
/// top index down.  d = 1 uses X = (1), Y = (0).
ProjectionVectors projection_vectors(const LatticeEmbedding& emb);

/// Applies the projection and translates the bounding box corner to (0,0).
PlanarPlacement project(const Graph& g, const LatticeEmbedding& emb, const ProjectionVectors& pv);

PropertyReport verify_lattice_drawing(const PlanarPlacement& pp, const LatticeEmbedding& emb);

}  // namespace media
