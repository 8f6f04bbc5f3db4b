#pragma once

#include <optional>
#include <vector>

#include "media/graph.hpp"

namespace media {

/// Combinatorial embedding as directed face walks.  Face i is a cyclic
/// vertex sequence; each directed edge of the graph appears in exactly one
/// face (bridges appear twice in one face, once per direction).
struct PlanarEmbedding {
    std::vector<std::vector<int>> faces;
    int outer = -1;
    std::vector<std::vector<int>> rotation;  // derived: neighbor order per vertex

    const std::vector<int>& outer_walk() const { return faces[outer]; }

    /// Checks the face structure against g and fills `rotation`.
    /// Throws InternalError when the walks do not form an embedding.
    void finalize(const Graph& g);
};

/// Faces of some planar embedding of a biconnected graph, found by
/// incremental face splitting; nullopt when the graph is not planar.
std::optional<std::vector<std::vector<int>>> planar_faces_biconnected(
    int n, const std::vector<std::pair<int, int>>& edges);

/// Planarity of an arbitrary graph (per-block embedding attempts).
bool is_planar(const Graph& g);

}  // namespace media
