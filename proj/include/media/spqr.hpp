#pragma once

#include <vector>

#include "media/graph.hpp"

namespace media {

/// SPQR tree of a biconnected graph.  Skeletons keep the real edges; twin
/// virtual edges link adjacent tree nodes.  Canonical: no two adjacent nodes
/// share a kind among S and P.
struct SpqrTree {
    enum class Kind { S, P, Q, R };

    struct SkelEdge {
        int u = 0, v = 0;
        int real_id = -1;                    // edge id in the input graph, -1 when virtual
        int twin_node = -1, twin_slot = -1;  // set when virtual
        bool is_virtual() const { return real_id < 0; }
    };

    struct Node {
        Kind kind = Kind::S;
        std::vector<SkelEdge> edges;
    };

    std::vector<Node> nodes;

    int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Decomposes a biconnected graph with at least one edge; throws
/// NotBiconnected otherwise.  O(n^2 m) split-pair search.
SpqrTree spqr_tree(const Graph& g);

}  // namespace media
