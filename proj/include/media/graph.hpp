#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace media {

/// Simple undirected graph with an ordered vertex set.
/// Vertices are indices 0..n-1; optional names travel with the graph so that
/// media built from it keep their state identifiers.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> names = {});

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }

    /// (neighbor, edge id) pairs in insertion order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    std::optional<int> edge_between(int u, int v) const;

    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

    std::vector<int> bfs_distances(int source) const;
    bool is_connected() const;
    /// Two-coloring if bipartite; nullopt otherwise.
    std::optional<std::vector<int>> bipartition() const;
    int diameter() const;

    std::vector<int> articulation_points() const;
    /// Edge sets of the biconnected components (each a list of edge ids).
    std::vector<std::vector<int>> biconnected_components() const;
    bool is_biconnected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> names_;
};

/// All-pairs shortest path distances, BFS from every vertex.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);
    int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<std::uint16_t> d_;
};

}  // namespace media
