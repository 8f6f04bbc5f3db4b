#include "media/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace media {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    if (names_.empty()) {
        names_.reserve(n_);
        for (int v = 0; v < n_; ++v) names_.push_back("v" + std::to_string(v));
    }
    if (static_cast<int>(names_.size()) != n_)
        throw std::invalid_argument("graph: name count does not match vertex count");
    adj_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto& [u, v] = edges_[e];
        if (u == v) throw std::invalid_argument("graph: self loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        for (int f = e + 1; f < static_cast<int>(edges_.size()); ++f)
            if (edges_[e] == edges_[f]) throw std::invalid_argument("graph: duplicate edge");
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        adj_[edges_[e].first].emplace_back(edges_[e].second, e);
        adj_[edges_[e].second].emplace_back(edges_[e].first, e);
    }
}

std::optional<int> Graph::edge_between(int u, int v) const {
    for (auto [w, e] : adj_[u])
        if (w == v) return e;
    return std::nullopt;
}

std::vector<int> Graph::bfs_distances(int source) const {
    std::vector<int> dist(n_, -1);
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [w, e] : adj_[u]) {
            (void)e;
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    auto d = bfs_distances(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, e] : adj_[u]) {
                (void)e;
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

int Graph::diameter() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) {
        auto d = bfs_distances(v);
        for (int x : d) best = std::max(best, x);
    }
    return best;
}

namespace {

struct BccState {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<bool> cut;
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> comps;
    int timer = 0;

    explicit BccState(const Graph& g_) : g(g_), num(g_.num_vertices(), -1), low(g_.num_vertices(), 0), cut(g_.num_vertices(), false) {}

    void dfs(int u, int parent_edge) {
        num[u] = low[u] = timer++;
        int children = 0;
        for (auto [w, e] : g.neighbors(u)) {
            if (e == parent_edge) continue;
            if (num[w] < 0) {
                ++children;
                edge_stack.push_back(e);
                dfs(w, e);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= num[u]) {
                    if (parent_edge != -1 || children > 1) cut[u] = true;
                    std::vector<int> comp;
                    while (true) {
                        int f = edge_stack.back();
                        edge_stack.pop_back();
                        comp.push_back(f);
                        if (f == e) break;
                    }
                    comps.push_back(std::move(comp));
                }
            } else if (num[w] < num[u]) {
                edge_stack.push_back(e);
                low[u] = std::min(low[u], num[w]);
            }
        }
    }
};

}  // namespace

std::vector<int> Graph::articulation_points() const {
    BccState st(*this);
    for (int v = 0; v < n_; ++v)
        if (st.num[v] < 0) st.dfs(v, -1);
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (st.cut[v]) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> Graph::biconnected_components() const {
    BccState st(*this);
    for (int v = 0; v < n_; ++v)
        if (st.num[v] < 0) st.dfs(v, -1);
    return st.comps;
}

bool Graph::is_biconnected() const {
    if (n_ <= 1) return true;
    if (!is_connected()) return false;
    if (n_ == 2) return num_edges() >= 1;
    return articulation_points().empty();
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.num_vertices()) {
    d_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int v = 0; v < n_; ++v) {
        auto dist = g.bfs_distances(v);
        for (int u = 0; u < n_; ++u) {
            if (dist[u] < 0) throw std::invalid_argument("distance matrix requires a connected graph");
            if (dist[u] > std::numeric_limits<std::uint16_t>::max())
                throw std::invalid_argument("distance matrix: distance overflow");
            d_[static_cast<size_t>(v) * n_ + u] = static_cast<std::uint16_t>(dist[u]);
        }
    }
}

}  // namespace media
