#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "media/errors.hpp"

namespace media::test {

namespace {

struct RotationEnumerator {
    const Graph& g;
    long long budget;
    std::vector<std::vector<int>> rotation;
    std::vector<PlanarEmbedding> out;

    void collect() {
        if (--budget < 0) throw std::runtime_error("rotation enumeration budget exceeded");
        // trace faces: successor of directed (u,v) is (v, w) where w follows u
        // in the rotation at v
        std::map<std::pair<int, int>, int> face_of;
        std::vector<std::vector<int>> faces;
        for (int u = 0; u < g.num_vertices(); ++u) {
            for (auto [v0, e] : g.neighbors(u)) {
                (void)e;
                if (face_of.count({u, v0})) continue;
                std::vector<int> walk;
                int a = u, b = v0;
                while (!face_of.count({a, b})) {
                    face_of[{a, b}] = static_cast<int>(faces.size());
                    walk.push_back(a);
                    const auto& rot = rotation[b];
                    int idx = static_cast<int>(std::find(rot.begin(), rot.end(), a) - rot.begin());
                    int w = rot[(idx + 1) % rot.size()];
                    a = b;
                    b = w;
                }
                faces.push_back(std::move(walk));
            }
        }
        long long euler = g.num_vertices() - g.num_edges() + static_cast<long long>(faces.size());
        if (euler != 2) return;
        for (int outer = 0; outer < static_cast<int>(faces.size()); ++outer) {
            PlanarEmbedding pe;
            pe.faces = faces;
            pe.outer = outer;
            pe.finalize(g);
            out.push_back(std::move(pe));
        }
    }

    void fill(int v) {
        if (v == g.num_vertices()) {
            collect();
            return;
        }
        std::vector<int> nbrs;
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            nbrs.push_back(w);
        }
        if (nbrs.size() <= 2) {
            rotation[v] = nbrs;
            fill(v + 1);
            return;
        }
        // fix the first neighbor, permute the rest
        std::vector<int> rest(nbrs.begin() + 1, nbrs.end());
        std::sort(rest.begin(), rest.end());
        do {
            rotation[v] = {nbrs[0]};
            rotation[v].insert(rotation[v].end(), rest.begin(), rest.end());
            fill(v + 1);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
};

}  // namespace

std::vector<PlanarEmbedding> all_planar_embeddings(const Graph& g, long long budget) {
    RotationEnumerator en{g, budget, {}, {}};
    en.rotation.assign(g.num_vertices(), {});
    en.fill(0);
    return std::move(en.out);
}

int exhaustive_matching_size(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n > 20) throw std::invalid_argument("exhaustive matching limited to 20 nodes");
    std::vector<int> adj(n, 0);
    for (auto [u, v] : edges) {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    std::vector<signed char> dp(1 << n, -1);
    dp[0] = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        int v = std::countr_zero(static_cast<unsigned>(mask));
        int rest = mask & ~(1 << v);
        signed char best = dp[rest];  // leave v exposed
        int partners = adj[v] & rest;
        while (partners) {
            int u = std::countr_zero(static_cast<unsigned>(partners));
            partners &= partners - 1;
            best = std::max<signed char>(best, static_cast<signed char>(1 + dp[rest & ~(1 << u)]));
        }
        dp[mask] = best;
    }
    return dp[(1 << n) - 1];
}

namespace {

struct LatticeSearch {
    const Graph& g;
    int d;
    long long budget;
    std::vector<std::vector<int>> dist;  // all pairs
    std::vector<int> order;              // BFS order
    std::vector<std::vector<int>> pos;   // positions by order index
    int axes_used = 0;

    bool place(int k) {
        if (--budget < 0) throw OracleBudgetExceeded("lattice embedding search budget exceeded");
        if (k == static_cast<int>(order.size())) return true;
        int v = order[k];
        // some earlier neighbor exists by BFS order
        int parent_idx = -1;
        for (int j = 0; j < k; ++j)
            if (dist[order[j]][v] == 1) parent_idx = j;
        for (int axis = 0; axis < d; ++axis) {
            for (int dir : {+1, -1}) {
                // canonical use of fresh axes: first use is the next unused
                // index, positive direction
                bool fresh = axis >= axes_used;
                if (fresh && (axis > axes_used || dir < 0)) continue;
                auto p = pos[parent_idx];
                p[axis] += dir;
                bool ok = true;
                for (int j = 0; j < k && ok; ++j) {
                    long long l1 = 0;
                    for (int a = 0; a < d; ++a) l1 += std::abs(p[a] - pos[j][a]);
                    if (l1 != dist[order[j]][v]) ok = false;
                }
                if (!ok) continue;
                pos.push_back(p);
                int saved = axes_used;
                if (fresh) axes_used = axis + 1;
                if (place(k + 1)) return true;
                axes_used = saved;
                pos.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<int> brute_force_min_lattice_dim(const Graph& g, int max_dim, long long budget) {
    if (g.num_vertices() == 0) return std::nullopt;
    if (g.num_vertices() == 1) return 0;
    if (!g.is_connected() || !g.bipartition()) return std::nullopt;
    std::vector<std::vector<int>> dist(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) dist[v] = g.bfs_distances(v);
    std::vector<int> order;
    {
        std::vector<bool> seen(g.num_vertices(), false);
        order.push_back(0);
        seen[0] = true;
        for (size_t i = 0; i < order.size(); ++i)
            for (auto [w, e] : g.neighbors(order[i])) {
                (void)e;
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
            }
    }
    for (int d = 1; d <= max_dim; ++d) {
        LatticeSearch search{g, d, budget, dist, order, {}, 0};
        search.pos.push_back(std::vector<int>(d, 0));
        if (search.place(1)) return d;
    }
    return std::nullopt;
}

bool brute_force_is_partial_cube(const Graph& g, long long budget) {
    if (g.num_vertices() <= 1) return g.num_vertices() == 1;
    return brute_force_min_lattice_dim(g, g.num_vertices() - 1, budget).has_value();
}

Graph random_graph(int n, double edge_prob, std::mt19937& rng) {
    std::bernoulli_distribution coin(edge_prob);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng)) edges.emplace_back(i, j);
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random_graph: could not draw a connected graph");
}

namespace {

bool hypercube_subset_isometric(const std::vector<int>& verts) {
    int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::popcount(static_cast<unsigned>(verts[i] ^ verts[j])) == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int w : adj[u])
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        for (int t = 0; t < n; ++t)
            if (dist[t] != std::popcount(static_cast<unsigned>(verts[s] ^ verts[t]))) return false;
    }
    return true;
}

Graph graph_of_hypercube_subset(const std::vector<int>& verts) {
    int n = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::popcount(static_cast<unsigned>(verts[i] ^ verts[j])) == 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

}  // namespace

Graph random_partial_cube(int dim, int target_size, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_vertex(0, (1 << dim) - 1);
    std::vector<int> verts{pick_vertex(rng)};
    int stuck = 0;
    while (static_cast<int>(verts.size()) < target_size && stuck < 200) {
        std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
        std::uniform_int_distribution<int> pick_bit(0, dim - 1);
        int candidate = verts[pick(rng)] ^ (1 << pick_bit(rng));
        if (std::find(verts.begin(), verts.end(), candidate) != verts.end()) {
            ++stuck;
            continue;
        }
        verts.push_back(candidate);
        if (hypercube_subset_isometric(verts)) {
            stuck = 0;
        } else {
            verts.pop_back();
            ++stuck;
        }
    }
    return graph_of_hypercube_subset(verts);
}

Graph random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> all_isometric_hypercube_subgraphs(int dim, int max_size) {
    if (dim > 4) throw std::invalid_argument("subset enumeration limited to dimension 4");
    std::vector<Graph> out;
    int total = 1 << (1 << dim);
    for (int mask = 1; mask < total; ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < (1 << dim); ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        if (static_cast<int>(verts.size()) > max_size) continue;
        // require every coordinate to take both values, so each dim appears once
        int all_and = ~0, all_or = 0;
        for (int v : verts) {
            all_and &= v;
            all_or |= v;
        }
        if ((all_or & ~all_and) != (1 << dim) - 1) continue;
        if (!hypercube_subset_isometric(verts)) continue;
        // connectivity is implied by isometry only with >=1 vertex; check it
        Graph g = graph_of_hypercube_subset(verts);
        if (!g.is_connected()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace media::test
