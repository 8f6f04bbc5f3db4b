#include "media/partial_cube.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "media/errors.hpp"

namespace media {

std::vector<std::vector<int>> EdgeClassPartition::edges_by_class() const {
    std::vector<std::vector<int>> out(class_count);
    for (int e = 0; e < static_cast<int>(class_of.size()); ++e) out[class_of[e]].push_back(e);
    return out;
}

std::optional<IsometryWitness> isometry_violation(const Graph& g, const Coords& coords) {
    if (static_cast<int>(coords.size()) != g.num_vertices())
        throw InternalError("isometry check: coordinate count mismatch");
    for (const auto& c : coords)
        if (c.size() != coords[0].size())
            throw InternalError("isometry check: ragged coordinates");
    int n = g.num_vertices();
    // Report the tightest offending pair (smallest L1 distance first) so the
    // witness names the placement collision rather than a far consequence.
    std::optional<IsometryWitness> best;
    for (int v = 0; v < n; ++v) {
        auto dist = g.bfs_distances(v);
        for (int u = v + 1; u < n; ++u) {
            long long l1 = 0;
            for (size_t i = 0; i < coords[v].size(); ++i)
                l1 += std::abs(static_cast<long long>(coords[v][i]) - coords[u][i]);
            long long gd = dist[u];
            if (dist[u] >= 0 && gd == l1) continue;
            if (!best || std::pair{l1, gd} < std::pair{best->l1_dist, best->graph_dist})
                best = IsometryWitness{v, u, gd, l1};
        }
    }
    return best;
}

bool is_isometric_embedding(const Graph& g, const Coords& coords) {
    return !isometry_violation(g, coords).has_value();
}

namespace {

std::string edge_str(const Graph& g, int e) {
    auto [u, v] = g.edge(e);
    return "{" + g.name(u) + "," + g.name(v) + "}";
}

bool theta_related(const DistanceMatrix& d, std::pair<int, int> e, std::pair<int, int> f) {
    auto [u, v] = e;
    auto [x, y] = f;
    return d(u, x) + d(v, y) != d(u, y) + d(v, x);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

EdgeClassPartition theta_classes(const Graph& g) {
    if (!g.is_connected()) throw NotPartialCube("graph is disconnected");
    if (!g.bipartition()) throw NotPartialCube("graph is not bipartite (odd cycle)");
    int m = g.num_edges();
    EdgeClassPartition part;
    part.class_of.assign(m, -1);
    if (m == 0) return part;

    DistanceMatrix d(g);
    UnionFind uf(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (theta_related(d, g.edge(e), g.edge(f))) uf.unite(e, f);

    std::vector<int> rep_to_class(m, -1);
    for (int e = 0; e < m; ++e) {
        int r = uf.find(e);
        if (rep_to_class[r] < 0) rep_to_class[r] = part.class_count++;
        part.class_of[e] = rep_to_class[r];
    }

    // Components of the relation are its transitive closure; the relation is
    // transitive exactly when every component is a clique under it.
    auto by_class = part.edges_by_class();
    for (const auto& cls : by_class) {
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (!theta_related(d, g.edge(cls[i]), g.edge(cls[j])))
                    throw NotPartialCube("relation not transitive: edges " + edge_str(g, cls[i]) +
                                         " and " + edge_str(g, cls[j]) +
                                         " share a class but are unrelated");
    }

    // Removing one class must leave exactly two sides, adjacent only across
    // the removed class.
    int n = g.num_vertices();
    for (int c = 0; c < part.class_count; ++c) {
        std::vector<int> side(n, -1);
        std::deque<int> q{0};
        side[0] = 0;
        int seen = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, e] : g.neighbors(u)) {
                if (part.class_of[e] == c || side[w] >= 0) continue;
                side[w] = side[u];
                q.push_back(w);
                ++seen;
            }
        }
        if (seen == n)
            throw NotPartialCube("removing class " + std::to_string(c) +
                                 " does not disconnect the graph");
        int other = -1;
        for (int e : by_class[c]) {
            auto [u, v] = g.edge(e);
            int w = (side[u] < 0) ? u : v;
            if (side[u] >= 0 && side[v] >= 0)
                throw NotPartialCube("class " + std::to_string(c) + " edge " + edge_str(g, e) +
                                     " does not cross its cut");
            if (other < 0) other = w;
        }
        // Flood the second side and require that it absorbs everything else.
        for (int e : by_class[c]) {
            auto [u, v] = g.edge(e);
            int w = (side[u] < 0) ? u : v;
            if (side[w] < 0) {
                side[w] = 1;
                q.push_back(w);
                ++seen;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, e] : g.neighbors(u)) {
                if (part.class_of[e] == c) {
                    if (side[w] == 1)
                        throw NotPartialCube("class " + std::to_string(c) + " edge " +
                                             edge_str(g, e) + " joins one side to itself");
                    continue;
                }
                if (side[w] < 0) {
                    side[w] = 1;
                    q.push_back(w);
                    ++seen;
                }
            }
        }
        if (seen != n)
            throw NotPartialCube("removing class " + std::to_string(c) +
                                 " leaves more than two sides");
    }
    return part;
}

std::vector<std::vector<int>> class_sides(const Graph& g, const EdgeClassPartition& classes) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> sides(classes.class_count, std::vector<int>(n, -1));
    for (int c = 0; c < classes.class_count; ++c) {
        auto& side = sides[c];
        std::deque<int> q{0};
        side[0] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, e] : g.neighbors(u)) {
                if (side[w] >= 0) continue;
                side[w] = (classes.class_of[e] == c) ? 1 - side[u] : side[u];
                q.push_back(w);
            }
        }
    }
    return sides;
}

HypercubeEmbedding hypercube_embedding(const Graph& g, const EdgeClassPartition& classes) {
    auto sides = class_sides(g, classes);
    HypercubeEmbedding emb;
    emb.dimension = classes.class_count;
    emb.state_names = g.names();
    emb.coords.assign(g.num_vertices(), std::vector<int>(classes.class_count, 0));
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < classes.class_count; ++c) emb.coords[v][c] = sides[c][v];
    if (auto w = isometry_violation(g, emb.coords))
        throw NotPartialCube("cut coordinates are not isometric: " + g.name(w->u) + " vs " +
                             g.name(w->v) + " graph distance " + std::to_string(w->graph_dist) +
                             ", L1 distance " + std::to_string(w->l1_dist));
    return emb;
}

Medium medium_from_partial_cube(const HypercubeEmbedding& emb) {
    int n = static_cast<int>(emb.coords.size());
    int tau = emb.dimension;
    std::vector<std::string> token_names;
    token_names.reserve(2 * tau);
    for (int i = 0; i < tau; ++i) {
        token_names.push_back("d" + std::to_string(i) + "+");
        token_names.push_back("d" + std::to_string(i) + "-");
    }
    std::vector<std::string> names = emb.state_names;
    if (names.empty()) {
        for (int v = 0; v < n; ++v) {
            std::string s;
            for (int b : emb.coords[v]) s += static_cast<char>('0' + b);
            names.push_back(s.empty() ? "s" : s);
        }
    }
    std::map<std::vector<int>, int> index;
    for (int v = 0; v < n; ++v) {
        if (!index.emplace(emb.coords[v], v).second)
            throw NotPartialCube("two states share hypercube coordinates");
    }
    std::vector<int> table(static_cast<size_t>(n) * 2 * tau);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < 2 * tau; ++t) table[static_cast<size_t>(v) * 2 * tau + t] = v;
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < tau; ++i) {
            for (int chi = 0; chi <= 1; ++chi) {
                if (emb.coords[v][i] == chi) continue;
                auto key = emb.coords[v];
                key[i] = chi;
                auto it = index.find(key);
                if (it != index.end())
                    table[static_cast<size_t>(v) * 2 * tau + (2 * i + (chi == 0 ? 1 : 0))] = it->second;
            }
        }
    }
    // Token 2i is "set coordinate i to 1", token 2i+1 its reverse.
    return Medium(std::move(names), std::move(token_names), std::move(table));
}

Coords lattice_to_hypercube(const Coords& lattice) {
    if (lattice.empty()) return {};
    size_t d = lattice[0].size();
    std::vector<int> lo(d, 0), hi(d, 0);
    for (size_t i = 0; i < d; ++i) {
        lo[i] = hi[i] = lattice[0][i];
        for (const auto& p : lattice) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    Coords out(lattice.size());
    for (size_t v = 0; v < lattice.size(); ++v) {
        for (size_t i = 0; i < d; ++i) {
            int val = lattice[v][i] - lo[i];
            for (int b = 0; b < hi[i] - lo[i]; ++b) out[v].push_back(b < val ? 1 : 0);
        }
    }
    return out;
}

}  // namespace media
