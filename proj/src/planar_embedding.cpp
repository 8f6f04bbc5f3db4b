#include "media/planar_embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "media/errors.hpp"

namespace media {

void PlanarEmbedding::finalize(const Graph& g) {
    // Every directed edge exactly once across the walks.
    std::set<std::pair<int, int>> seen;
    long long steps = 0;
    for (const auto& f : faces) {
        int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int u = f[i], v = f[(i + 1) % len];
            if (!g.edge_between(u, v))
                throw InternalError("embedding face uses a non-edge");
            if (!seen.insert({u, v}).second)
                throw InternalError("embedding repeats a directed edge");
            ++steps;
        }
    }
    if (steps != 2LL * g.num_edges())
        throw InternalError("embedding misses directed edges");
    if (g.num_vertices() >= 1 && g.is_connected()) {
        long long euler = g.num_vertices() - g.num_edges() + static_cast<long long>(faces.size());
        if (g.num_edges() > 0 && euler != 2)
            throw InternalError("embedding violates Euler's formula");
    }
    if (outer < 0 || outer >= static_cast<int>(faces.size()))
        throw InternalError("embedding lacks an outer face");

    // Rotation from face corners: after arriving at y from x, the face
    // continues to z; successors chain into one cycle per vertex.
    std::vector<std::map<int, int>> succ(g.num_vertices());
    for (const auto& f : faces) {
        int len = static_cast<int>(f.size());
        for (int i = 0; i < len; ++i) {
            int x = f[i], y = f[(i + 1) % len], z = f[(i + 2) % len];
            succ[y][x] = z;
        }
    }
    rotation.assign(g.num_vertices(), {});
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) continue;
        int start = g.neighbors(v)[0].first;
        int cur = start;
        do {
            rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw InternalError("embedding corner map incomplete");
            cur = it->second;
        } while (cur != start && static_cast<int>(rotation[v].size()) <= g.degree(v));
        if (static_cast<int>(rotation[v].size()) != g.degree(v))
            throw InternalError("embedding corners do not chain into one rotation");
    }
}

namespace {

/// Incremental planar embedding of a biconnected graph: start from a cycle,
/// repeatedly route a path of some unembedded fragment through a face all of
/// the fragment's attachments lie on, preferring fragments with a unique
/// admissible face.
class FaceSplitter {
public:
    FaceSplitter(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), edges_(edges) {
        adj_.assign(n_, {});
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            adj_[edges_[e].first].emplace_back(edges_[e].second, e);
            adj_[edges_[e].second].emplace_back(edges_[e].first, e);
        }
        in_h_edge_.assign(edges_.size(), false);
        in_h_vertex_.assign(n_, false);
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (edges_.empty()) return std::nullopt;
        seed_cycle();
        while (true) {
            auto fragments = find_fragments();
            if (fragments.empty()) break;
            int best = -1, best_face = -1;
            size_t best_count = edges_.size() + 1;
            for (int i = 0; i < static_cast<int>(fragments.size()); ++i) {
                auto adm = admissible_faces(fragments[i]);
                if (adm.empty()) return std::nullopt;  // stuck fragment: not planar
                if (adm.size() < best_count) {
                    best_count = adm.size();
                    best = i;
                    best_face = adm[0];
                }
            }
            embed_path(fragments[best], best_face);
        }
        return faces_;
    }

private:
    struct Fragment {
        std::vector<int> attachments;      // H-vertices, sorted
        std::vector<int> inner_vertices;   // empty for a chord
        int chord_edge = -1;               // edge id when the fragment is a chord
    };

    void seed_cycle() {
        // walk until a vertex repeats, then trim to the cycle
        std::vector<int> path{0};
        std::vector<int> visited_at(n_, -1);
        visited_at[0] = 0;
        int prev = -1;
        while (true) {
            int cur = path.back();
            int next = -1;
            for (auto [w, e] : adj_[cur]) {
                (void)e;
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            if (visited_at[next] >= 0) {
                std::vector<int> cycle(path.begin() + visited_at[next], path.end());
                install_cycle(cycle);
                return;
            }
            visited_at[next] = static_cast<int>(path.size());
            path.push_back(next);
            prev = cur;
        }
    }

    void install_cycle(const std::vector<int>& cycle) {
        faces_.push_back(cycle);
        faces_.emplace_back(cycle.rbegin(), cycle.rend());
        for (size_t i = 0; i < cycle.size(); ++i) {
            in_h_vertex_[cycle[i]] = true;
            mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
    }

    void mark_edge(int u, int v) {
        for (auto [w, e] : adj_[u])
            if (w == v) in_h_edge_[e] = true;
    }

    std::vector<Fragment> find_fragments() {
        std::vector<Fragment> out;
        // chords: unembedded edges between H-vertices
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            auto [u, v] = edges_[e];
            if (!in_h_edge_[e] && in_h_vertex_[u] && in_h_vertex_[v]) {
                Fragment f;
                f.attachments = {std::min(u, v), std::max(u, v)};
                f.chord_edge = e;
                out.push_back(std::move(f));
            }
        }
        // components of G - H with their attachments
        std::vector<int> comp(n_, -1);
        for (int s = 0; s < n_; ++s) {
            if (in_h_vertex_[s] || comp[s] >= 0) continue;
            Fragment f;
            std::vector<int> stack{s};
            comp[s] = s;
            std::set<int> att;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                f.inner_vertices.push_back(u);
                for (auto [w, e] : adj_[u]) {
                    (void)e;
                    if (in_h_vertex_[w]) att.insert(w);
                    else if (comp[w] < 0) {
                        comp[w] = s;
                        stack.push_back(w);
                    }
                }
            }
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& f) {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
            std::set<int> verts(faces_[i].begin(), faces_[i].end());
            bool ok = true;
            for (int a : f.attachments)
                if (!verts.count(a)) ok = false;
            if (ok) out.push_back(i);
        }
        return out;
    }

    void embed_path(const Fragment& f, int face_idx) {
        std::vector<int> path;
        if (f.chord_edge >= 0) {
            path = {edges_[f.chord_edge].first, edges_[f.chord_edge].second};
        } else {
            // BFS inside the fragment from one attachment to another
            int a = f.attachments[0];
            std::set<int> inner(f.inner_vertices.begin(), f.inner_vertices.end());
            std::map<int, int> parent;
            std::vector<int> queue;
            for (auto [w, e] : adj_[a]) {
                (void)e;
                if (inner.count(w) && !parent.count(w)) {
                    parent[w] = a;
                    queue.push_back(w);
                }
            }
            int reached = -1;
            for (size_t h = 0; h < queue.size() && reached < 0; ++h) {
                int u = queue[h];
                for (auto [w, e] : adj_[u]) {
                    (void)e;
                    if (w == a) continue;
                    if (in_h_vertex_[w]) {
                        // complete the path
                        path = {w, u};
                        int x = u;
                        while (parent[x] != a) {
                            x = parent[x];
                            path.push_back(x);
                        }
                        path.push_back(a);
                        reached = w;
                        break;
                    }
                    if (inner.count(w) && !parent.count(w)) {
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if (reached < 0) throw InternalError("fragment path search failed");
        }
        // split the face at the path ends
        int a = path.front(), b = path.back();
        std::vector<int> face = faces_[face_idx];
        int ia = -1, ib = -1;
        for (int i = 0; i < static_cast<int>(face.size()); ++i) {
            if (face[i] == a && ia < 0) ia = i;
            if (face[i] == b && ib < 0) ib = i;
        }
        if (ia < 0 || ib < 0) throw InternalError("face split: attachment missing");
        int len = static_cast<int>(face.size());
        std::vector<int> f1, f2;
        // f1: a..b along the face, then the path back from b to a
        for (int i = ia; i != ib; i = (i + 1) % len) f1.push_back(face[i]);
        f1.push_back(face[ib]);
        for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i) f1.push_back(path[i]);
        // f2: b..a along the face, then the path from a to b
        for (int i = ib; i != ia; i = (i + 1) % len) f2.push_back(face[i]);
        f2.push_back(face[ia]);
        for (int i = 1; i + 1 < static_cast<int>(path.size()); ++i) f2.push_back(path[i]);
        faces_[face_idx] = f1;
        faces_.push_back(f2);
        for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
        for (int v : path) in_h_vertex_[v] = true;
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<bool> in_h_edge_, in_h_vertex_;
    std::vector<std::vector<int>> faces_;
};

}  // namespace

std::optional<std::vector<std::vector<int>>> planar_faces_biconnected(
    int n, const std::vector<std::pair<int, int>>& edges) {
    // Quick Euler bound.
    if (n >= 3 && static_cast<long long>(edges.size()) > 3LL * n - 6) return std::nullopt;
    return FaceSplitter(n, edges).run();
}

bool is_planar(const Graph& g) {
    if (g.num_vertices() >= 3 && static_cast<long long>(g.num_edges()) > 3LL * g.num_vertices() - 6)
        return false;
    for (const auto& comp_edges : g.biconnected_components()) {
        if (comp_edges.size() < 3) continue;
        std::set<int> verts;
        for (int e : comp_edges) {
            verts.insert(g.edge(e).first);
            verts.insert(g.edge(e).second);
        }
        std::map<int, int> remap;
        for (int v : verts) remap[v] = static_cast<int>(remap.size());
        std::vector<std::pair<int, int>> edges;
        for (int e : comp_edges) edges.emplace_back(remap[g.edge(e).first], remap[g.edge(e).second]);
        if (!planar_faces_biconnected(static_cast<int>(verts.size()), edges)) return false;
    }
    return true;
}

}  // namespace media
