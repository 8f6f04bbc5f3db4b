#include "media/spqr.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "media/errors.hpp"

namespace media {

namespace {

struct PEdge {
    int u, v;
    int real_id;  // -1 when virtual
    int virt_id;  // pairing id when virtual
};

struct Builder {
    std::vector<SpqrTree::Node> final_nodes;           // built later
    std::vector<std::pair<SpqrTree::Kind, std::vector<PEdge>>> raw;
    int next_virt = 0;

    static std::vector<int> piece_vertices(const std::vector<PEdge>& edges) {
        std::set<int> vs;
        for (const auto& e : edges) {
            vs.insert(e.u);
            vs.insert(e.v);
        }
        return {vs.begin(), vs.end()};
    }

    static bool is_cycle(const std::vector<PEdge>& edges, const std::vector<int>& verts) {
        if (verts.size() < 3 || edges.size() != verts.size()) return false;
        std::map<int, int> deg;
        for (const auto& e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (int v : verts)
            if (deg[v] != 2) return false;
        // connected?
        std::map<int, std::vector<int>> adj;
        for (const auto& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::set<int> seen{verts[0]};
        std::vector<int> stack{verts[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        return seen.size() == verts.size();
    }

    /// Parallel pair, or a separation pair; nullopt for 3-connected skeletons.
    static std::optional<std::pair<int, int>> find_split_pair(const std::vector<PEdge>& edges,
                                                              const std::vector<int>& verts) {
        std::map<std::pair<int, int>, int> mult;
        for (const auto& e : edges) {
            auto key = std::minmax(e.u, e.v);
            if (++mult[{key.first, key.second}] >= 2) return {{key.first, key.second}};
        }
        int k = static_cast<int>(verts.size());
        std::map<int, std::vector<int>> adj;
        for (const auto& e : edges) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                int a = verts[i], b = verts[j];
                // count components of verts minus {a,b}
                std::set<int> seen{a, b};
                int comps = 0;
                for (int s : verts) {
                    if (seen.count(s)) continue;
                    ++comps;
                    if (comps >= 2) break;
                    std::vector<int> stack{s};
                    seen.insert(s);
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (int w : adj[u])
                            if (w != a && w != b && seen.insert(w).second) stack.push_back(w);
                    }
                }
                if (comps >= 2) return {{a, b}};
            }
        }
        return std::nullopt;
    }

    void decompose(std::vector<PEdge> edges) {
        auto verts = piece_vertices(edges);
        if (verts.size() == 2) {
            if (edges.size() < 3)
                throw InternalError("spqr: bond with fewer than three edges");
            raw.emplace_back(SpqrTree::Kind::P, std::move(edges));
            return;
        }
        if (is_cycle(edges, verts)) {
            raw.emplace_back(SpqrTree::Kind::S, std::move(edges));
            return;
        }
        auto split = find_split_pair(edges, verts);
        if (!split) {
            raw.emplace_back(SpqrTree::Kind::R, std::move(edges));
            return;
        }
        auto [a, b] = *split;
        // component label for every vertex outside {a,b}
        std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (w, edge idx)
        for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
            adj[edges[i].u].emplace_back(edges[i].v, i);
            adj[edges[i].v].emplace_back(edges[i].u, i);
        }
        std::map<int, int> comp;
        int comp_count = 0;
        for (int s : verts) {
            if (s == a || s == b || comp.count(s)) continue;
            int c = comp_count++;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, ei] : adj[u]) {
                    (void)ei;
                    if (w != a && w != b && !comp.count(w)) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
                }
            }
        }
        std::vector<std::vector<PEdge>> groups(comp_count);
        std::vector<PEdge> direct;
        for (const auto& e : edges) {
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) direct.push_back(e);
            else if (e.u != a && e.u != b) groups[comp.at(e.u)].push_back(e);
            else groups[comp.at(e.v)].push_back(e);
        }
        if (comp_count == 2 && direct.empty()) {
            int vid = next_virt++;
            groups[0].push_back({a, b, -1, vid});
            groups[1].push_back({a, b, -1, vid});
            decompose(std::move(groups[0]));
            decompose(std::move(groups[1]));
            return;
        }
        std::vector<PEdge> hub = direct;
        for (auto& grp : groups) {
            int vid = next_virt++;
            grp.push_back({a, b, -1, vid});
            hub.push_back({a, b, -1, vid});
            decompose(std::move(grp));
        }
        decompose(std::move(hub));
    }

    /// Canonical form: merge adjacent S-S and P-P pairs along their twins.
    void merge_same_kind() {
        std::vector<bool> alive(raw.size(), true);
        while (true) {
            // locate twins
            std::map<int, std::vector<std::pair<int, int>>> where;  // virt -> (node, slot)
            for (int i = 0; i < static_cast<int>(raw.size()); ++i) {
                if (!alive[i]) continue;
                for (int s = 0; s < static_cast<int>(raw[i].second.size()); ++s)
                    if (raw[i].second[s].real_id < 0) where[raw[i].second[s].virt_id].emplace_back(i, s);
            }
            int va = -1;
            for (const auto& [vid, locs] : where) {
                if (locs.size() != 2) throw InternalError("spqr: dangling virtual edge");
                auto [n1, s1] = locs[0];
                auto [n2, s2] = locs[1];
                if (n1 == n2) throw InternalError("spqr: twin inside one node");
                if (raw[n1].first == raw[n2].first &&
                    (raw[n1].first == SpqrTree::Kind::S || raw[n1].first == SpqrTree::Kind::P)) {
                    va = vid;
                    break;
                }
            }
            if (va < 0) break;
            auto [n1, s1] = where[va][0];
            auto [n2, s2] = where[va][1];
            std::vector<PEdge> merged;
            for (int s = 0; s < static_cast<int>(raw[n1].second.size()); ++s)
                if (s != s1) merged.push_back(raw[n1].second[s]);
            for (int s = 0; s < static_cast<int>(raw[n2].second.size()); ++s)
                if (s != s2) merged.push_back(raw[n2].second[s]);
            raw[n1].second = std::move(merged);
            alive[n2] = false;
        }
        std::vector<std::pair<SpqrTree::Kind, std::vector<PEdge>>> compact;
        for (int i = 0; i < static_cast<int>(raw.size()); ++i)
            if (alive[i]) compact.push_back(std::move(raw[i]));
        raw = std::move(compact);
    }

    SpqrTree assemble() {
        SpqrTree t;
        for (auto& [kind, edges] : raw) {
            SpqrTree::Node node;
            node.kind = kind;
            for (const auto& e : edges) node.edges.push_back({e.u, e.v, e.real_id, -1, -1});
            t.nodes.push_back(std::move(node));
        }
        // link twins
        std::map<int, std::vector<std::pair<int, int>>> where;
        for (int i = 0; i < static_cast<int>(raw.size()); ++i)
            for (int s = 0; s < static_cast<int>(raw[i].second.size()); ++s)
                if (raw[i].second[s].real_id < 0) where[raw[i].second[s].virt_id].emplace_back(i, s);
        for (const auto& [vid, locs] : where) {
            (void)vid;
            auto [n1, s1] = locs[0];
            auto [n2, s2] = locs[1];
            t.nodes[n1].edges[s1].twin_node = n2;
            t.nodes[n1].edges[s1].twin_slot = s2;
            t.nodes[n2].edges[s2].twin_node = n1;
            t.nodes[n2].edges[s2].twin_slot = s1;
        }
        return t;
    }
};

void validate_tree(const SpqrTree& t, const Graph& g) {
    std::vector<int> real_seen(g.num_edges(), 0);
    int virt_count = 0;
    for (int i = 0; i < t.node_count(); ++i) {
        const auto& node = t.nodes[i];
        for (int s = 0; s < static_cast<int>(node.edges.size()); ++s) {
            const auto& e = node.edges[s];
            if (e.is_virtual()) {
                ++virt_count;
                const auto& twin = t.nodes[e.twin_node].edges[e.twin_slot];
                if (std::minmax(twin.u, twin.v) != std::minmax(e.u, e.v) ||
                    twin.twin_node != i || twin.twin_slot != s)
                    throw InternalError("spqr: inconsistent twins");
                if (t.nodes[e.twin_node].kind == node.kind &&
                    (node.kind == SpqrTree::Kind::S || node.kind == SpqrTree::Kind::P))
                    throw InternalError("spqr: adjacent nodes share kind " +
                                        std::string(node.kind == SpqrTree::Kind::S ? "S" : "P"));
            } else {
                ++real_seen[e.real_id];
            }
        }
    }
    for (int e = 0; e < g.num_edges(); ++e)
        if (real_seen[e] != 1) throw InternalError("spqr: real edges not partitioned");
    if (virt_count != 2 * (t.node_count() - 1)) throw InternalError("spqr: not a tree");
}

}  // namespace

SpqrTree spqr_tree(const Graph& g) {
    if (!g.is_biconnected() || g.num_edges() < 1)
        throw NotBiconnected("spqr tree requires a biconnected graph");
    Builder b;
    std::vector<PEdge> all;
    for (int e = 0; e < g.num_edges(); ++e)
        all.push_back({g.edge(e).first, g.edge(e).second, e, -1});
    if (g.num_edges() == 1) {
        // degenerate: single-edge graph has a lone Q-style node
        SpqrTree t;
        t.nodes.push_back({SpqrTree::Kind::Q, {{g.edge(0).first, g.edge(0).second, 0, -1, -1}}});
        return t;
    }
    b.decompose(std::move(all));
    b.merge_same_kind();
    SpqrTree t = b.assemble();
    validate_tree(t, g);
    return t;
}

}  // namespace media
