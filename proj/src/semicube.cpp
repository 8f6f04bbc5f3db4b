#include "media/semicube.hpp"

#include <algorithm>
#include <map>

#include "media/errors.hpp"

namespace media {

SemicubeGraph semicube_graph(const HypercubeEmbedding& emb) {
    int n = static_cast<int>(emb.coords.size());
    SemicubeGraph sg;
    sg.tau = emb.dimension;
    sg.nodes.resize(2 * sg.tau);
    for (int i = 0; i < sg.tau; ++i) {
        for (int chi = 0; chi <= 1; ++chi) {
            Semicube& sc = sg.nodes[SemicubeGraph::node_id(i, chi)];
            sc.coord = i;
            sc.polarity = chi;
            for (int v = 0; v < n; ++v)
                if (emb.coords[v][i] == chi) sc.members.push_back(v);
            if (sc.members.empty())
                throw InternalError("semicube (" + std::to_string(i) + "," + std::to_string(chi) +
                                    ") is empty; coordinate never takes that value");
        }
    }
    // Edge rule: the two member sets cover all vertices, non-disjointly.
    std::vector<std::vector<char>> in(2 * sg.tau, std::vector<char>(n, 0));
    for (int a = 0; a < 2 * sg.tau; ++a)
        for (int v : sg.nodes[a].members) in[a][v] = 1;
    for (int a = 0; a < 2 * sg.tau; ++a) {
        for (int b = a + 1; b < 2 * sg.tau; ++b) {
            bool cover = true, overlap = false;
            for (int v = 0; v < n; ++v) {
                bool ia = in[a][v], ib = in[b][v];
                if (!ia && !ib) {
                    cover = false;
                    break;
                }
                if (ia && ib) overlap = true;
            }
            if (cover && overlap) sg.edges.emplace_back(a, b);
        }
    }
    return sg;
}

int lattice_dimension(int tau, const Matching& m) { return tau - m.size(); }

LatticeEmbedding lattice_embedding(const HypercubeEmbedding& emb, const Matching& m,
                                   bool flip_paths) {
    int n = static_cast<int>(emb.coords.size());
    int tau = emb.dimension;
    int nodes = 2 * tau;

    // Auxiliary multigraph: complement edges plus the matching.
    std::vector<std::vector<int>> adj(nodes);
    for (int i = 0; i < tau; ++i) {
        adj[2 * i].push_back(2 * i + 1);
        adj[2 * i + 1].push_back(2 * i);
    }
    for (auto [a, b] : m.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 0; v < nodes; ++v)
        if (adj[v].size() > 2)
            throw InternalError("matching edges are not disjoint");

    // Walk out each component from its endpoints; a component without an
    // endpoint is a cycle, which a maximum matching never produces here.
    std::vector<char> visited(nodes, 0);
    std::vector<std::vector<int>> paths;
    for (int s = 0; s < nodes; ++s) {
        if (visited[s] || adj[s].size() != 1) continue;
        std::vector<int> path{s};
        visited[s] = 1;
        int prev = -1, cur = s;
        while (true) {
            int next = -1;
            for (int w : adj[cur]) {
                if (w != prev) {
                    next = w;
                    break;
                }
            }
            if (next == -1) break;
            path.push_back(next);
            visited[next] = 1;
            prev = cur;
            cur = next;
        }
        paths.push_back(std::move(path));
    }
    for (int v = 0; v < nodes; ++v)
        if (!visited[v])
            throw InternalError("semicube path structure contains a cycle (matching bug)");

    int d = static_cast<int>(paths.size());
    if (d != lattice_dimension(tau, m))
        throw InternalError("path count disagrees with tau - |M|");

    // Position 0 at the endpoint with lexicographically smallest
    // (coord, polarity); node ids already sort that way.
    for (auto& path : paths)
        if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    std::sort(paths.begin(), paths.end());
    if (flip_paths)
        for (auto& path : paths) std::reverse(path.begin(), path.end());

    LatticeEmbedding out;
    out.dim = d;
    out.coords.assign(n, std::vector<int>(d, 0));
    std::vector<std::vector<char>> in(nodes, std::vector<char>(n, 0));
    for (int i = 0; i < tau; ++i)
        for (int v = 0; v < n; ++v) in[2 * i + emb.coords[v][i]][v] = 1;
    for (int k = 0; k < d; ++k) {
        for (size_t pos = 0; pos < paths[k].size(); pos += 2) {
            int node = paths[k][pos];
            for (int v = 0; v < n; ++v)
                if (in[node][v]) ++out.coords[v][k];
        }
    }

    // Normalize: translate each axis to start at 0 and compress unused values.
    for (int k = 0; k < d; ++k) {
        std::vector<int> values;
        values.reserve(n);
        for (int v = 0; v < n; ++v) values.push_back(out.coords[v][k]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        std::map<int, int> remap;
        for (size_t i = 0; i < values.size(); ++i) remap[values[i]] = static_cast<int>(i);
        for (int v = 0; v < n; ++v) out.coords[v][k] = remap[out.coords[v][k]];
    }
    return out;
}

}  // namespace media
