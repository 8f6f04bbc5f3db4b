#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "media/semicube.hpp"

namespace media {

namespace {

// Edmonds' blossom algorithm, contracted-blossom form: grow an alternating
// BFS forest from each exposed vertex, shrinking odd cycles onto their base
// until an augmenting path appears.
class Blossom {
public:
    Blossom(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(n), adj_(n), match_(n, -1), parent_(n), base_(n) {
        for (auto [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
    }

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) find_augmenting_path(v);
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        // climb from a marking bases, then climb from b until a marked base
        int x = a;
        while (true) {
            x = base_[x];
            seen[x] = true;
            if (match_[x] == -1) break;
            x = parent_[match_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (seen[y]) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& blossom) {
        while (base_[v] != b) {
            blossom[base_[v]] = true;
            blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void find_augmenting_path(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::vector<bool> used(n_, false);
        used[root] = true;
        std::deque<int> q{root};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom onto its base
                    int cur_base = lca(v, to);
                    std::vector<bool> blossom(n_, false);
                    mark_path(v, cur_base, to, blossom);
                    mark_path(to, cur_base, v, blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used[i]) {
                                used[i] = true;
                                q.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        augment(to);
                        return;
                    }
                    used[match_[to]] = true;
                    q.push_back(match_[to]);
                }
            }
        }
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
};

}  // namespace

std::vector<int> maximum_matching_mates(int num_nodes,
                                        const std::vector<std::pair<int, int>>& edges) {
    return Blossom(num_nodes, edges).run();
}

Matching maximum_matching(const SemicubeGraph& sg) {
    auto mates = maximum_matching_mates(2 * sg.tau, sg.edges);
    Matching m;
    for (int v = 0; v < static_cast<int>(mates.size()); ++v)
        if (mates[v] > v) m.edges.emplace_back(v, mates[v]);
    return m;
}

}  // namespace media
