#include "media/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "media/errors.hpp"

namespace media {

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph make_hypercube(int d) {
    int n = 1 << d;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names(n);
    for (int v = 0; v < n; ++v) {
        std::string s;
        for (int i = 0; i < d; ++i) s += static_cast<char>('0' + ((v >> i) & 1));
        names[v] = s.empty() ? "0" : s;
        for (int i = 0; i < d; ++i)
            if (!((v >> i) & 1)) edges.emplace_back(v, v | (1 << i));
    }
    return Graph(n, std::move(edges), std::move(names));
}

Graph make_grid(const std::vector<int>& sides) {
    int n = 1;
    for (int s : sides) {
        if (s < 1) throw MediaError("grid axis needs at least one vertex");
        n *= s;
    }
    auto coords_of = [&](int v) {
        std::vector<int> c(sides.size());
        for (size_t i = 0; i < sides.size(); ++i) {
            c[i] = v % sides[i];
            v /= sides[i];
        }
        return c;
    };
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> names(n);
    for (int v = 0; v < n; ++v) {
        auto c = coords_of(v);
        std::string s;
        for (size_t i = 0; i < c.size(); ++i) s += (i ? "_" : "") + std::to_string(c[i]);
        names[v] = s.empty() ? "o" : s;
        int stride = 1;
        for (size_t i = 0; i < sides.size(); ++i) {
            if (c[i] + 1 < sides[i]) edges.emplace_back(v, v + stride);
            stride *= sides[i];
        }
    }
    return Graph(n, std::move(edges), std::move(names));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Medium medium_from_graph(const Graph& g) {
    auto classes = theta_classes(g);
    auto emb = hypercube_embedding(g, classes);
    return medium_from_partial_cube(emb);
}

namespace {

std::string digits(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += std::to_string(x + 1);
    return s;
}

}  // namespace

Graph permutations_graph(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> states;
    do {
        states.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::vector<int>, int> index;
    std::vector<std::string> names;
    for (size_t i = 0; i < states.size(); ++i) {
        index[states[i]] = static_cast<int>(i);
        names.push_back(digits(states[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < states.size(); ++i) {
        for (int k = 0; k + 1 < n; ++k) {
            auto next = states[i];
            std::swap(next[k], next[k + 1]);
            int j = index[next];
            if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
        }
    }
    return Graph(static_cast<int>(states.size()), std::move(edges), std::move(names));
}

namespace {

using OrderedPartition = std::vector<std::vector<int>>;

void enumerate_partitions(std::vector<int> remaining, OrderedPartition& prefix,
                          std::vector<OrderedPartition>& out) {
    if (remaining.empty()) {
        out.push_back(prefix);
        return;
    }
    // First block: any nonempty subset of the remaining items.
    int k = static_cast<int>(remaining.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
        std::vector<int> block, rest;
        for (int i = 0; i < k; ++i)
            ((mask >> i) & 1 ? block : rest).push_back(remaining[i]);
        prefix.push_back(block);
        enumerate_partitions(rest, prefix, out);
        prefix.pop_back();
    }
}

std::string partition_name(const OrderedPartition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += "|";
        s += digits(p[i]);
    }
    return s;
}

}  // namespace

Graph weak_orders_graph(int n) {
    std::vector<int> items(n);
    std::iota(items.begin(), items.end(), 0);
    std::vector<OrderedPartition> states;
    OrderedPartition prefix;
    enumerate_partitions(items, prefix, states);
    std::map<std::string, int> index;
    std::vector<std::string> names;
    for (size_t i = 0; i < states.size(); ++i) {
        names.push_back(partition_name(states[i]));
        index[names.back()] = static_cast<int>(i);
    }
    // Adjacent states differ by merging two neighboring blocks.
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < states.size(); ++i) {
        const auto& p = states[i];
        for (size_t b = 0; b + 1 < p.size(); ++b) {
            OrderedPartition merged;
            for (size_t c = 0; c < p.size(); ++c) {
                if (c == b) {
                    auto block = p[b];
                    block.insert(block.end(), p[b + 1].begin(), p[b + 1].end());
                    std::sort(block.begin(), block.end());
                    merged.push_back(block);
                } else if (c != b + 1) {
                    merged.push_back(p[c]);
                }
            }
            int j = index.at(partition_name(merged));
            if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
            else edges.emplace_back(j, static_cast<int>(i));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(static_cast<int>(states.size()), std::move(edges), std::move(names));
}

Graph partial_orders_graph(int n) {
    // Relations as bitmasks over ordered pairs (i,j), i != j.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    int bits = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> bit_of(n, std::vector<int>(n, -1));
    for (int b = 0; b < bits; ++b) bit_of[pairs[b].first][pairs[b].second] = b;
    auto is_poset = [&](int mask) {
        for (int b = 0; b < bits; ++b) {
            if (!((mask >> b) & 1)) continue;
            auto [i, j] = pairs[b];
            if ((mask >> bit_of[j][i]) & 1) return false;  // antisymmetry
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (((mask >> bit_of[j][k]) & 1) && !((mask >> bit_of[i][k]) & 1))
                    return false;  // transitivity
            }
        }
        return true;
    };
    std::vector<int> states;
    std::map<int, int> index;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        if (is_poset(mask)) {
            index[mask] = static_cast<int>(states.size());
            states.push_back(mask);
        }
    }
    std::vector<std::string> names;
    for (int mask : states) {
        std::string s;
        for (int b = 0; b < bits; ++b) {
            if ((mask >> b) & 1) {
                if (!s.empty()) s += ",";
                s += std::to_string(pairs[b].first + 1) + "<" + std::to_string(pairs[b].second + 1);
            }
        }
        names.push_back(s.empty() ? "-" : s);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < states.size(); ++i) {
        for (int b = 0; b < bits; ++b) {
            int other = states[i] ^ (1 << b);
            auto it = index.find(other);
            if (it != index.end() && static_cast<int>(i) < it->second)
                edges.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return Graph(static_cast<int>(states.size()), std::move(edges), std::move(names));
}

Medium generate_family(const std::string& name, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw MediaError("family " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "hypercube") {
        want(1);
        int d = params[0];
        if (d < 0 || d > 10) throw SizeCap("hypercube dimension must be in 0..10");
        return medium_from_graph(make_hypercube(d));
    }
    if (name == "grid") {
        if (params.empty()) throw MediaError("grid expects at least one axis");
        long long states = 1;
        for (int s : params) {
            if (s < 1) throw MediaError("grid axis needs at least one vertex");
            states *= s;
            if (states > 4096) throw SizeCap("grid limited to 4096 states");
        }
        return medium_from_graph(make_grid(params));
    }
    if (name == "permutations") {
        want(1);
        if (params[0] < 1 || params[0] > 7) throw SizeCap("permutations limited to n in 1..7");
        return medium_from_graph(permutations_graph(params[0]));
    }
    if (name == "weak-orders") {
        want(1);
        if (params[0] < 1 || params[0] > 5) throw SizeCap("weak-orders limited to n in 1..5");
        return medium_from_graph(weak_orders_graph(params[0]));
    }
    if (name == "partial-orders") {
        want(1);
        if (params[0] < 1 || params[0] > 5) throw SizeCap("partial-orders limited to n in 1..5");
        return medium_from_graph(partial_orders_graph(params[0]));
    }
    throw UnsupportedFamily(name);
}

}  // namespace media
