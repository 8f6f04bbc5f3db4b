#include "media/medium.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "media/axiom_oracle.hpp"
#include "media/errors.hpp"
#include "media/partial_cube.hpp"

namespace media {

Medium::Medium(std::vector<std::string> state_names, std::vector<std::string> token_names,
               std::vector<int> action)
    : state_names_(std::move(state_names)),
      token_names_(std::move(token_names)),
      action_(std::move(action)) {
    if (token_names_.size() % 2 != 0)
        throw InternalError("medium: token names must come in pairs");
    if (action_.size() != state_names_.size() * token_names_.size())
        throw InternalError("medium: action table has wrong size");
    for (int x : action_)
        if (x < 0 || x >= num_states()) throw InternalError("medium: action target out of range");
}

std::optional<int> Medium::state_index(const std::string& name) const {
    for (int s = 0; s < num_states(); ++s)
        if (state_names_[s] == name) return s;
    return std::nullopt;
}

int MediumBuilder::add_state(const std::string& name) {
    states_.push_back(name);
    return static_cast<int>(states_.size()) - 1;
}

int MediumBuilder::add_token_pair(const std::string& name, const std::string& reverse_name) {
    tokens_.push_back(name);
    tokens_.push_back(reverse_name);
    return static_cast<int>(tokens_.size()) - 2;
}

void MediumBuilder::set_action(int state, int token, int target) {
    actions_.emplace_back(state, token, target);
}

void MediumBuilder::set_action(const std::string& state, const std::string& token,
                               const std::string& target) {
    auto find = [](const std::vector<std::string>& xs, const std::string& x) {
        auto it = std::find(xs.begin(), xs.end(), x);
        if (it == xs.end()) throw InternalError("medium builder: unknown name " + x);
        return static_cast<int>(it - xs.begin());
    };
    actions_.emplace_back(find(states_, state), find(tokens_, token), find(states_, target));
}

Medium MediumBuilder::assemble() const {
    int n = static_cast<int>(states_.size());
    int t = static_cast<int>(tokens_.size());
    std::vector<int> table(static_cast<size_t>(n) * t);
    for (int s = 0; s < n; ++s)
        for (int k = 0; k < t; ++k) table[static_cast<size_t>(s) * t + k] = s;
    for (auto [s, k, q] : actions_) table[static_cast<size_t>(s) * t + k] = q;
    return Medium(states_, tokens_, table);
}

Graph graph_from_medium(const Medium& m) {
    std::set<std::pair<int, int>> edge_set;
    for (int s = 0; s < m.num_states(); ++s) {
        for (int t = 0; t < m.num_tokens(); ++t) {
            int q = m.apply(s, t);
            if (q != s) edge_set.insert({std::min(s, q), std::max(s, q)});
        }
    }
    return Graph(m.num_states(), {edge_set.begin(), edge_set.end()}, m.state_names());
}

namespace {

std::string transition_witness(const Medium& m, int s, int t) {
    return "(" + m.state_name(s) + ", " + m.state_name(m.apply(s, t)) + ", " + m.token_name(t) + ")";
}

}  // namespace

std::optional<AxiomFailure> validate_medium_axioms(const Medium& m) {
    if (m.num_states() == 0) return AxiomFailure{2, "no states"};
    if (auto f = check_reverse_axiom(m)) return f;

    Graph g = graph_from_medium(m);
    if (!g.is_connected())
        return AxiomFailure{2, "transition graph is disconnected"};

    EdgeClassPartition classes;
    HypercubeEmbedding emb;
    try {
        classes = theta_classes(g);
        emb = hypercube_embedding(g, classes);
    } catch (const NotPartialCube& e) {
        return AxiomFailure{3, std::string("transition graph is not a partial cube: ") + e.what()};
    }

    // Tokens must realize the class cuts: each token pair acts along exactly
    // one class, with a consistent orientation, covering the whole class.
    if (m.num_token_pairs() != classes.class_count)
        return AxiomFailure{3, "token pair count " + std::to_string(m.num_token_pairs()) +
                                   " differs from cut count " + std::to_string(classes.class_count)};
    auto sides = class_sides(g, classes);
    auto by_class = classes.edges_by_class();
    std::vector<bool> class_used(classes.class_count, false);
    for (int p = 0; p < m.num_token_pairs(); ++p) {
        int t = 2 * p;
        int cls = -1;
        int to_side = -1;  // side that token t moves states into
        int transitions = 0;
        for (int s = 0; s < m.num_states(); ++s) {
            int q = m.apply(s, t);
            if (q == s) continue;
            ++transitions;
            auto e = g.edge_between(s, q);
            if (!e) return AxiomFailure{3, "action " + transition_witness(m, s, t) + " skips an edge"};
            int c = classes.class_of[*e];
            if (cls == -1) {
                cls = c;
                to_side = sides[c][q];
            } else if (c != cls) {
                return AxiomFailure{3, "token " + m.token_name(t) + " acts across two different cuts"};
            } else if (sides[c][q] != to_side) {
                return AxiomFailure{3, "token " + m.token_name(t) + " crosses its cut in both directions"};
            }
        }
        if (cls == -1)
            return AxiomFailure{1, "token " + m.token_name(t) + " is ineffective on every state"};
        if (class_used[cls])
            return AxiomFailure{3, "two token pairs act along the same cut"};
        class_used[cls] = true;
        if (transitions != static_cast<int>(by_class[cls].size()))
            return AxiomFailure{3, "token " + m.token_name(t) + " covers only part of its cut"};
    }
    return std::nullopt;
}

Medium build_medium(const std::vector<std::string>& states,
                    const std::vector<std::pair<std::string, std::string>>& token_pairs,
                    const std::vector<std::tuple<int, int, int>>& actions) {
    MediumBuilder b;
    for (const auto& s : states) b.add_state(s);
    for (const auto& [t, r] : token_pairs) b.add_token_pair(t, r);
    for (auto [s, t, q] : actions) b.set_action(s, t, q);
    Medium m = b.assemble();
    if (auto f = validate_medium_axioms(m)) throw AxiomViolation(f->axiom, f->witness);
    return m;
}

bool media_isomorphic_by_names(const Medium& a, const Medium& b) {
    if (a.num_states() != b.num_states() || a.num_token_pairs() != b.num_token_pairs()) return false;
    std::vector<int> a_to_b(a.num_states());
    for (int s = 0; s < a.num_states(); ++s) {
        auto idx = b.state_index(a.state_name(s));
        if (!idx) return false;
        a_to_b[s] = *idx;
    }
    // Each token's effective transition relation must appear in the other
    // medium; relations are unique per token in a valid medium.
    auto relation = [](const Medium& m, int t, const std::vector<int>* map) {
        std::set<std::pair<int, int>> rel;
        for (int s = 0; s < m.num_states(); ++s) {
            int q = m.apply(s, t);
            if (q != s) rel.insert(map ? std::pair{(*map)[s], (*map)[q]} : std::pair{s, q});
        }
        return rel;
    };
    std::vector<std::set<std::pair<int, int>>> b_rels;
    b_rels.reserve(b.num_tokens());
    for (int t = 0; t < b.num_tokens(); ++t) b_rels.push_back(relation(b, t, nullptr));
    std::vector<bool> used(b.num_tokens(), false);
    for (int t = 0; t < a.num_tokens(); ++t) {
        auto rel = relation(a, t, &a_to_b);
        bool found = false;
        for (int u = 0; u < b.num_tokens() && !found; ++u) {
            if (!used[u] && b_rels[u] == rel) {
                used[u] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace media
