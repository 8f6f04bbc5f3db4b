#include "media/axiom_oracle.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "media/errors.hpp"

namespace media {

namespace {

using Mask = std::uint64_t;

constexpr Mask kEven = 0x5555555555555555ull;

Mask reversed_tokens(Mask m) { return ((m & kEven) << 1) | ((m & ~kEven) >> 1); }

struct Budget {
    long long left;
    void spend() {
        if (--left < 0) throw OracleBudgetExceeded("message oracle budget exceeded");
    }
};

/// Axiom 2: reachability by consistent messages, BFS by length with
/// subset-dominance pruning per state.
bool consistent_reach(const Medium& m, int from, int to, int max_len, Budget& budget) {
    std::vector<std::vector<Mask>> minimal(m.num_states());
    std::deque<std::pair<int, Mask>> frontier{{from, 0}};
    minimal[from].push_back(0);
    auto dominated = [&](int s, Mask mask) {
        for (Mask old : minimal[s])
            if ((old & mask) == old) return true;
        return false;
    };
    for (int len = 0; len < max_len && !frontier.empty(); ++len) {
        std::deque<std::pair<int, Mask>> next;
        for (auto [s, mask] : frontier) {
            for (int t = 0; t < m.num_tokens(); ++t) {
                budget.spend();
                int q = m.apply(s, t);
                if (q == s) continue;
                if (mask & (Mask{1} << Medium::reverse(t))) continue;
                Mask nm = mask | (Mask{1} << t);
                if (q == to) return true;
                if (dominated(q, nm)) continue;
                minimal[q].push_back(nm);
                next.emplace_back(q, nm);
            }
        }
        frontier.swap(next);
    }
    return from == to;
}

struct Axiom3Dfs {
    const Medium& m;
    Budget& budget;
    int start;
    std::vector<int> counts;
    std::optional<AxiomFailure> failure;

    bool balanced() const {
        for (int p = 0; p < m.num_token_pairs(); ++p)
            if (counts[2 * p] != counts[2 * p + 1]) return false;
        return true;
    }

    void run(int state, int depth, int max_len) {
        if (failure) return;
        bool bal = balanced();
        if (depth > 0) {
            if (state == start && !bal) {
                failure = AxiomFailure{3, "a stepwise effective message returns " +
                                              m.state_name(start) +
                                              " to itself with unbalanced token counts"};
                return;
            }
            if (state != start && bal) {
                failure = AxiomFailure{3, "a balanced stepwise effective message moves " +
                                              m.state_name(start) + " to " + m.state_name(state)};
                return;
            }
        }
        if (depth == max_len) return;
        for (int t = 0; t < m.num_tokens(); ++t) {
            budget.spend();
            int q = m.apply(state, t);
            if (q == state) continue;
            ++counts[t];
            run(q, depth + 1, max_len);
            --counts[t];
            if (failure) return;
        }
    }
};

}  // namespace

std::optional<AxiomFailure> check_reverse_axiom(const Medium& m) {
    for (int t = 0; t < m.num_tokens(); ++t) {
        int r = Medium::reverse(t);
        for (int s = 0; s < m.num_states(); ++s) {
            int q = m.apply(s, t);
            if (q != s && m.apply(q, r) != s)
                return AxiomFailure{1, "token " + m.token_name(t) + " maps " + m.state_name(s) +
                                           " to " + m.state_name(q) + " but " + m.token_name(r) +
                                           " does not map it back"};
        }
    }
    for (int t = 0; t < m.num_tokens(); ++t) {
        for (int u = 0; u < m.num_tokens(); ++u) {
            if (u == Medium::reverse(t)) continue;
            bool is_reverse = true;
            for (int s = 0; s < m.num_states() && is_reverse; ++s) {
                int q = m.apply(s, t);
                if (q != s && m.apply(q, u) != s) is_reverse = false;
            }
            for (int q = 0; q < m.num_states() && is_reverse; ++q) {
                int s = m.apply(q, u);
                if (s != q && m.apply(s, t) != q) is_reverse = false;
            }
            if (is_reverse)
                return AxiomFailure{1, "reverse of token " + m.token_name(t) +
                                           " is not unique: " + m.token_name(u) + " also works"};
        }
    }
    return std::nullopt;
}

std::optional<AxiomFailure> check_axioms_by_messages(const Medium& m, int max_message_len,
                                                     long long budget_limit) {
    if (m.num_states() == 0) return AxiomFailure{2, "no states"};
    if (m.num_tokens() > 64)
        throw OracleBudgetExceeded("message oracle limited to 32 token pairs");
    Budget budget{budget_limit};

    if (auto f = check_reverse_axiom(m)) return f;

    for (int s = 0; s < m.num_states(); ++s)
        for (int q = 0; q < m.num_states(); ++q)
            if (s != q && !consistent_reach(m, s, q, max_message_len, budget))
                return AxiomFailure{2, "no consistent message of length <= " +
                                           std::to_string(max_message_len) + " maps " +
                                           m.state_name(s) + " to " + m.state_name(q)};

    for (int s = 0; s < m.num_states(); ++s) {
        Axiom3Dfs dfs{m, budget, s, std::vector<int>(m.num_tokens(), 0), std::nullopt};
        dfs.run(s, 0, max_message_len);
        if (dfs.failure) return dfs.failure;
    }

    // Axiom 4: collect token masks of consistent stepwise-effective messages
    // by end state; any cross conflict between two masks meeting at the same
    // state is a violation.
    std::vector<std::set<Mask>> masks_by_end(m.num_states());
    for (int s = 0; s < m.num_states(); ++s) {
        std::set<std::pair<int, Mask>> seen{{s, 0}};
        std::deque<std::pair<int, Mask>> frontier{{s, 0}};
        masks_by_end[s].insert(0);
        for (int len = 0; len < max_message_len && !frontier.empty(); ++len) {
            std::deque<std::pair<int, Mask>> next;
            for (auto [u, mask] : frontier) {
                for (int t = 0; t < m.num_tokens(); ++t) {
                    budget.spend();
                    int q = m.apply(u, t);
                    if (q == u) continue;
                    if (mask & (Mask{1} << Medium::reverse(t))) continue;
                    Mask nm = mask | (Mask{1} << t);
                    if (seen.insert({q, nm}).second) {
                        masks_by_end[q].insert(nm);
                        next.emplace_back(q, nm);
                    }
                }
            }
            frontier.swap(next);
        }
    }
    for (int e = 0; e < m.num_states(); ++e) {
        const auto& masks = masks_by_end[e];
        for (auto it = masks.begin(); it != masks.end(); ++it) {
            Mask rev = reversed_tokens(*it);
            for (auto jt = masks.begin(); jt != masks.end(); ++jt) {
                budget.spend();
                if (rev & *jt)
                    return AxiomFailure{4,
                                        "two consistent stepwise effective messages meeting at " +
                                            m.state_name(e) + " concatenate inconsistently"};
            }
        }
    }
    return std::nullopt;
}

}  // namespace media
