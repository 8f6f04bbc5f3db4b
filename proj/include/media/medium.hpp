#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "media/graph.hpp"

namespace media {

/// Finite state/token system.  Tokens come in reverse pairs: pair i owns
/// tokens 2i and 2i+1 and reverse(t) == t^1.  The action table is total;
/// a token that is ineffective on a state maps it to itself.
class Medium {
public:
    Medium() = default;
    Medium(std::vector<std::string> state_names, std::vector<std::string> token_names,
           std::vector<int> action);

    int num_states() const { return static_cast<int>(state_names_.size()); }
    int num_token_pairs() const { return static_cast<int>(token_names_.size()) / 2; }
    int num_tokens() const { return static_cast<int>(token_names_.size()); }

    int apply(int state, int token) const { return action_[static_cast<size_t>(state) * num_tokens() + token]; }
    static int reverse(int token) { return token ^ 1; }
    bool effective(int state, int token) const { return apply(state, token) != state; }

    const std::string& state_name(int s) const { return state_names_[s]; }
    const std::string& token_name(int t) const { return token_names_[t]; }
    const std::vector<std::string>& state_names() const { return state_names_; }
    std::optional<int> state_index(const std::string& name) const;

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> token_names_;  // 2 per pair; reverse of 2i is 2i+1
    std::vector<int> action_;               // [state * num_tokens + token]
};

/// Incremental construction; unset actions default to the identity.
class MediumBuilder {
public:
    int add_state(const std::string& name);
    /// Returns the index of the forward token; the reverse is index+1.
    int add_token_pair(const std::string& name, const std::string& reverse_name);
    void set_action(int state, int token, int target);
    void set_action(const std::string& state, const std::string& token, const std::string& target);

    /// Assembles the table without validating the axioms.
    Medium assemble() const;

private:
    std::vector<std::string> states_;
    std::vector<std::string> tokens_;
    std::vector<std::tuple<int, int, int>> actions_;
};

struct AxiomFailure {
    int axiom = 0;  // 1..4
    std::string witness;
};

/// Axiom 1 checked directly (reverse pairing and its uniqueness); axioms 2-4
/// via the partial-cube characterization of the transition graph together
/// with the token/cut correspondence.  Returns the first failure found.
std::optional<AxiomFailure> validate_medium_axioms(const Medium& m);

/// Validates and returns the medium; throws AxiomViolation otherwise.
Medium build_medium(const std::vector<std::string>& states,
                    const std::vector<std::pair<std::string, std::string>>& token_pairs,
                    const std::vector<std::tuple<int, int, int>>& actions);

/// States become vertices; an edge joins S and Q when some token maps S to Q.
Graph graph_from_medium(const Medium& m);

/// True when there is a state bijection (matched by state name) under which
/// the token actions coincide up to a bijection of tokens.
bool media_isomorphic_by_names(const Medium& a, const Medium& b);

}  // namespace media
