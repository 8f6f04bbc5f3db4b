#pragma once

#include <optional>

#include "media/medium.hpp"

namespace media {

/// Reverse pairing holds in both directions and is unique among all tokens.
std::optional<AxiomFailure> check_reverse_axiom(const Medium& m);

/// Checks all four axioms by bounded message enumeration:
///   2: every ordered state pair is joined by a consistent message of length
///      at most max_message_len (must be >= the transition graph diameter);
///   3: every stepwise-effective message returns to its start iff its token
///      counts are balanced;
///   4: concatenations of coinciding consistent stepwise-effective messages
///      stay consistent.
/// Enumeration work is capped by `budget` node expansions; throws
/// OracleBudgetExceeded beyond that.  Media with more than 32 token pairs are
/// out of range for this oracle.
std::optional<AxiomFailure> check_axioms_by_messages(const Medium& m, int max_message_len,
                                                     long long budget = 20'000'000);

}  // namespace media
