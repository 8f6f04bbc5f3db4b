#pragma once

#include <string>
#include <vector>

#include "media/graph.hpp"
#include "media/medium.hpp"
#include "media/partial_cube.hpp"
#include "media/semicube.hpp"

namespace media {

/// A parsed state file: per-state integer coordinates (hypercube 0/1 or
/// general lattice), optional explicit edges, optional metadata.
struct MediumFile {
    int format_version = 1;
    std::vector<std::string> state_ids;
    Coords coords;
    std::vector<std::pair<int, int>> explicit_edges;  // empty: edges inferred
    std::vector<std::pair<std::string, std::string>> metadata;
};

struct LoadedMedium {
    MediumFile file;
    Graph graph;
    Coords lattice_coords;  // as given, translated so each axis starts at 0
    HypercubeEmbedding embedding;  // unary-encoded, isometry-checked
    Medium medium;
};

/// Line-oriented text format:
///   mediumfile 1
///   meta <key> <value...>        (optional)
///   state <id> <c0> <c1> ...     (one per state)
///   edge <id> <id>               (optional; absent: unit-distance pairs)
/// A leading '{' switches to the JSON reader: {"format":1, "states":[{"id":
/// ..., "coords":[...]}], "edges":[["a","b"],...]}.
MediumFile parse_medium_file(const std::string& text);

/// Builds the graph (explicit edges or unit-L1 pairs), validates that the
/// coordinates are isometric, and constructs the medium; throws ParseError
/// or NotIsometric.
LoadedMedium load_medium(const std::string& text);

std::string serialize_medium_file(const MediumFile& f);

/// File content for a graph with its minimum-dimension lattice embedding.
MediumFile medium_file_from_lattice(const Graph& g, const LatticeEmbedding& emb,
                                    const std::vector<std::pair<std::string, std::string>>& meta);

}  // namespace media
