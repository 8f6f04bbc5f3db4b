#pragma once

#include <vector>

#include "media/graph.hpp"
#include "media/planar_embedding.hpp"

namespace media {

/// Candidate embeddings that could be dual to a weak pseudoline arrangement,
/// from the bottom-up S/P/Q/R case analysis per biconnected block plus the
/// outer-face merge across articulation points.  Usually a single candidate;
/// several when a 3-connected block leaves its outer face tied (downstream
/// verification arbitrates).  Throws NotPlanar or NoViableEmbedding.
std::vector<PlanarEmbedding> select_embedding(const Graph& g);

}  // namespace media
