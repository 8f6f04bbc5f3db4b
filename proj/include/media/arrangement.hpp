#pragma once

#include <optional>
#include <string>
#include <vector>

#include "media/graph.hpp"
#include "media/medium.hpp"
#include "media/partial_cube.hpp"
#include "media/planar_embedding.hpp"

namespace media {

/// Combinatorial weak pseudoline arrangement dual to an embedded partial
/// cube: one curve per edge class, traced face-by-face through opposite
/// edges, ending on the outer face.
struct DualArrangement {
    struct Curve {
        int theta_class = 0;
        std::vector<int> crossed_edges;  // edge ids in trace order
        std::vector<int> zone_faces;     // interior faces visited, in order
        int end_a = 0, end_b = 0;        // outer-walk positions of the two ends
        int side_after_a = 0;            // cut side of the vertex following end_a
    };
    std::vector<Curve> curves;      // index == theta class
    int outer_marks = 0;            // outer walk length == 2 * curves.size()
    std::vector<int> mark_curve;    // per outer-walk position: curve index
};

/// Chords of the unit circle joining each curve's two end marks, plus the
/// unit edge direction perpendicular to each chord, signed from the side of
/// the placement root outward.
struct ChordAssignment {
    struct Point {
        double x = 0, y = 0;
    };
    std::vector<Point> marks;                      // on the unit circle
    std::vector<std::pair<Point, Point>> chords;   // per curve
    std::vector<Point> edge_direction;             // per theta class, unit length
};

struct SymmetricDrawing {
    struct Edge {
        int u = 0, v = 0;
        int theta_class = 0;
    };
    std::vector<std::pair<double, double>> pos;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> faces;  // from the embedding; faces[outer] unbounded
    int outer = -1;
    std::vector<ChordAssignment::Point> class_direction;
};

struct RejectInfo {
    std::string stage;
    std::string reason;
};

struct RecognitionResult {
    std::optional<SymmetricDrawing> drawing;
    std::optional<RejectInfo> rejection;
    bool accepted() const { return drawing.has_value(); }
};

/// Traces the dual curves of an embedded graph.  Throws OddFace, ClosedCurve,
/// or NotPartialCube when the zones do not form one-curve-per-class.
DualArrangement dual_arrangement(const Graph& g, const PlanarEmbedding& pe,
                                 const EdgeClassPartition& classes);

ChordAssignment chord_layout(const DualArrangement& da);

/// Unit-step placement: breadth-first from vertex 0, each edge advancing by
/// its class direction (sign by cut side).  Non-tree edges must close within
/// tolerance or InconsistentPlacement is thrown.
SymmetricDrawing place_vertices(const Graph& g, const PlanarEmbedding& pe,
                                const EdgeClassPartition& classes, const ChordAssignment& ca);

/// Accepts iff all edges are unit length in their class direction, internal
/// faces are strictly convex with a consistent orientation and centrally
/// symmetric, vertices are distinct, and the outer boundary is simple.
std::optional<std::string> verify_symmetric(const SymmetricDrawing& sd);

/// Full pipeline: theta classes, embedding selection, dual arrangement,
/// chord layout, placement, verification.
RecognitionResult recognize_and_draw(const Graph& g);

/// Medium on the arrangement's cells: token (i,+) crosses an arc of curve i
/// away from the root side.
Medium arrangement_to_medium(const Graph& g, const DualArrangement& da,
                             const EdgeClassPartition& classes);

}  // namespace media
