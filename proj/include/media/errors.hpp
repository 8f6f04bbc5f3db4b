#pragma once

#include <stdexcept>
#include <string>

namespace media {

struct MediaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One of the four medium axioms failed; `axiom` is 1..4 and `witness`
/// describes the offending state/token/message.
struct AxiomViolation : MediaError {
    AxiomViolation(int axiom_, std::string witness_)
        : MediaError("axiom " + std::to_string(axiom_) + " violated: " + witness_),
          axiom(axiom_),
          witness(std::move(witness_)) {}
    int axiom;
    std::string witness;
};

struct NotPartialCube : MediaError {
    explicit NotPartialCube(std::string why) : MediaError("not a partial cube: " + why) {}
};

struct NotIsometric : MediaError {
    NotIsometric(int u_, int v_, long long graph_dist_, long long l1_dist_, const std::string& detail)
        : MediaError("not isometric: " + detail), u(u_), v(v_), graph_dist(graph_dist_), l1_dist(l1_dist_) {}
    int u, v;
    long long graph_dist, l1_dist;
};

struct ParseError : MediaError {
    ParseError(int line_, const std::string& what_)
        : MediaError("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

struct NotPlanar : MediaError {
    explicit NotPlanar(std::string why) : MediaError("not planar: " + why) {}
};

struct NotBiconnected : MediaError {
    explicit NotBiconnected(std::string why) : MediaError("not biconnected: " + why) {}
};

/// The S/P/Q/R case analysis ruled out every embedding.
struct NoViableEmbedding : MediaError {
    NoViableEmbedding(std::string case_, std::string witness_)
        : MediaError("no viable embedding (" + case_ + "): " + witness_),
          node_case(std::move(case_)),
          witness(std::move(witness_)) {}
    std::string node_case;
    std::string witness;
};

struct OddFace : MediaError {
    explicit OddFace(std::string which) : MediaError("odd face: " + which) {}
};

struct ClosedCurve : MediaError {
    explicit ClosedCurve(int theta_class_)
        : MediaError("dual curve of class " + std::to_string(theta_class_) + " is closed"),
          theta_class(theta_class_) {}
    int theta_class;
};

struct InconsistentPlacement : MediaError {
    explicit InconsistentPlacement(std::string edge)
        : MediaError("inconsistent placement across edge " + edge) {}
};

struct DegenerateAxis : MediaError {
    explicit DegenerateAxis(int axis)
        : MediaError("axis " + std::to_string(axis) + " has a single coordinate value") {}
};

struct UnsupportedFamily : MediaError {
    explicit UnsupportedFamily(const std::string& name) : MediaError("unknown family: " + name) {}
};

struct SizeCap : MediaError {
    explicit SizeCap(const std::string& what_) : MediaError("size cap exceeded: " + what_) {}
};

struct InternalError : MediaError {
    using MediaError::MediaError;
};

/// Raised by the bounded message-enumeration oracle when its search budget
/// runs out before a verdict.
struct OracleBudgetExceeded : MediaError {
    using MediaError::MediaError;
};

}  // namespace media
