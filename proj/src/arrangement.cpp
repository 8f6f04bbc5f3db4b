#include "media/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "media/embedder.hpp"
#include "media/errors.hpp"

namespace media {

namespace {

constexpr double kEps = 1e-9;

struct DirectedEdgeIndex {
    // (u,v) -> face id containing the directed edge, and its index there
    std::map<std::pair<int, int>, std::pair<int, int>> at;

    explicit DirectedEdgeIndex(const PlanarEmbedding& pe) {
        for (int f = 0; f < static_cast<int>(pe.faces.size()); ++f) {
            int len = static_cast<int>(pe.faces[f].size());
            for (int i = 0; i < len; ++i) {
                int u = pe.faces[f][i], v = pe.faces[f][(i + 1) % len];
                at[{u, v}] = {f, i};
            }
        }
    }
};

}  // namespace

DualArrangement dual_arrangement(const Graph& g, const PlanarEmbedding& pe,
                                 const EdgeClassPartition& classes) {
    for (int f = 0; f < static_cast<int>(pe.faces.size()); ++f)
        if (pe.faces[f].size() % 2 != 0)
            throw OddFace("face " + std::to_string(f) + " has " +
                          std::to_string(pe.faces[f].size()) + " sides");

    DualArrangement da;
    da.curves.assign(classes.class_count, {});
    const auto& outer = pe.outer_walk();
    int L = static_cast<int>(outer.size());
    da.outer_marks = L;
    da.mark_curve.assign(L, -1);
    auto sides = class_sides(g, classes);

    DirectedEdgeIndex index(pe);
    auto edge_id = [&](int u, int v) { return *g.edge_between(u, v); };

    std::vector<bool> edge_crossed(g.num_edges(), false);
    std::vector<bool> mark_used(L, false);

    for (int start = 0; start < L; ++start) {
        if (mark_used[start]) continue;
        int u = outer[start], v = outer[(start + 1) % L];
        int e0 = edge_id(u, v);
        int cls = classes.class_of[e0];
        DualArrangement::Curve curve;
        curve.theta_class = cls;
        curve.end_a = start;
        curve.side_after_a = sides[cls][v];
        mark_used[start] = true;

        // cross e0 into the face on its other side and walk opposite edges
        int cu = v, cv = u;  // directed edge at the face being entered
        while (true) {
            int e = edge_id(cu, cv);
            if (edge_crossed[e])
                throw NotPartialCube("dual curve crosses edge " + g.name(g.edge(e).first) + "-" +
                                     g.name(g.edge(e).second) + " twice");
            edge_crossed[e] = true;
            curve.crossed_edges.push_back(e);
            if (classes.class_of[e] != cls)
                throw NotPartialCube("zone of class " + std::to_string(cls) +
                                     " leaves through an edge of class " +
                                     std::to_string(classes.class_of[e]));
            auto [f, i] = index.at.at({cu, cv});
            if (f == pe.outer) {
                curve.end_b = i;
                mark_used[i] = true;
                break;
            }
            curve.zone_faces.push_back(f);
            int len = static_cast<int>(pe.faces[f].size());
            int j = (i + len / 2) % len;
            int x = pe.faces[f][j], y = pe.faces[f][(j + 1) % len];
            cu = y;  // continue into the face on the other side of (x,y)
            cv = x;
        }

        if (!da.curves[cls].crossed_edges.empty())
            throw NotPartialCube("class " + std::to_string(cls) +
                                 " splits into more than one dual curve");
        da.mark_curve[curve.end_a] = cls;
        da.mark_curve[curve.end_b] = cls;
        da.curves[cls] = std::move(curve);
    }

    for (int c = 0; c < classes.class_count; ++c) {
        const auto& curve = da.curves[c];
        if (curve.crossed_edges.empty()) {
            // the class never reached the outer face: its zone is a closed loop
            throw ClosedCurve(c);
        }
        size_t class_size = 0;
        for (int e = 0; e < g.num_edges(); ++e)
            if (classes.class_of[e] == c) ++class_size;
        if (curve.crossed_edges.size() != class_size)
            throw NotPartialCube("curve of class " + std::to_string(c) + " crosses " +
                                 std::to_string(curve.crossed_edges.size()) + " of " +
                                 std::to_string(class_size) + " class edges");
    }
    if (L != 2 * classes.class_count)
        throw NotPartialCube("outer face has " + std::to_string(L) + " sides for " +
                             std::to_string(classes.class_count) + " classes");
    return da;
}

ChordAssignment chord_layout(const DualArrangement& da) {
    ChordAssignment ca;
    int L = da.outer_marks;
    ca.marks.resize(L);
    for (int j = 0; j < L; ++j) {
        double theta = 2.0 * std::numbers::pi * j / L;
        ca.marks[j] = {std::cos(theta), std::sin(theta)};
    }
    ca.chords.resize(da.curves.size());
    ca.edge_direction.resize(da.curves.size());
    for (size_t c = 0; c < da.curves.size(); ++c) {
        const auto& curve = da.curves[c];
        auto a = ca.marks[curve.end_a];
        auto b = ca.marks[curve.end_b];
        ca.chords[c] = {a, b};
        // right-hand normal points into the region swept counterclockwise
        // from end_a to end_b, which holds the vertices on side_after_a
        double nx = b.y - a.y, ny = -(b.x - a.x);
        double len = std::hypot(nx, ny);
        nx /= len;
        ny /= len;
        double sign = (curve.side_after_a == 1) ? 1.0 : -1.0;
        ca.edge_direction[c] = {sign * nx, sign * ny};
    }
    return ca;
}

SymmetricDrawing place_vertices(const Graph& g, const PlanarEmbedding& pe,
                                const EdgeClassPartition& classes, const ChordAssignment& ca) {
    SymmetricDrawing sd;
    sd.faces = pe.faces;
    sd.outer = pe.outer;
    sd.class_direction = ca.edge_direction;
    for (int e = 0; e < g.num_edges(); ++e)
        sd.edges.push_back({g.edge(e).first, g.edge(e).second, classes.class_of[e]});

    auto sides = class_sides(g, classes);
    int n = g.num_vertices();
    sd.pos.assign(n, {0.0, 0.0});
    std::vector<bool> placed(n, false);
    placed[0] = true;
    std::vector<int> queue{0};
    auto step = [&](int from, int cls) {
        // direction points away from the side of vertex 0
        double s = (sides[cls][from] == 0) ? 1.0 : -1.0;
        return std::pair{s * ca.edge_direction[cls].x, s * ca.edge_direction[cls].y};
    };
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (auto [w, e] : g.neighbors(u)) {
            int cls = classes.class_of[e];
            auto [dx, dy] = step(u, cls);
            double wx = sd.pos[u].first + dx, wy = sd.pos[u].second + dy;
            if (!placed[w]) {
                placed[w] = true;
                sd.pos[w] = {wx, wy};
                queue.push_back(w);
            } else if (std::abs(sd.pos[w].first - wx) > kEps ||
                       std::abs(sd.pos[w].second - wy) > kEps) {
                throw InconsistentPlacement(g.name(u) + "-" + g.name(w));
            }
        }
    }
    return sd;
}

namespace {

double cross(std::pair<double, double> a, std::pair<double, double> b) {
    return a.first * b.second - a.second * b.first;
}

double dot(std::pair<double, double> a, std::pair<double, double> b) {
    return a.first * b.first + a.second * b.second;
}

std::pair<double, double> sub(std::pair<double, double> a, std::pair<double, double> b) {
    return {a.first - b.first, a.second - b.second};
}

/// Proper or overlapping intersection of segments that do not merely share
/// an endpoint.
bool segments_conflict(std::pair<double, double> p1, std::pair<double, double> q1,
                       std::pair<double, double> p2, std::pair<double, double> q2) {
    auto near = [](std::pair<double, double> a, std::pair<double, double> b) {
        return std::abs(a.first - b.first) < kEps && std::abs(a.second - b.second) < kEps;
    };
    auto on_segment = [&](std::pair<double, double> p, std::pair<double, double> a,
                          std::pair<double, double> b) {
        auto ab = sub(b, a), ap = sub(p, a);
        double len = std::hypot(ab.first, ab.second);
        if (std::abs(cross(ab, ap)) / len > kEps) return false;
        double t = dot(ap, ab) / (len * len);
        return t > kEps && t < 1 - kEps;
    };
    int shared = 0;
    for (auto a : {p1, q1})
        for (auto b : {p2, q2})
            if (near(a, b)) ++shared;
    if (shared >= 1) {
        // joined segments may still fold back onto each other
        return on_segment(p2, p1, q1) || on_segment(q2, p1, q1) || on_segment(p1, p2, q2) ||
               on_segment(q1, p2, q2);
    }
    auto d1 = cross(sub(q1, p1), sub(p2, p1));
    auto d2 = cross(sub(q1, p1), sub(q2, p1));
    auto d3 = cross(sub(q2, p2), sub(p1, p2));
    auto d4 = cross(sub(q2, p2), sub(q1, p2));
    if (((d1 > kEps && d2 < -kEps) || (d1 < -kEps && d2 > kEps)) &&
        ((d3 > kEps && d4 < -kEps) || (d3 < -kEps && d4 > kEps)))
        return true;
    // collinear overlaps and endpoint-through-interior contacts
    return on_segment(p2, p1, q1) || on_segment(q2, p1, q1) || on_segment(p1, p2, q2) ||
           on_segment(q1, p2, q2);
}

}  // namespace

std::optional<std::string> verify_symmetric(const SymmetricDrawing& sd) {
    // edges: unit length, direction matching the class chord normal
    for (const auto& e : sd.edges) {
        auto d = sub(sd.pos[e.v], sd.pos[e.u]);
        double len = std::hypot(d.first, d.second);
        if (std::abs(len - 1.0) > kEps)
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " is not unit length";
        auto dir = sd.class_direction[e.theta_class];
        double align = std::abs(d.first * dir.x + d.second * dir.y);
        if (std::abs(align - 1.0) > kEps)
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                   " deviates from its class direction";
    }

    // vertices pairwise distinct
    for (size_t u = 0; u < sd.pos.size(); ++u)
        for (size_t v = u + 1; v < sd.pos.size(); ++v)
            if (std::abs(sd.pos[u].first - sd.pos[v].first) < kEps &&
                std::abs(sd.pos[u].second - sd.pos[v].second) < kEps)
                return "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " coincide";

    // internal faces: strictly convex, all with one orientation, centrally
    // symmetric
    int orientation = 0;
    for (int f = 0; f < static_cast<int>(sd.faces.size()); ++f) {
        if (f == sd.outer) continue;
        const auto& face = sd.faces[f];
        int len = static_cast<int>(face.size());
        if (len % 2 != 0) return "face " + std::to_string(f) + " has odd length";
        std::vector<std::pair<double, double>> vec(len);
        for (int i = 0; i < len; ++i)
            vec[i] = sub(sd.pos[face[(i + 1) % len]], sd.pos[face[i]]);
        double turning = 0;
        int face_orient = 0;
        for (int i = 0; i < len; ++i) {
            double c = cross(vec[i], vec[(i + 1) % len]);
            double d = dot(vec[i], vec[(i + 1) % len]);
            if (std::abs(c) < kEps)
                return "face " + std::to_string(f) + " has a straight or reflex corner";
            int s = c > 0 ? 1 : -1;
            if (face_orient == 0) face_orient = s;
            else if (face_orient != s)
                return "face " + std::to_string(f) + " is not convex";
            turning += std::atan2(c, d);
        }
        if (std::abs(std::abs(turning) - 2 * std::numbers::pi) > 1e-6)
            return "face " + std::to_string(f) + " winds more than once";
        if (orientation == 0) orientation = face_orient;
        else if (orientation != face_orient)
            return "face " + std::to_string(f) + " is oriented against its siblings";
        for (int i = 0; i < len / 2; ++i) {
            auto a = vec[i], b = vec[i + len / 2];
            if (std::abs(a.first + b.first) > kEps || std::abs(a.second + b.second) > kEps)
                return "face " + std::to_string(f) + " is not centrally symmetric";
        }
    }

    // outer boundary simple
    const auto& outer = sd.faces[sd.outer];
    std::set<std::pair<int, int>> boundary;
    int len = static_cast<int>(outer.size());
    for (int i = 0; i < len; ++i) {
        int u = outer[i], v = outer[(i + 1) % len];
        boundary.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<std::pair<int, int>> segs(boundary.begin(), boundary.end());
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j)
            if (segments_conflict(sd.pos[segs[i].first], sd.pos[segs[i].second],
                                  sd.pos[segs[j].first], sd.pos[segs[j].second]))
                return "outer boundary crosses itself between edges " +
                       std::to_string(segs[i].first) + "-" + std::to_string(segs[i].second) +
                       " and " + std::to_string(segs[j].first) + "-" +
                       std::to_string(segs[j].second);
    return std::nullopt;
}

RecognitionResult recognize_and_draw(const Graph& g) {
    RecognitionResult result;
    if (!g.is_connected()) {
        result.rejection = {"input", "graph is disconnected"};
        return result;
    }
    if (g.num_vertices() == 1) {
        SymmetricDrawing sd;
        sd.pos = {{0.0, 0.0}};
        sd.faces = {{}};
        sd.outer = 0;
        result.drawing = sd;
        return result;
    }

    EdgeClassPartition classes;
    try {
        classes = theta_classes(g);
        hypercube_embedding(g, classes);
    } catch (const NotPartialCube& e) {
        result.rejection = {"theta-classes", e.what()};
        return result;
    }

    // bipartite planar graphs have at most 2n-4 edges
    if (g.num_vertices() >= 3 && g.num_edges() > 2 * g.num_vertices() - 4) {
        result.rejection = {"planarity", "too many edges for a planar bipartite graph"};
        return result;
    }

    std::vector<PlanarEmbedding> candidates;
    try {
        candidates = select_embedding(g);
    } catch (const NotPlanar& e) {
        result.rejection = {"embedding", e.what()};
        return result;
    } catch (const NoViableEmbedding& e) {
        result.rejection = {"embedding", e.what()};
        return result;
    }

    std::optional<RejectInfo> last;
    for (const auto& pe : candidates) {
        try {
            DualArrangement da = dual_arrangement(g, pe, classes);
            ChordAssignment ca = chord_layout(da);
            SymmetricDrawing sd = place_vertices(g, pe, classes, ca);
            if (auto why = verify_symmetric(sd)) {
                last = {"verification", *why};
                continue;
            }
            result.drawing = std::move(sd);
            return result;
        } catch (const OddFace& e) {
            last = {"dual-arrangement", e.what()};
        } catch (const ClosedCurve& e) {
            last = {"dual-arrangement", e.what()};
        } catch (const NotPartialCube& e) {
            last = {"dual-arrangement", e.what()};
        } catch (const InconsistentPlacement& e) {
            last = {"placement", e.what()};
        }
    }
    result.rejection = last.value_or(RejectInfo{"embedding", "no candidate embedding"});
    return result;
}

Medium arrangement_to_medium(const Graph& g, const DualArrangement& da,
                             const EdgeClassPartition& classes) {
    int n = g.num_vertices();
    int tau = static_cast<int>(da.curves.size());
    auto sides = class_sides(g, classes);
    std::vector<std::string> token_names;
    for (int i = 0; i < tau; ++i) {
        token_names.push_back("l" + std::to_string(i) + "+");
        token_names.push_back("l" + std::to_string(i) + "-");
    }
    std::vector<int> table(static_cast<size_t>(n) * 2 * tau);
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < 2 * tau; ++t) table[static_cast<size_t>(v) * 2 * tau + t] = v;
    for (int c = 0; c < tau; ++c) {
        for (int e : da.curves[c].crossed_edges) {
            auto [u, v] = g.edge(e);
            int toward_plus = (sides[c][u] == 1) ? u : v;   // side 1 is the + region
            int toward_minus = (toward_plus == u) ? v : u;
            table[static_cast<size_t>(toward_minus) * 2 * tau + 2 * c] = toward_plus;
            table[static_cast<size_t>(toward_plus) * 2 * tau + 2 * c + 1] = toward_minus;
        }
    }
    return Medium(g.names(), std::move(token_names), std::move(table));
}

}  // namespace media
