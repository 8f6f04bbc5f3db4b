#include "media/projection.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "media/errors.hpp"

namespace media {

namespace {

int axis_value_count(const LatticeEmbedding& emb, int axis) {
    int hi = 0;
    for (const auto& p : emb.coords) hi = std::max(hi, p[axis]);
    return hi + 1;
}

}  // namespace

ProjectionVectors projection_vectors(const LatticeEmbedding& emb) {
    int d = emb.dim;
    ProjectionVectors pv;
    if (d == 0) return pv;
    for (int i = 0; i < d; ++i)
        if (axis_value_count(emb, i) < 2) throw DegenerateAxis(i);
    if (d == 1) {
        pv.x = {1};
        pv.y = {0};
        return pv;
    }
    pv.x.assign(d, 0);
    pv.y.assign(d, 0);
    for (int i = 1; i < d; ++i) {
        // Separate consecutive slices of axis i in x: the lower slice's
        // largest partial sum must fall below the upper slice's smallest.
        long long needed = 1;
        int values = axis_value_count(emb, i);
        for (int j = 1; j < values; ++j) {
            long long lo_max = std::numeric_limits<long long>::min();
            long long hi_min = std::numeric_limits<long long>::max();
            for (const auto& p : emb.coords) {
                if (p[i] != j && p[i] != j - 1) continue;
                long long sum = 0;
                for (int k = 0; k < i; ++k) sum += pv.x[k] * p[k];
                if (p[i] == j - 1) lo_max = std::max(lo_max, sum);
                else hi_min = std::min(hi_min, sum);
            }
            needed = std::max(needed, lo_max - hi_min + 1);
        }
        pv.x[i] = needed;
    }
    for (int i = d - 2; i >= 0; --i) {
        long long needed = 1;
        int values = axis_value_count(emb, i);
        for (int j = 1; j < values; ++j) {
            long long lo_max = std::numeric_limits<long long>::min();
            long long hi_min = std::numeric_limits<long long>::max();
            for (const auto& p : emb.coords) {
                if (p[i] != j && p[i] != j - 1) continue;
                long long sum = 0;
                for (int k = i + 1; k < d; ++k) sum += pv.y[k] * p[k];
                if (p[i] == j - 1) lo_max = std::max(lo_max, sum);
                else hi_min = std::min(hi_min, sum);
            }
            needed = std::max(needed, lo_max - hi_min + 1);
        }
        pv.y[i] = needed;
    }
    // The axis vectors must be pairwise distinct or edges of different
    // classes would be drawn as translates.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (pv.x[i] == pv.x[j] && pv.y[i] == pv.y[j])
                throw InternalError("projection vectors collide on axes " + std::to_string(i) +
                                    " and " + std::to_string(j));
    return pv;
}

PlanarPlacement project(const Graph& g, const LatticeEmbedding& emb, const ProjectionVectors& pv) {
    PlanarPlacement pp;
    int n = g.num_vertices();
    pp.pos.resize(n);
    for (int v = 0; v < n; ++v) {
        long long x = 0, y = 0;
        for (int k = 0; k < emb.dim; ++k) {
            x += pv.x[k] * emb.coords[v][k];
            y += pv.y[k] * emb.coords[v][k];
        }
        pp.pos[v] = {x, y};
    }
    long long min_x = 0, min_y = 0;
    if (n > 0) {
        min_x = pp.pos[0].first;
        min_y = pp.pos[0].second;
        for (auto [x, y] : pp.pos) {
            min_x = std::min(min_x, x);
            min_y = std::min(min_y, y);
        }
        for (auto& [x, y] : pp.pos) {
            x -= min_x;
            y -= min_y;
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        int axis = -1;
        for (int k = 0; k < emb.dim; ++k) {
            if (emb.coords[u][k] != emb.coords[v][k]) {
                if (axis != -1) throw InternalError("edge changes two lattice axes");
                axis = k;
            }
        }
        if (axis == -1) throw InternalError("edge endpoints share all coordinates");
        pp.edges.push_back({u, v, axis});
    }
    return pp;
}

namespace {

using I128 = __int128;

long long sq_dist(std::pair<long long, long long> a, std::pair<long long, long long> b) {
    long long dx = a.first - b.first, dy = a.second - b.second;
    return dx * dx + dy * dy;
}

/// Squared distance from point r to segment pq is at least 1 (exact).
bool separated_from_segment(std::pair<long long, long long> p, std::pair<long long, long long> q,
                            std::pair<long long, long long> r) {
    long long vx = q.first - p.first, vy = q.second - p.second;
    long long wx = r.first - p.first, wy = r.second - p.second;
    long long dot = vx * wx + vy * wy;
    long long len2 = vx * vx + vy * vy;
    if (dot <= 0) return sq_dist(p, r) >= 1;
    if (dot >= len2) return sq_dist(q, r) >= 1;
    I128 cross = static_cast<I128>(vx) * wy - static_cast<I128>(vy) * wx;
    // perpendicular distance^2 = cross^2 / len2  >=  1
    return cross * cross >= static_cast<I128>(len2);
}

}  // namespace

PropertyReport verify_lattice_drawing(const PlanarPlacement& pp, const LatticeEmbedding& emb) {
    PropertyReport rep;
    int n = static_cast<int>(pp.pos.size());

    std::map<std::pair<long long, long long>, int> seen;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = seen.insert({pp.pos[v], v});
        if (!fresh) {
            rep.distinct_coordinates.pass = false;
            rep.distinct_coordinates.witness = "vertices " + std::to_string(it->second) + " and " +
                                               std::to_string(v) + " share a point";
            break;
        }
    }

    // Property 2 holds by representation: edges are stored as endpoint pairs
    // and rendered as straight segments.
    rep.straight_edges.pass = true;

    for (const auto& e : pp.edges) {
        for (int r = 0; r < n && rep.vertex_edge_separation.pass; ++r) {
            if (r == e.u || r == e.v) continue;
            if (!separated_from_segment(pp.pos[e.u], pp.pos[e.v], pp.pos[r])) {
                rep.vertex_edge_separation.pass = false;
                rep.vertex_edge_separation.witness =
                    "vertex " + std::to_string(r) + " is closer than unit distance to edge (" +
                    std::to_string(e.u) + "," + std::to_string(e.v) + ")";
            }
        }
        if (!rep.vertex_edge_separation.pass) break;
    }

    // Property 4: canonical edge vectors agree exactly on an axis and differ
    // across axes.
    std::map<int, std::pair<long long, long long>> axis_vec;
    for (const auto& e : pp.edges) {
        long long dx = pp.pos[e.v].first - pp.pos[e.u].first;
        long long dy = pp.pos[e.v].second - pp.pos[e.u].second;
        if (dx < 0 || (dx == 0 && dy < 0)) {
            dx = -dx;
            dy = -dy;
        }
        auto [it, fresh] = axis_vec.insert({e.axis, {dx, dy}});
        if (!fresh && it->second != std::pair{dx, dy}) {
            rep.translates_iff_parallel.pass = false;
            rep.translates_iff_parallel.witness =
                "edges of axis " + std::to_string(e.axis) + " have different vectors";
        }
    }
    for (auto it = axis_vec.begin(); it != axis_vec.end() && rep.translates_iff_parallel.pass; ++it)
        for (auto jt = std::next(it); jt != axis_vec.end(); ++jt)
            if (it->second == jt->second) {
                rep.translates_iff_parallel.pass = false;
                rep.translates_iff_parallel.witness = "axes " + std::to_string(it->first) + " and " +
                                                      std::to_string(jt->first) +
                                                      " draw as translates";
            }

    long long max_x = 0, max_y = 0;
    for (auto [x, y] : pp.pos) {
        max_x = std::max(max_x, x);
        max_y = std::max(max_y, y);
    }
    rep.width = n > 0 ? max_x + 1 : 0;
    rep.height = n > 0 ? max_y + 1 : 0;
    rep.area = rep.width * rep.height;

    // Property 5 applies to interval products: occupied x and y values are
    // contiguous and the bounding box area is at most n^2.
    long long cells = 1;
    for (int k = 0; k < emb.dim; ++k) cells *= axis_value_count(emb, k);
    bool product = (cells == n);
    if (product) {
        std::set<std::vector<int>> points(emb.coords.begin(), emb.coords.end());
        product = static_cast<long long>(points.size()) == cells;
    }
    rep.product_area.applicable = product;
    if (!product) {
        rep.product_area.witness = "not an interval product";
    } else {
        std::set<long long> xs, ys;
        for (auto [x, y] : pp.pos) {
            xs.insert(x);
            ys.insert(y);
        }
        auto contiguous = [](const std::set<long long>& s) {
            long long expect = 0;
            for (long long v : s)
                if (v != expect++) return false;
            return true;
        };
        if (!contiguous(xs) || !contiguous(ys)) {
            rep.product_area.pass = false;
            rep.product_area.witness = "occupied coordinates have gaps";
        } else if (rep.area > static_cast<long long>(n) * n) {
            rep.product_area.pass = false;
            rep.product_area.witness = "area " + std::to_string(rep.area) + " exceeds n^2";
        }
    }
    return rep;
}

}  // namespace media
