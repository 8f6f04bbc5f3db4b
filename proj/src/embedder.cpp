#include "media/embedder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "media/errors.hpp"
#include "media/spqr.hpp"

namespace media {

namespace {

/// Embedding of the subtree graph H_v with the parent virtual edge removed:
/// the two faces bordering that edge stay open.  p_walk is the outer path,
/// q_walk the inner one; q_walk runs between the same split pair in the
/// opposite direction.
struct Fragment {
    std::vector<std::vector<int>> closed;
    std::vector<int> p_walk;
    std::vector<int> q_walk;
};

Fragment reflected(Fragment f) {
    for (auto& c : f.closed) std::reverse(c.begin(), c.end());
    std::reverse(f.p_walk.begin(), f.p_walk.end());
    std::reverse(f.q_walk.begin(), f.q_walk.end());
    return f;
}

struct Step {
    int u, v;   // traversal direction
    int slot;   // skeleton edge index
};

class BlockEmbedder {
public:
    BlockEmbedder(const Graph& block) : g_(block), tree_(spqr_tree(block)) {}

    /// Candidate embeddings of the block (same face list, possibly several
    /// outer faces for a tied 3-connected root).
    std::vector<PlanarEmbedding> run() {
        orient_tree();
        fragments_.assign(tree_.node_count(), Fragment{});
        for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
            int v = *it;
            if (v == root_) continue;
            fragments_[v] = build_fragment(v);
        }
        return build_root();
    }

private:
    void orient_tree() {
        int best_edge = g_.num_edges();
        root_ = 0;
        for (int i = 0; i < tree_.node_count(); ++i)
            for (const auto& e : tree_.nodes[i].edges)
                if (!e.is_virtual() && e.real_id < best_edge) {
                    best_edge = e.real_id;
                    root_ = i;
                }
        parent_node_.assign(tree_.node_count(), -1);
        parent_slot_.assign(tree_.node_count(), -1);
        order_ = {root_};
        std::vector<bool> seen(tree_.node_count(), false);
        seen[root_] = true;
        for (size_t h = 0; h < order_.size(); ++h) {
            int v = order_[h];
            for (int s = 0; s < static_cast<int>(tree_.nodes[v].edges.size()); ++s) {
                const auto& e = tree_.nodes[v].edges[s];
                if (!e.is_virtual() || seen[e.twin_node]) continue;
                seen[e.twin_node] = true;
                parent_node_[e.twin_node] = v;
                parent_slot_[e.twin_node] = e.twin_slot;  // slot inside the child
                order_.push_back(e.twin_node);
            }
        }
    }

    bool is_parent_slot(int node, int slot) const { return parent_slot_[node] == slot; }

    bool is_child_slot(int node, int slot) const {
        const auto& e = tree_.nodes[node].edges[slot];
        return e.is_virtual() && parent_slot_[node] != slot;
    }

    int child_of_slot(int node, int slot) const { return tree_.nodes[node].edges[slot].twin_node; }

    /// Cycle walk of an S skeleton as steps (forward direction).
    std::vector<Step> cycle_steps(int node) const {
        const auto& edges = tree_.nodes[node].edges;
        std::map<int, std::vector<int>> at;  // vertex -> slots
        for (int s = 0; s < static_cast<int>(edges.size()); ++s) {
            at[edges[s].u].push_back(s);
            at[edges[s].v].push_back(s);
        }
        std::vector<Step> walk;
        int start = edges[0].u;
        int cur = start, prev_slot = -1;
        do {
            int next_slot = -1;
            for (int s : at[cur])
                if (s != prev_slot) next_slot = s;
            const auto& e = edges[next_slot];
            int nxt = (e.u == cur) ? e.v : e.u;
            walk.push_back({cur, nxt, next_slot});
            prev_slot = next_slot;
            cur = nxt;
        } while (cur != start);
        return walk;
    }

    static std::vector<Step> reversed_steps(const std::vector<Step>& steps) {
        std::vector<Step> out;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) out.push_back({it->v, it->u, it->slot});
        return out;
    }

    /// Skeleton faces plus the index of the face to use as outer.
    struct SkeletonPlan {
        std::vector<std::vector<Step>> faces;
        std::vector<int> outer_candidates;  // usually one
    };

    SkeletonPlan plan_s_node(int node) const {
        SkeletonPlan plan;
        auto w = cycle_steps(node);
        plan.faces.push_back(w);
        plan.faces.push_back(reversed_steps(w));
        plan.outer_candidates = {0};
        return plan;
    }

    SkeletonPlan plan_p_node(int node) const {
        const auto& edges = tree_.nodes[node].edges;
        bool at_root = (node == root_);
        if (edges.size() != 3)
            throw NoViableEmbedding("parallel",
                                    "bond has " + std::to_string(edges.size()) + " parts");
        std::vector<int> real_slots, child_slots;
        int parent = -1;
        for (int s = 0; s < 3; ++s) {
            if (!edges[s].is_virtual()) real_slots.push_back(s);
            else if (is_parent_slot(node, s)) parent = s;
            else child_slots.push_back(s);
        }
        if (real_slots.size() != 1)
            throw NoViableEmbedding("parallel", std::to_string(real_slots.size()) +
                                                    " of three parallel parts are plain edges");
        int a = edges[0].u, b = edges[0].v;
        // order across the bond: [child, real, parent] / [child1, real, child2]
        std::vector<int> ordered;
        if (at_root) ordered = {child_slots[0], real_slots[0], child_slots[1]};
        else ordered = {child_slots[0], real_slots[0], parent};
        SkeletonPlan plan;
        for (int i = 0; i < 3; ++i) {
            int s1 = ordered[i], s2 = ordered[(i + 1) % 3];
            plan.faces.push_back({Step{a, b, s1}, Step{b, a, s2}});
        }
        // outer face joins the two extreme parts (indices 2 and 0)
        plan.outer_candidates = {2};
        return plan;
    }

    SkeletonPlan plan_r_node(int node) const {
        const auto& edges = tree_.nodes[node].edges;
        std::set<int> verts;
        for (const auto& e : edges) {
            verts.insert(e.u);
            verts.insert(e.v);
        }
        std::map<int, int> to_local;
        std::vector<int> to_graph;
        for (int v : verts) {
            to_local[v] = static_cast<int>(to_graph.size());
            to_graph.push_back(v);
        }
        std::vector<std::pair<int, int>> local_edges;
        std::map<std::pair<int, int>, int> slot_of;
        for (int s = 0; s < static_cast<int>(edges.size()); ++s) {
            int u = to_local[edges[s].u], v = to_local[edges[s].v];
            local_edges.emplace_back(u, v);
            slot_of[{std::min(u, v), std::max(u, v)}] = s;
        }
        auto faces = planar_faces_biconnected(static_cast<int>(to_graph.size()), local_edges);
        if (!faces) throw NotPlanar("a 3-connected component has no planar embedding");
        SkeletonPlan plan;
        for (const auto& f : *faces) {
            std::vector<Step> steps;
            int len = static_cast<int>(f.size());
            for (int i = 0; i < len; ++i) {
                int u = f[i], v = f[(i + 1) % len];
                steps.push_back({to_graph[u], to_graph[v],
                                 slot_of.at({std::min(u, v), std::max(u, v)})});
            }
            plan.faces.push_back(std::move(steps));
        }

        std::vector<int> virtual_slots;
        for (int s = 0; s < static_cast<int>(edges.size()); ++s)
            if (edges[s].is_virtual()) virtual_slots.push_back(s);

        auto faces_with_slot = [&](int slot) {
            std::vector<int> out;
            for (int i = 0; i < static_cast<int>(plan.faces.size()); ++i)
                for (const auto& st : plan.faces[i])
                    if (st.slot == slot) {
                        out.push_back(i);
                        break;
                    }
            return out;
        };

        if (virtual_slots.empty()) {
            // whole graph 3-connected: outer faces tied on the largest size
            size_t best = 0;
            for (const auto& f : plan.faces) best = std::max(best, f.size());
            for (int i = 0; i < static_cast<int>(plan.faces.size()); ++i)
                if (plan.faces[i].size() == best) plan.outer_candidates.push_back(i);
        } else if (virtual_slots.size() == 1) {
            auto cands = faces_with_slot(virtual_slots[0]);
            if (cands.size() != 2) throw InternalError("virtual edge not on two faces");
            size_t s0 = plan.faces[cands[0]].size(), s1 = plan.faces[cands[1]].size();
            if (s0 == s1)
                throw NoViableEmbedding("rigid",
                                        "the two faces at the split edge have equal size");
            plan.outer_candidates = {s0 > s1 ? cands[0] : cands[1]};
        } else {
            // every virtual edge must lie on one common face
            std::vector<int> common = faces_with_slot(virtual_slots[0]);
            for (size_t i = 1; i < virtual_slots.size(); ++i) {
                auto here = faces_with_slot(virtual_slots[i]);
                std::vector<int> next;
                std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                                      std::back_inserter(next));
                common = next;
            }
            if (common.empty())
                throw NoViableEmbedding("rigid", "split edges do not share a face");
            if (common.size() > 1) throw InternalError("two faces share two split edges");
            plan.outer_candidates = common;
        }
        return plan;
    }

    SkeletonPlan plan_node(int node) const {
        switch (tree_.nodes[node].kind) {
            case SpqrTree::Kind::S: return plan_s_node(node);
            case SpqrTree::Kind::P: return plan_p_node(node);
            case SpqrTree::Kind::R: return plan_r_node(node);
            case SpqrTree::Kind::Q: {
                // single-edge graph: two faces, both the edge
                const auto& e = tree_.nodes[node].edges[0];
                SkeletonPlan plan;
                plan.faces.push_back({Step{e.u, e.v, 0}});
                plan.faces.push_back({Step{e.v, e.u, 0}});
                plan.outer_candidates = {0};
                return plan;
            }
        }
        throw InternalError("unreachable");
    }

    /// Orient every child so its outer path runs along the outer face's
    /// traversal of the child's slot; reject children missing from the outer
    /// face (they would be wedged between two interior faces).
    void orient_children(int node, const SkeletonPlan& plan, int outer_idx) {
        std::set<int> outer_slots;
        std::map<int, std::pair<int, int>> outer_dir;  // slot -> traversal
        for (const auto& st : plan.faces[outer_idx]) {
            outer_slots.insert(st.slot);
            outer_dir[st.slot] = {st.u, st.v};
        }
        for (int s = 0; s < static_cast<int>(tree_.nodes[node].edges.size()); ++s) {
            if (!is_child_slot(node, s)) continue;
            if (!outer_slots.count(s))
                throw NoViableEmbedding("rigid", "a split component is wedged between interior faces");
            int child = child_of_slot(node, s);
            auto [x, y] = outer_dir[s];
            Fragment& f = fragments_[child];
            if (f.p_walk.front() != x) f = reflected(std::move(f));
            if (f.p_walk.front() != x || f.p_walk.back() != y)
                throw InternalError("child walk endpoints disagree with its slot");
        }
    }

    /// Vertex walk of one face, splicing child walks; parent slot contributes
    /// its start vertex and records its position.
    std::vector<int> expand_face(int node, const std::vector<Step>& steps, bool exposed,
                                 int* parent_pos) const {
        std::vector<int> out;
        for (const auto& st : steps) {
            if (is_parent_slot(node, st.slot)) {
                if (parent_pos) *parent_pos = static_cast<int>(out.size());
                out.push_back(st.u);
                continue;
            }
            if (!tree_.nodes[node].edges[st.slot].is_virtual()) {
                out.push_back(st.u);
                continue;
            }
            const Fragment& f = fragments_[child_of_slot(node, st.slot)];
            const auto& walk = exposed ? f.p_walk : f.q_walk;
            if (walk.front() != st.u || walk.back() != st.v)
                throw InternalError("child walk direction mismatch");
            out.insert(out.end(), walk.begin(), walk.end() - 1);
        }
        return out;
    }

    /// Faces adjacent to the parent slot: the outer one and the inner one.
    std::pair<int, int> parent_faces(int node, const SkeletonPlan& plan, int outer_idx) const {
        int other = -1;
        for (int i = 0; i < static_cast<int>(plan.faces.size()); ++i) {
            if (i == outer_idx) continue;
            for (const auto& st : plan.faces[i])
                if (is_parent_slot(node, st.slot)) other = i;
        }
        bool outer_has = false;
        for (const auto& st : plan.faces[outer_idx])
            if (is_parent_slot(node, st.slot)) outer_has = true;
        if (!outer_has || other < 0)
            throw NoViableEmbedding("series", "split edge to the parent is not on the outer face");
        return {outer_idx, other};
    }

    Fragment build_fragment(int node) {
        SkeletonPlan plan = plan_node(node);
        if (plan.outer_candidates.size() != 1)
            throw NoViableEmbedding("rigid", "interior component leaves the outer face ambiguous");
        int outer_idx = plan.outer_candidates[0];
        auto [po, pi] = parent_faces(node, plan, outer_idx);
        orient_children(node, plan, outer_idx);
        Fragment frag;
        for (int i = 0; i < static_cast<int>(plan.faces.size()); ++i) {
            if (i == po || i == pi) continue;
            frag.closed.push_back(expand_face(node, plan.faces[i], false, nullptr));
        }
        int pos_outer = -1, pos_inner = -1;
        auto outer_cycle = expand_face(node, plan.faces[po], true, &pos_outer);
        auto inner_cycle = expand_face(node, plan.faces[pi], false, &pos_inner);
        auto open_walk = [](const std::vector<int>& cycle, int pos) {
            std::vector<int> walk;
            int len = static_cast<int>(cycle.size());
            for (int i = 1; i <= len; ++i) walk.push_back(cycle[(pos + i) % len]);
            return walk;  // starts after the parent edge's tail, ends at the tail
        };
        frag.p_walk = open_walk(outer_cycle, pos_outer);
        frag.q_walk = open_walk(inner_cycle, pos_inner);
        for (int s = 0; s < static_cast<int>(tree_.nodes[node].edges.size()); ++s) {
            if (!is_child_slot(node, s)) continue;
            auto& child_closed = fragments_[child_of_slot(node, s)].closed;
            for (auto& c : child_closed) frag.closed.push_back(std::move(c));
            child_closed.clear();
        }
        return frag;
    }

    std::vector<PlanarEmbedding> build_root() {
        SkeletonPlan plan = plan_node(root_);
        std::vector<PlanarEmbedding> result;
        for (int outer_idx : plan.outer_candidates) {
            orient_children(root_, plan, outer_idx);
            PlanarEmbedding pe;
            for (int i = 0; i < static_cast<int>(plan.faces.size()); ++i) {
                bool exposed = (i == outer_idx);
                pe.faces.push_back(expand_face(root_, plan.faces[i], exposed, nullptr));
            }
            pe.outer = outer_idx;
            for (int node : order_) {
                if (node == root_) continue;
                for (const auto& c : fragments_[node].closed) pe.faces.push_back(c);
            }
            pe.finalize(g_);
            result.push_back(std::move(pe));
        }
        return result;
    }

    const Graph& g_;
    SpqrTree tree_;
    int root_ = 0;
    std::vector<int> parent_node_, parent_slot_;
    std::vector<int> order_;
    std::vector<Fragment> fragments_;
};

struct Block {
    std::vector<int> vertices;              // graph ids
    std::vector<PlanarEmbedding> variants;  // faces in graph ids
};

std::vector<int> rotate_to(const std::vector<int>& cycle, int entry) {
    int pos = -1;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        if (cycle[i] == entry) {
            pos = i;
            break;
        }
    if (pos < 0) throw InternalError("merge: entry vertex not on block boundary");
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
        out.push_back(cycle[(pos + i) % cycle.size()]);
    return out;
}

}  // namespace

std::vector<PlanarEmbedding> select_embedding(const Graph& g) {
    if (g.num_vertices() == 0) throw MediaError("embedding of the empty graph");
    if (!g.is_connected()) throw MediaError("embedding requires a connected graph");
    if (g.num_vertices() == 1) {
        PlanarEmbedding pe;
        pe.faces = {{}};
        pe.outer = 0;
        pe.rotation.assign(1, {});
        return {pe};
    }

    auto comps = g.biconnected_components();
    std::vector<Block> blocks;
    for (const auto& comp : comps) {
        Block blk;
        std::set<int> verts;
        for (int e : comp) {
            verts.insert(g.edge(e).first);
            verts.insert(g.edge(e).second);
        }
        blk.vertices.assign(verts.begin(), verts.end());
        if (comp.size() == 1) {
            auto [u, v] = g.edge(comp[0]);
            PlanarEmbedding pe;
            pe.faces = {{u, v}};
            pe.outer = 0;
            blk.variants.push_back(std::move(pe));
        } else {
            std::map<int, int> to_local;
            for (int v : blk.vertices) to_local[v] = static_cast<int>(to_local.size());
            std::vector<std::pair<int, int>> edges;
            for (int e : comp) edges.emplace_back(to_local[g.edge(e).first], to_local[g.edge(e).second]);
            Graph sub(static_cast<int>(blk.vertices.size()), edges);
            for (auto& pe : BlockEmbedder(sub).run()) {
                for (auto& f : pe.faces)
                    for (auto& v : f) v = blk.vertices[v];
                blk.variants.push_back(std::move(pe));
            }
        }
        blocks.push_back(std::move(blk));
    }

    // Articulation points must lie on their blocks' outer faces.
    auto arts = g.articulation_points();
    std::set<int> art_set(arts.begin(), arts.end());
    for (auto& blk : blocks) {
        std::vector<PlanarEmbedding> kept;
        for (auto& pe : blk.variants) {
            bool ok = true;
            std::set<int> outer_verts(pe.outer_walk().begin(), pe.outer_walk().end());
            for (int v : blk.vertices)
                if (art_set.count(v) && !outer_verts.count(v)) ok = false;
            if (ok) kept.push_back(std::move(pe));
        }
        if (kept.empty())
            throw NoViableEmbedding("articulation",
                                    "a cut vertex cannot reach its block's outer face");
        blk.variants = std::move(kept);
    }

    if (blocks.size() == 1) {
        for (auto& pe : blocks[0].variants) pe.finalize(g);
        return std::move(blocks[0].variants);
    }

    // Merge the blocks around the articulation points, every outer face on
    // the shared outer face.  Try every combination of block variants.
    std::vector<std::vector<int>> blocks_at(g.num_vertices());
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int v : blocks[b].vertices) blocks_at[v].push_back(b);

    std::vector<size_t> choice(blocks.size(), 0);
    std::vector<PlanarEmbedding> result;
    while (true) {
        PlanarEmbedding merged;
        std::vector<bool> visited(blocks.size(), false);
        std::vector<int> outer;
        // depth-first splice of the outer walks
        auto splice = [&](auto&& self, int b, int entry) -> std::vector<int> {
            visited[b] = true;
            const PlanarEmbedding& pe = blocks[b].variants[choice[b]];
            for (int i = 0; i < static_cast<int>(pe.faces.size()); ++i)
                if (i != pe.outer) merged.faces.push_back(pe.faces[i]);
            auto walk = rotate_to(pe.outer_walk(), entry);
            std::vector<int> out;
            for (int x : walk) {
                out.push_back(x);
                for (int nb : blocks_at[x]) {
                    if (visited[nb]) continue;
                    auto sub = self(self, nb, x);
                    out.insert(out.end(), sub.begin() + 1, sub.end());
                    out.push_back(x);
                }
            }
            return out;
        };
        int first_entry = blocks[0].variants[choice[0]].outer_walk()[0];
        outer = splice(splice, 0, first_entry);
        merged.faces.push_back(std::move(outer));
        merged.outer = static_cast<int>(merged.faces.size()) - 1;
        merged.finalize(g);
        result.push_back(std::move(merged));

        // next combination
        size_t i = 0;
        while (i < blocks.size()) {
            if (++choice[i] < blocks[i].variants.size()) break;
            choice[i] = 0;
            ++i;
        }
        if (i == blocks.size()) break;
        if (result.size() >= 1024) throw InternalError("too many embedding combinations");
    }
    return result;
}

}  // namespace media
