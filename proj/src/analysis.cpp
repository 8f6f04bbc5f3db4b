#include "media/analysis.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "media/arrangement.hpp"
#include "media/axiom_oracle.hpp"
#include "media/embedder.hpp"
#include "media/errors.hpp"
#include "media/medium.hpp"
#include "media/partial_cube.hpp"
#include "media/planar_embedding.hpp"
#include "media/projection.hpp"
#include "media/semicube.hpp"

namespace media {

std::string AnalysisReport::to_string() const {
    std::ostringstream out;
    out << "states: " << states << "\n";
    out << "edges: " << edges << "\n";
    out << "isometric-dimension: " << isometric_dimension << "\n";
    out << "lattice-dimension: " << lattice_dimension << "\n";
    out << "planar: " << (planar ? "yes" : "no") << "\n";
    out << "symmetric-drawable: " << (drawable ? "yes" : "no");
    if (!drawable && !reject_stage.empty()) out << " (" << reject_stage << ")";
    out << "\n";
    return out.str();
}

AnalysisReport analyze_graph(const Graph& g) {
    AnalysisReport rep;
    rep.states = g.num_vertices();
    rep.edges = g.num_edges();
    auto classes = theta_classes(g);
    rep.isometric_dimension = classes.class_count;
    auto emb = hypercube_embedding(g, classes);
    auto sg = semicube_graph(emb);
    rep.lattice_dimension = lattice_dimension(sg.tau, maximum_matching(sg));
    rep.planar = is_planar(g);
    auto rec = recognize_and_draw(g);
    rep.drawable = rec.accepted();
    if (rec.rejection) rep.reject_stage = rec.rejection->stage;
    return rep;
}

namespace {

using Status = VerifyItem::Status;

void add(std::vector<VerifyItem>& items, const std::string& name, Status st,
         const std::string& detail = "") {
    items.push_back({name, st, detail});
}

}  // namespace

std::vector<VerifyItem> run_verification(const Graph& g) {
    std::vector<VerifyItem> items;

    EdgeClassPartition classes;
    HypercubeEmbedding emb;
    Medium medium;
    try {
        classes = theta_classes(g);
        emb = hypercube_embedding(g, classes);
        medium = medium_from_partial_cube(emb);
    } catch (const MediaError& e) {
        add(items, "partial-cube structure", Status::Fail, e.what());
        return items;
    }
    add(items, "partial-cube structure", Status::Pass,
        "tau = " + std::to_string(classes.class_count));

    if (auto f = validate_medium_axioms(medium))
        add(items, "medium axioms", Status::Fail,
            "axiom " + std::to_string(f->axiom) + ": " + f->witness);
    else
        add(items, "medium axioms", Status::Pass);

    if (g.num_vertices() <= 24 && medium.num_tokens() <= 64) {
        try {
            auto f = check_axioms_by_messages(medium, std::max(1, g.diameter()));
            bool char_ok = !validate_medium_axioms(medium).has_value();
            if (f.has_value() == char_ok)
                add(items, "message oracle agreement", Status::Fail,
                    f ? ("oracle rejects: " + f->witness) : "oracle accepts, checker rejects");
            else
                add(items, "message oracle agreement", Status::Pass);
        } catch (const OracleBudgetExceeded&) {
            add(items, "message oracle agreement", Status::Skip, "enumeration budget");
        }
    } else {
        add(items, "message oracle agreement", Status::Skip, "medium too large");
    }

    Medium again = medium_from_partial_cube(hypercube_embedding(graph_from_medium(medium),
                                                                theta_classes(graph_from_medium(medium))));
    add(items, "embedding round trip", media_isomorphic_by_names(medium, again) ? Status::Pass : Status::Fail);

    auto sg = semicube_graph(emb);
    auto matching = maximum_matching(sg);
    auto lat = lattice_embedding(emb, matching);
    bool iso = is_isometric_embedding(g, lat.coords);
    add(items, "lattice embedding isometric", iso ? Status::Pass : Status::Fail,
        "d = " + std::to_string(lat.dim));

    if (g.num_vertices() >= 2) {
        auto pv = projection_vectors(lat);
        auto pp = project(g, lat, pv);
        auto prop = verify_lattice_drawing(pp, lat);
        add(items, "projection properties 1-4", prop.all_pass() ? Status::Pass : Status::Fail,
            prop.all_pass() ? "" : prop.distinct_coordinates.witness +
                                       prop.vertex_edge_separation.witness +
                                       prop.translates_iff_parallel.witness);
        if (prop.product_area.applicable)
            add(items, "interval product area", prop.product_area.pass ? Status::Pass : Status::Fail,
                "area " + std::to_string(prop.area));
        else
            add(items, "interval product area", Status::Skip, "not an interval product");
    }

    auto rec = recognize_and_draw(g);
    if (rec.accepted()) {
        auto why = verify_symmetric(*rec.drawing);
        add(items, "symmetric drawing", why ? Status::Fail : Status::Pass,
            why.value_or("accepted"));
        try {
            auto pe_cands = select_embedding(g);
            auto da = dual_arrangement(g, pe_cands[0], classes);
            Medium cells = arrangement_to_medium(g, da, classes);
            add(items, "arrangement round trip",
                media_isomorphic_by_names(cells, medium) ? Status::Pass : Status::Fail);
        } catch (const MediaError& e) {
            // the accepting embedding may differ from the first candidate
            add(items, "arrangement round trip", Status::Skip, e.what());
        }
    } else {
        add(items, "symmetric drawing", Status::Skip,
            "rejected at " + rec.rejection->stage + ": " + rec.rejection->reason);
    }
    return items;
}

std::string format_verification(const std::vector<VerifyItem>& items) {
    std::ostringstream out;
    for (const auto& item : items) {
        const char* tag = item.status == Status::Pass ? "pass"
                          : item.status == Status::Fail ? "FAIL"
                                                        : "skip";
        out << tag << "  " << item.name;
        if (!item.detail.empty()) out << " - " << item.detail;
        out << "\n";
    }
    return out.str();
}

bool verification_passed(const std::vector<VerifyItem>& items) {
    for (const auto& item : items)
        if (item.status == Status::Fail) return false;
    return true;
}

}  // namespace media
