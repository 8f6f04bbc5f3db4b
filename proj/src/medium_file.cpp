#include "media/medium_file.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include <json.hpp>

#include "media/errors.hpp"

namespace media {

namespace {

MediumFile parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(1, std::string("bad json: ") + e.what());
    }
    MediumFile f;
    f.format_version = j.value("format", 1);
    if (!j.contains("states") || !j["states"].is_array())
        throw ParseError(1, "json file lacks a states array");
    for (const auto& s : j["states"]) {
        f.state_ids.push_back(s.at("id").get<std::string>());
        f.coords.push_back(s.at("coords").get<std::vector<int>>());
    }
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(f.state_ids.size()); ++i) index[f.state_ids[i]] = i;
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            auto a = e.at(0).get<std::string>(), b = e.at(1).get<std::string>();
            if (!index.count(a) || !index.count(b)) throw ParseError(1, "edge names unknown state");
            f.explicit_edges.emplace_back(index[a], index[b]);
        }
    }
    if (j.contains("meta"))
        for (const auto& [k, v] : j["meta"].items())
            f.metadata.emplace_back(k, v.get<std::string>());
    return f;
}

}  // namespace

MediumFile parse_medium_file(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(1, "empty file");
    if (text[first] == '{') return parse_json(text);

    MediumFile f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    std::map<std::string, int> index;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (!header_seen) {
            if (word != "mediumfile") throw ParseError(lineno, "expected 'mediumfile <version>'");
            int version = 0;
            if (!(ls >> version) || version != 1)
                throw ParseError(lineno, "unsupported format version");
            f.format_version = version;
            header_seen = true;
            continue;
        }
        if (word == "meta") {
            std::string key, rest, part;
            if (!(ls >> key)) throw ParseError(lineno, "meta needs a key");
            while (ls >> part) rest += (rest.empty() ? "" : " ") + part;
            f.metadata.emplace_back(key, rest);
        } else if (word == "state") {
            std::string id;
            if (!(ls >> id)) throw ParseError(lineno, "state needs an id");
            if (index.count(id)) throw ParseError(lineno, "duplicate state id " + id);
            std::vector<int> c;
            long long x;
            while (ls >> x) c.push_back(static_cast<int>(x));
            if (!ls.eof()) throw ParseError(lineno, "bad coordinate");
            index[id] = static_cast<int>(f.state_ids.size());
            f.state_ids.push_back(id);
            f.coords.push_back(std::move(c));
        } else if (word == "edge") {
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError(lineno, "edge needs two state ids");
            if (!index.count(a) || !index.count(b))
                throw ParseError(lineno, "edge references unknown state");
            f.explicit_edges.emplace_back(index[a], index[b]);
        } else {
            throw ParseError(lineno, "unknown directive '" + word + "'");
        }
    }
    if (!header_seen) throw ParseError(lineno, "missing 'mediumfile' header");
    if (f.state_ids.empty()) throw ParseError(lineno, "no states");
    for (const auto& c : f.coords)
        if (c.size() != f.coords[0].size())
            throw ParseError(lineno, "states have mixed coordinate lengths");
    return f;
}

LoadedMedium load_medium(const std::string& text) {
    LoadedMedium lm;
    lm.file = parse_medium_file(text);
    int n = static_cast<int>(lm.file.state_ids.size());

    // translate each axis to minimum 0
    lm.lattice_coords = lm.file.coords;
    size_t d = lm.lattice_coords[0].size();
    for (size_t i = 0; i < d; ++i) {
        int lo = lm.lattice_coords[0][i];
        for (const auto& c : lm.lattice_coords) lo = std::min(lo, c[i]);
        for (auto& c : lm.lattice_coords) c[i] -= lo;
    }

    std::vector<std::pair<int, int>> edges = lm.file.explicit_edges;
    if (edges.empty()) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                long long l1 = 0;
                for (size_t i = 0; i < d; ++i)
                    l1 += std::abs(lm.lattice_coords[u][i] - lm.lattice_coords[v][i]);
                if (l1 == 1) edges.emplace_back(u, v);
            }
        }
    }
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    lm.graph = Graph(n, edges, lm.file.state_ids);
    if (!lm.graph.is_connected()) throw MediaError("medium file: transition graph is disconnected");

    if (auto w = isometry_violation(lm.graph, lm.lattice_coords))
        throw NotIsometric(w->u, w->v, w->graph_dist, w->l1_dist,
                           "states " + lm.file.state_ids[w->u] + " and " + lm.file.state_ids[w->v] +
                               " are " + std::to_string(w->graph_dist) +
                               " edges apart in the graph but " + std::to_string(w->l1_dist) +
                               " apart in the placement");

    lm.embedding.coords = lattice_to_hypercube(lm.lattice_coords);
    lm.embedding.dimension = lm.embedding.coords.empty() ? 0
                             : static_cast<int>(lm.embedding.coords[0].size());
    lm.embedding.state_names = lm.file.state_ids;
    lm.medium = medium_from_partial_cube(lm.embedding);
    return lm;
}

std::string serialize_medium_file(const MediumFile& f) {
    std::ostringstream out;
    out << "mediumfile " << f.format_version << "\n";
    for (const auto& [k, v] : f.metadata) out << "meta " << k << " " << v << "\n";
    for (size_t i = 0; i < f.state_ids.size(); ++i) {
        out << "state " << f.state_ids[i];
        for (int c : f.coords[i]) out << " " << c;
        out << "\n";
    }
    for (auto [u, v] : f.explicit_edges)
        out << "edge " << f.state_ids[u] << " " << f.state_ids[v] << "\n";
    return out.str();
}

MediumFile medium_file_from_lattice(const Graph& g, const LatticeEmbedding& emb,
                                    const std::vector<std::pair<std::string, std::string>>& meta) {
    MediumFile f;
    f.metadata = meta;
    f.state_ids = g.names();
    f.coords = emb.coords;
    // keep edges explicit when the unit-distance rule would differ
    std::vector<std::pair<int, int>> unit;
    for (int u = 0; u < g.num_vertices(); ++u) {
        for (int v = u + 1; v < g.num_vertices(); ++v) {
            long long l1 = 0;
            for (int i = 0; i < emb.dim; ++i) l1 += std::abs(emb.coords[u][i] - emb.coords[v][i]);
            if (l1 == 1) unit.emplace_back(u, v);
        }
    }
    std::vector<std::pair<int, int>> actual = g.edges();
    std::sort(actual.begin(), actual.end());
    if (unit != actual) f.explicit_edges = actual;
    return f;
}

}  // namespace media
