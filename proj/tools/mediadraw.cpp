#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "media/analysis.hpp"
#include "media/arrangement.hpp"
#include "media/errors.hpp"
#include "media/families.hpp"
#include "media/medium_file.hpp"
#include "media/projection.hpp"
#include "media/semicube.hpp"
#include "media/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw media::MediaError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw media::MediaError("cannot write " + path);
    out << content;
}

std::vector<int> parse_dims(const std::string& arg) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, 'x')) {
        size_t pos = 0;
        out.push_back(std::stoi(token, &pos));
        if (pos != token.size()) throw media::MediaError("bad size parameter: " + arg);
    }
    return out;
}

media::LoadedMedium load_from(const std::string& path) {
    return media::load_medium(read_input(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis and drawing of media (partial cube state systems)"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --color/--scale after the subcommand

    media::SvgStyle style;
    bool colorize = false;
    app.add_flag("--color", colorize, "use one color per edge class (default monochrome)");
    app.add_option("--scale", style.scale, "pixels per drawing unit");

    std::string gen_family, gen_size, gen_out;
    auto* gen = app.add_subcommand("generate", "write a standard family as a medium file");
    gen->add_option("family", gen_family,
                    "hypercube | grid | permutations | weak-orders | partial-orders")
        ->required();
    gen->add_option("size", gen_size, "dimension/order; grid sides as 3x4")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string ana_in;
    auto* ana = app.add_subcommand("analyze", "print size, dimensions, planarity, drawability");
    ana->add_option("file", ana_in, "medium file (default stdin)");

    std::string lat_in, lat_out;
    auto* lat = app.add_subcommand("draw-lattice", "project the minimum lattice embedding to SVG");
    lat->add_option("file", lat_in, "medium file (default stdin)");
    lat->add_option("-o,--output", lat_out, "output SVG (default stdout)");

    std::string pla_in, pla_out;
    auto* pla = app.add_subcommand("draw-planar", "symmetric planar drawing to SVG");
    pla->add_option("file", pla_in, "medium file (default stdin)");
    pla->add_option("-o,--output", pla_out, "output SVG (default stdout)");

    std::string ver_in;
    auto* ver = app.add_subcommand("verify", "run the invariant suites and print a report");
    ver->add_option("file", ver_in, "medium file (default stdin)");

    CLI11_PARSE(app, argc, argv);
    style.monochrome = !colorize;

    try {
        if (gen->parsed()) {
            auto dims = parse_dims(gen_size);
            media::Medium m = media::generate_family(
                gen_family, gen_family == "grid" ? dims : std::vector<int>{dims.at(0)});
            media::Graph g = media::graph_from_medium(m);
            auto classes = media::theta_classes(g);
            auto emb = media::hypercube_embedding(g, classes);
            auto sg = media::semicube_graph(emb);
            auto matching = media::maximum_matching(sg);
            auto lattice = media::lattice_embedding(emb, matching);
            auto file = media::medium_file_from_lattice(
                g, lattice,
                {{"generator", gen_family + " " + gen_size},
                 {"tau", std::to_string(classes.class_count)},
                 {"d", std::to_string(lattice.dim)}});
            write_output(gen_out, media::serialize_medium_file(file));
            return kExitOk;
        }
        if (ana->parsed()) {
            auto lm = load_from(ana_in);
            std::cout << media::analyze_graph(lm.graph).to_string();
            return kExitOk;
        }
        if (lat->parsed()) {
            auto lm = load_from(lat_in);
            auto sg = media::semicube_graph(lm.embedding);
            auto matching = media::maximum_matching(sg);
            auto lattice = media::lattice_embedding(lm.embedding, matching);
            auto pv = media::projection_vectors(lattice);
            auto pp = media::project(lm.graph, lattice, pv);
            auto report = media::verify_lattice_drawing(pp, lattice);
            if (!report.all_pass()) {
                std::cerr << "drawing failed its property checks" << std::endl;
                return kExitRejected;
            }
            write_output(lat_out, media::emit_svg(pp).to_string(style));
            return kExitOk;
        }
        if (pla->parsed()) {
            auto lm = load_from(pla_in);
            auto result = media::recognize_and_draw(lm.graph);
            if (!result.accepted()) {
                std::cerr << "not the dual of a weak pseudoline arrangement; rejected at "
                          << result.rejection->stage << ": " << result.rejection->reason
                          << std::endl;
                return kExitRejected;
            }
            write_output(pla_out, media::emit_svg(*result.drawing).to_string(style));
            return kExitOk;
        }
        if (ver->parsed()) {
            auto lm = load_from(ver_in);
            auto items = media::run_verification(lm.graph);
            std::cout << media::format_verification(items);
            return media::verification_passed(items) ? kExitOk : kExitRejected;
        }
    } catch (const media::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return kExitInputError;
    } catch (const media::NotIsometric& e) {
        std::cerr << e.what() << std::endl;
        return kExitInputError;
    } catch (const media::SizeCap& e) {
        std::cerr << e.what() << std::endl;
        return kExitInputError;
    } catch (const media::UnsupportedFamily& e) {
        std::cerr << e.what() << std::endl;
        return kExitInputError;
    } catch (const media::NotPartialCube& e) {
        std::cerr << e.what() << std::endl;
        return kExitRejected;
    } catch (const media::MediaError& e) {
        std::cerr << e.what() << std::endl;
        return kExitInputError;
    }
    return kExitInputError;
}
