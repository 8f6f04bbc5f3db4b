#pragma once

#include <string>
#include <vector>

#include "media/graph.hpp"

namespace media {

struct AnalysisReport {
    int states = 0;
    int edges = 0;
    int isometric_dimension = 0;
    int lattice_dimension = 0;
    bool planar = false;
    bool drawable = false;
    std::string reject_stage;  // when not drawable

    std::string to_string() const;
};

/// n, tau, minimum lattice dimension, planarity, symmetric drawability.
AnalysisReport analyze_graph(const Graph& g);

struct VerifyItem {
    enum class Status { Pass, Fail, Skip };
    std::string name;
    Status status = Status::Pass;
    std::string detail;
};

/// The invariant suites over one medium's transition graph: axiom checks
/// (characterization and bounded message oracle), the embedding round trip,
/// lattice embedding and projection properties, and the drawing pipeline
/// with its round trip when it accepts.
std::vector<VerifyItem> run_verification(const Graph& g);

std::string format_verification(const std::vector<VerifyItem>& items);
bool verification_passed(const std::vector<VerifyItem>& items);

}  // namespace media
