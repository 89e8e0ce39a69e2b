#ifndef SLCDUAL_HALFEDGE_HPP
#define SLCDUAL_HALFEDGE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slcdual/cell_complex.hpp"

namespace slcdual {

/// Graph given as anchored segments with an optional pairwise gluing of
/// their far ends. Each half edge runs from its anchor (parameter 0) to
/// either a glue point shared with its partner or a free endpoint.
struct HalfEdgeGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> half_edges;  // (id, anchor)
    std::vector<std::pair<std::string, std::string>> end_gluing;  // partial matching on ids
    std::map<std::string, std::string> vertex_labels;
    std::map<std::string, std::string> half_edge_labels;

    void add_vertex(std::string id, std::string label = "");
    void add_half_edge(std::string id, const std::string& anchor, std::string label = "");
    void glue(const std::string& a, const std::string& b);

    bool has_vertex(const std::string& id) const;
    const std::string& anchor_of(const std::string& half_edge) const;
    /// Partner under end-gluing, or empty when the end is free.
    std::string glued_partner(const std::string& half_edge) const;
};

enum class TopologicalType { Circle, Interval, Point, Other };

std::string to_string(TopologicalType t);

struct TypeResult {
    TopologicalType type;
    std::string reason;  // set for Other
};

TypeResult topological_type(const HalfEdgeGraph& g);

bool is_connected(const HalfEdgeGraph& g);

/// Naming hooks for the realization. Defaults produce systematic ids.
struct RealizationNaming {
    // vertex placed at the common endpoint of a glued pair (min id first)
    std::function<std::string(const std::string&, const std::string&)> glue_vertex =
        [](const std::string& a, const std::string& b) { return "J:" + std::min(a, b); };
    std::function<std::string(const std::string&, const std::string&)> glue_label =
        [](const std::string&, const std::string&) { return std::string(); };
    // vertex placed at a free endpoint
    std::function<std::string(const std::string&)> free_vertex =
        [](const std::string& he) { return "F:" + he; };
    std::function<std::string(const std::string&)> free_label = [](const std::string&) {
        return std::string();
    };
};

/// 1-dimensional cell complex with one vertex per graph vertex, per glued
/// pair, and per free end; one edge per half edge, oriented anchor -> end.
CellComplex realize_as_complex(const HalfEdgeGraph& g, const RealizationNaming& naming = {});

}  // namespace slcdual

#endif
