#include "slcdual/halfedge.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace slcdual {

void HalfEdgeGraph::add_vertex(std::string id, std::string label) {
    if (has_vertex(id)) throw std::invalid_argument("duplicate graph vertex: " + id);
    if (!label.empty()) vertex_labels[id] = std::move(label);
    vertices.push_back(std::move(id));
}

void HalfEdgeGraph::add_half_edge(std::string id, const std::string& anchor, std::string label) {
    if (!has_vertex(anchor)) throw std::invalid_argument("half edge anchored at unknown vertex: " + anchor);
    for (const auto& [hid, _] : half_edges)
        if (hid == id) throw std::invalid_argument("duplicate half edge: " + id);
    if (!label.empty()) half_edge_labels[id] = std::move(label);
    half_edges.push_back({std::move(id), anchor});
}

void HalfEdgeGraph::glue(const std::string& a, const std::string& b) {
    if (a == b) throw std::invalid_argument("half edge cannot glue to itself: " + a);
    for (const auto& [x, y] : end_gluing)
        if (x == a || y == a || x == b || y == b)
            throw std::invalid_argument("half edge already glued: " + a + "/" + b);
    end_gluing.push_back({a, b});
}

bool HalfEdgeGraph::has_vertex(const std::string& id) const {
    return std::find(vertices.begin(), vertices.end(), id) != vertices.end();
}

const std::string& HalfEdgeGraph::anchor_of(const std::string& half_edge) const {
    for (const auto& [id, anchor] : half_edges)
        if (id == half_edge) return anchor;
    throw std::invalid_argument("unknown half edge: " + half_edge);
}

std::string HalfEdgeGraph::glued_partner(const std::string& half_edge) const {
    for (const auto& [a, b] : end_gluing) {
        if (a == half_edge) return b;
        if (b == half_edge) return a;
    }
    return {};
}

bool is_connected(const HalfEdgeGraph& g) {
    if (g.vertices.empty()) return true;  // vacuously
    std::map<std::string, std::string> parent;
    for (const auto& v : g.vertices) parent[v] = v;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    // a glued pair joins the two anchors through the shared endpoint
    for (const auto& [a, b] : g.end_gluing) parent[find(g.anchor_of(a))] = find(g.anchor_of(b));
    std::set<std::string> roots;
    for (const auto& v : g.vertices) roots.insert(find(v));
    return roots.size() <= 1;
}

TypeResult topological_type(const HalfEdgeGraph& g) {
    if (g.vertices.size() == 1 && g.half_edges.empty()) return {TopologicalType::Point, ""};
    if (g.vertices.empty())
        return {TopologicalType::Other, "empty graph"};
    if (!is_connected(g)) return {TopologicalType::Other, "not connected"};

    std::map<std::string, int> anchored;
    for (const auto& v : g.vertices) anchored[v] = 0;
    int free_ends = 0;
    for (const auto& [id, anchor] : g.half_edges) {
        anchored[anchor] += 1;
        if (g.glued_partner(id).empty()) free_ends += 1;
    }
    int over = 0, deficient = 0;
    for (const auto& [v, n] : anchored) {
        if (n > 2) over += 1;
        if (n < 2) deficient += 1;
    }
    if (over > 0)
        return {TopologicalType::Other,
                std::to_string(over) + " vertex(es) anchor more than two half edges"};
    if (free_ends == 0 && deficient == 0) return {TopologicalType::Circle, ""};
    if (free_ends + deficient == 2) return {TopologicalType::Interval, ""};
    return {TopologicalType::Other, "free ends + deficient vertices = " +
                                        std::to_string(free_ends + deficient) + " (expected 0 or 2)"};
}

std::string to_string(TopologicalType t) {
    switch (t) {
        case TopologicalType::Circle: return "Circle";
        case TopologicalType::Interval: return "Interval";
        case TopologicalType::Point: return "Point";
        case TopologicalType::Other: return "Other";
    }
    return "?";
}

CellComplex realize_as_complex(const HalfEdgeGraph& g, const RealizationNaming& naming) {
    CellComplex c;
    for (const auto& v : g.vertices) {
        auto it = g.vertex_labels.find(v);
        c.add_vertex(v, it == g.vertex_labels.end() ? "" : it->second);
    }
    std::map<std::string, std::string> end_vertex;
    for (const auto& [a, b] : g.end_gluing) {
        std::string lo = std::min(a, b), hi = std::max(a, b);
        std::string id = naming.glue_vertex(lo, hi);
        if (!c.has_vertex(id)) c.add_vertex(id, naming.glue_label(lo, hi));
        end_vertex[a] = end_vertex[b] = id;
    }
    for (const auto& [id, anchor] : g.half_edges) {
        if (!end_vertex.count(id)) {
            std::string vid = naming.free_vertex(id);
            c.add_vertex(vid, naming.free_label(id));
            end_vertex[id] = vid;
        }
    }
    for (const auto& [id, anchor] : g.half_edges) {
        auto it = g.half_edge_labels.find(id);
        c.add_edge(id, anchor, end_vertex[id], it == g.half_edge_labels.end() ? "" : it->second);
    }
    return c;
}

}  // namespace slcdual
