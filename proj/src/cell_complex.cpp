#include "slcdual/cell_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace slcdual {

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntegerMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

bool is_zero(const IntegerMatrix& m) {
    return std::all_of(m.data.begin(), m.data.end(), [](const BigInt& x) { return x == 0; });
}

void CellComplex::add_vertex(std::string id, std::string label) {
    if (vertex_idx_.count(id)) throw std::invalid_argument("duplicate vertex id: " + id);
    vertex_idx_[id] = static_cast<int>(vertices.size());
    vertices.push_back({std::move(id), std::move(label)});
}

void CellComplex::add_edge(std::string id, const std::string& from, const std::string& to,
                           std::string label) {
    if (edge_idx_.count(id)) throw std::invalid_argument("duplicate edge id: " + id);
    if (!has_vertex(from) || !has_vertex(to))
        throw std::invalid_argument("edge " + id + " references missing vertex");
    edge_idx_[id] = static_cast<int>(edges.size());
    edges.push_back({std::move(id), from, to, std::move(label)});
}

void CellComplex::add_triangle(Triangle t) {
    for (const auto& v : t.vertices)
        if (!has_vertex(v)) throw std::invalid_argument("triangle " + t.id + " references missing vertex " + v);
    // slot s joins vertex pair (a_s, b_s); the stored edge must run between
    // them in the direction given by edge_signs[s]
    static constexpr int slot_pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (int s = 0; s < 3; ++s) {
        if (!has_edge(t.edges[s]))
            throw std::invalid_argument("triangle " + t.id + " references missing edge " + t.edges[s]);
        const Edge& e = edge(t.edges[s]);
        const std::string& a = t.vertices[slot_pairs[s][0]];
        const std::string& b = t.vertices[slot_pairs[s][1]];
        const bool forward = (e.from == a && e.to == b);
        const bool backward = (e.from == b && e.to == a);
        if (t.edge_signs[s] == 1 && !forward && !(backward && a == b))
            throw std::invalid_argument("triangle " + t.id + ": edge slot " + std::to_string(s) +
                                        " inconsistent with vertices");
        if (t.edge_signs[s] == -1 && !backward)
            throw std::invalid_argument("triangle " + t.id + ": edge slot " + std::to_string(s) +
                                        " inconsistent with vertices");
    }
    triangles.push_back(std::move(t));
}

bool CellComplex::has_vertex(const std::string& id) const { return vertex_idx_.count(id) > 0; }
bool CellComplex::has_edge(const std::string& id) const { return edge_idx_.count(id) > 0; }

const Vertex& CellComplex::vertex(const std::string& id) const {
    return vertices[static_cast<size_t>(vertex_index(id))];
}
const Edge& CellComplex::edge(const std::string& id) const {
    return edges[static_cast<size_t>(edge_index(id))];
}

int CellComplex::vertex_index(const std::string& id) const {
    auto it = vertex_idx_.find(id);
    if (it == vertex_idx_.end()) throw std::invalid_argument("unknown vertex id: " + id);
    return it->second;
}
int CellComplex::edge_index(const std::string& id) const {
    auto it = edge_idx_.find(id);
    if (it == edge_idx_.end()) throw std::invalid_argument("unknown edge id: " + id);
    return it->second;
}

void CellComplex::normalize() {
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::sort(triangles.begin(), triangles.end(),
              [](const Triangle& a, const Triangle& b) { return a.id < b.id; });
    vertex_idx_.clear();
    edge_idx_.clear();
    for (size_t i = 0; i < vertices.size(); ++i) vertex_idx_[vertices[i].id] = static_cast<int>(i);
    for (size_t i = 0; i < edges.size(); ++i) edge_idx_[edges[i].id] = static_cast<int>(i);
}

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
    CellComplex r;
    auto copy_in = [&r](const CellComplex& c, const std::string& ns) {
        for (const auto& v : c.vertices) r.add_vertex(ns + v.id, v.label);
        for (const auto& e : c.edges) r.add_edge(ns + e.id, ns + e.from, ns + e.to, e.label);
        for (const auto& t : c.triangles) {
            Triangle nt = t;
            nt.id = ns + t.id;
            for (auto& v : nt.vertices) v = ns + v;
            for (auto& e : nt.edges) e = ns + e;
            r.add_triangle(std::move(nt));
        }
    };
    copy_in(a, "L:");
    copy_in(b, "R:");
    return r;
}

CellComplex cone(const CellComplex& base, const std::string& apex_id,
                 const std::string& apex_label) {
    if (!base.triangles.empty()) throw DimensionError("cone base must have dimension <= 1");
    CellComplex r;
    r.add_vertex(apex_id, apex_label);
    for (const auto& v : base.vertices) r.add_vertex(v.id, v.label);
    for (const auto& e : base.edges) r.add_edge(e.id, e.from, e.to, e.label);
    for (const auto& v : base.vertices) r.add_edge("cone:" + v.id, apex_id, v.id);
    for (const auto& e : base.edges) {
        Triangle t;
        t.id = "cone:" + e.id;
        t.vertices = {apex_id, e.from, e.to};
        t.edges = {"cone:" + e.from, e.id, "cone:" + e.to};
        t.edge_signs = {1, 1, 1};
        r.add_triangle(std::move(t));
    }
    return r;
}

namespace {

// Endpoint index (0 = from, 1 = to) of the edge in triangle slot s that
// sits at the given corner of that slot.
int slot_end_at_corner(const Triangle& t, int slot, bool first_corner) {
    const int fwd = first_corner ? 0 : 1;
    return t.edge_signs[slot] == 1 ? fwd : 1 - fwd;
}

}  // namespace

CellComplex barycentric_subdivision(const CellComplex& c) {
    CellComplex r;
    for (const auto& v : c.vertices) r.add_vertex("v:" + v.id, v.label);
    for (const auto& e : c.edges) r.add_vertex("e:" + e.id, e.label);
    for (const auto& t : c.triangles) r.add_vertex("t:" + t.id, t.label);

    // chains vertex < edge, one per endpoint slot (a loop yields two)
    for (const auto& e : c.edges) {
        r.add_edge("ve:" + e.id + ":0", "v:" + e.from, "e:" + e.id);
        r.add_edge("ve:" + e.id + ":1", "v:" + e.to, "e:" + e.id);
    }
    static constexpr int corner_slots[3][2] = {{0, 2}, {0, 1}, {1, 2}};
    for (const auto& t : c.triangles) {
        for (int i = 0; i < 3; ++i)
            r.add_edge("vt:" + t.id + ":" + std::to_string(i), "v:" + t.vertices[i], "t:" + t.id);
        for (int s = 0; s < 3; ++s)
            r.add_edge("et:" + t.id + ":" + std::to_string(s), "e:" + t.edges[s], "t:" + t.id);
        // flags: (corner i, adjacent edge slot s)
        for (int i = 0; i < 3; ++i) {
            for (int s : corner_slots[i]) {
                // corner i is the first corner of slot s iff slot s lists it first
                static constexpr int slot_pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
                const bool first = (slot_pairs[s][0] == i);
                const int end = slot_end_at_corner(t, s, first);
                Triangle f;
                f.id = "f:" + t.id + ":" + std::to_string(i) + ":" + std::to_string(s);
                f.vertices = {"v:" + t.vertices[i], "e:" + t.edges[s], "t:" + t.id};
                f.edges = {"ve:" + t.edges[s] + ":" + std::to_string(end),
                           "et:" + t.id + ":" + std::to_string(s),
                           "vt:" + t.id + ":" + std::to_string(i)};
                f.edge_signs = {1, 1, 1};
                r.add_triangle(std::move(f));
            }
        }
    }
    return r;
}

namespace {

std::string merge_labels(const std::set<std::string>& labels) {
    std::string out;
    for (const auto& l : labels) {
        if (l.empty()) continue;
        if (!out.empty()) out += ",";
        out += l;
    }
    return out;
}

}  // namespace

CellComplex quotient(const CellComplex& c,
                     const std::vector<std::vector<std::string>>& vertex_classes,
                     const std::vector<std::vector<std::string>>& edge_classes) {
    std::map<std::string, std::string> vrep;
    for (const auto& cls : vertex_classes) {
        if (cls.empty()) continue;
        std::string rep = *std::min_element(cls.begin(), cls.end());
        for (const auto& v : cls) {
            c.vertex_index(v);
            if (vrep.count(v) && vrep[v] != rep)
                throw InconsistentQuotient("vertex " + v + " appears in two classes");
            vrep[v] = rep;
        }
    }
    auto vclass = [&vrep](const std::string& v) {
        auto it = vrep.find(v);
        return it == vrep.end() ? v : it->second;
    };

    std::map<std::string, std::string> erep;
    for (const auto& cls : edge_classes) {
        if (cls.empty()) continue;
        std::string rep = *std::min_element(cls.begin(), cls.end());
        const Edge& e0 = c.edge(rep);
        for (const auto& eid : cls) {
            const Edge& e = c.edge(eid);
            if (vclass(e.from) != vclass(e0.from) || vclass(e.to) != vclass(e0.to))
                throw InconsistentQuotient("edge class of " + rep +
                                           " merges edges with different endpoint classes");
            if (erep.count(eid) && erep[eid] != rep)
                throw InconsistentQuotient("edge " + eid + " appears in two classes");
            erep[eid] = rep;
        }
    }
    auto eclass = [&erep](const std::string& e) {
        auto it = erep.find(e);
        return it == erep.end() ? e : it->second;
    };

    CellComplex r;
    std::map<std::string, std::set<std::string>> vlabels, elabels;
    std::vector<std::string> vorder, eorder;
    for (const auto& v : c.vertices) {
        std::string rep = vclass(v.id);
        if (!vlabels.count(rep)) vorder.push_back(rep);
        vlabels[rep].insert(v.label);
    }
    for (const auto& id : vorder) r.add_vertex(id, merge_labels(vlabels[id]));
    for (const auto& e : c.edges) {
        std::string rep = eclass(e.id);
        if (!elabels.count(rep)) eorder.push_back(rep);
        elabels[rep].insert(e.label);
    }
    for (const auto& id : eorder) {
        const Edge& e = c.edge(id);
        r.add_edge(id, vclass(e.from), vclass(e.to), merge_labels(elabels[id]));
    }
    for (const auto& t : c.triangles) {
        Triangle nt = t;
        for (auto& v : nt.vertices) v = vclass(v);
        for (auto& e : nt.edges) e = eclass(e);
        r.add_triangle(std::move(nt));
    }
    return r;
}

long long euler_characteristic(const CellComplex& c) {
    return static_cast<long long>(c.vertices.size()) - static_cast<long long>(c.edges.size()) +
           static_cast<long long>(c.triangles.size());
}

IntegerMatrix boundary_matrix(const CellComplex& c, int k) {
    if (k == 1) {
        IntegerMatrix m(static_cast<int>(c.vertices.size()), static_cast<int>(c.edges.size()));
        for (size_t j = 0; j < c.edges.size(); ++j) {
            const Edge& e = c.edges[j];
            if (e.from == e.to) continue;  // loop
            m.at(c.vertex_index(e.from), static_cast<int>(j)) -= 1;
            m.at(c.vertex_index(e.to), static_cast<int>(j)) += 1;
        }
        return m;
    }
    if (k == 2) {
        IntegerMatrix m(static_cast<int>(c.edges.size()), static_cast<int>(c.triangles.size()));
        for (size_t j = 0; j < c.triangles.size(); ++j) {
            const Triangle& t = c.triangles[j];
            const int slot_coeff[3] = {1, 1, -1};  // d[v0,v1,v2] = e01 + e12 - e02
            for (int s = 0; s < 3; ++s)
                m.at(c.edge_index(t.edges[s]), static_cast<int>(j)) +=
                    slot_coeff[s] * t.edge_signs[s];
        }
        return m;
    }
    throw std::invalid_argument("boundary_matrix: k must be 1 or 2");
}

std::vector<CellComplex> connected_components(const CellComplex& c) {
    // union-find over vertex indices through the 1-skeleton
    std::vector<int> parent(c.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : c.edges) {
        int a = find(c.vertex_index(e.from)), b = find(c.vertex_index(e.to));
        if (a != b) parent[a] = b;
    }
    // deterministic order: by minimal vertex id in each component
    std::map<int, std::string> min_id;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        int r = find(static_cast<int>(i));
        auto it = min_id.find(r);
        if (it == min_id.end() || c.vertices[i].id < it->second) min_id[r] = c.vertices[i].id;
    }
    std::vector<std::pair<std::string, int>> order;
    for (const auto& [root, id] : min_id) order.push_back({id, root});
    std::sort(order.begin(), order.end());

    std::vector<CellComplex> out;
    for (const auto& [id, root] : order) {
        CellComplex comp;
        for (const auto& v : c.vertices)
            if (find(c.vertex_index(v.id)) == root) comp.add_vertex(v.id, v.label);
        for (const auto& e : c.edges)
            if (find(c.vertex_index(e.from)) == root) comp.add_edge(e.id, e.from, e.to, e.label);
        for (const auto& t : c.triangles)
            if (find(c.vertex_index(t.vertices[0])) == root) comp.add_triangle(t);
        out.push_back(std::move(comp));
    }
    return out;
}

bool same_complex(const CellComplex& a, const CellComplex& b) {
    CellComplex x = a, y = b;
    x.normalize();
    y.normalize();
    if (x.vertices.size() != y.vertices.size() || x.edges.size() != y.edges.size() ||
        x.triangles.size() != y.triangles.size())
        return false;
    for (size_t i = 0; i < x.vertices.size(); ++i)
        if (x.vertices[i].id != y.vertices[i].id) return false;
    for (size_t i = 0; i < x.edges.size(); ++i) {
        const Edge &e = x.edges[i], &f = y.edges[i];
        if (e.id != f.id || e.from != f.from || e.to != f.to) return false;
    }
    for (size_t i = 0; i < x.triangles.size(); ++i) {
        const Triangle &t = x.triangles[i], &u = y.triangles[i];
        if (t.id != u.id || t.vertices != u.vertices || t.edges != u.edges ||
            t.edge_signs != u.edge_signs)
            return false;
    }
    return true;
}

bool isomorphic_simplicial(const CellComplex& a, const CellComplex& b,
                           const std::map<std::string, std::string>& vertex_map) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() ||
        a.triangles.size() != b.triangles.size())
        return false;
    std::set<std::string> images;
    for (const auto& v : a.vertices) {
        auto it = vertex_map.find(v.id);
        if (it == vertex_map.end() || !b.has_vertex(it->second)) return false;
        if (!images.insert(it->second).second) return false;
    }
    auto mapped = [&vertex_map](const std::string& v) { return vertex_map.at(v); };

    auto edge_key = [](const std::string& u, const std::string& v) {
        return u < v ? u + "\x01" + v : v + "\x01" + u;
    };
    std::multiset<std::string> ea, eb;
    for (const auto& e : a.edges) {
        if (e.from == e.to) return false;  // parallel/loop structure not supported here
        ea.insert(edge_key(mapped(e.from), mapped(e.to)));
    }
    for (const auto& e : b.edges) eb.insert(edge_key(e.from, e.to));
    if (ea != eb) return false;

    auto tri_key = [](std::array<std::string, 3> vs) {
        std::sort(vs.begin(), vs.end());
        return vs[0] + "\x01" + vs[1] + "\x01" + vs[2];
    };
    std::multiset<std::string> ta, tb;
    for (const auto& t : a.triangles)
        ta.insert(tri_key({mapped(t.vertices[0]), mapped(t.vertices[1]), mapped(t.vertices[2])}));
    for (const auto& t : b.triangles) tb.insert(tri_key(t.vertices));
    return ta == tb;
}

}  // namespace slcdual
