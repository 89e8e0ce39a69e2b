#include "slcdual/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace slcdual {

namespace {

IntegerMatrix identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void swap_rows(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row a -= q * row b
void row_sub(IntegerMatrix& m, int a, const BigInt& q, int b) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) -= q * m.at(b, j);
}
void col_sub(IntegerMatrix& m, int a, const BigInt& q, int b) {
    for (int i = 0; i < m.rows; ++i) m.at(i, a) -= q * m.at(i, b);
}
void negate_row(IntegerMatrix& m, int a) {
    for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& input) {
    IntegerMatrix a = input;
    SmithResult r;
    r.U = identity(a.rows);
    r.V = identity(a.cols);
    const int n = std::min(a.rows, a.cols);

    for (int t = 0; t < n; ++t) {
        // pivot: entry of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        BigInt best;
        for (int i = t; i < a.rows; ++i)
            for (int j = t; j < a.cols; ++j) {
                if (a.at(i, j) == 0) continue;
                BigInt v = abs(a.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(a, t, pi);
        swap_rows(r.U, t, pi);
        swap_cols(a, t, pj);
        swap_cols(r.V, t, pj);

        bool stable = false;
        while (!stable) {
            stable = true;
            // clear column t by gcd steps
            for (int i = t + 1; i < a.rows; ++i) {
                while (a.at(i, t) != 0) {
                    BigInt q = a.at(i, t) / a.at(t, t);
                    row_sub(a, i, q, t);
                    row_sub(r.U, i, q, t);
                    if (a.at(i, t) != 0) {
                        swap_rows(a, t, i);
                        swap_rows(r.U, t, i);
                        stable = false;
                    }
                }
            }
            // clear row t
            for (int j = t + 1; j < a.cols; ++j) {
                while (a.at(t, j) != 0) {
                    BigInt q = a.at(t, j) / a.at(t, t);
                    col_sub(a, j, q, t);
                    col_sub(r.V, j, q, t);
                    if (a.at(t, j) != 0) {
                        swap_cols(a, t, j);
                        swap_cols(r.V, t, j);
                        stable = false;
                    }
                }
            }
            if (!stable) continue;
            // enforce divisibility of the trailing block by the pivot
            for (int i = t + 1; i < a.rows && stable; ++i)
                for (int j = t + 1; j < a.cols && stable; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        row_sub(a, t, BigInt(-1), i);  // row t += row i
                        row_sub(r.U, t, BigInt(-1), i);
                        stable = false;
                    }
        }
        if (a.at(t, t) < 0) {
            negate_row(a, t);
            negate_row(r.U, t);
        }
    }
    for (int t = 0; t < n; ++t) {
        r.diagonal.push_back(a.at(t, t));
        if (a.at(t, t) != 0) r.rank += 1;
    }
    return r;
}

HomologyProfile homology(const CellComplex& c) {
    IntegerMatrix d1 = boundary_matrix(c, 1);
    IntegerMatrix d2 = boundary_matrix(c, 2);
    SmithResult s1 = smith_normal_form(d1);
    SmithResult s2 = smith_normal_form(d2);

    HomologyProfile h;
    h.betti[0] = static_cast<long long>(c.vertices.size()) - s1.rank;
    h.betti[1] = static_cast<long long>(c.edges.size()) - s1.rank - s2.rank;
    h.betti[2] = static_cast<long long>(c.triangles.size()) - s2.rank;
    for (const auto& d : s1.diagonal)
        if (d > 1) h.torsion[0].push_back(d);
    for (const auto& d : s2.diagonal)
        if (d > 1) h.torsion[1].push_back(d);
    return h;
}

namespace {

constexpr int kSlotPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
constexpr int kCornerSlots[3][2] = {{0, 2}, {0, 1}, {1, 2}};

// endpoint index of the edge in slot s that sits at corner i of triangle t
int edge_end_at_corner(const Triangle& t, int slot, int corner) {
    const bool first = (kSlotPairs[slot][0] == corner);
    const int fwd = first ? 0 : 1;
    return t.edge_signs[slot] == 1 ? fwd : 1 - fwd;
}

}  // namespace

bool LinkGraph::is_path() const {
    if (nodes.empty()) return false;
    std::map<std::string, int> degree;
    std::map<std::string, std::string> parent;
    for (const auto& n : nodes) {
        degree[n] = 0;
        parent[n] = n;
    }
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (const auto& [a, b] : arcs) {
        degree[a] += 1;
        degree[b] += 1;
        parent[find(a)] = find(b);
    }
    std::set<std::string> roots;
    for (const auto& n : nodes) roots.insert(find(n));
    if (roots.size() != 1) return false;
    for (const auto& [n, d] : degree)
        if (d > 2) return false;
    return arcs.size() + 1 == nodes.size();
}

bool LinkGraph::is_cycle() const {
    if (nodes.empty()) return false;
    std::map<std::string, int> degree;
    std::map<std::string, std::string> parent;
    for (const auto& n : nodes) {
        degree[n] = 0;
        parent[n] = n;
    }
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    for (const auto& [a, b] : arcs) {
        degree[a] += 1;
        degree[b] += 1;
        parent[find(a)] = find(b);
    }
    std::set<std::string> roots;
    for (const auto& n : nodes) roots.insert(find(n));
    if (roots.size() != 1) return false;
    for (const auto& [n, d] : degree)
        if (d != 2) return false;
    return arcs.size() == nodes.size();
}

LinkGraph vertex_link(const CellComplex& c, const std::string& v) {
    if (!c.has_vertex(v)) throw UnknownVertex("unknown vertex: " + v);
    LinkGraph g;
    for (const auto& e : c.edges) {
        if (e.from == v) g.nodes.push_back(e.id + ":0");
        if (e.to == v) g.nodes.push_back(e.id + ":1");
    }
    for (const auto& t : c.triangles) {
        for (int i = 0; i < 3; ++i) {
            if (t.vertices[i] != v) continue;
            const int s0 = kCornerSlots[i][0], s1 = kCornerSlots[i][1];
            g.arcs.push_back({t.edges[s0] + ":" + std::to_string(edge_end_at_corner(t, s0, i)),
                              t.edges[s1] + ":" + std::to_string(edge_end_at_corner(t, s1, i))});
        }
    }
    return g;
}

std::string SurfaceType::describe() const {
    switch (tag) {
        case SurfaceTag::Disk: return "Disk";
        case SurfaceTag::ClosedSurface:
            return std::string("ClosedSurface(") + (orientable ? "orientable" : "nonorientable") +
                   ", genus " + std::to_string(genus) + ")";
        case SurfaceTag::SurfaceWithBoundary:
            return std::string("SurfaceWithBoundary(") +
                   (orientable ? "orientable" : "nonorientable") + ", genus " +
                   std::to_string(genus) + ", boundary " + std::to_string(boundary_components) + ")";
        case SurfaceTag::NotSurface: return "NotSurface(" + witness + ")";
    }
    return "?";
}

SurfaceType surface_type(const CellComplex& c) {
    if (connected_components(c).size() != 1) throw NotConnected("surface_type expects a connected complex");

    auto not_surface = [](std::string witness) {
        SurfaceType s;
        s.tag = SurfaceTag::NotSurface;
        s.witness = std::move(witness);
        return s;
    };
    if (c.triangles.empty()) return not_surface("no 2-cells");
    for (const auto& e : c.edges)
        if (e.from == e.to) return not_surface("loop edge '" + e.id + "'");
    for (const auto& t : c.triangles)
        if (t.vertices[0] == t.vertices[1] || t.vertices[1] == t.vertices[2] ||
            t.vertices[0] == t.vertices[2])
            return not_surface("triangle '" + t.id + "' has a repeated vertex");

    // per-use incidences: (triangle index, boundary coefficient)
    std::map<std::string, std::vector<std::pair<int, int>>> uses;
    const int slot_coeff[3] = {1, 1, -1};
    for (size_t ti = 0; ti < c.triangles.size(); ++ti) {
        const Triangle& t = c.triangles[ti];
        for (int s = 0; s < 3; ++s)
            uses[t.edges[s]].push_back({static_cast<int>(ti), slot_coeff[s] * t.edge_signs[s]});
    }
    std::set<std::string> boundary_edges;
    for (const auto& e : c.edges) {
        size_t n = uses[e.id].size();
        if (n == 0) return not_surface("edge '" + e.id + "' lies in no triangle");
        if (n > 2)
            return not_surface("edge '" + e.id + "' lies in " + std::to_string(n) + " triangles");
        if (n == 1) boundary_edges.insert(e.id);
    }

    for (const auto& v : c.vertices) {
        LinkGraph link = vertex_link(c, v.id);
        if (!link.is_path() && !link.is_cycle())
            return not_surface("link of vertex '" + v.id + "' is neither a path nor a cycle");
    }

    // boundary components: connectivity of the boundary 1-skeleton
    int boundary_count = 0;
    {
        std::map<std::string, std::string> parent;
        for (const auto& eid : boundary_edges) {
            const Edge& e = c.edge(eid);
            parent.emplace(e.from, e.from);
            parent.emplace(e.to, e.to);
        }
        std::function<std::string(std::string)> find = [&](std::string x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        for (const auto& eid : boundary_edges) {
            const Edge& e = c.edge(eid);
            parent[find(e.from)] = find(e.to);
        }
        std::set<std::string> roots;
        for (const auto& [v, _] : parent) roots.insert(find(v));
        boundary_count = static_cast<int>(roots.size());
    }

    // orientability: propagate triangle orientations across interior edges
    bool orientable = true;
    {
        std::vector<int> orient(c.triangles.size(), 0);
        std::vector<std::vector<std::pair<int, int>>> adjacency(c.triangles.size());
        for (const auto& [eid, us] : uses) {
            if (us.size() != 2) continue;
            // coherent orientations induce the edge with opposite signs
            int rel = -us[0].second * us[1].second;
            if (us[0].first == us[1].first) {
                if (rel != 1) orientable = false;
                continue;
            }
            adjacency[us[0].first].push_back({us[1].first, rel});
            adjacency[us[1].first].push_back({us[0].first, rel});
        }
        for (size_t start = 0; start < orient.size() && orientable; ++start) {
            if (orient[start] != 0) continue;
            orient[start] = 1;
            std::vector<int> stack{static_cast<int>(start)};
            while (!stack.empty() && orientable) {
                int t = stack.back();
                stack.pop_back();
                for (const auto& [u, rel] : adjacency[t]) {
                    int want = orient[t] * rel;
                    if (orient[u] == 0) {
                        orient[u] = want;
                        stack.push_back(u);
                    } else if (orient[u] != want) {
                        orientable = false;
                    }
                }
            }
        }
    }

    const long long chi = euler_characteristic(c);
    SurfaceType s;
    s.orientable = orientable;
    s.boundary_components = boundary_count;
    if (boundary_edges.empty()) {
        s.tag = SurfaceTag::ClosedSurface;
        if (orientable) {
            if ((2 - chi) % 2 != 0 || chi > 2) return not_surface("inconsistent Euler characteristic");
            s.genus = (2 - chi) / 2;
        } else {
            s.genus = 2 - chi;
        }
        return s;
    }
    if (orientable) {
        long long twog = 2 - chi - boundary_count;
        if (twog % 2 != 0 || twog < 0) return not_surface("inconsistent Euler characteristic");
        s.genus = twog / 2;
    } else {
        s.genus = 2 - chi - boundary_count;
    }
    s.tag = (orientable && chi == 1 && boundary_count == 1) ? SurfaceTag::Disk
                                                           : SurfaceTag::SurfaceWithBoundary;
    return s;
}

bool is_pl_disk(const CellComplex& c) {
    if (connected_components(c).size() != 1) return false;
    return surface_type(c).tag == SurfaceTag::Disk;
}

}  // namespace slcdual
