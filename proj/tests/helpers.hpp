#ifndef SLCDUAL_TEST_HELPERS_HPP
#define SLCDUAL_TEST_HELPERS_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "slcdual/cell_complex.hpp"
#include "slcdual/gluing_data.hpp"
#include "slcdual/io.hpp"

namespace slcdual::testing {

inline SlcGluingData builtin_data(const std::string& name) {
    return parse_gluing_data(builtin_example(name).dump());
}

inline std::string vname(int i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "v%02d", i);
    return buf;
}

/// Simplicial complex from a face list on integer vertices; vertex slots
/// sorted increasing, edges oriented min -> max.
inline CellComplex simplicial_from_faces(const std::vector<std::array<int, 3>>& faces) {
    CellComplex c;
    std::vector<int> verts;
    std::vector<std::array<int, 2>> edges;
    auto seen_v = [&verts](int v) {
        for (int x : verts)
            if (x == v) return true;
        return false;
    };
    auto seen_e = [&edges](int a, int b) {
        for (const auto& e : edges)
            if (e[0] == a && e[1] == b) return true;
        return false;
    };
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        for (int v : f)
            if (!seen_v(v)) verts.push_back(v);
        for (auto [a, b] : {std::pair{f[0], f[1]}, {f[1], f[2]}, {f[0], f[2]}})
            if (!seen_e(a, b)) edges.push_back({a, b});
    }
    std::sort(verts.begin(), verts.end());
    std::sort(edges.begin(), edges.end());
    auto ename = [](int a, int b) { return vname(a) + "-" + vname(b); };
    for (int v : verts) c.add_vertex(vname(v));
    for (const auto& e : edges) c.add_edge(ename(e[0], e[1]), vname(e[0]), vname(e[1]));
    int i = 0;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        Triangle t;
        t.id = "t" + std::to_string(i++);
        t.vertices = {vname(f[0]), vname(f[1]), vname(f[2])};
        t.edges = {ename(f[0], f[1]), ename(f[1], f[2]), ename(f[0], f[2])};
        t.edge_signs = {1, 1, 1};
        c.add_triangle(std::move(t));
    }
    return c;
}

/// Vertex bijection from a built dual complex onto the barycentric
/// subdivision of the snc oracle: components to vertex barycenters, one
/// centers to edge barycenters, zero centers to triangle barycenters.
inline std::map<std::string, std::string> snc_vertex_map(const CellComplex& built) {
    std::map<std::string, std::string> vmap;
    for (const auto& v : built.vertices) {
        if (v.id.rfind("D:", 0) == 0)
            vmap[v.id] = "v:" + v.id;
        else if (v.id.rfind("G:", 0) == 0)
            vmap[v.id] = "e:" + v.id;
        else
            vmap[v.id] = "t:Z:" + v.id.substr(2);
    }
    return vmap;
}

inline std::vector<std::array<int, 3>> tetrahedron_faces() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
}

inline std::vector<std::array<int, 3>> projective_plane_faces() {
    // minimal 6-vertex triangulation (antipodal icosahedron quotient)
    return {{0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5}};
}

inline std::vector<std::array<int, 3>> torus_faces() {
    // 7-vertex Moebius-Kantor torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7
    std::vector<std::array<int, 3>> f;
    for (int i = 0; i < 7; ++i) {
        std::array<int, 3> a{i, (i + 1) % 7, (i + 3) % 7};
        std::array<int, 3> b{i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        f.push_back(a);
        f.push_back(b);
    }
    return f;
}

}  // namespace slcdual::testing

#endif
