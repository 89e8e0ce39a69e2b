#ifndef SLCDUAL_CELL_COMPLEX_HPP
#define SLCDUAL_CELL_COMPLEX_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slcdual {

using BigInt = boost::multiprecision::cpp_int;

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentQuotient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Vertex {
    std::string id;
    std::string label;
};

/// Oriented 1-cell. Endpoints may coincide only after a quotient.
struct Edge {
    std::string id;
    std::string from;
    std::string to;
    std::string label;
};

/// 2-cell with three vertex slots (v0,v1,v2) and three edge slots.
/// Slot 0 joins v0,v1; slot 1 joins v1,v2; slot 2 joins v0,v2.
/// edge_signs[s] is +1 when the stored edge orientation runs with the
/// slot direction (v0->v1, v1->v2, v0->v2) and -1 when against it.
struct Triangle {
    std::string id;
    std::array<std::string, 3> vertices;
    std::array<std::string, 3> edges;
    std::array<int, 3> edge_signs{1, 1, 1};
    std::string label;
};

struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> data;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    BigInt& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
bool is_zero(const IntegerMatrix& m);

class CellComplex {
public:
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;

    void add_vertex(std::string id, std::string label = "");
    void add_edge(std::string id, const std::string& from, const std::string& to,
                  std::string label = "");
    void add_triangle(Triangle t);

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const;
    const Edge& edge(const std::string& id) const;

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    /// Sorts all cell lists by id. Used to compare complexes built by
    /// different routes under the shared id scheme.
    void normalize();

private:
    std::map<std::string, int> vertex_idx_;
    std::map<std::string, int> edge_idx_;
};

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);
CellComplex cone(const CellComplex& base, const std::string& apex_id,
                 const std::string& apex_label = "");
CellComplex barycentric_subdivision(const CellComplex& c);
CellComplex quotient(const CellComplex& c,
                     const std::vector<std::vector<std::string>>& vertex_classes,
                     const std::vector<std::vector<std::string>>& edge_classes);

long long euler_characteristic(const CellComplex& c);

/// k = 1: vertices x edges; k = 2: edges x triangles.
IntegerMatrix boundary_matrix(const CellComplex& c, int k);

std::vector<CellComplex> connected_components(const CellComplex& c);

/// Structural equality after sorting: same ids, same incidences.
bool same_complex(const CellComplex& a, const CellComplex& b);

/// Isomorphism via an explicit vertex-id bijection: edges and triangles
/// are matched as multisets of (unordered) endpoint / corner ids. Only
/// sound when neither complex has parallel edges.
bool isomorphic_simplicial(const CellComplex& a, const CellComplex& b,
                           const std::map<std::string, std::string>& vertex_map);

}  // namespace slcdual

#endif
