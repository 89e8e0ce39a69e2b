#ifndef SLCDUAL_TOPOLOGY_HPP
#define SLCDUAL_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "slcdual/cell_complex.hpp"

namespace slcdual {

struct UnknownVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smith normal form D = U * m * V with unimodular U, V and divisibility
/// d_1 | d_2 | ... on the nonzero diagonal. Exact integer arithmetic.
struct SmithResult {
    std::vector<BigInt> diagonal;  // full diagonal, zeros included
    int rank = 0;
    IntegerMatrix U;  // rows x rows
    IntegerMatrix V;  // cols x cols
};

SmithResult smith_normal_form(const IntegerMatrix& m);

struct HomologyProfile {
    std::array<long long, 3> betti{0, 0, 0};
    // torsion coefficients per degree, each > 1, divisibility-ordered
    std::array<std::vector<BigInt>, 3> torsion;

    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile homology(const CellComplex& c);

/// Link of a vertex: one node per edge-end at v, one arc per triangle
/// corner at v (joining the two edge-ends of that corner).
struct LinkGraph {
    std::vector<std::string> nodes;  // "edge-id:end" with end 0 = from, 1 = to
    std::vector<std::pair<std::string, std::string>> arcs;

    bool is_path() const;
    bool is_cycle() const;
};

LinkGraph vertex_link(const CellComplex& c, const std::string& v);

enum class SurfaceTag { NotSurface, ClosedSurface, SurfaceWithBoundary, Disk };

struct SurfaceType {
    SurfaceTag tag = SurfaceTag::NotSurface;
    bool orientable = false;
    long long genus = 0;  // non-orientable: crosscap number
    int boundary_components = 0;
    std::string witness;  // set for NotSurface

    std::string describe() const;
};

/// Classifies a connected complex as a PL surface (closed or with
/// boundary), a disk, or not a surface with a witness.
SurfaceType surface_type(const CellComplex& c);

bool is_pl_disk(const CellComplex& c);

}  // namespace slcdual

#endif
