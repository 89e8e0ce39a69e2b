#ifndef SLCDUAL_CONSTRUCTION_HPP
#define SLCDUAL_CONSTRUCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "slcdual/cell_complex.hpp"
#include "slcdual/gluing_data.hpp"
#include "slcdual/halfedge.hpp"

namespace slcdual {

struct MissingTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSnc : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Attaching map sigma_Z: half edges of G(Z) -> half edges of C1.
struct AttachmentMap {
    std::map<std::string, std::string> targets;
};

enum class ProvenanceKind { Component, OneCenter, ZeroCenter };

struct Provenance {
    ProvenanceKind kind;
    std::string ref;  // component id / center id
};

struct DualComplexResult {
    CellComplex complex;
    std::map<std::string, Provenance> vertex_provenance;
    std::map<std::string, TopologicalType> zero_center_links;  // per ZeroCenter id
    std::map<std::string, OneCenterCase> one_center_cases;     // per OneCenter id
};

/// Half-edge graph of the dim >= 1 strata: one vertex per component, one
/// half edge per conductor curve, gluings between matched distinct
/// curves. Also returns its realization; end vertices carry one-center ids.
std::pair<HalfEdgeGraph, CellComplex> build_c1(const SlcGluingData& data);

/// Link graph of a 0-center: one vertex per member point, one half edge
/// per incidence, end-gluings along the size-2 incidence orbits.
std::pair<HalfEdgeGraph, AttachmentMap> build_gz(const SlcGluingData& data, const ZeroCenter& z);

/// Glues the cone over G(Z) into the current complex along sigma.
CellComplex attach_zero_center(const CellComplex& current, const HalfEdgeGraph& gz,
                               const AttachmentMap& sigma, const ZeroCenter& z);

DualComplexResult build_dual_complex(const SlcGluingData& data);

/// Closed-form cell enumeration of the same complex; independent of the
/// attachment pipeline and used as a cross-check against it.
CellComplex enumerate_cells(const SlcGluingData& data);

/// Classical dual complex for snc-style inputs: vertex per component,
/// edge per one-center, triangle per (triple-point) zero-center.
CellComplex snc_dual_complex(const SlcGluingData& data);

}  // namespace slcdual

#endif
