#include "slcdual/construction.hpp"

#include <algorithm>
#include <set>

namespace slcdual {

namespace {

std::vector<std::string> sorted_components(const SlcGluingData& data) {
    std::vector<std::string> comps = data.components;
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<Curve> sorted_curves(const SlcGluingData& data) {
    std::vector<Curve> curves = data.curves;
    std::sort(curves.begin(), curves.end(),
              [](const Curve& a, const Curve& b) { return a.id < b.id; });
    return curves;
}

std::map<std::string, std::string> center_of_curve(const std::vector<OneCenter>& ones) {
    std::map<std::string, std::string> m;
    for (const auto& g : ones)
        for (const auto& c : g.curves) m[c] = g.id;
    return m;
}

std::map<std::string, std::string> center_of_point(const std::vector<ZeroCenter>& zeros) {
    std::map<std::string, std::string> m;
    for (const auto& z : zeros)
        for (const auto& p : z.points) m[p] = z.id;
    return m;
}

}  // namespace

std::pair<HalfEdgeGraph, CellComplex> build_c1(const SlcGluingData& data) {
    auto ones = curve_orbits(data);
    auto curve_center = center_of_curve(ones);

    HalfEdgeGraph g;
    for (const auto& comp : sorted_components(data)) g.add_vertex("D:" + comp, comp);
    for (const auto& c : sorted_curves(data)) g.add_half_edge("DG:" + c.id, "D:" + c.component, c.id);
    for (const auto& center : ones)
        if (center.curves.size() == 2)
            g.glue("DG:" + center.curves[0], "DG:" + center.curves[1]);

    RealizationNaming naming;
    auto gamma_vertex = [curve_center](const std::string& he) {
        return "G:" + curve_center.at(he.substr(3));  // strip "DG:"
    };
    auto gamma_label = [curve_center](const std::string& he) { return curve_center.at(he.substr(3)); };
    naming.glue_vertex = [gamma_vertex](const std::string& a, const std::string&) {
        return gamma_vertex(a);
    };
    naming.glue_label = [gamma_label](const std::string& a, const std::string&) {
        return gamma_label(a);
    };
    naming.free_vertex = gamma_vertex;
    naming.free_label = gamma_label;
    return {g, realize_as_complex(g, naming)};
}

std::pair<HalfEdgeGraph, AttachmentMap> build_gz(const SlcGluingData& data, const ZeroCenter& z) {
    std::set<std::string> members(z.points.begin(), z.points.end());
    HalfEdgeGraph g;
    AttachmentMap sigma;
    std::vector<std::string> pts(members.begin(), members.end());
    for (const auto& p : pts) {
        const MarkedPoint* mp = data.find_point(p);
        g.add_vertex(p, mp->component);
        for (const auto& c : mp->curves) {
            Incidence inc{p, c};
            g.add_half_edge(inc.key(), p, c);
            sigma.targets[inc.key()] = "DG:" + c;
        }
    }
    for (const auto& o : incidence_orbits(data)) {
        if (o.members.size() != 2) continue;
        if (!members.count(o.members[0].point)) continue;
        g.glue(o.members[0].key(), o.members[1].key());
    }
    return {g, sigma};
}

CellComplex attach_zero_center(const CellComplex& current, const HalfEdgeGraph& gz,
                               const AttachmentMap& sigma, const ZeroCenter& z) {
    for (const auto& [id, _] : gz.half_edges) {
        auto it = sigma.targets.find(id);
        if (it == sigma.targets.end() || !current.has_edge(it->second))
            throw MissingTarget("sigma has no valid target for half edge '" + id + "'");
    }

    CellComplex c = current;
    const std::string apex = "Z:" + z.id;
    c.add_vertex(apex, z.id);

    for (const auto& p : gz.vertices) {
        const std::string& comp = gz.vertex_labels.at(p);
        c.add_edge("ZD:" + z.id + ":" + p, apex, "D:" + comp, p);
    }

    // one (Z, Gamma) edge per incidence orbit internal to z
    std::map<std::string, std::string> orbit_of;  // half edge -> orbit id
    for (const auto& [id, _] : gz.half_edges) {
        std::string partner = gz.glued_partner(id);
        orbit_of[id] = partner.empty() ? id : std::min(id, partner);
    }
    std::set<std::string> done;
    for (const auto& [id, _] : gz.half_edges) {
        const std::string& oid = orbit_of[id];
        if (!done.insert(oid).second) continue;
        const std::string gamma = c.edge(sigma.targets.at(oid)).to;
        c.add_edge("ZG:" + z.id + ":" + oid, apex, gamma, oid);
    }

    for (const auto& [id, anchor] : gz.half_edges) {
        const Edge& target = c.edge(sigma.targets.at(id));
        Triangle t;
        t.id = "T:" + id;
        t.vertices = {apex, target.from, target.to};  // Z -> D -> Gamma
        t.edges = {"ZD:" + z.id + ":" + anchor, target.id, "ZG:" + z.id + ":" + orbit_of[id]};
        t.edge_signs = {1, 1, 1};
        t.label = id;
        c.add_triangle(std::move(t));
    }
    return c;
}

DualComplexResult build_dual_complex(const SlcGluingData& data) {
    if (!validate(data).ok()) throw InvalidData("gluing data fails validation");

    DualComplexResult result;
    auto [graph, c1] = build_c1(data);
    result.complex = std::move(c1);

    for (const auto& comp : data.components)
        result.vertex_provenance["D:" + comp] = {ProvenanceKind::Component, comp};
    for (const auto& center : curve_orbits(data)) {
        result.vertex_provenance["G:" + center.id] = {ProvenanceKind::OneCenter, center.id};
        result.one_center_cases[center.id] = center.kind;
    }
    for (const auto& z : point_orbits(data)) {
        auto [gz, sigma] = build_gz(data, z);
        result.zero_center_links[z.id] = topological_type(gz).type;
        result.complex = attach_zero_center(result.complex, gz, sigma, z);
        result.vertex_provenance["Z:" + z.id] = {ProvenanceKind::ZeroCenter, z.id};
    }
    return result;
}

CellComplex enumerate_cells(const SlcGluingData& data) {
    auto zeros = point_orbits(data);
    auto ones = curve_orbits(data);
    auto orbits = incidence_orbits(data);
    auto curve_center = center_of_curve(ones);
    auto point_center = center_of_point(zeros);
    std::map<std::string, std::string> orbit_id;  // incidence key -> orbit id
    for (const auto& o : orbits)
        for (const auto& m : o.members) orbit_id[m.key()] = o.id;

    CellComplex c;
    for (const auto& comp : sorted_components(data)) c.add_vertex("D:" + comp, comp);
    for (const auto& g : ones) c.add_vertex("G:" + g.id, g.id);
    for (const auto& z : zeros) c.add_vertex("Z:" + z.id, z.id);

    for (const auto& cv : sorted_curves(data))
        c.add_edge("DG:" + cv.id, "D:" + cv.component, "G:" + curve_center.at(cv.id), cv.id);
    for (const auto& z : zeros)
        for (const auto& p : z.points)
            c.add_edge("ZD:" + z.id + ":" + p, "Z:" + z.id, "D:" + data.find_point(p)->component, p);
    for (const auto& o : orbits) {
        const std::string& z = point_center.at(o.members.front().point);
        c.add_edge("ZG:" + z + ":" + o.id, "Z:" + z, "G:" + curve_center.at(o.members.front().curve),
                   o.id);
    }

    for (const auto& inc : data.incidences()) {
        const std::string& z = point_center.at(inc.point);
        Triangle t;
        t.id = "T:" + inc.key();
        t.vertices = {"Z:" + z, "D:" + data.find_point(inc.point)->component,
                      "G:" + curve_center.at(inc.curve)};
        t.edges = {"ZD:" + z + ":" + inc.point, "DG:" + inc.curve,
                   "ZG:" + z + ":" + orbit_id.at(inc.key())};
        t.edge_signs = {1, 1, 1};
        t.label = inc.key();
        c.add_triangle(std::move(t));
    }
    return c;
}

CellComplex snc_dual_complex(const SlcGluingData& data) {
    auto zeros = point_orbits(data);
    auto ones = curve_orbits(data);
    auto curve_center = center_of_curve(ones);

    for (const auto& g : ones)
        if (g.kind != OneCenterCase::TwoComponents)
            throw NotSnc("one center '" + g.id + "' is not a crossing of two distinct components");

    CellComplex c;
    for (const auto& comp : sorted_components(data)) c.add_vertex("D:" + comp, comp);
    std::map<std::string, std::array<std::string, 2>> center_comps;
    for (const auto& g : ones) {
        std::array<std::string, 2> comps{data.find_curve(g.curves[0])->component,
                                         data.find_curve(g.curves[1])->component};
        if (comps[1] < comps[0]) std::swap(comps[0], comps[1]);
        center_comps[g.id] = comps;
        c.add_edge("G:" + g.id, "D:" + comps[0], "D:" + comps[1], g.id);
    }

    for (const auto& z : zeros) {
        std::set<std::string> comps;
        std::set<std::string> centers;
        for (const auto& p : z.points) {
            const MarkedPoint* mp = data.find_point(p);
            if (!comps.insert(mp->component).second)
                throw NotSnc("zero center '" + z.id + "' has two preimages in component '" +
                             mp->component + "'");
            for (const auto& cv : mp->curves) centers.insert(curve_center.at(cv));
        }
        if (z.points.size() != comps.size())
            throw NotSnc("zero center '" + z.id + "' preimages are not in distinct components");
        if (centers.size() != 3)
            throw NotSnc("zero center '" + z.id + "' is incident to " +
                         std::to_string(centers.size()) + " one centers (expected 3)");
        std::vector<std::string> vs(comps.begin(), comps.end());
        if (vs.size() != 3)
            throw NotSnc("zero center '" + z.id + "' spans " + std::to_string(vs.size()) +
                         " components (expected 3)");
        auto center_joining = [&](const std::string& a, const std::string& b) -> std::string {
            std::array<std::string, 2> key{std::min(a, b), std::max(a, b)};
            std::string found;
            for (const auto& g : centers)
                if (center_comps.at(g) == key) {
                    if (!found.empty())
                        throw NotSnc("components '" + a + "', '" + b +
                                     "' joined by several one centers of zero center '" + z.id + "'");
                    found = g;
                }
            if (found.empty())
                throw NotSnc("zero center '" + z.id + "' has no one center joining components '" + a +
                             "' and '" + b + "'");
            return found;
        };
        Triangle t;
        t.id = "Z:" + z.id;
        t.vertices = {"D:" + vs[0], "D:" + vs[1], "D:" + vs[2]};
        t.edges = {"G:" + center_joining(vs[0], vs[1]), "G:" + center_joining(vs[1], vs[2]),
                   "G:" + center_joining(vs[0], vs[2])};
        t.edge_signs = {1, 1, 1};
        t.label = z.id;
        c.add_triangle(std::move(t));
    }
    return c;
}

}  // namespace slcdual
