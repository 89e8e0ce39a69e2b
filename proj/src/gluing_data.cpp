#include "slcdual/gluing_data.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace slcdual {

using nlohmann::json;

const Curve* SlcGluingData::find_curve(const std::string& id) const {
    for (const auto& c : curves)
        if (c.id == id) return &c;
    return nullptr;
}

const MarkedPoint* SlcGluingData::find_point(const std::string& id) const {
    for (const auto& p : points)
        if (p.id == id) return &p;
    return nullptr;
}

std::optional<std::string> SlcGluingData::matched_curve(const std::string& id) const {
    for (const auto& pair : curve_matching) {
        if (pair[0] == id) return pair[1];
        if (pair[1] == id) return pair[0];
    }
    return std::nullopt;
}

std::vector<Incidence> SlcGluingData::incidences() const {
    std::vector<Incidence> out;
    for (const auto& p : points) {
        out.push_back({p.id, p.curves[0]});
        out.push_back({p.id, p.curves[1]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(OneCenterCase c) {
    switch (c) {
        case OneCenterCase::TwoComponents: return "TwoComponents";
        case OneCenterCase::LoopSameComponent: return "LoopSameComponent";
        case OneCenterCase::FoldedDoubleCover: return "FoldedDoubleCover";
    }
    return "?";
}

namespace {

const json& require(const json& j, const char* field, const std::string& ctx) {
    auto it = j.find(field);
    if (it == j.end()) throw ParseError("missing field '" + std::string(field) + "' in " + ctx);
    return *it;
}

std::string require_string(const json& j, const char* field, const std::string& ctx) {
    const json& v = require(j, field, ctx);
    if (!v.is_string()) throw ParseError("field '" + std::string(field) + "' in " + ctx + " must be a string");
    return v.get<std::string>();
}

}  // namespace

SlcGluingData parse_gluing_data(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");

    SlcGluingData data;
    for (const auto& c : require(doc, "components", "document"))
        data.components.push_back(c.get<std::string>());

    std::set<std::string> component_ids(data.components.begin(), data.components.end());
    std::set<std::string> curve_ids, point_ids;

    for (const auto& c : require(doc, "curves", "document")) {
        Curve cv{require_string(c, "id", "curve"), require_string(c, "component", "curve")};
        if (!component_ids.count(cv.component))
            throw ParseError("curve '" + cv.id + "' references unknown component '" + cv.component + "'");
        curve_ids.insert(cv.id);
        data.curves.push_back(std::move(cv));
    }

    for (const auto& p : require(doc, "points", "document")) {
        MarkedPoint mp;
        mp.id = require_string(p, "id", "point");
        mp.component = require_string(p, "component", "point");
        const json& cs = require(p, "curves", "point '" + mp.id + "'");
        if (!cs.is_array() || cs.size() != 2)
            throw ParseError("point '" + mp.id + "' must list exactly two curves");
        mp.curves = {cs[0].get<std::string>(), cs[1].get<std::string>()};
        if (mp.curves[1] < mp.curves[0]) std::swap(mp.curves[0], mp.curves[1]);
        if (!component_ids.count(mp.component))
            throw ParseError("point '" + mp.id + "' references unknown component '" + mp.component + "'");
        for (const auto& c : mp.curves)
            if (!curve_ids.count(c))
                throw ParseError("point '" + mp.id + "' references unknown curve '" + c + "'");
        point_ids.insert(mp.id);
        data.points.push_back(std::move(mp));
    }

    const json& inv = require(doc, "involution", "document");
    for (const auto& pair : require(inv, "curve_pairs", "involution")) {
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError("curve_pairs entries must be two-element arrays");
        std::array<std::string, 2> cp{pair[0].get<std::string>(), pair[1].get<std::string>()};
        for (const auto& c : cp)
            if (!curve_ids.count(c))
                throw ParseError("curve_pairs references unknown curve '" + c + "'");
        if (cp[1] < cp[0]) std::swap(cp[0], cp[1]);
        data.curve_matching.push_back(cp);
    }
    for (const auto& pair : require(inv, "incidence_pairs", "involution")) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_array() || !pair[1].is_array() ||
            pair[0].size() != 2 || pair[1].size() != 2)
            throw ParseError("incidence_pairs entries must be pairs of [point, curve] arrays");
        Incidence a{pair[0][0].get<std::string>(), pair[0][1].get<std::string>()};
        Incidence b{pair[1][0].get<std::string>(), pair[1][1].get<std::string>()};
        for (const Incidence* i : {&a, &b}) {
            if (!point_ids.count(i->point))
                throw ParseError("incidence_pairs references unknown point '" + i->point + "'");
            if (!curve_ids.count(i->curve))
                throw ParseError("incidence_pairs references unknown curve '" + i->curve + "'");
        }
        data.incidence_map[a] = b;
        data.incidence_map[b] = a;
    }
    return data;
}

namespace {

struct UnionFind {
    std::map<std::string, std::string> parent;
    void add(const std::string& x) { parent.emplace(x, x); }
    std::string find(const std::string& x) {
        std::string r = x;
        while (parent[r] != r) r = parent[r];
        std::string c = x;
        while (parent[c] != r) {
            std::string next = parent[c];
            parent[c] = r;
            c = next;
        }
        return r;
    }
    void unite(const std::string& a, const std::string& b) { parent[find(a)] = find(b); }
};

}  // namespace

ValidationReport validate(const SlcGluingData& data) {
    ValidationReport report;
    auto add = [&report](std::string rule, std::string msg, std::vector<std::string> ids) {
        report.violations.push_back({std::move(rule), std::move(msg), std::move(ids)});
    };

    std::set<std::string> component_ids(data.components.begin(), data.components.end());
    std::set<std::string> curve_ids;
    for (const auto& c : data.curves) curve_ids.insert(c.id);

    for (const auto& c : data.curves)
        if (!component_ids.count(c.component))
            add("curve-owner", "curve '" + c.id + "' owned by unknown component '" + c.component + "'",
                {c.id, c.component});

    bool refs_ok = true;
    for (const auto& p : data.points) {
        if (!component_ids.count(p.component)) {
            add("point-owner", "point '" + p.id + "' owned by unknown component '" + p.component + "'",
                {p.id, p.component});
            refs_ok = false;
        }
        bool curves_exist = true;
        for (const auto& c : p.curves)
            if (!curve_ids.count(c)) {
                add("point-curve-ref", "point '" + p.id + "' references unknown curve '" + c + "'",
                    {p.id, c});
                curves_exist = refs_ok = false;
            }
        if (p.curves[0] == p.curves[1])
            add("point-distinct-curves", "point '" + p.id + "' must lie on two distinct curves",
                {p.id, p.curves[0]});
        if (curves_exist)
            for (const auto& c : p.curves) {
                const Curve* cv = data.find_curve(c);
                if (cv->component != p.component)
                    add("point-curve-component",
                        "point '" + p.id + "' on curve '" + c + "' of a different component",
                        {p.id, c});
            }
    }

    // curve matching covers every curve exactly once
    std::map<std::string, int> cover;
    bool matching_ok = true;
    for (const auto& pair : data.curve_matching) {
        for (const auto& c : {pair[0], pair[1]})
            if (!curve_ids.count(c)) {
                add("matching-ref", "curve matching references unknown curve '" + c + "'", {c});
                matching_ok = false;
            }
        if (pair[0] == pair[1]) {
            cover[pair[0]] += 1;  // self-pair counts once
        } else {
            cover[pair[0]] += 1;
            cover[pair[1]] += 1;
        }
    }
    for (const auto& c : data.curves)
        if (cover[c.id] != 1) {
            add("matching-cover",
                "curve '" + c.id + "' covered " + std::to_string(cover[c.id]) +
                    " times by the matching (expected exactly once)",
                {c.id});
            matching_ok = false;
        }

    // incidence map: domain, involution, compatibility with the matching
    std::vector<Incidence> incs = data.incidences();
    std::set<Incidence> inc_set(incs.begin(), incs.end());
    bool inv_ok = refs_ok;
    for (const auto& i : incs)
        if (!data.incidence_map.count(i)) {
            add("involution-domain", "incidence (" + i.point + ", " + i.curve + ") has no image",
                {i.point, i.curve});
            inv_ok = false;
        }
    for (const auto& [a, b] : data.incidence_map) {
        if (!inc_set.count(a) || !inc_set.count(b)) {
            add("involution-domain",
                "incidence map entry (" + a.key() + ") -> (" + b.key() + ") is not between incidences of the data",
                {a.key(), b.key()});
            inv_ok = false;
            continue;
        }
        auto it = data.incidence_map.find(b);
        if (it == data.incidence_map.end() || it->second != a) {
            add("involution", "incidence map is not an involution at (" + a.key() + ")",
                {a.key(), b.key()});
            inv_ok = false;
        }
        if (matching_ok) {
            auto partner = data.matched_curve(a.curve);
            if (!partner || *partner != b.curve)
                add("incidence-curve-match",
                    "incidence map sends (" + a.key() + ") to curve '" + b.curve +
                        "' which is not matched with '" + a.curve + "'",
                    {a.key(), b.key()});
        }
    }

    // per-curve bijection onto the matched curve's incidences
    if (matching_ok && inv_ok) {
        std::map<std::string, std::set<Incidence>> on_curve;
        for (const auto& i : incs) on_curve[i.curve].insert(i);
        for (const auto& c : data.curves) {
            std::string partner = *data.matched_curve(c.id);
            std::set<Incidence> images;
            bool ok = true;
            for (const auto& i : on_curve[c.id]) {
                const Incidence& img = data.incidence_map.at(i);
                if (img.curve != partner || !images.insert(img).second) ok = false;
            }
            if (!ok || images.size() != on_curve[partner].size())
                add("incidence-bijection",
                    "incidence map does not restrict to a bijection from curve '" + c.id +
                        "' onto curve '" + partner + "'",
                    {c.id, partner});
        }
    }

    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.rule, a.ids) < std::tie(b.rule, b.ids);
              });

    // Warning (not a violation): the literal endpoint-identification rule
    // would merge (Z, Gamma) edges exactly when two distinct incidence
    // orbits share the same zero- and one-center.
    if (report.ok()) {
        auto zeros = point_orbits(data);
        auto ones = curve_orbits(data);
        std::map<std::string, std::string> zero_of_point, one_of_curve;
        for (const auto& z : zeros)
            for (const auto& p : z.points) zero_of_point[p] = z.id;
        for (const auto& g : ones)
            for (const auto& c : g.curves) one_of_curve[c] = g.id;
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> seen;
        for (const auto& o : incidence_orbits(data))
            seen[{zero_of_point[o.members[0].point], one_of_curve[o.members[0].curve]}].push_back(o.id);
        for (const auto& [zg, orbits] : seen)
            if (orbits.size() > 1)
                report.warnings.push_back(
                    {"edge-rule-mismatch",
                     "zero center '" + zg.first + "' and one center '" + zg.second +
                         "' are joined by " + std::to_string(orbits.size()) +
                         " incidence orbits; the endpoint-based identification rule would merge them",
                     orbits});
    }
    return report;
}

std::vector<ZeroCenter> point_orbits(const SlcGluingData& data) {
    UnionFind uf;
    for (const auto& p : data.points) uf.add(p.id);
    for (const auto& [a, b] : data.incidence_map) uf.unite(a.point, b.point);
    std::map<std::string, std::set<std::string>> groups;
    for (const auto& p : data.points) groups[uf.find(p.id)].insert(p.id);
    std::vector<ZeroCenter> out;
    for (const auto& [root, members] : groups)
        out.push_back({*members.begin(), {members.begin(), members.end()}});
    std::sort(out.begin(), out.end(),
              [](const ZeroCenter& a, const ZeroCenter& b) { return a.id < b.id; });
    return out;
}

std::vector<OneCenter> curve_orbits(const SlcGluingData& data) {
    std::vector<OneCenter> out;
    for (const auto& pair : data.curve_matching) {
        OneCenter c;
        if (pair[0] == pair[1]) {
            c.curves = {pair[0]};
            c.kind = OneCenterCase::FoldedDoubleCover;
        } else {
            c.curves = {pair[0], pair[1]};
            const Curve* a = data.find_curve(pair[0]);
            const Curve* b = data.find_curve(pair[1]);
            c.kind = (a->component == b->component) ? OneCenterCase::LoopSameComponent
                                                    : OneCenterCase::TwoComponents;
        }
        c.id = c.curves.front();
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const OneCenter& a, const OneCenter& b) { return a.id < b.id; });
    return out;
}

std::vector<IncidenceOrbit> incidence_orbits(const SlcGluingData& data) {
    std::vector<IncidenceOrbit> out;
    std::set<Incidence> done;
    for (const auto& i : data.incidences()) {
        if (done.count(i)) continue;
        const Incidence& j = data.incidence_map.at(i);
        IncidenceOrbit o;
        if (j == i) {
            o.members = {i};
        } else {
            o.members = {std::min(i, j), std::max(i, j)};
        }
        o.id = o.members.front().key();
        for (const auto& m : o.members) o.id = std::min(o.id, m.key());
        done.insert(i);
        done.insert(j);
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(),
              [](const IncidenceOrbit& a, const IncidenceOrbit& b) { return a.id < b.id; });
    return out;
}

OneCenterCase classify_one_center(const SlcGluingData& data, const OneCenter& center) {
    for (const auto& c : curve_orbits(data))
        if (c.id == center.id && c.curves == center.curves) return c.kind;
    throw UnknownCenter("one center '" + center.id + "' does not arise from this data");
}

}  // namespace slcdual
