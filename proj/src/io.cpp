#include "slcdual/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace slcdual {

using nlohmann::json;

json validation_json(const ValidationReport& report) {
    auto dump = [](const std::vector<Violation>& vs) {
        json arr = json::array();
        for (const auto& v : vs)
            arr.push_back({{"rule", v.rule}, {"message", v.message}, {"ids", v.ids}});
        return arr;
    };
    return json{{"violations", dump(report.violations)}, {"warnings", dump(report.warnings)}};
}

namespace {

json homology_json(const HomologyProfile& h) {
    json torsion = json::array();
    for (const auto& degree : h.torsion) {
        json t = json::array();
        for (const auto& d : degree) t.push_back(d.convert_to<long long>());
        torsion.push_back(t);
    }
    return json{{"betti", {h.betti[0], h.betti[1], h.betti[2]}}, {"torsion", torsion}};
}

std::string surface_description(const CellComplex& c) {
    auto comps = connected_components(c);
    if (comps.size() != 1) return "Disconnected(" + std::to_string(comps.size()) + " components)";
    return surface_type(c).describe();
}

}  // namespace

json report_json(const SlcGluingData& data) {
    ValidationReport report = validate(data);
    json out{{"validation", validation_json(report)}};
    if (!report.ok()) return out;

    DualComplexResult result = build_dual_complex(data);
    const CellComplex& c = result.complex;
    HomologyProfile h = homology(c);

    out["euler_characteristic"] = euler_characteristic(c);
    json hj = homology_json(h);
    out["betti"] = hj["betti"];
    out["torsion"] = hj["torsion"];
    json ones = json::array();
    for (const auto& g : curve_orbits(data))
        ones.push_back({{"id", g.id}, {"case", to_string(g.kind)}});
    out["one_centers"] = ones;
    json zeros = json::array();
    for (const auto& z : point_orbits(data))
        zeros.push_back({{"id", z.id}, {"link_type", to_string(result.zero_center_links.at(z.id))}});
    out["zero_centers"] = zeros;
    out["surface_type"] = surface_description(c);
    out["cells"] = {{"vertices", c.vertices.size()},
                    {"edges", c.edges.size()},
                    {"triangles", c.triangles.size()}};
    return out;
}

std::string report_text(const SlcGluingData& data) {
    json r = report_json(data);
    std::ostringstream out;
    const json& val = r["validation"];
    if (!val["violations"].empty()) {
        out << "validation: FAILED\n";
        for (const auto& v : val["violations"])
            out << "  [" << v["rule"].get<std::string>() << "] " << v["message"].get<std::string>()
                << "\n";
        return out.str();
    }
    out << "validation: ok\n";
    for (const auto& w : val["warnings"])
        out << "warning: [" << w["rule"].get<std::string>() << "] " << w["message"].get<std::string>()
            << "\n";
    out << "cells: V=" << r["cells"]["vertices"] << " E=" << r["cells"]["edges"]
        << " T=" << r["cells"]["triangles"] << "\n";
    out << "euler_characteristic: " << r["euler_characteristic"] << "\n";
    out << "betti: (" << r["betti"][0] << ", " << r["betti"][1] << ", " << r["betti"][2] << ")\n";
    out << "torsion: " << r["torsion"].dump() << "\n";
    out << "one_centers:\n";
    for (const auto& g : r["one_centers"])
        out << "  " << g["id"].get<std::string>() << ": " << g["case"].get<std::string>() << "\n";
    out << "zero_centers:\n";
    for (const auto& z : r["zero_centers"])
        out << "  " << z["id"].get<std::string>() << ": " << z["link_type"].get<std::string>() << "\n";
    out << "surface_type: " << r["surface_type"].get<std::string>() << "\n";
    return out.str();
}

json export_complex(const DualComplexResult& result) {
    const CellComplex& c = result.complex;
    json vertices = json::array();
    for (const auto& v : c.vertices) {
        json vj{{"id", v.id}, {"label", v.label}};
        auto it = result.vertex_provenance.find(v.id);
        if (it != result.vertex_provenance.end()) {
            const char* kind = it->second.kind == ProvenanceKind::Component ? "component"
                               : it->second.kind == ProvenanceKind::OneCenter ? "one_center"
                                                                              : "zero_center";
            vj["provenance"] = {{"kind", kind}, {"ref", it->second.ref}};
        }
        vertices.push_back(vj);
    }
    json edges = json::array();
    for (const auto& e : c.edges)
        edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}, {"label", e.label}});
    json triangles = json::array();
    for (const auto& t : c.triangles)
        triangles.push_back({{"id", t.id},
                             {"vertices", t.vertices},
                             {"edges", t.edges},
                             {"signs", t.edge_signs},
                             {"label", t.label}});
    return json{{"vertices", vertices}, {"edges", edges}, {"triangles", triangles}};
}

CellComplex load_complex(const json& doc) {
    CellComplex c;
    for (const auto& v : doc.at("vertices"))
        c.add_vertex(v.at("id").get<std::string>(), v.value("label", ""));
    for (const auto& e : doc.at("edges"))
        c.add_edge(e.at("id").get<std::string>(), e.at("from").get<std::string>(),
                   e.at("to").get<std::string>(), e.value("label", ""));
    for (const auto& t : doc.at("triangles")) {
        Triangle tr;
        tr.id = t.at("id").get<std::string>();
        tr.vertices = t.at("vertices").get<std::array<std::string, 3>>();
        tr.edges = t.at("edges").get<std::array<std::string, 3>>();
        tr.edge_signs = t.at("signs").get<std::array<int, 3>>();
        tr.label = t.value("label", "");
        c.add_triangle(std::move(tr));
    }
    return c;
}

std::string export_off(const DualComplexResult& result) {
    const CellComplex& c = result.complex;
    std::ostringstream out;
    out << "OFF\n";
    // coordinates are cosmetic: vertices spread on the unit sphere by index
    const size_t n = c.vertices.size();
    std::vector<std::array<double, 3>> coords(n);
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (size_t i = 0; i < n; ++i) {
        double z = n > 1 ? 1.0 - 2.0 * static_cast<double>(i) / (static_cast<double>(n) - 1.0) : 0.0;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden * static_cast<double>(i);
        coords[i] = {r * std::cos(phi), r * std::sin(phi), z};
    }
    std::vector<std::array<int, 3>> faces;
    int omitted = 0;
    for (const auto& t : c.triangles) {
        if (t.vertices[0] == t.vertices[1] || t.vertices[1] == t.vertices[2] ||
            t.vertices[0] == t.vertices[2]) {
            omitted += 1;
            continue;
        }
        faces.push_back({c.vertex_index(t.vertices[0]), c.vertex_index(t.vertices[1]),
                         c.vertex_index(t.vertices[2])});
    }
    out << n << " " << faces.size() << " " << c.edges.size() << "\n";
    out.precision(6);
    out << std::fixed;
    for (const auto& p : coords) out << p[0] << " " << p[1] << " " << p[2] << "\n";
    for (const auto& f : faces) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
    if (omitted > 0) out << "# omitted " << omitted << " degenerate face(s)\n";
    return out.str();
}

namespace {

int load_data(const std::string& path, SlcGluingData& data, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        data = parse_gluing_data(buf.str());
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dual complexes of semi-log-canonical surface gluing data"};
    app.require_subcommand(1);

    std::string file, complex_out, off_out, example_name, write_path;
    bool as_json = false;

    auto* validate_cmd = app.add_subcommand("validate", "check gluing data invariants");
    validate_cmd->add_option("file", file, "input JSON file")->required();

    auto* build_cmd = app.add_subcommand("build", "build the dual complex");
    build_cmd->add_option("file", file, "input JSON file")->required();
    build_cmd->add_option("--complex", complex_out, "write the cell complex as JSON");
    build_cmd->add_option("--off", off_out, "write an OFF mesh");

    auto* report_cmd = app.add_subcommand("report", "full invariant report");
    report_cmd->add_option("file", file, "input JSON file")->required();
    report_cmd->add_flag("--json", as_json, "emit the report as JSON");

    auto* example_cmd = app.add_subcommand("example", "print a builtin dataset");
    example_cmd->add_option("name", example_name, "dataset name")->required();
    example_cmd->add_option("--write", write_path, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (example_cmd->parsed()) {
            json doc;
            try {
                doc = builtin_example(example_name);
            } catch (const UnknownExample& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            if (write_path.empty()) {
                out << doc.dump(2) << "\n";
            } else {
                std::ofstream f(write_path);
                if (!f) {
                    err << "error: cannot write '" << write_path << "'\n";
                    return 2;
                }
                f << doc.dump(2) << "\n";
                out << "wrote " << write_path << "\n";
            }
            return 0;
        }

        SlcGluingData data;
        if (int rc = load_data(file, data, err); rc != 0) return rc;

        if (validate_cmd->parsed()) {
            ValidationReport report = validate(data);
            out << validation_json(report).dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }

        ValidationReport report = validate(data);
        if (!report.ok()) {
            err << "validation failed:\n";
            for (const auto& v : report.violations)
                err << "  [" << v.rule << "] " << v.message << "\n";
            return 1;
        }

        if (build_cmd->parsed()) {
            DualComplexResult result = build_dual_complex(data);
            const CellComplex& c = result.complex;
            out << "V=" << c.vertices.size() << " E=" << c.edges.size()
                << " T=" << c.triangles.size() << " chi=" << euler_characteristic(c) << "\n";
            if (!complex_out.empty()) {
                std::ofstream f(complex_out);
                f << export_complex(result).dump(2) << "\n";
                out << "wrote " << complex_out << "\n";
            }
            if (!off_out.empty()) {
                std::ofstream f(off_out);
                f << export_off(result);
                out << "wrote " << off_out << "\n";
            }
            return 0;
        }

        if (report_cmd->parsed()) {
            if (as_json)
                out << report_json(data).dump(2) << "\n";
            else
                out << report_text(data);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace slcdual
