// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "helpers.hpp"
#include "slcdual/construction.hpp"
#include "slcdual/io.hpp"
#include "slcdual/topology.hpp"

using namespace slcdual;
using namespace slcdual::testing;

namespace {

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

SlcGluingData builtin(const std::string& name) {
    return parse_gluing_data(builtin_example(name).dump());
}

bool betti_is(const HomologyProfile& h, long long b0, long long b1, long long b2) {
    return h.betti == std::array<long long, 3>{b0, b1, b2};
}

bool torsion_free(const HomologyProfile& h) {
    return h.torsion[0].empty() && h.torsion[1].empty() && h.torsion[2].empty();
}

void criterion_1_pinch_point(Criterion& c) {
    DualComplexResult r = build_dual_complex(builtin("pinch-point"));
    c.require(r.complex.vertices.size() == 4, "V != 4");
    c.require(r.complex.edges.size() == 5, "E != 5");
    c.require(r.complex.triangles.size() == 2, "T != 2");
    c.require(euler_characteristic(r.complex) == 1, "chi != 1");
    HomologyProfile h = homology(r.complex);
    c.require(betti_is(h, 1, 0, 0) && torsion_free(h), "homology != (Z, 0, 0)");
    c.require(surface_type(r.complex).tag == SurfaceTag::Disk, "surface type is not Disk");
}

void criterion_2_x31_figure(Criterion& c) {
    SlcGluingData data = builtin("x31-figure");
    DualComplexResult r = build_dual_complex(data);
    c.require(euler_characteristic(r.complex) == 3, "chi != 3");
    HomologyProfile h = homology(r.complex);
    c.require(betti_is(h, 1, 0, 2) && torsion_free(h), "homology != (Z, 0, Z^2)");
    c.require(surface_type(r.complex).tag == SurfaceTag::NotSurface, "surface type is not NotSurface");
    c.require(r.zero_center_links.size() == 4, "zero-center count != 4");
    for (const auto& [z, type] : r.zero_center_links)
        c.require(type == TopologicalType::Circle, "link of '" + z + "' is not a Circle");
    auto [graph, c1] = build_c1(data);
    c.require(graph.vertices.size() == 1, "C1 graph has != 1 vertex");
    c.require(graph.half_edges.size() == 4 && graph.end_gluing.size() == 2,
              "C1 graph is not two loops");
    c.require(c1.vertices.size() == 3 && c1.edges.size() == 4, "C1 realization is not V=3, E=4");
}

void criterion_3_x31_text(Criterion& c) {
    SlcGluingData data = builtin("x31-text");
    c.require(point_orbits(data).size() == 3, "point-orbit count != 3");
    DualComplexResult r = build_dual_complex(data);
    c.require(euler_characteristic(r.complex) == 2, "chi != 2");
    HomologyProfile h = homology(r.complex);
    // regression lock: H1 rank 0 and no torsion as first computed
    c.require(betti_is(h, 1, 0, 1) && torsion_free(h), "homology != (Z, 0, Z)");
}

void criterion_4_lemma_cases(Criterion& c) {
    // case 1: a line segment between the two component vertices
    CellComplex dc = build_dual_complex(builtin("double-curve")).complex;
    c.require(dc.vertices.size() == 3 && dc.edges.size() == 2 && dc.triangles.empty(),
              "double-curve is not a path");
    HomologyProfile hdc = homology(dc);
    c.require(betti_is(hdc, 1, 0, 0) && torsion_free(hdc), "double-curve homology != (Z, 0, 0)");

    // case 2: a circle
    CellComplex lp = build_dual_complex(builtin("loop-pair")).complex;
    c.require(lp.vertices.size() == 2 && lp.edges.size() == 2 && lp.triangles.empty(),
              "loop-pair is not a bigon circle");
    c.require(euler_characteristic(lp) == 0, "loop-pair chi != 0");
    HomologyProfile hlp = homology(lp);
    c.require(betti_is(hlp, 1, 1, 0) && torsion_free(hlp), "loop-pair homology != (Z, Z, 0)");

    // case 3: an interval terminating at the folded curve
    CellComplex fc = build_dual_complex(builtin("folded-curve")).complex;
    c.require(fc.vertices.size() == 2 && fc.edges.size() == 1 && fc.triangles.empty(),
              "folded-curve is not an interval");
    c.require(euler_characteristic(fc) == 1, "folded-curve chi != 1");
}

void criterion_5_pipeline_equivalence(Criterion& c) {
    for (const auto& name : builtin_example_names()) {
        SlcGluingData data = builtin(name);
        c.require(same_complex(build_dual_complex(data).complex, enumerate_cells(data)),
                  "mismatch on builtin '" + name + "'");
    }
    std::mt19937 rng(424242);
    for (int i = 0; i < 200; ++i) {
        SlcGluingData data = random_valid_dataset(rng);
        if (!validate(data).ok()) {
            c.require(false, "random dataset " + std::to_string(i) + " fails validation");
            continue;
        }
        c.require(same_complex(build_dual_complex(data).complex, enumerate_cells(data)),
                  "mismatch on random dataset " + std::to_string(i));
    }
}

void criterion_6_snc_oracle(Criterion& c) {
    std::mt19937 rng(271828);
    for (int i = 0; i < 100; ++i) {
        SlcGluingData data = random_snc_dataset(rng);
        if (!validate(data).ok()) {
            c.require(false, "random snc dataset " + std::to_string(i) + " fails validation");
            continue;
        }
        CellComplex built = build_dual_complex(data).complex;
        CellComplex oracle = barycentric_subdivision(snc_dual_complex(data));
        c.require(isomorphic_simplicial(built, oracle, snc_vertex_map(built)),
                  "oracle mismatch on random snc dataset " + std::to_string(i));
    }
    SlcGluingData tri = builtin("snc-triangle");
    CellComplex built = build_dual_complex(tri).complex;
    c.require(built.vertices.size() == 7 && built.edges.size() == 12 && built.triangles.size() == 6,
              "snc-triangle is not V=7, E=12, T=6");
    CellComplex oracle = snc_dual_complex(tri);
    c.require(oracle.vertices.size() == 3 && oracle.edges.size() == 3 && oracle.triangles.size() == 1,
              "snc-triangle oracle is not a 2-simplex");
    c.require(isomorphic_simplicial(built, barycentric_subdivision(oracle), snc_vertex_map(built)),
              "snc-triangle does not match its subdivided oracle");
}

void criterion_7_gz_law(Criterion& c) {
    std::mt19937 rng(424242);  // same stream as criterion 5
    for (int i = 0; i < 200; ++i) {
        SlcGluingData data = random_valid_dataset(rng);
        if (!validate(data).ok()) continue;  // already reported by criterion 5
        auto [graph, c1] = build_c1(data);
        DualComplexResult built = build_dual_complex(data);
        long long circles = 0;
        for (const auto& z : point_orbits(data)) {
            auto [gz, sigma] = build_gz(data, z);
            if (!is_connected(gz)) {
                c.require(false, "disconnected G(Z) in random dataset " + std::to_string(i));
                continue;
            }
            TopologicalType type = topological_type(gz).type;
            c.require(type == TopologicalType::Circle || type == TopologicalType::Interval,
                      "G(Z) of random dataset " + std::to_string(i) + " is not S^1 or an interval");
            if (type == TopologicalType::Circle) circles += 1;
        }
        c.require(euler_characteristic(built.complex) == euler_characteristic(c1) + circles,
                  "Euler bookkeeping fails on random dataset " + std::to_string(i));
    }
}

void criterion_8_homology_engine(Criterion& c) {
    HomologyProfile sphere = homology(simplicial_from_faces(tetrahedron_faces()));
    c.require(betti_is(sphere, 1, 0, 1) && torsion_free(sphere),
              "tetrahedron homology != (Z, 0, Z)");
    HomologyProfile rp2 = homology(simplicial_from_faces(projective_plane_faces()));
    c.require(betti_is(rp2, 1, 0, 0) && rp2.torsion[1] == std::vector<BigInt>{2} &&
                  rp2.torsion[0].empty() && rp2.torsion[2].empty(),
              "RP^2 homology != (Z, Z/2, 0)");
    HomologyProfile torus = homology(simplicial_from_faces(torus_faces()));
    c.require(betti_is(torus, 1, 2, 1) && torsion_free(torus), "torus homology != (Z, Z^2, Z)");

    auto check_complex = [&c](const CellComplex& cc, const std::string& what) {
        IntegerMatrix d1 = boundary_matrix(cc, 1);
        IntegerMatrix d2 = boundary_matrix(cc, 2);
        c.require(is_zero(multiply(d1, d2)), "d1*d2 != 0 on " + what);
        for (const IntegerMatrix* m : {&d1, &d2}) {
            SmithResult s = smith_normal_form(*m);
            IntegerMatrix d = multiply(multiply(s.U, *m), s.V);
            bool exact = true;
            for (int i = 0; i < d.rows && exact; ++i)
                for (int j = 0; j < d.cols && exact; ++j) {
                    BigInt want =
                        (i == j && i < static_cast<int>(s.diagonal.size())) ? s.diagonal[i] : 0;
                    exact = (d.at(i, j) == want);
                }
            c.require(exact, "SNF certificates do not recompose on " + what);
        }
    };
    check_complex(simplicial_from_faces(tetrahedron_faces()), "the tetrahedron");
    check_complex(simplicial_from_faces(projective_plane_faces()), "RP^2");
    check_complex(simplicial_from_faces(torus_faces()), "the torus");
    for (const auto& name : builtin_example_names()) {
        CellComplex cc = build_dual_complex(builtin(name)).complex;
        check_complex(cc, "builtin '" + name + "'");
        CellComplex b = barycentric_subdivision(cc);
        c.require(euler_characteristic(b) == euler_characteristic(cc),
                  "subdivision changes chi on builtin '" + name + "'");
        c.require(homology(b) == homology(cc),
                  "subdivision changes homology on builtin '" + name + "'");
    }
}

}  // namespace

int main() {
    struct Entry {
        const char* title;
        void (*run)(Criterion&);
    };
    const Entry entries[] = {
        {"1: pinch-point builds a closed 2-disk (V=4, E=5, T=2, chi=1, H=(Z,0,0))",
         criterion_1_pinch_point},
        {"2: X31 figure dataset (chi=3, H=(Z,0,Z^2), 4 Circle links, two-loop C1)",
         criterion_2_x31_figure},
        {"3: X31 text dataset (3 orbits, chi=2, H=(Z,0,Z) regression lock)", criterion_3_x31_text},
        {"4: one-center cases (path / circle / interval)", criterion_4_lemma_cases},
        {"5: pipeline equivalence on builtins and 200 random datasets",
         criterion_5_pipeline_equivalence},
        {"6: snc oracle on 100 random datasets and the snc-triangle", criterion_6_snc_oracle},
        {"7: G(Z) law and Euler bookkeeping on 200 random datasets", criterion_7_gz_law},
        {"8: homology engine exactness (sphere, RP^2, torus, SNF certificates, subdivision)",
         criterion_8_homology_engine},
    };

    bool all_ok = true;
    for (const auto& e : entries) {
        Criterion c;
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        std::printf("%s criterion %s%s%s\n", c.ok ? "PASS" : "FAIL", e.title,
                    c.ok ? "" : " -- ", c.detail.c_str());
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
