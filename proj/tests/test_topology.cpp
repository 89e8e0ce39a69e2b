#include <doctest.h>

#include "helpers.hpp"
#include "slcdual/topology.hpp"

using namespace slcdual;
using namespace slcdual::testing;

namespace {

void check_certificates(const IntegerMatrix& m, const SmithResult& s) {
    IntegerMatrix d = multiply(multiply(s.U, m), s.V);
    REQUIRE(d.rows == m.rows);
    REQUIRE(d.cols == m.cols);
    for (int i = 0; i < d.rows; ++i)
        for (int j = 0; j < d.cols; ++j) {
            if (i == j && i < static_cast<int>(s.diagonal.size()))
                CHECK(d.at(i, j) == s.diagonal[i]);
            else
                CHECK(d.at(i, j) == 0);
        }
    for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        if (s.diagonal[i + 1] == 0) continue;
        REQUIRE(s.diagonal[i] != 0);
        CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form of diag(2,3)") {
    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SmithResult s = smith_normal_form(m);
    REQUIRE(s.diagonal.size() == 2);
    CHECK(s.diagonal[0] == 1);
    CHECK(s.diagonal[1] == 6);
    CHECK(s.rank == 2);
    check_certificates(m, s);
}

TEST_CASE("smith normal form of the zero matrix") {
    IntegerMatrix m(3, 4);
    SmithResult s = smith_normal_form(m);
    CHECK(s.rank == 0);
    for (const auto& d : s.diagonal) CHECK(d == 0);
    check_certificates(m, s);
}

TEST_CASE("smith normal form of the projective plane boundary") {
    CellComplex rp2 = simplicial_from_faces(projective_plane_faces());
    IntegerMatrix d2 = boundary_matrix(rp2, 2);
    SmithResult s = smith_normal_form(d2);
    CHECK(s.rank == 10);
    int twos = 0;
    for (const auto& d : s.diagonal)
        if (d == 2) twos += 1;
    CHECK(twos == 1);
    check_certificates(d2, s);
}

TEST_CASE("homology of standard triangulations") {
    HomologyProfile sphere = homology(simplicial_from_faces(tetrahedron_faces()));
    CHECK(sphere.betti == std::array<long long, 3>{1, 0, 1});
    for (const auto& t : sphere.torsion) CHECK(t.empty());

    HomologyProfile rp2 = homology(simplicial_from_faces(projective_plane_faces()));
    CHECK(rp2.betti == std::array<long long, 3>{1, 0, 0});
    REQUIRE(rp2.torsion[1].size() == 1);
    CHECK(rp2.torsion[1][0] == 2);
    CHECK(rp2.torsion[0].empty());
    CHECK(rp2.torsion[2].empty());

    HomologyProfile torus = homology(simplicial_from_faces(torus_faces()));
    CHECK(torus.betti == std::array<long long, 3>{1, 2, 1});
    for (const auto& t : torus.torsion) CHECK(t.empty());
}

TEST_CASE("Euler-Poincare on the standard triangulations") {
    for (const auto& faces : {tetrahedron_faces(), projective_plane_faces(), torus_faces()}) {
        CellComplex c = simplicial_from_faces(faces);
        HomologyProfile h = homology(c);
        CHECK(h.betti[0] - h.betti[1] + h.betti[2] == euler_characteristic(c));
    }
}

TEST_CASE("homology is invariant under relabeling") {
    CellComplex a = simplicial_from_faces(projective_plane_faces());
    std::vector<std::array<int, 3>> shifted;
    for (auto f : projective_plane_faces()) shifted.push_back({f[0] + 10, f[1] + 10, f[2] + 10});
    CHECK(homology(a) == homology(simplicial_from_faces(shifted)));
}

TEST_CASE("vertex link of a cone apex over a 4-cycle") {
    CellComplex base;
    for (int i = 0; i < 4; ++i) base.add_vertex(vname(i));
    for (int i = 0; i < 4; ++i) base.add_edge("e" + std::to_string(i), vname(i), vname((i + 1) % 4));
    CellComplex c = cone(base, "apex");
    LinkGraph apex_link = vertex_link(c, "apex");
    CHECK(apex_link.nodes.size() == 4);
    CHECK(apex_link.arcs.size() == 4);
    CHECK(apex_link.is_cycle());
    CHECK_FALSE(apex_link.is_path());

    LinkGraph rim = vertex_link(c, vname(0));
    CHECK(rim.is_path());
    CHECK_FALSE(rim.is_cycle());
}

TEST_CASE("vertex link of a single 2-simplex corner") {
    CellComplex s = simplicial_from_faces({{0, 1, 2}});
    LinkGraph link = vertex_link(s, vname(0));
    CHECK(link.nodes.size() == 2);
    CHECK(link.arcs.size() == 1);
    CHECK(link.is_path());
    CHECK_THROWS_AS(vertex_link(s, "nope"), UnknownVertex);
}

TEST_CASE("surface_type on closed surfaces") {
    SurfaceType sphere = surface_type(simplicial_from_faces(tetrahedron_faces()));
    CHECK(sphere.tag == SurfaceTag::ClosedSurface);
    CHECK(sphere.orientable);
    CHECK(sphere.genus == 0);
    CHECK(sphere.describe() == "ClosedSurface(orientable, genus 0)");

    SurfaceType rp2 = surface_type(simplicial_from_faces(projective_plane_faces()));
    CHECK(rp2.tag == SurfaceTag::ClosedSurface);
    CHECK_FALSE(rp2.orientable);
    CHECK(rp2.genus == 1);

    SurfaceType torus = surface_type(simplicial_from_faces(torus_faces()));
    CHECK(torus.tag == SurfaceTag::ClosedSurface);
    CHECK(torus.orientable);
    CHECK(torus.genus == 1);
}

TEST_CASE("closed-surface orientability matches homology") {
    for (const auto& faces : {tetrahedron_faces(), projective_plane_faces(), torus_faces()}) {
        CellComplex c = simplicial_from_faces(faces);
        SurfaceType s = surface_type(c);
        HomologyProfile h = homology(c);
        REQUIRE(s.tag == SurfaceTag::ClosedSurface);
        CHECK(s.orientable == (h.betti[2] == 1));
        bool z2 = !h.torsion[1].empty() && h.torsion[1].back() == 2;
        CHECK(s.orientable == !z2);
    }
}

TEST_CASE("surface_type recognizes disks") {
    SurfaceType single = surface_type(simplicial_from_faces({{0, 1, 2}}));
    CHECK(single.tag == SurfaceTag::Disk);
    CHECK(single.orientable);
    CHECK(single.boundary_components == 1);
    CHECK(is_pl_disk(simplicial_from_faces({{0, 1, 2}})));

    // square from two triangles: still a disk
    CHECK(is_pl_disk(simplicial_from_faces({{0, 1, 2}, {1, 2, 3}})));
}

TEST_CASE("surface_type with boundary: annulus") {
    // triangulated annulus: inner 3-cycle 0,1,2 and outer 3,4,5
    CellComplex annulus = simplicial_from_faces(
        {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
    SurfaceType s = surface_type(annulus);
    CHECK(s.tag == SurfaceTag::SurfaceWithBoundary);
    CHECK(s.orientable);
    CHECK(s.genus == 0);
    CHECK(s.boundary_components == 2);
    CHECK_FALSE(is_pl_disk(annulus));
}

TEST_CASE("surface_type rejections carry witnesses") {
    // three triangles around one edge
    CellComplex book = simplicial_from_faces({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    SurfaceType s = surface_type(book);
    CHECK(s.tag == SurfaceTag::NotSurface);
    CHECK(s.witness.find(vname(0) + "-" + vname(1)) != std::string::npos);

    // 1-dimensional complex
    CellComplex circle;
    circle.add_vertex("a");
    circle.add_vertex("b");
    circle.add_edge("e1", "a", "b");
    circle.add_edge("e2", "a", "b");
    SurfaceType t = surface_type(circle);
    CHECK(t.tag == SurfaceTag::NotSurface);
    CHECK(t.witness == "no 2-cells");
    CHECK_FALSE(is_pl_disk(circle));

    // two triangles sharing only a vertex: bad link
    CellComplex wedge = simplicial_from_faces({{0, 1, 2}, {0, 3, 4}});
    SurfaceType w = surface_type(wedge);
    CHECK(w.tag == SurfaceTag::NotSurface);
    CHECK(w.witness.find("link of vertex") != std::string::npos);
}

TEST_CASE("surface_type requires connectivity") {
    CellComplex two =
        disjoint_union(simplicial_from_faces({{0, 1, 2}}), simplicial_from_faces({{0, 1, 2}}));
    CHECK_THROWS_AS(surface_type(two), NotConnected);
    CHECK_FALSE(is_pl_disk(two));
}
