#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvex/surface.hpp"

using namespace curvex;

TEST_CASE("once-punctured torus: two triangles, one vertex") {
    const Triangulation t = build_standard_surface({1, 1, 0});
    CHECK(t.num_triangles() == 2);
    CHECK(t.num_edges() == 3);
    CHECK(t.num_vertices() == 1);
    CHECK(t.euler_characteristic() == 0);
    CHECK(t.num_boundary_circles() == 0);
    CHECK(t.num_punctures() == 1);
    CHECK_FALSE(t.has_ghost_vertex());
    CHECK(signature_of(t) == SurfaceSignature{1, 1, 0});
}

TEST_CASE("closed torus gets a ghost vertex") {
    const Triangulation t = build_standard_surface({1, 0, 0});
    CHECK(t.num_triangles() == 2);
    CHECK(t.num_vertices() == 1);
    CHECK(t.has_ghost_vertex());
    CHECK(t.num_punctures() == 0);
    CHECK(t.vertex_kind(t.ghost_vertex()) == VertexKind::ghost);
    CHECK(signature_of(t) == SurfaceSignature{1, 0, 0});
}

TEST_CASE("torus with one boundary circle") {
    const Triangulation t = build_standard_surface({1, 0, 1});
    CHECK(t.num_boundary_circles() == 1);
    CHECK_FALSE(t.has_ghost_vertex());
    CHECK(t.euler_characteristic() == -1);
    CHECK(signature_of(t) == SurfaceSignature{1, 0, 1});
    // The boundary circle is a single loop edge.
    CHECK(t.boundary_circle(0).size() == 1);
}

TEST_CASE("closed genus two surface") {
    const Triangulation t = build_standard_surface({2, 0, 0});
    CHECK(t.num_triangles() == 6);
    CHECK(t.num_vertices() == 1);
    CHECK(t.euler_characteristic() == -2);
    CHECK(t.has_ghost_vertex());
    CHECK(signature_of(t) == SurfaceSignature{2, 0, 0});
}

TEST_CASE("sphere needs at least three punctures") {
    CHECK_THROWS_AS(build_standard_surface({0, 0, 0}), UnsupportedSignature);
    CHECK_THROWS_AS(build_standard_surface({0, 1, 0}), UnsupportedSignature);
    CHECK_THROWS_AS(build_standard_surface({0, 2, 0}), UnsupportedSignature);
    CHECK_NOTHROW(build_standard_surface({0, 3, 0}));
}

TEST_CASE("thrice-punctured sphere pillow") {
    const Triangulation t = build_standard_surface({0, 3, 0});
    CHECK(t.num_triangles() == 2);
    CHECK(t.num_vertices() == 3);
    CHECK(t.euler_characteristic() == 2);
    CHECK(t.num_punctures() == 3);
}

TEST_CASE("disc with punctures and extra boundary circles") {
    const Triangulation d = build_standard_surface({0, 2, 1});
    CHECK(signature_of(d) == SurfaceSignature{0, 2, 1});
    CHECK(d.euler_characteristic() == 1);

    const Triangulation p = build_standard_surface({0, 0, 3});
    CHECK(signature_of(p) == SurfaceSignature{0, 0, 3});
    CHECK(p.euler_characteristic() == -1);
    CHECK_FALSE(p.has_ghost_vertex());
}

TEST_CASE("empty curve complex predicate") {
    CHECK(SurfaceSignature{0, 0, 0}.has_empty_curve_complex());
    CHECK(SurfaceSignature{0, 3, 0}.has_empty_curve_complex());
    CHECK(SurfaceSignature{0, 1, 2}.has_empty_curve_complex());
    CHECK(SurfaceSignature{0, 0, 3}.has_empty_curve_complex());
    CHECK_FALSE(SurfaceSignature{0, 4, 0}.has_empty_curve_complex());
    CHECK_FALSE(SurfaceSignature{0, 2, 2}.has_empty_curve_complex());
    CHECK_FALSE(SurfaceSignature{1, 0, 0}.has_empty_curve_complex());
}

TEST_CASE("builder round trip over the supported grid") {
    for (int g = 0; g <= 4; ++g) {
        for (int m = 0; m <= 8; ++m) {
            for (int q = 0; q <= 4; ++q) {
                const SurfaceSignature sig{g, m, q};
                if (g == 0 && q == 0 && m < 3) continue;
                CAPTURE(g);
                CAPTURE(m);
                CAPTURE(q);
                const Triangulation t = build_standard_surface(sig);
                CHECK(signature_of(t) == sig);
                CHECK(t.euler_characteristic() == 2 - 2 * g - q);
                CHECK(t.has_ghost_vertex() == (g >= 1 && m == 0 && q == 0));
                // Every interior vertex is marked; boundary vertices are not.
                int interior = 0;
                for (int v = 0; v < t.num_vertices(); ++v)
                    if (t.vertex_kind(v) != VertexKind::boundary) ++interior;
                CHECK(interior == m + (t.has_ghost_vertex() ? 1 : 0));
            }
        }
    }
}

TEST_CASE("gluing tables are validated") {
    // Non-involutive table.
    CHECK_THROWS_AS(Triangulation(2, {3, 4, 5, 1, 0, 2}, {0}), InvalidTriangulation);
    // Disconnected: two separate tori.
    const Triangulation torus = build_standard_surface({1, 1, 0});
    std::vector<SlotId> glued;
    for (int copy = 0; copy < 2; ++copy)
        for (int s = 0; s < 6; ++s) glued.push_back(torus.partner(s) + copy * 6);
    CHECK_THROWS_AS(Triangulation(4, std::move(glued), {0, 6}), InvalidTriangulation);
    // Interior vertex without a marked point.
    CHECK_THROWS_AS(Triangulation(2,
                                  [&] {
                                      std::vector<SlotId> gl;
                                      for (int s = 0; s < 6; ++s) gl.push_back(torus.partner(s));
                                      return gl;
                                  }(),
                                  {}),
                    InvalidTriangulation);
}
