#include <catch2/catch_amalgamated.hpp>

#include <torocob/torocob.hpp>

#include "fixtures.hpp"

using namespace torocob;

TEST_CASE("validate_nice accepts the builders' shapes") {
    CornersComplex square = build_surface_with_corners(0, {4});
    REQUIRE(validate_nice(square).valid());
    REQUIRE(square.facets.size() == 4);
    REQUIRE(square.vertex_count() == 4);

    CornersComplex eye = build_surface_with_corners(0, {2});
    REQUIRE(validate_nice(eye).valid());
    REQUIRE(eye.facets.size() == 2);
    REQUIRE(eye.vertex_count() == 2);
}

TEST_CASE("validate_nice rejects a malformed vertex and cites it") {
    CornersComplex c;
    c.dim = 2;
    c.facets = {"A", "B"};
    c.faces.push_back({"A", 1, {"A"}, 0});
    c.faces.push_back({"B", 1, {"B"}, 0});
    c.faces.push_back({"V", 2, {"A"}, 0}); // vertex in one facet only
    ValidityReport rep = validate_nice(c);
    REQUIRE_FALSE(rep.valid());
    bool cited = false;
    for (const auto& v : rep.violations) cited = cited || v.subject == "V";
    REQUIRE(cited);
}

TEST_CASE("validate_nice allows equal facet sets with distinct tags only") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    REQUIRE(validate_nice(eye).valid());
    eye.faces.back().component_tag = 0; // clash with the other vertex
    REQUIRE_FALSE(validate_nice(eye).valid());
}

TEST_CASE("build_surface_with_corners shapes") {
    CornersComplex fig = build_surface_with_corners(0, {4, 0, 3});
    REQUIRE(validate_nice(fig).valid());
    REQUIRE(fig.facets.size() == 8);
    REQUIRE(fig.vertex_count() == 7);
    REQUIRE(fig.metadata->boundary_cycles == std::vector<long long>{4, 0, 3});

    REQUIRE_THROWS_AS(build_surface_with_corners(0, {1}), CycleLengthError);
    REQUIRE(build_surface_with_corners(2, {0}).metadata->genus == 2);
}

TEST_CASE("product with an interval") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CornersComplex y = product_with_interval(eye);
    REQUIRE(validate_nice(y).valid());
    REQUIRE(y.dim == 3);
    REQUIRE(y.facets.size() == 4);
    REQUIRE(y.vertex_count() == 4);
    REQUIRE(y.faces.size() == 3 * eye.faces.size() + 2);

    CornersComplex square = build_surface_with_corners(0, {4});
    CornersComplex ys = product_with_interval(square);
    REQUIRE(ys.facets.size() == 6);
    REQUIRE(ys.vertex_count() == 8);

    CornersComplex disc = build_surface_with_corners(0, {0});
    CornersComplex yd = product_with_interval(disc);
    REQUIRE(yd.facets.size() == 3);
    REQUIRE(yd.vertex_count() == 0);
    REQUIRE(validate_nice(yd).valid());
}

TEST_CASE("face-record count of products on assorted small inputs") {
    for (const auto& cycles : {std::vector<long long>{2}, {3}, {0}, {0, 0}, {4}}) {
        CornersComplex c = build_surface_with_corners(0, cycles);
        if (c.faces.size() > 8) continue;
        CornersComplex y = product_with_interval(c);
        REQUIRE(y.faces.size() == 3 * c.faces.size() + 2);
        REQUIRE(validate_nice(y).valid());
    }
}

namespace {

void check_marked_simplices(const MarkedManifold& mm, const std::string& skip_id = "") {
    std::set<std::string> remaining(mm.remaining.begin(), mm.remaining.end());
    for (const auto& mk : mm.marked) {
        if (mk == skip_id) continue;
        std::vector<const FaceRecord*> verts;
        for (const auto& g : mm.base.faces)
            if (g.codim == mm.base.dim && g.facet_set.count(mk)) verts.push_back(&g);
        REQUIRE(verts.size() == mm.base.dim);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                std::size_t shared = 0;
                for (const auto& f : verts[i]->facet_set)
                    if (f != mk && verts[j]->facet_set.count(f) && remaining.count(f)) ++shared;
                REQUIRE(shared == mm.base.dim - 2);
            }
    }
}

} // namespace

TEST_CASE("bottom vertex cut of the eye product") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CornersComplex y = product_with_interval(eye);
    std::vector<std::string> bottoms;
    for (const auto& g : y.faces)
        if (g.codim == 3 && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);
    REQUIRE(bottoms.size() == 2);

    MarkedManifold mm = vertex_cut_bottom(y, bottoms);
    REQUIRE(validate_nice(mm.base).valid());
    REQUIRE(validate_marked(mm).valid());
    REQUIRE(mm.marked.size() == eye.vertex_count() + 1);
    REQUIRE(mm.marked.back() == kTopId);
    REQUIRE(mm.remaining.size() == 3);
    // each cut piece is a triangle: 3 vertices, pairs sharing one remaining facet
    check_marked_simplices(mm, kTopId);
}

TEST_CASE("bottom vertex cut of the square product") {
    CornersComplex y = product_with_interval(build_surface_with_corners(0, {4}));
    std::vector<std::string> bottoms;
    for (const auto& g : y.faces)
        if (g.codim == 3 && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);
    MarkedManifold mm = vertex_cut_bottom(y, bottoms);
    REQUIRE(validate_marked(mm).valid());
    REQUIRE(mm.marked.size() == 5);
    REQUIRE(mm.remaining.size() == 5);
    check_marked_simplices(mm, kTopId);
}

TEST_CASE("bottom vertex cut with nothing to cut") {
    CornersComplex y = product_with_interval(build_surface_with_corners(0, {0}));
    MarkedManifold mm = vertex_cut_bottom(y, {});
    REQUIRE(mm.marked == std::vector<std::string>{kTopId});
    REQUIRE(mm.remaining.size() == 2);
    REQUIRE(validate_marked(mm).valid());
}

TEST_CASE("bottom vertex cut error paths") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CornersComplex y = product_with_interval(eye);
    std::vector<std::string> bottoms;
    for (const auto& g : y.faces)
        if (g.codim == 3 && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);

    REQUIRE_THROWS_AS(vertex_cut_bottom(eye, {}), NotBottomError); // not a product
    REQUIRE_THROWS_AS(vertex_cut_bottom(y, {bottoms[0]}), NotBottomError); // one missing
    REQUIRE_THROWS_AS(vertex_cut_bottom(y, {bottoms[0], "V0_0"}), NotBottomError); // top vertex
    std::vector<std::string> dup = {bottoms[0], bottoms[0]};
    REQUIRE_THROWS_AS(vertex_cut_bottom(y, dup), AdjacencyError);
}

TEST_CASE("vertex cut of the 3-simplex and the cube") {
    MarkedManifold vc = vertex_cut(fixtures::simplex3());
    REQUIRE(validate_marked(vc).valid());
    REQUIRE(vc.marked.size() == 4);
    REQUIRE(vc.remaining.size() == 4);
    REQUIRE(vc.base.vertex_count() == 12);
    check_marked_simplices(vc);

    MarkedManifold vcc = vertex_cut(fixtures::cube());
    REQUIRE(validate_marked(vcc).valid());
    REQUIRE(vcc.marked.size() == 8);
    REQUIRE(vcc.remaining.size() == 6);
    check_marked_simplices(vcc);
}

TEST_CASE("vertex cut of a vertex-free complex is the identity on remaining facets") {
    CornersComplex disc = build_surface_with_corners(0, {0});
    MarkedManifold vc = vertex_cut(disc);
    REQUIRE(vc.marked.empty());
    REQUIRE(vc.remaining == disc.facets);
    REQUIRE(same_incidence(vc.base, disc));
}

TEST_CASE("vertex cut rejects non-simple data") {
    CornersComplex pyr;
    pyr.dim = 3;
    pyr.facets = {"base", "n", "e", "s", "w"};
    for (const auto& f : pyr.facets) pyr.faces.push_back({f, 1, {f}, 0});
    pyr.faces.push_back({"apex", 3, {"n", "e", "s", "w"}, 0});
    REQUIRE_THROWS_AS(vertex_cut(pyr), NotSimpleError);

    // nice but missing its edge records
    CornersComplex sparse = fixtures::simplex3();
    std::vector<FaceRecord> kept;
    for (const auto& g : sparse.faces)
        if (g.codim != 2) kept.push_back(g);
    sparse.faces = kept;
    REQUIRE_THROWS_AS(vertex_cut(sparse), NotSimpleError);
}

TEST_CASE("every builder output validates") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> genus(0, 2);
    std::uniform_int_distribution<int> ncycles(1, 3);
    std::uniform_int_distribution<int> cyc(0, 6);
    for (int t = 0; t < 40; ++t) {
        std::vector<long long> cycles;
        for (int i = 0; i < ncycles(rng); ++i) {
            long long l = cyc(rng);
            cycles.push_back(l == 1 ? 2 : l);
        }
        CornersComplex c = build_surface_with_corners(genus(rng), cycles);
        REQUIRE(validate_nice(c).valid());
        CornersComplex y = product_with_interval(c);
        REQUIRE(validate_nice(y).valid());
        std::vector<std::string> bottoms;
        for (const auto& g : y.faces)
            if (g.codim == y.dim && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);
        MarkedManifold mm = vertex_cut_bottom(y, bottoms);
        REQUIRE(validate_nice(mm.base).valid());
        REQUIRE(validate_marked(mm).valid());
    }
    for (const auto& p : {fixtures::simplex3(), fixtures::cube()}) {
        MarkedManifold vc = vertex_cut(p);
        REQUIRE(validate_nice(vc.base).valid());
        REQUIRE(validate_marked(vc).valid());
    }
}

TEST_CASE("component tags steer incidence through eye-shape vertices") {
    // both vertical edges of the eye product share a facet set; the cut must
    // attach each cut vertex to its own one
    CornersComplex y = product_with_interval(build_surface_with_corners(0, {2}));
    std::vector<std::string> bottoms;
    for (const auto& g : y.faces)
        if (g.codim == 3 && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);
    MarkedManifold mm = vertex_cut_bottom(y, bottoms);
    // the new vertex on the vertical edge of V0_0 must reference V0_0's edge
    bool found = false;
    for (const auto& g : mm.base.faces)
        if (g.id == "Q|V0_0|0/V0_0|I") found = true;
    REQUIRE(found);
    for (const auto& g : mm.base.faces) REQUIRE(g.id != "Q|V0_0|0/V0_1|I");
}
