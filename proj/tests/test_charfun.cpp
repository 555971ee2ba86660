#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <torocob/torocob.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace torocob;
using fixtures::charfn;
using fixtures::ivec;

TEST_CASE("r-characteristic validation on the eye-shape") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    REQUIRE(validate_r_characteristic(eye, charfn(eye, {ivec(2, 1), ivec(1, 1)})).valid());

    ValidityReport bad = validate_r_characteristic(eye, charfn(eye, {ivec(1, 0), ivec(2, 0)}));
    REQUIRE_FALSE(bad.valid());
    std::size_t vertex_violations = 0;
    for (const auto& v : bad.violations)
        if (v.subject.rfind("V0_", 0) == 0) ++vertex_violations;
    REQUIRE(vertex_violations == 2);
}

TEST_CASE("square with opposite facets repeating the standard basis is valid") {
    CornersComplex sq = build_surface_with_corners(0, {4});
    CharFunction f = charfn(sq, {ivec(1, 0), ivec(0, 1), ivec(1, 0), ivec(0, 1)});
    REQUIRE(validate_r_characteristic(sq, f).valid());
    REQUIRE(validate_characteristic(sq, f).valid());
}

TEST_CASE("characteristic validation is strictly stronger") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CharFunction f = charfn(eye, {ivec(1, 0), ivec(1, 2)});
    REQUIRE(validate_r_characteristic(eye, f).valid());
    REQUIRE_FALSE(validate_characteristic(eye, f).valid());

    CharFunction bad = charfn(eye, {ivec(1, 0), ivec(2, 0)});
    REQUIRE_FALSE(validate_r_characteristic(eye, bad).valid());
    REQUIRE_FALSE(validate_characteristic(eye, bad).valid());
}

TEST_CASE("dimension and zero-vector guards") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CharFunction f3(3, {{eye.facets[0], {Int(1), Int(0), Int(0)}},
                        {eye.facets[1], {Int(0), Int(1), Int(0)}}});
    REQUIRE_THROWS_AS(validate_r_characteristic(eye, f3), DimensionMismatch);
    REQUIRE_THROWS_AS(CharFunction(2, {{"A", {Int(0), Int(0)}}}), ZeroVectorError);
}

TEST_CASE("missing assignments are reported, not thrown") {
    CornersComplex eye = build_surface_with_corners(0, {2});
    CharFunction f(2, {{eye.facets[0], ivec(1, 0)}});
    ValidityReport rep = validate_r_characteristic(eye, f);
    REQUIRE_FALSE(rep.valid());
    REQUIRE(rep.violations.front().code == "missing-assignment");
}

TEST_CASE("face strata") {
    CornersComplex sq = build_surface_with_corners(0, {4});
    CharFunction f = charfn(sq, {ivec(1, 0), ivec(0, 1), ivec(1, 0), ivec(0, 1)});
    FaceStratum s = face_stratum(sq, f, "V0_0");
    REQUIRE(s.local_group.trivial());
    REQUIRE(s.torus_rank == 2);

    CornersComplex eye = build_surface_with_corners(0, {2});
    CharFunction g = charfn(eye, {ivec(1, 0), ivec(1, 2)});
    REQUIRE(face_stratum(eye, g, "V0_0").local_group == AbelianGroup{{Int(2)}});

    CornersComplex disc = build_surface_with_corners(0, {0});
    CharFunction h = charfn(disc, {ivec(2, 4)});
    FaceStratum fs = face_stratum(disc, h, disc.facets[0]);
    REQUIRE(fs.local_group == AbelianGroup{{Int(2)}});
    REQUIRE(fs.torus_rank == 1);

    REQUIRE_THROWS_AS(face_stratum(sq, f, "nope"), UnknownFaceError);
}

TEST_CASE("singular strata order and smoothness flag") {
    CornersComplex sq = build_surface_with_corners(0, {4});
    StrataResult smooth = singular_strata(sq, charfn(sq, {ivec(1, 0), ivec(0, 1), ivec(1, 0), ivec(0, 1)}));
    REQUIRE(smooth.smooth);
    REQUIRE(smooth.strata.size() == sq.faces.size());
    for (std::size_t i = 0; i + 1 < smooth.strata.size(); ++i) {
        const FaceRecord* a = sq.find_face(smooth.strata[i].face_id);
        const FaceRecord* b = sq.find_face(smooth.strata[i + 1].face_id);
        REQUIRE((a->codim < b->codim || (a->codim == b->codim && a->id < b->id)));
    }

    CornersComplex eye = build_surface_with_corners(0, {2});
    StrataResult r = singular_strata(eye, charfn(eye, {ivec(1, 0), ivec(1, 2)}));
    REQUIRE_FALSE(r.smooth);
    for (const auto& s : r.strata) {
        if (eye.find_face(s.face_id)->codim == 1)
            REQUIRE(s.local_group.trivial());
        else
            REQUIRE(s.local_group == AbelianGroup{{Int(2)}});
    }

    // expected orders are the pairwise |det|s of cyclically adjacent vectors:
    // |det((1,0),(0,1))| = 1, |det((0,1),(1,2))| = 1, |det((1,2),(1,0))| = 2
    CornersComplex tri = build_surface_with_corners(0, {3});
    StrataResult t = singular_strata(tri, charfn(tri, {ivec(1, 0), ivec(0, 1), ivec(1, 2)}));
    std::vector<Int> orders;
    for (const auto& s : t.strata)
        if (tri.find_face(s.face_id)->codim == 2) orders.push_back(s.local_group.order());
    std::sort(orders.begin(), orders.end());
    REQUIRE(orders == std::vector<Int>{1, 1, 2});
}

TEST_CASE("smoothness coincides with characteristic validity on small 2D data") {
    std::mt19937_64 rng(23);
    for (const auto& cycles : {std::vector<long long>{2}, {3}, {4}, {0, 2}}) {
        CornersComplex c = build_surface_with_corners(0, cycles);
        for (int t = 0; t < 60; ++t) {
            std::map<std::string, IntVector> assign;
            for (const auto& fid : c.facets) assign[fid] = fixtures::random_vec2(rng, 2);
            CharFunction f(2, assign);
            if (!validate_r_characteristic(c, f).valid()) continue;
            REQUIRE(singular_strata(c, f).smooth == validate_characteristic(c, f).valid());
        }
    }
}

TEST_CASE("local groups are blind to signs and to a global unimodular change") {
    std::mt19937_64 rng(29);
    CornersComplex eye = build_surface_with_corners(0, {2});
    for (int t = 0; t < 50; ++t) {
        IntVector a = fixtures::random_vec2(rng, 3), b = fixtures::random_vec2(rng, 3);
        CharFunction f = charfn(eye, {a, b});
        if (!validate_r_characteristic(eye, f).valid()) continue;

        IntVector na = a;
        for (Int& x : na) x = -x;
        CharFunction fneg = charfn(eye, {na, b});
        StrataResult s0 = singular_strata(eye, f), s1 = singular_strata(eye, fneg);
        for (std::size_t i = 0; i < s0.strata.size(); ++i)
            REQUIRE(s0.strata[i].local_group == s1.strata[i].local_group);

        IntMatrix delta = fixtures::random_unimodular2(rng, 3);
        CharFunction fdelta = charfn(eye, {apply_matrix(delta, a), apply_matrix(delta, b)});
        StrataResult s2 = singular_strata(eye, fdelta);
        for (std::size_t i = 0; i < s0.strata.size(); ++i)
            REQUIRE(s0.strata[i].local_group == s2.strata[i].local_group);

        // for two vectors in rank 2, the vertex group order is |det|
        oracles::Mat m = {{a[0].get_si(), a[1].get_si()}, {b[0].get_si(), b[1].get_si()}};
        REQUIRE(face_stratum(eye, f, "V0_0").local_group.order() ==
                Int(static_cast<long>(std::llabs(oracles::det_cofactor(m)))));
    }
}
