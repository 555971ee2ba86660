// Regenerates the fixture corpus under the given directory. Every file is
// written in canonical form; the two deliberately broken files exercise the
// schema-error exit path.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <torocob/torocob.hpp>

using namespace torocob;

namespace {

std::filesystem::path out_dir;

void write(const std::string& name, const std::string& bytes) {
    std::ofstream f(out_dir / name, std::ios::binary);
    f << bytes;
    std::cout << name << "\n";
}

void write_json(const std::string& name, const Json& j) { write(name, canonical_dump(j)); }

OrbifoldData odata(const CornersComplex& c, std::map<std::string, IntVector> assign) {
    return {c, CharFunction(c.dim, std::move(assign)), BundleFlag::Trivial};
}

CornersComplex simplex3() {
    CornersComplex s;
    s.dim = 3;
    const std::vector<std::string> f = {"a", "b", "c", "d"};
    s.facets = f;
    for (const auto& fid : f) s.faces.push_back({fid, 1, {fid}, 0});
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            s.faces.push_back({"e" + f[i] + f[j], 2, {f[i], f[j]}, 0});
    for (std::size_t i = 0; i < 4; ++i) {
        std::set<std::string> vs;
        for (std::size_t j = 0; j < 4; ++j)
            if (j != i) vs.insert(f[j]);
        s.faces.push_back({"v" + f[i], 3, vs, 0});
    }
    return s;
}

CornersComplex cube() {
    CornersComplex c;
    c.dim = 3;
    // facets: x0,x1,y0,y1,z0,z1; vertices are sign patterns
    const std::vector<std::string> axes = {"x", "y", "z"};
    for (const auto& a : axes)
        for (int s = 0; s < 2; ++s) {
            std::string fid = a + std::to_string(s);
            c.facets.push_back(fid);
            c.faces.push_back({fid, 1, {fid}, 0});
        }
    // edges: fix two axes, one free
    for (std::size_t a1 = 0; a1 < 3; ++a1)
        for (std::size_t a2 = a1 + 1; a2 < 3; ++a2)
            for (int s1 = 0; s1 < 2; ++s1)
                for (int s2 = 0; s2 < 2; ++s2) {
                    std::string f1 = axes[a1] + std::to_string(s1);
                    std::string f2 = axes[a2] + std::to_string(s2);
                    c.faces.push_back({"e|" + f1 + "|" + f2, 2, {f1, f2}, 0});
                }
    for (int sx = 0; sx < 2; ++sx)
        for (int sy = 0; sy < 2; ++sy)
            for (int sz = 0; sz < 2; ++sz) {
                std::string vx = "x" + std::to_string(sx), vy = "y" + std::to_string(sy),
                            vz = "z" + std::to_string(sz);
                c.faces.push_back({"v|" + vx + vy + vz, 3, {vx, vy, vz}, 0});
            }
    return c;
}

} // namespace

int main(int argc, char** argv) {
    out_dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(out_dir);

    CornersComplex eye = build_surface_with_corners(0, {2});
    CornersComplex square = build_surface_with_corners(0, {4});
    CornersComplex triangle = build_surface_with_corners(0, {3});
    CornersComplex disc = build_surface_with_corners(0, {0});
    CornersComplex annulus = build_surface_with_corners(0, {0, 0});
    CornersComplex fig1a = build_surface_with_corners(0, {4, 0, 3});

    auto E = [&](const CornersComplex& c, std::size_t i) { return c.facets[i]; };

    OrbifoldData eye_std = odata(eye, {{E(eye, 0), {1, 0}}, {E(eye, 1), {0, 1}}});
    write_json("eye.json", with_schema(odata_to_json(eye_std)));
    write_json("eye-orbifold.json",
               with_schema(odata_to_json(odata(eye, {{E(eye, 0), {1, 0}}, {E(eye, 1), {1, 2}}}))));
    write_json("bad-eye.json",
               with_schema(odata_to_json(odata(eye, {{E(eye, 0), {1, 0}}, {E(eye, 1), {2, 0}}}))));

    OrbifoldData square_std = odata(square, {{E(square, 0), {1, 0}},
                                             {E(square, 1), {0, 1}},
                                             {E(square, 2), {1, 0}},
                                             {E(square, 3), {0, 1}}});
    write_json("square.json", with_schema(odata_to_json(square_std)));
    // characteristic data whose cut pieces include a non-smooth projective piece
    write_json("square-twisted.json",
               with_schema(odata_to_json(odata(square, {{E(square, 0), {1, 0}},
                                                        {E(square, 1), {0, 1}},
                                                        {E(square, 2), {-1, 3}},
                                                        {E(square, 3), {0, -1}}}))));
    write_json("triangle.json", with_schema(odata_to_json(odata(
                                    triangle, {{E(triangle, 0), {1, 0}},
                                               {E(triangle, 1), {0, 1}},
                                               {E(triangle, 2), {1, 1}}}))));
    write_json("disc.json", with_schema(odata_to_json(odata(disc, {{E(disc, 0), {1, 2}}}))));
    write_json("annulus.json", with_schema(odata_to_json(odata(
                                   annulus, {{E(annulus, 0), {1, 0}}, {E(annulus, 1), {0, 1}}}))));
    {
        std::map<std::string, IntVector> a;
        a[fig1a.facets[0]] = {1, 0};
        a[fig1a.facets[1]] = {0, 1};
        a[fig1a.facets[2]] = {1, 0};
        a[fig1a.facets[3]] = {0, 1};
        a[fig1a.facets[4]] = {1, 1};  // circle
        a[fig1a.facets[5]] = {1, 0};
        a[fig1a.facets[6]] = {0, 1};
        a[fig1a.facets[7]] = {1, 1};
        write_json("figure1a.json", with_schema(odata_to_json(odata(fig1a, a))));
    }

    write_json("simplex3.json", with_schema(complex_to_json(simplex3())));
    write_json("cube.json", with_schema(complex_to_json(cube())));

    {
        MarkedManifold vc = vertex_cut(simplex3());
        RSCharFunction rs(2, {{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}, {"d", {1, 2}}});
        write_json("marked-vc-simplex.json",
                   with_schema(marked_data_to_json(vc, rs, BundleFlag::Trivial)));
    }

    write_json("fan-bounds.json",
               with_schema(fan4_to_json({1, 0}, {0, 1}, {-1, 5}, {0, -1})));
    write_json("fan-unknown.json",
               with_schema(fan4_to_json({1, 0}, {1, 2}, {-1, 1}, {-1, -3})));
    write_json("fan-degenerate.json",
               with_schema(fan4_to_json({1, 0}, {2, 0}, {-1, 1}, {0, -1})));
    write_json("interval-s3.json", with_schema(interval_to_json({1, 0}, {0, 1})));
    write_json("interval-lens.json", with_schema(interval_to_json({1, 2}, {1, -1})));
    write_json("interval-dependent.json", with_schema(interval_to_json({1, 2}, {2, 4})));

    CobordismCertificate eye_cert =
        cobordism_to_projective_spaces(eye_std.complex, eye_std.charfn, eye_std.bundle);
    Json eye_cert_json = with_schema(certificate_to_json(eye_cert));
    write_json("eye-cert.json", eye_cert_json);

    {
        Json tampered = eye_cert_json;
        Json& assign = tampered["boundary"][0]["charfn"]["assignment"];
        assign.begin().value()[0] = "7";
        write_json("tampered-cert.json", tampered);
    }
    {
        Json dropped = eye_cert_json;
        auto& marked = dropped["marked"]["marked"];
        marked.erase(marked.size() - 1);
        write_json("cert-marked-deleted.json", dropped);
    }

    {
        // a transformed copy of the square data: facets rotated one step,
        // delta = [[1,1],[0,1]], sign flipped on one facet
        IntMatrix delta(2, {{1, 1}, {0, 1}});
        std::map<std::string, IntVector> a;
        std::vector<std::string> fs = square.facets;
        for (std::size_t i = 0; i < 4; ++i) {
            IntVector v = apply_matrix(delta, *square_std.charfn.find(fs[i]));
            if (i == 2)
                for (Int& x : v) x = -x;
            a[fs[(i + 1) % 4]] = v;
        }
        write_json("equiv-a.json", with_schema(odata_to_json(square_std)));
        write_json("equiv-b.json", with_schema(odata_to_json(odata(square, a))));
    }

    {
        // apex of a square pyramid lies in four facets: not nice
        CornersComplex pyr;
        pyr.dim = 3;
        pyr.facets = {"base", "n", "e", "s", "w"};
        for (const auto& f : pyr.facets) pyr.faces.push_back({f, 1, {f}, 0});
        pyr.faces.push_back({"apex", 3, {"n", "e", "s", "w"}, 0});
        write_json("pyramid.json", with_schema(complex_to_json(pyr)));
    }
    {
        MarkedManifold vc = vertex_cut(simplex3());
        RSCharFunction rs(2, {{"a", {1, 0}}, {"b", {2, 0}}, {"c", {1, 1}}, {"d", {1, 2}}});
        write_json("marked-vc-bad.json",
                   with_schema(marked_data_to_json(vc, rs, BundleFlag::Trivial)));
    }
    {
        CornersComplex torus;
        torus.dim = 2;
        torus.metadata = SurfaceMetadata{1, {}};
        write_json("torus.json",
                   with_schema(odata_to_json({torus, CharFunction(2, {}), BundleFlag::Trivial})));
    }
    write("noncanonical.json", "  " + canonical_dump(with_schema(odata_to_json(eye_std))));
    write("malformed.json", "{ this is not json\n");
    {
        Json bad;
        bad["kind"] = "complex";
        bad[kSchemaKey] = "2";
        write_json("wrong-schema.json", bad);
    }
    return 0;
}
