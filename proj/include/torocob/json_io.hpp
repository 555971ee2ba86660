#ifndef TOROCOB_JSON_IO_HPP
#define TOROCOB_JSON_IO_HPP

// File-level schema: one file = one object, carrying "torocob-schema": "1"
// and a "kind". Parsing is strict: unknown schema versions, unknown kinds,
// missing fields and ill-typed values are schema errors. Parsed values
// round-trip: canonical_dump(parse(bytes)) == bytes for canonical files.

#include <json.hpp>
#include <optional>
#include <string>

#include "cobordism.hpp"
#include "equivalence.hpp"
#include "json_core.hpp"

namespace torocob {

// ---------------- writers ----------------

inline Json with_schema(Json j) {
    j[kSchemaKey] = kSchemaVersion;
    return j;
}

inline Json odata_to_json(const OrbifoldData& d) {
    Json j;
    j["kind"] = "orbifold-data";
    j["complex"] = complex_to_json(d.complex);
    j["charfn"] = charfn_to_json(d.charfn);
    j["bundle"] = to_string(d.bundle);
    return j;
}

inline Json marked_to_json(const MarkedManifold& m) {
    Json j;
    j["kind"] = "marked";
    j["base"] = complex_to_json(m.base);
    Json mk = Json::array(), rm = Json::array();
    for (const auto& f : m.marked) mk.push_back(f);
    std::vector<std::string> rem = m.remaining;
    std::sort(rem.begin(), rem.end());
    for (const auto& f : rem) rm.push_back(f);
    j["marked"] = mk;
    j["remaining"] = rm;
    return j;
}

inline Json rsfn_to_json(const RSCharFunction& f) {
    Json j;
    j["n"] = int_to_json(f.n);
    Json a = Json::object();
    for (const auto& [fid, v] : f.assignment) a[fid] = ivec_to_json(v);
    j["assignment"] = a;
    return j;
}

inline Json marked_data_to_json(const MarkedManifold& m, const RSCharFunction& rs, BundleFlag b) {
    Json j;
    j["kind"] = "marked-data";
    j["marked"] = marked_to_json(m);
    j["rscharfn"] = rsfn_to_json(rs);
    j["bundle"] = to_string(b);
    return j;
}

inline Json relation_to_json(const RelationStatement& r) {
    Json j;
    j["kind"] = "relation";
    j["group-rank"] = int_to_json(r.group_rank);
    j["note"] = r.note;
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        Json jt;
        jt["coefficient"] = int_to_json(static_cast<long long>(t.coefficient));
        jt["index"] = int_to_json(t.index);
        jt["hash"] = t.hash;
        terms.push_back(jt);
    }
    j["terms"] = terms;
    return j;
}

inline Json certificate_to_json(const CobordismCertificate& c) {
    Json j;
    j["kind"] = "certificate";
    j["marked"] = marked_to_json(c.marked);
    j["rscharfn"] = rsfn_to_json(c.rs);
    j["bundle"] = to_string(c.bundle);
    Json pieces = Json::array();
    for (const auto& d : c.boundary_pieces) pieces.push_back(descriptor_to_json(d));
    j["boundary"] = pieces;
    j["relation"] = relation_to_json(c.relation);
    j["provenance"] = c.provenance;
    if (!c.lens_boundary.empty()) {
        Json lens = Json::array();
        for (const auto& lp : c.lens_boundary) {
            Json jl;
            jl["facet"] = lp.facet;
            jl["p"] = int_to_json(lp.lens.p);
            jl["q"] = int_to_json(lp.lens.q);
            lens.push_back(jl);
        }
        j["lens-boundary"] = lens;
    }
    return j;
}

inline Json witness_to_json(const EquivalenceWitness& w) {
    Json j;
    j["kind"] = "witness";
    Json psi = Json::object(), signs = Json::object();
    for (const auto& [a, b] : w.psi) psi[a] = b;
    for (const auto& [a, s] : w.signs) signs[a] = int_to_json(static_cast<long long>(s));
    j["psi"] = psi;
    j["signs"] = signs;
    j["delta"] = imat_to_json(w.delta);
    return j;
}

inline Json refutation_to_json(const Refutation& r) {
    Json j;
    j["kind"] = "refutation";
    j["invariant"] = r.invariant;
    j["detail"] = r.detail;
    return j;
}

inline Json fan4_to_json(const IntVector& v1, const IntVector& v2, const IntVector& v3,
                         const IntVector& v4) {
    Json j;
    j["kind"] = "fan4";
    Json vs = Json::array();
    for (const IntVector* v : {&v1, &v2, &v3, &v4}) vs.push_back(ivec_to_json(*v));
    j["vectors"] = vs;
    return j;
}

inline Json interval_to_json(const IntVector& u, const IntVector& v) {
    Json j;
    j["kind"] = "interval";
    j["u"] = ivec_to_json(u);
    j["v"] = ivec_to_json(v);
    return j;
}

// ---------------- parsing helpers ----------------

namespace jsdetail {

inline const Json& field(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field: " + key);
    return *it;
}

inline std::string str(const Json& j, const std::string& ctx) {
    if (!j.is_string()) throw SchemaError(ctx + ": expected a string");
    return j.get<std::string>();
}

inline Int parse_int(const Json& j, const std::string& ctx) {
    std::string s = str(j, ctx);
    if (s.empty()) throw SchemaError(ctx + ": empty integer");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) throw SchemaError(ctx + ": bad integer " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw SchemaError(ctx + ": bad integer " + s);
    return Int(s);
}

inline long long parse_ll(const Json& j, const std::string& ctx) {
    Int v = parse_int(j, ctx);
    if (!v.fits_slong_p()) throw SchemaError(ctx + ": integer out of range");
    return v.get_si();
}

inline std::size_t parse_size(const Json& j, const std::string& ctx) {
    long long v = parse_ll(j, ctx);
    if (v < 0) throw SchemaError(ctx + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

inline IntVector parse_ivec(const Json& j, const std::string& ctx) {
    if (!j.is_array()) throw SchemaError(ctx + ": expected an array");
    IntVector v;
    for (const auto& e : j) v.push_back(parse_int(e, ctx));
    return v;
}

inline IntMatrix parse_imat(const Json& j, const std::string& ctx) {
    if (!j.is_object()) throw SchemaError(ctx + ": expected a matrix object");
    IntMatrix m(parse_size(field(j, "cols"), ctx + ".cols"));
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) throw SchemaError(ctx + ".rows: expected an array");
    for (const auto& r : rows) {
        IntVector row = parse_ivec(r, ctx + ".rows");
        if (row.size() != m.cols) throw SchemaError(ctx + ": ragged matrix");
        m.rows.push_back(std::move(row));
    }
    return m;
}

inline void expect_kind(const Json& j, const std::string& kind) {
    if (str(field(j, "kind"), "kind") != kind)
        throw SchemaError("expected kind " + kind + ", found " + str(field(j, "kind"), "kind"));
}

inline BundleFlag parse_bundle(const Json& j) {
    std::string s = str(j, "bundle");
    if (s == "trivial") return BundleFlag::Trivial;
    if (s == "abstract") return BundleFlag::Abstract;
    throw SchemaError("bundle: expected \"trivial\" or \"abstract\"");
}

} // namespace jsdetail

// ---------------- readers ----------------

inline CornersComplex complex_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "complex");
    CornersComplex c;
    c.dim = parse_size(field(j, "dim"), "dim");
    const Json& facets = field(j, "facets");
    if (!facets.is_array()) throw SchemaError("facets: expected an array");
    for (const auto& f : facets) c.facets.push_back(str(f, "facets"));
    const Json& faces = field(j, "faces");
    if (!faces.is_array()) throw SchemaError("faces: expected an array");
    for (const auto& jf : faces) {
        FaceRecord r;
        r.id = str(field(jf, "id"), "face.id");
        r.codim = parse_size(field(jf, "codim"), "face.codim");
        const Json& fs = field(jf, "facets");
        if (!fs.is_array()) throw SchemaError("face.facets: expected an array");
        for (const auto& f : fs) r.facet_set.insert(str(f, "face.facets"));
        r.component_tag = parse_ll(field(jf, "tag"), "face.tag");
        c.faces.push_back(std::move(r));
    }
    if (j.contains("metadata")) {
        const Json& md = j["metadata"];
        SurfaceMetadata meta;
        meta.genus = parse_ll(field(md, "genus"), "metadata.genus");
        const Json& cyc = field(md, "boundary-cycles");
        if (!cyc.is_array()) throw SchemaError("metadata.boundary-cycles: expected an array");
        for (const auto& l : cyc) meta.boundary_cycles.push_back(parse_ll(l, "boundary-cycles"));
        c.metadata = meta;
    }
    return c;
}

inline CharFunction charfn_from_json(const Json& j) {
    using namespace jsdetail;
    std::size_t n = parse_size(field(j, "n"), "charfn.n");
    const Json& a = field(j, "assignment");
    if (!a.is_object()) throw SchemaError("charfn.assignment: expected an object");
    std::map<std::string, IntVector> assign;
    for (auto it = a.begin(); it != a.end(); ++it)
        assign[it.key()] = parse_ivec(it.value(), "charfn.assignment");
    return CharFunction(n, std::move(assign));
}

inline RSCharFunction rsfn_from_json(const Json& j) {
    using namespace jsdetail;
    std::size_t n = parse_size(field(j, "n"), "rscharfn.n");
    const Json& a = field(j, "assignment");
    if (!a.is_object()) throw SchemaError("rscharfn.assignment: expected an object");
    std::map<std::string, IntVector> assign;
    for (auto it = a.begin(); it != a.end(); ++it)
        assign[it.key()] = parse_ivec(it.value(), "rscharfn.assignment");
    return RSCharFunction(n, std::move(assign));
}

inline OrbifoldData odata_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "orbifold-data");
    OrbifoldData d;
    d.complex = complex_from_json(field(j, "complex"));
    d.charfn = charfn_from_json(field(j, "charfn"));
    d.bundle = parse_bundle(field(j, "bundle"));
    return d;
}

inline MarkedManifold marked_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "marked");
    MarkedManifold m;
    m.base = complex_from_json(field(j, "base"));
    for (const auto& f : field(j, "marked")) m.marked.push_back(str(f, "marked"));
    for (const auto& f : field(j, "remaining")) m.remaining.push_back(str(f, "remaining"));
    return m;
}

struct MarkedData {
    MarkedManifold marked;
    RSCharFunction rs;
    BundleFlag bundle = BundleFlag::Trivial;
};

inline MarkedData marked_data_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "marked-data");
    MarkedData d;
    d.marked = marked_from_json(field(j, "marked"));
    d.rs = rsfn_from_json(field(j, "rscharfn"));
    d.bundle = parse_bundle(field(j, "bundle"));
    return d;
}

inline FaceStratum stratum_from_json(const Json& j) {
    using namespace jsdetail;
    FaceStratum s;
    s.face_id = str(field(j, "face"), "stratum.face");
    s.k_lattice = parse_imat(field(j, "k-lattice"), "stratum.k-lattice");
    s.saturation_lat = parse_imat(field(j, "saturation"), "stratum.saturation");
    for (const auto& d : field(j, "local-group"))
        s.local_group.invariant_factors.push_back(parse_int(d, "stratum.local-group"));
    s.torus_rank = parse_size(field(j, "torus-rank"), "stratum.torus-rank");
    return s;
}

inline OrbifoldDescriptor descriptor_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "descriptor");
    OrbifoldDescriptor d;
    d.base = complex_from_json(field(j, "complex"));
    d.char_fn = charfn_from_json(field(j, "charfn"));
    d.bundle = parse_bundle(field(j, "bundle"));
    d.fixed_points = parse_int(field(j, "fixed-points"), "fixed-points");
    for (const auto& js : field(j, "strata")) d.strata.push_back(stratum_from_json(js));
    const Json& sm = field(j, "smooth");
    if (!sm.is_boolean()) throw SchemaError("smooth: expected a boolean");
    d.smooth = sm.get<bool>();
    std::string fam = str(field(j, "family"), "family");
    if (fam == "ocp")
        d.family = {FamilyKind::OCP, 0};
    else if (fam == "eye-quotient")
        d.family = {FamilyKind::EyeQuotient, parse_int(field(j, "family-order"), "family-order")};
    else if (fam == "disc-model")
        d.family = {FamilyKind::DiscModel, 0};
    else if (fam == "hirzebruch")
        d.family = {FamilyKind::Hirzebruch, 0};
    else if (fam == "generic")
        d.family = {FamilyKind::Generic, 0};
    else
        throw SchemaError("family: unknown tag " + fam);
    return d;
}

inline RelationStatement relation_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "relation");
    RelationStatement r;
    r.group_rank = parse_size(field(j, "group-rank"), "relation.group-rank");
    r.note = str(field(j, "note"), "relation.note");
    for (const auto& jt : field(j, "terms")) {
        RelationTerm t;
        long long c = parse_ll(field(jt, "coefficient"), "term.coefficient");
        t.coefficient = static_cast<int>(c);
        t.index = parse_size(field(jt, "index"), "term.index");
        t.hash = str(field(jt, "hash"), "term.hash");
        r.terms.push_back(std::move(t));
    }
    return r;
}

inline CobordismCertificate certificate_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "certificate");
    CobordismCertificate c;
    c.marked = marked_from_json(field(j, "marked"));
    c.rs = rsfn_from_json(field(j, "rscharfn"));
    c.bundle = parse_bundle(field(j, "bundle"));
    for (const auto& jd : field(j, "boundary")) c.boundary_pieces.push_back(descriptor_from_json(jd));
    c.relation = relation_from_json(field(j, "relation"));
    c.provenance = str(field(j, "provenance"), "provenance");
    if (j.contains("lens-boundary")) {
        for (const auto& jl : j["lens-boundary"]) {
            LensPiece lp;
            lp.facet = str(field(jl, "facet"), "lens.facet");
            lp.lens.p = parse_int(field(jl, "p"), "lens.p");
            lp.lens.q = parse_int(field(jl, "q"), "lens.q");
            c.lens_boundary.push_back(std::move(lp));
        }
    }
    return c;
}

struct Fan4 {
    IntVector v1, v2, v3, v4;
};

inline Fan4 fan4_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "fan4");
    const Json& vs = field(j, "vectors");
    if (!vs.is_array() || vs.size() != 4) throw SchemaError("fan4: expected exactly 4 vectors");
    Fan4 f;
    f.v1 = parse_ivec(vs[0], "fan4.vectors");
    f.v2 = parse_ivec(vs[1], "fan4.vectors");
    f.v3 = parse_ivec(vs[2], "fan4.vectors");
    f.v4 = parse_ivec(vs[3], "fan4.vectors");
    return f;
}

struct IntervalData {
    IntVector u, v;
};

inline IntervalData interval_from_json(const Json& j) {
    using namespace jsdetail;
    expect_kind(j, "interval");
    return {parse_ivec(field(j, "u"), "interval.u"), parse_ivec(field(j, "v"), "interval.v")};
}

// ---------------- file level ----------------

inline Json load_root(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("root must be an object");
    auto it = j.find(kSchemaKey);
    if (it == j.end()) throw SchemaError("missing " + kSchemaKey);
    if (!it->is_string() || it->get<std::string>() != kSchemaVersion)
        throw SchemaError("unsupported schema version");
    return j;
}

inline std::string root_kind(const Json& j) {
    return jsdetail::str(jsdetail::field(j, "kind"), "kind");
}

} // namespace torocob

#endif
