#ifndef TOROCOB_JSON_CORE_HPP
#define TOROCOB_JSON_CORE_HPP

// Canonical JSON building blocks. Keys are sorted (nlohmann's default
// object), every integer is a decimal string so arbitrary precision survives
// any JSON tool, and there is no floating point anywhere. canonical_dump is
// byte-stable: serialize(parse(serialize(x))) == serialize(x).

#include <cstdint>
#include <json.hpp>
#include <string>

#include "charfun.hpp"
#include "corners.hpp"
#include "families.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace torocob {

using Json = nlohmann::json;

inline const std::string kSchemaKey = "torocob-schema";
inline const std::string kSchemaVersion = "1";

inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline Json int_to_json(const Int& v) { return v.get_str(); }
inline Json int_to_json(long long v) { return std::to_string(v); }
inline Json int_to_json(std::size_t v) { return std::to_string(v); }

inline Json ivec_to_json(const IntVector& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline Json imat_to_json(const IntMatrix& m) {
    Json j;
    j["cols"] = int_to_json(m.cols);
    Json rows = Json::array();
    for (const auto& r : m.rows) rows.push_back(ivec_to_json(r));
    j["rows"] = rows;
    return j;
}

inline Json complex_to_json(const CornersComplex& c0) {
    CornersComplex c = c0.canonical();
    Json j;
    j["kind"] = "complex";
    j["dim"] = int_to_json(c.dim);
    Json facets = Json::array();
    for (const auto& f : c.facets) facets.push_back(f);
    j["facets"] = facets;
    Json faces = Json::array();
    for (const auto& face : c.faces) {
        Json jf;
        jf["id"] = face.id;
        jf["codim"] = int_to_json(face.codim);
        Json fs = Json::array();
        for (const auto& f : face.facet_set) fs.push_back(f);
        jf["facets"] = fs;
        jf["tag"] = int_to_json(face.component_tag);
        faces.push_back(jf);
    }
    j["faces"] = faces;
    if (c.metadata) {
        Json md;
        md["genus"] = int_to_json(c.metadata->genus);
        Json cyc = Json::array();
        for (long long l : c.metadata->boundary_cycles) cyc.push_back(int_to_json(l));
        md["boundary-cycles"] = cyc;
        j["metadata"] = md;
    }
    return j;
}

inline Json charfn_to_json(const CharFunction& f) {
    Json j;
    j["n"] = int_to_json(f.n);
    Json a = Json::object();
    for (const auto& [fid, v] : f.assignment) a[fid] = ivec_to_json(v);
    j["assignment"] = a;
    return j;
}

inline Json group_to_json(const AbelianGroup& g) {
    Json a = Json::array();
    for (const Int& d : g.invariant_factors) a.push_back(int_to_json(d));
    return a;
}

inline Json stratum_to_json(const FaceStratum& s) {
    Json j;
    j["face"] = s.face_id;
    j["k-lattice"] = imat_to_json(s.k_lattice);
    j["saturation"] = imat_to_json(s.saturation_lat);
    j["local-group"] = group_to_json(s.local_group);
    j["torus-rank"] = int_to_json(s.torus_rank);
    return j;
}

inline Json descriptor_to_json(const OrbifoldDescriptor& d) {
    Json j;
    j["kind"] = "descriptor";
    j["complex"] = complex_to_json(d.base);
    j["charfn"] = charfn_to_json(d.char_fn);
    j["bundle"] = to_string(d.bundle);
    j["fixed-points"] = int_to_json(d.fixed_points);
    Json strata = Json::array();
    for (const auto& s : d.strata) strata.push_back(stratum_to_json(s));
    j["strata"] = strata;
    j["smooth"] = d.smooth;
    j["family"] = to_string(d.family.kind);
    if (d.family.kind == FamilyKind::EyeQuotient) j["family-order"] = int_to_json(d.family.order);
    return j;
}

// Content hash of the canonical bytes; relation terms reference boundary
// descriptors through it.
inline std::string descriptor_hash(const OrbifoldDescriptor& d) {
    return fnv1a64_hex(canonical_dump(descriptor_to_json(d)));
}

inline Json report_to_json(const ValidityReport& rep) {
    Json j;
    j["kind"] = "report";
    j["valid"] = rep.valid();
    Json v = Json::array();
    for (const auto& viol : rep.violations) {
        Json jv;
        jv["code"] = viol.code;
        jv["subject"] = viol.subject;
        jv["detail"] = viol.detail;
        v.push_back(jv);
    }
    j["violations"] = v;
    return j;
}

} // namespace torocob

#endif
