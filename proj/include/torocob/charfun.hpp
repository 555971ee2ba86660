#ifndef TOROCOB_CHARFUN_HPP
#define TOROCOB_CHARFUN_HPP

// Characteristic functions on a corners complex, their validity reports and
// the induced face strata (lattices K(F), saturations, local groups G_F).

#include <map>
#include <string>
#include <vector>

#include "corners.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace torocob {

// Facet -> Z^n assignment. Zero vectors are rejected at construction; an
// assignment with a zero vector is meaningless as characteristic data.
struct CharFunction {
    std::size_t n = 0;
    std::map<std::string, IntVector> assignment;

    CharFunction() = default;
    CharFunction(std::size_t rank_n, std::map<std::string, IntVector> assign)
        : n(rank_n), assignment(std::move(assign)) {
        for (const auto& [f, v] : assignment) {
            if (v.size() != n)
                throw DimensionMismatch("CharFunction: vector for " + f + " has wrong dimension");
            if (is_zero_vector(v)) throw ZeroVectorError("CharFunction: zero vector for facet " + f);
        }
    }

    const IntVector* find(const std::string& facet) const {
        auto it = assignment.find(facet);
        return it == assignment.end() ? nullptr : &it->second;
    }

    bool operator==(const CharFunction& o) const { return n == o.n && assignment == o.assignment; }
};

struct FaceStratum {
    std::string face_id;
    IntMatrix k_lattice;      // canonical (HNF) generators of K(F)
    IntMatrix saturation_lat; // canonical generators of K~(F)
    AbelianGroup local_group; // K~(F)/K(F)
    std::size_t torus_rank = 0;
};

namespace detail {

// Vectors a face's facets carry, in facet-id order. Null if any facet of the
// face has no assignment (reported as a coverage violation by the callers).
inline std::optional<IntMatrix> face_vectors(const CornersComplex& c, const CharFunction& f,
                                             const FaceRecord& face) {
    IntMatrix m(f.n);
    for (const auto& fid : face.facet_set) {
        const IntVector* v = f.find(fid);
        if (!v) return std::nullopt;
        m.rows.push_back(*v);
    }
    (void)c;
    return m;
}

inline ValidityReport coverage_report(const CornersComplex& c, const CharFunction& f) {
    ValidityReport rep;
    std::set<std::string> facet_ids(c.facets.begin(), c.facets.end());
    for (const auto& fid : c.facets)
        if (!f.find(fid)) rep.add("missing-assignment", fid, "facet has no characteristic vector");
    for (const auto& [fid, v] : f.assignment)
        if (!facet_ids.count(fid)) rep.add("unknown-assignment", fid, "assigned id is not a facet");
    return rep;
}

} // namespace detail

// Valid iff at every supplied face the assigned vectors are linearly
// independent (rank equals the face's codimension).
inline ValidityReport validate_r_characteristic(const CornersComplex& c, const CharFunction& f) {
    if (f.n != c.dim) throw DimensionMismatch("validate_r_characteristic: f.n != c.dim");
    ValidityReport rep = detail::coverage_report(c, f);
    for (const auto& face : c.faces) {
        auto m = detail::face_vectors(c, f, face);
        if (!m) continue;
        if (rank(*m) != face.codim)
            rep.add("dependent-vectors", face.id, "facet vectors of this face are linearly dependent");
    }
    return rep;
}

// Strictly stronger: every face's vectors must extend to a basis of Z^n.
inline ValidityReport validate_characteristic(const CornersComplex& c, const CharFunction& f) {
    if (f.n != c.dim) throw DimensionMismatch("validate_characteristic: f.n != c.dim");
    ValidityReport rep = detail::coverage_report(c, f);
    for (const auto& face : c.faces) {
        auto m = detail::face_vectors(c, f, face);
        if (!m) continue;
        if (!is_basis_extendable(*m))
            rep.add("not-basis-extendable", face.id,
                    "facet vectors of this face are not part of a basis of Z^n");
    }
    return rep;
}

inline FaceStratum face_stratum(const CornersComplex& c, const CharFunction& f,
                                const std::string& face_id) {
    const FaceRecord* face = c.find_face(face_id);
    if (!face) throw UnknownFaceError("face_stratum: unknown face " + face_id);
    auto m = detail::face_vectors(c, f, *face);
    if (!m) throw UnknownFaceError("face_stratum: face " + face_id + " has unassigned facets");
    FaceStratum s;
    s.face_id = face_id;
    s.k_lattice = hermite_normal_form(*m);
    s.saturation_lat = saturation(*m);
    s.local_group = quotient_invariants(s.k_lattice, s.saturation_lat);
    s.torus_rank = rank(s.k_lattice);
    return s;
}

struct StrataResult {
    std::vector<FaceStratum> strata; // ordered by (codim, id)
    bool smooth = true;              // all local groups trivial
};

inline StrataResult singular_strata(const CornersComplex& c, const CharFunction& f) {
    StrataResult out;
    CornersComplex cc = c.canonical();
    for (const auto& face : cc.faces) {
        FaceStratum s = face_stratum(c, f, face.id);
        if (!s.local_group.trivial()) out.smooth = false;
        out.strata.push_back(std::move(s));
    }
    return out;
}

} // namespace torocob

#endif
