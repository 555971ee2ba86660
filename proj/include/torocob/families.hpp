#ifndef TOROCOB_FAMILIES_HPP
#define TOROCOB_FAMILIES_HPP

// Orbifold descriptors over a corners complex and the named families:
// orbifold complex projective spaces (simplex bases), eye-shape quotients,
// disc models, the lens-space normal form of interval data, orbifold
// Hirzebruch boundedness, and 2D connected-sum (de)composition.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charfun.hpp"
#include "corners.hpp"
#include "lattice.hpp"

namespace torocob {

enum class BundleFlag { Trivial, Abstract };

inline std::string to_string(BundleFlag b) {
    return b == BundleFlag::Trivial ? "trivial" : "abstract";
}

enum class FamilyKind { OCP, EyeQuotient, DiscModel, Hirzebruch, Generic };

struct FamilyTag {
    FamilyKind kind = FamilyKind::Generic;
    Int order = 0; // eye quotients: order of the covering kernel, 1 = S^4

    bool operator==(const FamilyTag& o) const { return kind == o.kind && order == o.order; }
};

inline std::string to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::OCP: return "ocp";
    case FamilyKind::EyeQuotient: return "eye-quotient";
    case FamilyKind::DiscModel: return "disc-model";
    case FamilyKind::Hirzebruch: return "hirzebruch";
    default: return "generic";
    }
}

struct OrbifoldDescriptor {
    CornersComplex base;
    CharFunction char_fn;
    BundleFlag bundle = BundleFlag::Trivial;
    Int fixed_points = 0;
    std::vector<FaceStratum> strata;
    bool smooth = true;
    FamilyTag family;
};

// Combinatorial n-simplex: n+1 facets and n+1 vertices realizing all the
// distinct n-subsets of the facets.
inline bool is_simplex(const CornersComplex& c) {
    if (c.facets.size() != c.dim + 1) return false;
    std::set<std::set<std::string>> vertex_sets;
    std::size_t vcount = 0;
    for (const auto& f : c.faces)
        if (f.codim == c.dim) {
            ++vcount;
            vertex_sets.insert(f.facet_set);
        }
    return vcount == c.dim + 1 && vertex_sets.size() == c.dim + 1;
}

namespace detail {

inline bool is_eye_shape(const CornersComplex& c) {
    if (c.dim != 2 || c.facets.size() != 2 || c.vertex_count() != 2) return false;
    std::set<std::string> all(c.facets.begin(), c.facets.end());
    for (const auto& f : c.faces)
        if (f.codim == 2 && f.facet_set != all) return false;
    if (c.metadata)
        return c.metadata->genus == 0 && c.metadata->boundary_cycles == std::vector<long long>{2};
    return true;
}

inline bool is_disc(const CornersComplex& c) {
    if (c.dim != 2 || c.facets.size() != 1 || c.vertex_count() != 0) return false;
    if (c.metadata)
        return c.metadata->genus == 0 && c.metadata->boundary_cycles == std::vector<long long>{0};
    return true;
}

// One boundary component of a 2D complex: its facets and its cycle length
// (0 for a vertex-free circle).
struct BoundaryComponent {
    std::vector<std::string> facet_ids;
    std::vector<const FaceRecord*> vertex_records;
    long long cycle_length = 0;
};

inline std::vector<BoundaryComponent> boundary_components(const CornersComplex& c) {
    if (c.dim != 2) throw DimensionMismatch("boundary_components: base must be 2-dimensional");
    std::map<std::string, std::vector<const FaceRecord*>> touching; // facet -> vertices on it
    for (const auto& f : c.faces)
        if (f.codim == 2)
            for (const auto& fid : f.facet_set) touching[fid].push_back(&f);

    std::set<std::string> unseen(c.facets.begin(), c.facets.end());
    std::vector<BoundaryComponent> comps;
    while (!unseen.empty()) {
        std::string start = *unseen.begin();
        BoundaryComponent comp;
        // breadth-first over the facet/vertex incidence graph
        std::vector<std::string> queue{start};
        std::set<const FaceRecord*> comp_vertices;
        unseen.erase(start);
        while (!queue.empty()) {
            std::string fid = queue.back();
            queue.pop_back();
            comp.facet_ids.push_back(fid);
            for (const FaceRecord* v : touching[fid]) {
                if (!comp_vertices.insert(v).second) continue;
                for (const auto& other : v->facet_set)
                    if (unseen.erase(other)) queue.push_back(other);
            }
        }
        std::sort(comp.facet_ids.begin(), comp.facet_ids.end());
        comp.vertex_records.assign(comp_vertices.begin(), comp_vertices.end());
        std::sort(comp.vertex_records.begin(), comp.vertex_records.end(),
                  [](const FaceRecord* a, const FaceRecord* b) { return a->id < b->id; });
        if (comp.facet_ids.size() == 1 && comp.vertex_records.empty()) {
            comp.cycle_length = 0;
        } else {
            // closed boundary curve: as many vertices as facets, each facet on
            // exactly two vertex incidences
            if (comp.vertex_records.size() != comp.facet_ids.size())
                throw DomainError("boundary component is not a closed curve near facet " + start);
            for (const auto& fid : comp.facet_ids)
                if (touching[fid].size() != 2)
                    throw DomainError("facet " + fid + " does not lie on exactly two vertices");
            comp.cycle_length = static_cast<long long>(comp.facet_ids.size());
        }
        comps.push_back(std::move(comp));
    }
    // deterministic: order components by least facet id
    std::sort(comps.begin(), comps.end(), [](const BoundaryComponent& a, const BoundaryComponent& b) {
        return a.facet_ids.front() < b.facet_ids.front();
    });
    return comps;
}

inline bool is_single_square(const CornersComplex& c) {
    if (c.dim != 2 || c.facets.size() != 4 || c.vertex_count() != 4) return false;
    try {
        auto comps = boundary_components(c);
        if (comps.size() != 1 || comps.front().cycle_length != 4) return false;
    } catch (const DomainError&) {
        return false;
    }
    if (c.metadata)
        return c.metadata->genus == 0 && c.metadata->boundary_cycles == std::vector<long long>{4};
    return true;
}

inline FamilyTag derive_family(const CornersComplex& c, const CharFunction& f) {
    if (is_simplex(c)) return {FamilyKind::OCP, 0};
    if (c.dim == 2) {
        if (is_eye_shape(c)) {
            IntMatrix m(2);
            for (const auto& fid : c.facets) m.rows.push_back(*f.find(fid));
            return {FamilyKind::EyeQuotient, abs_det(m)};
        }
        if (is_disc(c)) return {FamilyKind::DiscModel, 0};
        if (is_single_square(c)) return {FamilyKind::Hirzebruch, 0};
    }
    return {FamilyKind::Generic, 0};
}

} // namespace detail

// Combinatorial stand-in for the basic construction over (c, f): derived
// strata, fixed points, smoothness and family tag.
inline OrbifoldDescriptor make_orbifold(const CornersComplex& c, const CharFunction& f,
                                        BundleFlag bundle) {
    ValidityReport rep = validate_nice(c);
    rep.merge(validate_r_characteristic(c, f));
    if (!rep.valid()) throw InvalidCharFunctionError("make_orbifold", rep);
    OrbifoldDescriptor d;
    d.base = c;
    d.char_fn = f;
    d.bundle = bundle;
    d.fixed_points = Int(static_cast<long>(c.vertex_count()));
    StrataResult sr = singular_strata(c, f);
    d.strata = std::move(sr.strata);
    d.smooth = sr.smooth;
    d.family = detail::derive_family(c, f);
    return d;
}

struct OCPRecord {
    std::vector<std::pair<std::string, IntVector>> defining_vectors; // facet id order
    std::vector<std::pair<std::string, AbelianGroup>> vertex_groups; // vertex id order
};

inline OCPRecord classify_simplex_base(const OrbifoldDescriptor& d) {
    if (!is_simplex(d.base)) throw NotASimplexError("classify_simplex_base: base is not a simplex");
    OCPRecord rec;
    std::vector<std::string> facets = d.base.facets;
    std::sort(facets.begin(), facets.end());
    for (const auto& fid : facets) rec.defining_vectors.push_back({fid, *d.char_fn.find(fid)});
    CornersComplex cc = d.base.canonical();
    for (const auto& face : cc.faces)
        if (face.codim == cc.dim)
            rec.vertex_groups.push_back({face.id, face_stratum(d.base, d.char_fn, face.id).local_group});
    return rec;
}

struct EyeQuotientResult {
    Int order;                 // order of the covering kernel; 1 means S^4
    OrbifoldDescriptor descriptor;
};

inline EyeQuotientResult eyeshape_quotient(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (a * d - b * c == 0)
        throw DependentVectorsError("eyeshape_quotient: the two vectors are dependent");
    CornersComplex eye = build_surface_with_corners(0, {2});
    CharFunction f(2, {{eye.facets[0], {a, b}}, {eye.facets[1], {c, d}}});
    OrbifoldDescriptor desc = make_orbifold(eye, f, BundleFlag::Trivial);
    return {desc.family.order, std::move(desc)};
}

struct DiscModelResult {
    OrbifoldDescriptor descriptor;
    IntVector completion; // canonical (c,d) completing (a,b) to a Z^2 basis
};

namespace detail {

// Canonical basis completion of a primitive (a,b): smallest nonnegative
// first entry, determinant +1 preferred when that first entry admits both
// signs, then smallest nonnegative second entry.
inline IntVector canonical_completion(const Int& a, const Int& b) {
    for (Int c = 0;; ++c) {
        for (int s : {1, -1}) {
            // solve a*d - b*c = s
            if (a == 0) {
                if (-b * c == s) return {c, 0};
                continue;
            }
            Int num = Int(s) + b * c;
            if (num % a == 0) return {c, num / a};
        }
        if (c > abs(a) + abs(b) + 2) throw InternalError("canonical_completion: no completion found");
    }
}

} // namespace detail

inline DiscModelResult disc_model(const Int& a, const Int& b) {
    IntVector v{a, b};
    if (is_zero_vector(v) || !is_primitive(v))
        throw NotPrimitiveError("disc_model: (a,b) must be primitive");
    CornersComplex disc = build_surface_with_corners(0, {0});
    CharFunction f(2, {{disc.facets[0], v}});
    OrbifoldDescriptor desc = make_orbifold(disc, f, BundleFlag::Trivial);
    return {std::move(desc), detail::canonical_completion(a, b)};
}

struct LensDescriptor {
    Int p; // positive
    Int q; // 0 <= q < p, coprime to p when p > 1

    bool operator==(const LensDescriptor& o) const { return p == o.p && q == o.q; }
};

// Normal form of an interval with independent vectors u (collapsed at one
// end) and v (at the other): apply a GL_2(Z) map sending u to (1,0) and v to
// (-q', p) with p = |det(u,v)|, then reduce q = q' mod p.
inline LensDescriptor lens_from_interval(const IntVector& u, const IntVector& v) {
    if (u.size() != 2 || v.size() != 2) throw DimensionMismatch("lens_from_interval: need dim 2");
    if (is_zero_vector(u) || !is_primitive(u))
        throw NotPrimitiveError("lens_from_interval: u must be primitive");
    Int det = u[0] * v[1] - u[1] * v[0];
    if (det == 0) throw DependentVectorsError("lens_from_interval: u, v dependent");
    if (is_zero_vector(v) || !is_primitive(v))
        throw NotPrimitiveError("lens_from_interval: v must be primitive for the L(p,q) normal form");
    // Bezout row (x, y): x*u0 + y*u1 = 1
    Int g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), u[0].get_mpz_t(), u[1].get_mpz_t());
    // delta = [[x, y], [-u1, u0]] maps u to (1,0); flip the second row when
    // det(u,v) < 0 so that (delta v)_2 = |det| = p
    Int p = abs(det);
    Int second_row_0 = -u[1], second_row_1 = u[0];
    if (det < 0) {
        second_row_0 = u[1];
        second_row_1 = -u[0];
    }
    Int first = x * v[0] + y * v[1];      // = -q'
    Int check = second_row_0 * v[0] + second_row_1 * v[1];
    if (check != p) throw InternalError("lens_from_interval: normal form arithmetic failed");
    Int qp = -first; // q'
    Int q;
    mpz_fdiv_r(q.get_mpz_t(), qp.get_mpz_t(), p.get_mpz_t());
    LensDescriptor lens{p, q};
    if (lens.p > 1) {
        Int gg;
        mpz_gcd(gg.get_mpz_t(), lens.p.get_mpz_t(), lens.q.get_mpz_t());
        if (gg != 1) throw InternalError("lens_from_interval: q not coprime to p");
    }
    return lens;
}

enum class HirzebruchVerdict { Bounds, Unknown };

struct HirzebruchResult {
    HirzebruchVerdict verdict = HirzebruchVerdict::Unknown;
    std::vector<std::string> conditions; // which opposite pair matched
    bool smooth = false;                 // all consecutive pairs unimodular
    std::string route;                   // what the verdict rests on
};

// Sufficient condition only: a fan with v1 = +-v3 or v2 = +-v4 bounds; no
// opposite-pair match says nothing, hence Unknown rather than DoesNotBound.
inline HirzebruchResult hirzebruch_bounds(const IntVector& v1, const IntVector& v2,
                                          const IntVector& v3, const IntVector& v4) {
    const IntVector* vs[4] = {&v1, &v2, &v3, &v4};
    for (const IntVector* v : vs) {
        if (v->size() != 2) throw DimensionMismatch("hirzebruch_bounds: vectors must have dim 2");
        if (is_zero_vector(*v)) throw FanConditionError("hirzebruch_bounds: zero ray");
    }
    bool smooth = true;
    for (int i = 0; i < 4; ++i) {
        const IntVector& a = *vs[i];
        const IntVector& b = *vs[(i + 1) % 4];
        Int det = a[0] * b[1] - a[1] * b[0];
        if (det == 0)
            throw FanConditionError("hirzebruch_bounds: consecutive rays " + std::to_string(i + 1) +
                                    "," + std::to_string((i + 1) % 4 + 1) + " are dependent");
        if (abs(det) != 1) smooth = false;
    }
    auto opposite = [](const IntVector& a, const IntVector& b) {
        return (a[0] == b[0] && a[1] == b[1]) || (a[0] == -b[0] && a[1] == -b[1]);
    };
    HirzebruchResult res;
    res.smooth = smooth;
    if (opposite(v1, v3)) res.conditions.push_back("v1=+-v3");
    if (opposite(v2, v4)) res.conditions.push_back("v2=+-v4");
    if (!res.conditions.empty()) {
        res.verdict = HirzebruchVerdict::Bounds;
        res.route = smooth ? "bounds an orientable 5-dimensional T^2-manifold"
                           : "bounds an orientable 5-dimensional T^2-orbifold";
    } else {
        res.route = "the sufficient condition does not apply";
    }
    return res;
}

enum class SummandKind { QuasitoricPiece, EyeQuotient, DiscModel, TrivialBundlePiece };

inline std::string to_string(SummandKind k) {
    switch (k) {
    case SummandKind::QuasitoricPiece: return "quasitoric-piece";
    case SummandKind::EyeQuotient: return "eye-quotient";
    case SummandKind::DiscModel: return "disc-model";
    default: return "trivial-bundle-piece";
    }
}

struct ConnectedSumDecomposition {
    struct Summand {
        SummandKind kind;
        OrbifoldDescriptor descriptor;
    };
    std::vector<Summand> summands;
};

// 2D decomposition along the boundary components: one summand per component
// plus one trivial-bundle piece T^2 x S carrying the genus.
inline ConnectedSumDecomposition decompose_2d(const OrbifoldDescriptor& d) {
    if (d.base.dim != 2) throw DimensionMismatch("decompose_2d: base must be 2-dimensional");
    if (d.bundle != BundleFlag::Trivial)
        throw BundleFlagError("decompose_2d: requires a trivial bundle flag");
    if (d.base.facets.empty()) throw ClosedBaseError("decompose_2d: base has empty boundary");
    auto comps = detail::boundary_components(d.base);
    long long genus = d.base.metadata ? d.base.metadata->genus : 0;

    ConnectedSumDecomposition out;
    for (const auto& comp : comps) {
        CornersComplex piece;
        piece.dim = 2;
        piece.facets = comp.facet_ids;
        for (const auto& fid : comp.facet_ids) piece.faces.push_back({fid, 1, {fid}, 0});
        for (const FaceRecord* v : comp.vertex_records) piece.faces.push_back(*v);
        piece.metadata = SurfaceMetadata{0, {comp.cycle_length}};
        std::map<std::string, IntVector> assign;
        for (const auto& fid : comp.facet_ids) assign[fid] = *d.char_fn.find(fid);
        OrbifoldDescriptor desc = make_orbifold(piece, CharFunction(2, assign), BundleFlag::Trivial);
        SummandKind kind = comp.cycle_length == 0  ? SummandKind::DiscModel
                           : comp.cycle_length == 2 ? SummandKind::EyeQuotient
                                                    : SummandKind::QuasitoricPiece;
        out.summands.push_back({kind, std::move(desc)});
    }
    CornersComplex closed;
    closed.dim = 2;
    closed.metadata = SurfaceMetadata{genus, {}};
    OrbifoldDescriptor trivial_piece = make_orbifold(closed, CharFunction(2, {}), BundleFlag::Trivial);
    out.summands.push_back({SummandKind::TrivialBundlePiece, std::move(trivial_piece)});
    return out;
}

// Connected sum along principal orbits: genus adds, boundary cycles
// concatenate, characteristic data is the disjoint union. Facet ids are
// prefixed to keep the two sides apart.
inline OrbifoldDescriptor connect_sum_2d(const OrbifoldDescriptor& d1, const OrbifoldDescriptor& d2) {
    if (d1.base.dim != 2 || d2.base.dim != 2)
        throw DimensionMismatch("connect_sum_2d: both bases must be 2-dimensional");
    if (d1.bundle != BundleFlag::Trivial || d2.bundle != BundleFlag::Trivial)
        throw BundleFlagError("connect_sum_2d: requires trivial bundle flags");
    CornersComplex sum;
    sum.dim = 2;
    long long genus = 0;
    std::vector<long long> cycles;
    std::map<std::string, IntVector> assign;
    const OrbifoldDescriptor* parts[2] = {&d1, &d2};
    for (int i = 0; i < 2; ++i) {
        std::string pre = std::to_string(i + 1) + ":";
        const CornersComplex& b = parts[i]->base;
        for (const auto& f : b.facets) sum.facets.push_back(pre + f);
        for (const auto& face : b.faces) {
            FaceRecord r = face;
            r.id = pre + face.id;
            std::set<std::string> fs;
            for (const auto& f : face.facet_set) fs.insert(pre + f);
            r.facet_set = std::move(fs);
            sum.faces.push_back(std::move(r));
        }
        genus += b.metadata ? b.metadata->genus : 0;
        if (!b.facets.empty())
            for (const auto& comp : detail::boundary_components(b)) cycles.push_back(comp.cycle_length);
        for (const auto& [fid, v] : parts[i]->char_fn.assignment) assign[pre + fid] = v;
    }
    sum.metadata = SurfaceMetadata{genus, cycles};
    return make_orbifold(sum, CharFunction(2, assign), BundleFlag::Trivial);
}

} // namespace torocob

#endif
