#ifndef TOROCOB_COBORDISM_HPP
#define TOROCOB_COBORDISM_HPP

// rs-characteristic functions on marked manifolds, the primitive-vector
// search used to label the bottom facet, boundary extraction, the cobordism
// pipeline (product with an interval, bottom vertex cut, boundary pieces)
// and machine-checkable certificates with formal relations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charfun.hpp"
#include "corners.hpp"
#include "families.hpp"
#include "json_core.hpp"
#include "lattice.hpp"

namespace torocob {

// Remaining-facet -> Z^n assignment on a marked (n+1)-manifold.
struct RSCharFunction {
    std::size_t n = 0;
    std::map<std::string, IntVector> assignment;

    RSCharFunction() = default;
    RSCharFunction(std::size_t rank_n, std::map<std::string, IntVector> assign)
        : n(rank_n), assignment(std::move(assign)) {
        for (const auto& [f, v] : assignment) {
            if (v.size() != n)
                throw DimensionMismatch("RSCharFunction: vector for " + f + " has wrong dimension");
            if (is_zero_vector(v)) throw ZeroVectorError("RSCharFunction: zero vector for facet " + f);
        }
    }

    const IntVector* find(const std::string& facet) const {
        auto it = assignment.find(facet);
        return it == assignment.end() ? nullptr : &it->second;
    }

    bool operator==(const RSCharFunction& o) const { return n == o.n && assignment == o.assignment; }
};

// Valid iff at every face of the base the remaining-facet members carry
// independent vectors; marked facets impose nothing.
inline ValidityReport validate_rs_characteristic(const MarkedManifold& m, const RSCharFunction& rs) {
    if (rs.n + 1 != m.base.dim)
        throw DimensionMismatch("validate_rs_characteristic: rs.n must equal base dim - 1");
    ValidityReport rep;
    std::set<std::string> remaining(m.remaining.begin(), m.remaining.end());
    for (const auto& f : m.remaining)
        if (!rs.find(f)) rep.add("missing-assignment", f, "remaining facet has no rs vector");
    for (const auto& [fid, v] : rs.assignment)
        if (!remaining.count(fid))
            rep.add("unknown-assignment", fid, "assigned id is not a remaining facet");
    for (const auto& face : m.base.faces) {
        IntMatrix vecs(rs.n);
        bool complete = true;
        for (const auto& fid : face.facet_set) {
            if (!remaining.count(fid)) continue;
            const IntVector* v = rs.find(fid);
            if (!v) {
                complete = false;
                break;
            }
            vecs.rows.push_back(*v);
        }
        if (!complete) continue;
        if (rank(vecs) != vecs.nrows())
            rep.add("dependent-vectors", face.id,
                    "rs vectors of the remaining facets of this face are dependent");
    }
    return rep;
}

// Calls pred on candidate primitive vectors in the canonical order:
// sup-norm shells N = 1, 2, ...; inside a shell coordinates run with the
// first coordinate innermost; vectors whose first nonzero entry is negative
// are skipped. Returns the first candidate pred accepts.
template <typename Pred>
inline IntVector first_primitive_vector(std::size_t n, Pred&& pred) {
    if (n == 0) throw DimensionMismatch("first_primitive_vector: n must be positive");
    for (long shell = 1;; ++shell) {
        std::vector<long> v(n, -shell);
        while (true) {
            long sup = 0;
            for (long x : v) sup = std::max(sup, std::labs(x));
            if (sup == shell) {
                long first_nonzero = 0;
                for (long x : v)
                    if (x != 0) {
                        first_nonzero = x;
                        break;
                    }
                if (first_nonzero > 0) {
                    IntVector cand;
                    cand.reserve(n);
                    for (long x : v) cand.emplace_back(x);
                    if (is_primitive(cand) && pred(cand)) return cand;
                }
            }
            // odometer, first coordinate fastest
            std::size_t i = 0;
            while (i < n && v[i] == shell) {
                v[i] = -shell;
                ++i;
            }
            if (i == n) break;
            ++v[i];
        }
        if (shell > 1000000) throw InternalError("first_primitive_vector: search did not terminate");
    }
}

// First canonical primitive vector lying in none of the given proper
// subspaces (each span given by independent generator rows).
inline IntVector first_primitive_avoiding(std::size_t n, const std::vector<IntMatrix>& spans) {
    for (const auto& s : spans) {
        if (s.cols != n) throw DimensionMismatch("first_primitive_avoiding: span dim mismatch");
        if (s.nrows() >= n) throw RankError("first_primitive_avoiding: span is not proper");
        if (rank(s) != s.nrows()) throw RankError("first_primitive_avoiding: span rows dependent");
    }
    return first_primitive_vector(n, [&](const IntVector& cand) {
        for (const auto& s : spans) {
            IntMatrix m = s;
            m.rows.push_back(cand);
            if (rank(m) != s.nrows() + 1) return false;
        }
        return true;
    });
}

// The primitive-vector engine behind the bottom-facet label: for every
// constraint set I (n ids with independent vectors) and every l in I, the
// returned vector together with the vectors of I minus l has rank n.
inline IntVector find_lambda0(std::size_t n, const std::vector<std::vector<std::string>>& constraint_sets,
                              const std::map<std::string, IntVector>& vectors) {
    std::vector<IntMatrix> spans;
    for (const auto& set : constraint_sets) {
        if (set.size() != n)
            throw DomainError("find_lambda0: constraint set must have exactly n members");
        IntMatrix all(n);
        for (const auto& id : set) {
            auto it = vectors.find(id);
            if (it == vectors.end()) throw DomainError("find_lambda0: unknown id " + id);
            if (it->second.size() != n) throw DimensionMismatch("find_lambda0: vector dim mismatch");
            all.rows.push_back(it->second);
        }
        if (rank(all) != n)
            throw DomainError("find_lambda0: constraint set vectors are not independent");
        for (std::size_t drop = 0; drop < set.size(); ++drop) {
            IntMatrix span(n);
            for (std::size_t i = 0; i < set.size(); ++i)
                if (i != drop) span.rows.push_back(all.rows[i]);
            spans.push_back(std::move(span));
        }
    }
    return first_primitive_avoiding(n, spans);
}

// Facets of the marked facet are its intersections with unique remaining
// facets; the induced function assigns each such facet the rs vector of the
// remaining facet it lies in. Face ids are inherited from the ambient
// records, so restricting the top of a product reproduces the original.
inline std::pair<CornersComplex, CharFunction>
restrict_to_marked(const MarkedManifold& m, const RSCharFunction& rs, const std::string& marked_id) {
    bool known = false;
    for (const auto& f : m.marked)
        if (f == marked_id) known = true;
    if (!known) throw UnknownMarkedFacetError("restrict_to_marked: " + marked_id + " is not marked");

    std::map<std::string, std::string> facet_map; // remaining facet -> restricted facet id
    std::vector<const FaceRecord*> member_faces;
    for (const auto& g : m.base.faces) {
        if (!g.facet_set.count(marked_id)) continue;
        if (g.codim == 1) continue; // the marked facet's own record
        member_faces.push_back(&g);
        if (g.codim == 2) {
            std::string other;
            for (const auto& f : g.facet_set)
                if (f != marked_id) other = f;
            auto [it, fresh] = facet_map.insert({other, g.id});
            if (!fresh)
                throw AmbiguousRestrictionError("restrict_to_marked: facet " + other +
                                                " meets the marked facet in several components");
        }
    }

    CornersComplex piece;
    piece.dim = m.base.dim - 1;
    CharFunction out;
    std::map<std::string, IntVector> assign;
    for (const auto& [remaining, gid] : facet_map) {
        piece.facets.push_back(gid);
        const IntVector* v = rs.find(remaining);
        if (!v)
            throw UnknownMarkedFacetError("restrict_to_marked: no rs vector for facet " + remaining);
        assign[gid] = *v;
    }
    for (const FaceRecord* g : member_faces) {
        FaceRecord r;
        r.id = g->id;
        r.codim = g->codim - 1;
        r.component_tag = g->component_tag;
        for (const auto& f : g->facet_set) {
            if (f == marked_id) continue;
            auto it = facet_map.find(f);
            if (it == facet_map.end())
                throw AmbiguousRestrictionError("restrict_to_marked: face " + g->id +
                                                " lies in a facet with no intersection record");
            r.facet_set.insert(it->second);
        }
        piece.faces.push_back(std::move(r));
    }
    return {std::move(piece), CharFunction(rs.n, std::move(assign))};
}

// One orbifold descriptor per marked facet, in marked-list order.
inline std::vector<OrbifoldDescriptor> boundary(const MarkedManifold& m, const RSCharFunction& rs,
                                                BundleFlag bundle) {
    ValidityReport rep = validate_marked(m);
    rep.merge(validate_rs_characteristic(m, rs));
    if (!rep.valid()) throw InvalidCharFunctionError("boundary", rep);
    std::vector<OrbifoldDescriptor> out;
    for (const auto& mk : m.marked) {
        auto [complex, charfn] = restrict_to_marked(m, rs, mk);
        out.push_back(make_orbifold(complex, charfn, bundle));
    }
    return out;
}

struct RelationTerm {
    int coefficient = 1;     // orientation signs are out of scope; always +1
    std::size_t index = 0;   // position in the certificate's boundary list
    std::string hash;        // content hash of the referenced descriptor
};

// Formal statement "sum of the terms vanishes" in the equivariant cobordism
// group of 2n-dimensional pieces; n is recorded as group_rank.
struct RelationStatement {
    std::vector<RelationTerm> terms;
    std::size_t group_rank = 0;
    std::string note;
};

struct LensPiece {
    std::string facet;
    LensDescriptor lens;
};

struct CobordismCertificate {
    MarkedManifold marked;
    RSCharFunction rs;
    BundleFlag bundle = BundleFlag::Trivial;
    std::vector<OrbifoldDescriptor> boundary_pieces;
    RelationStatement relation;
    std::string provenance;
    std::vector<LensPiece> lens_boundary; // fixed-point-free 2D manifold inputs only
};

inline const std::string kOrientationNote =
    "terms are listed unsigned; orientation signs of the boundary pieces are not tracked";

namespace detail {

// Avoided subspaces for the bottom label: at every vertex of the base, each
// deletion of one facet vector; and the span of every proper face of
// codimension < n, which covers vertex-free facets such as circle boundary
// components.
inline std::vector<IntMatrix> bottom_label_spans(const CornersComplex& c, const CharFunction& f) {
    std::vector<IntMatrix> spans;
    const std::size_t n = c.dim;
    for (const auto& face : c.faces) {
        IntMatrix vecs(n);
        for (const auto& fid : face.facet_set) vecs.rows.push_back(*f.find(fid));
        if (face.codim == n) {
            for (std::size_t drop = 0; drop < vecs.nrows(); ++drop) {
                IntMatrix span(n);
                for (std::size_t i = 0; i < vecs.nrows(); ++i)
                    if (i != drop) span.rows.push_back(vecs.rows[i]);
                spans.push_back(std::move(span));
            }
        } else {
            spans.push_back(std::move(vecs));
        }
    }
    return spans;
}

inline RelationStatement relation_over_boundary(const std::vector<OrbifoldDescriptor>& pieces,
                                                std::size_t n) {
    RelationStatement rel;
    rel.group_rank = n;
    rel.note = kOrientationNote;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        rel.terms.push_back({1, i, descriptor_hash(pieces[i])});
    return rel;
}

} // namespace detail

// The pipeline behind the main cobordism statement: Y = c x I, cut every
// bottom vertex, keep the input vectors on the side facets and label the
// bottom with the canonical primitive vector avoiding all face spans and
// vertex deletions. The boundary is one simplex piece per vertex plus the
// input itself on top.
inline CobordismCertificate cobordism_to_projective_spaces(const CornersComplex& c,
                                                           const CharFunction& f, BundleFlag bundle) {
    ValidityReport rep = validate_nice(c);
    rep.merge(validate_r_characteristic(c, f));
    if (!rep.valid()) throw InvalidCharFunctionError("cobordism_to_projective_spaces", rep);

    const std::size_t n = c.dim;
    CornersComplex y = product_with_interval(c);
    std::vector<std::string> bottoms;
    for (const auto& g : y.faces)
        if (g.codim == y.dim && g.facet_set.count(kBottomId)) bottoms.push_back(g.id);
    MarkedManifold mm = vertex_cut_bottom(y, bottoms);

    IntVector lambda0 = first_primitive_avoiding(n, detail::bottom_label_spans(c, f));

    std::map<std::string, IntVector> assign;
    for (const auto& fid : c.facets) assign[fid + "|I"] = *f.find(fid);
    assign[kBottomId] = lambda0;
    RSCharFunction rs(n, std::move(assign));

    ValidityReport rs_rep = validate_rs_characteristic(mm, rs);
    if (!rs_rep.valid())
        throw InternalError("cobordism pipeline produced an invalid rs function: " + rs_rep.summary());

    CobordismCertificate cert;
    cert.marked = mm;
    cert.rs = rs;
    cert.bundle = bundle;
    for (const auto& mk : mm.marked) {
        if (mk == kTopId) {
            cert.boundary_pieces.push_back(make_orbifold(c, f, bundle));
        } else {
            auto [complex, charfn] = restrict_to_marked(mm, rs, mk);
            cert.boundary_pieces.push_back(make_orbifold(complex, charfn, bundle));
        }
    }
    cert.relation = detail::relation_over_boundary(cert.boundary_pieces, n);
    cert.provenance = "projective-space-cobordism";
    return cert;
}

// Fixed-point-free specialization: the boundary is the input alone and the
// relation says its class vanishes. For 2-dimensional bases with a genuine
// characteristic function the lens normal form of every boundary circle is
// attached; each such piece separately bounds.
inline CobordismCertificate null_cobordism(const CornersComplex& c, const CharFunction& f,
                                           BundleFlag bundle) {
    if (c.vertex_count() != 0)
        throw HasFixedPointsError("null_cobordism: base has vertices (fixed points)");
    CobordismCertificate cert = cobordism_to_projective_spaces(c, f, bundle);
    cert.provenance = "fixed-point-free-null-cobordism";
    if (c.dim == 2 && validate_characteristic(c, f).valid()) {
        const IntVector& lambda0 = cert.rs.assignment.at(kBottomId);
        std::vector<std::string> facets = c.facets;
        std::sort(facets.begin(), facets.end());
        for (const auto& fid : facets)
            cert.lens_boundary.push_back({fid, lens_from_interval(*f.find(fid), lambda0)});
    }
    return cert;
}

// Vertex-cut relation: VC(p), an rs function synthesized greedily (facets in
// id order, each vector the canonical primitive one avoiding the spans of
// already-assigned vectors inside each shared face), one projective-space
// piece per vertex of p, and the statement that their classes sum to zero.
inline CobordismCertificate vertex_cut_relation_certificate(
    const CornersComplex& p, const std::optional<RSCharFunction>& seed_rs = std::nullopt) {
    MarkedManifold mm = vertex_cut(p);
    if (p.dim < 2) throw DimensionMismatch("vertex_cut_relation: base dim must be at least 2");
    const std::size_t n = p.dim - 1;

    RSCharFunction rs;
    if (seed_rs) {
        rs = *seed_rs;
        ValidityReport rep = validate_rs_characteristic(mm, rs);
        if (!rep.valid()) throw InvalidCharFunctionError("vertex_cut_relation seed", rep);
    } else {
        std::vector<std::string> order = mm.remaining;
        std::sort(order.begin(), order.end());
        std::map<std::string, IntVector> assign;
        std::set<std::string> remaining(mm.remaining.begin(), mm.remaining.end());
        for (const auto& fid : order) {
            std::vector<IntMatrix> spans;
            for (const auto& face : mm.base.faces) {
                if (!face.facet_set.count(fid)) continue;
                IntMatrix span(n);
                for (const auto& other : face.facet_set) {
                    if (other == fid || !remaining.count(other)) continue;
                    auto it = assign.find(other);
                    if (it != assign.end()) span.rows.push_back(it->second);
                }
                if (!span.empty()) spans.push_back(std::move(span));
            }
            assign[fid] = first_primitive_avoiding(n, spans);
        }
        rs = RSCharFunction(n, std::move(assign));
        ValidityReport rep = validate_rs_characteristic(mm, rs);
        if (!rep.valid())
            throw InternalError("greedy rs synthesis produced an invalid function: " + rep.summary());
    }

    CobordismCertificate cert;
    cert.marked = mm;
    cert.rs = rs;
    cert.bundle = BundleFlag::Trivial;
    for (const auto& mk : mm.marked) {
        auto [complex, charfn] = restrict_to_marked(mm, rs, mk);
        cert.boundary_pieces.push_back(make_orbifold(complex, charfn, BundleFlag::Trivial));
    }
    cert.relation = detail::relation_over_boundary(cert.boundary_pieces, n);
    cert.provenance = "vertex-cut-relation";
    return cert;
}

inline RelationStatement vertex_cut_relation(const CornersComplex& p,
                                             const std::optional<RSCharFunction>& seed_rs = std::nullopt) {
    return vertex_cut_relation_certificate(p, seed_rs).relation;
}

// Re-runs every embedded validation of a certificate: niceness, marked
// invariants, rs validity, boundary agreement with the restrictions, derived
// data of each piece, and the relation bookkeeping. Invalidity is reported,
// never thrown.
inline ValidityReport verify_certificate(const CobordismCertificate& cert) {
    ValidityReport rep = validate_marked(cert.marked);
    try {
        rep.merge(validate_rs_characteristic(cert.marked, cert.rs));
    } catch (const DomainError& e) {
        rep.add("rs-dimension", "", e.what());
    }
    if (cert.boundary_pieces.size() != cert.marked.marked.size())
        rep.add("boundary-count", "",
                "boundary has " + std::to_string(cert.boundary_pieces.size()) + " pieces for " +
                    std::to_string(cert.marked.marked.size()) + " marked facets");
    const std::size_t npieces =
        std::min(cert.boundary_pieces.size(), cert.marked.marked.size());
    for (std::size_t i = 0; i < npieces; ++i) {
        const std::string& mk = cert.marked.marked[i];
        const OrbifoldDescriptor& piece = cert.boundary_pieces[i];
        try {
            auto [complex, charfn] = restrict_to_marked(cert.marked, cert.rs, mk);
            if (!same_incidence(complex, piece.base))
                rep.add("boundary-base-mismatch", mk,
                        "stored boundary base differs from the restriction");
            else if (!(charfn == piece.char_fn))
                rep.add("boundary-vectors-mismatch", mk,
                        "stored boundary vectors differ from the restriction");
        } catch (const DomainError& e) {
            rep.add("restriction-failure", mk, e.what());
        }
        if (piece.bundle != cert.bundle)
            rep.add("bundle-mismatch", mk, "boundary piece bundle flag differs from the certificate");
        try {
            OrbifoldDescriptor re = make_orbifold(piece.base, piece.char_fn, piece.bundle);
            bool strata_equal = re.strata.size() == piece.strata.size();
            for (std::size_t s = 0; strata_equal && s < re.strata.size(); ++s) {
                const FaceStratum &a = re.strata[s], &b = piece.strata[s];
                strata_equal = a.face_id == b.face_id && a.k_lattice == b.k_lattice &&
                               a.saturation_lat == b.saturation_lat &&
                               a.local_group == b.local_group && a.torus_rank == b.torus_rank;
            }
            if (!strata_equal) rep.add("strata-mismatch", mk, "stored strata differ from recomputation");
            if (re.smooth != piece.smooth || !(re.fixed_points == piece.fixed_points) ||
                !(re.family == piece.family))
                rep.add("derived-data-mismatch", mk,
                        "stored smoothness/fixed points/family differ from recomputation");
        } catch (const DomainError& e) {
            rep.add("piece-invalid", mk, e.what());
        }
    }
    if (cert.relation.terms.size() != cert.boundary_pieces.size())
        rep.add("relation-count", "",
                "relation has " + std::to_string(cert.relation.terms.size()) + " terms for " +
                    std::to_string(cert.boundary_pieces.size()) + " boundary pieces");
    if (cert.relation.group_rank + 1 != cert.marked.base.dim)
        rep.add("relation-group", "", "recorded group rank does not match the base dimension");
    for (std::size_t i = 0; i < cert.relation.terms.size(); ++i) {
        const RelationTerm& t = cert.relation.terms[i];
        if (t.coefficient != 1)
            rep.add("relation-coefficient", std::to_string(i), "coefficients must be +1");
        if (t.index != i)
            rep.add("relation-index", std::to_string(i), "terms must follow the boundary order");
        if (t.index < cert.boundary_pieces.size() &&
            t.hash != descriptor_hash(cert.boundary_pieces[t.index]))
            rep.add("relation-hash", std::to_string(i),
                    "term hash does not match the referenced boundary piece");
    }
    for (const auto& lp : cert.lens_boundary) {
        if (lp.lens.p < 1) rep.add("lens-invalid", lp.facet, "p must be positive");
        const IntVector* u = nullptr;
        const IntVector* l0 = cert.rs.find(kBottomId);
        u = cert.rs.find(lp.facet + "|I");
        if (!u || !l0) {
            rep.add("lens-unverifiable", lp.facet, "missing rs vectors for the lens extraction");
        } else {
            try {
                if (!(lens_from_interval(*u, *l0) == lp.lens))
                    rep.add("lens-mismatch", lp.facet, "stored lens differs from recomputation");
            } catch (const DomainError& e) {
                rep.add("lens-mismatch", lp.facet, e.what());
            }
        }
    }
    return rep;
}

} // namespace torocob

#endif
