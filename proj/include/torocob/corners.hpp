#ifndef TOROCOB_CORNERS_HPP
#define TOROCOB_CORNERS_HPP

// Facet-incidence model of nice manifolds with corners, the 2D surface
// builders, products with an interval, and vertex cuts. A complex is pure
// incidence data: face records with facet sets and component tags, no
// geometry. Connected components of the same facet intersection are told
// apart by their tags.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "report.hpp"

namespace torocob {

struct FaceRecord {
    std::string id;
    std::size_t codim = 1;
    std::set<std::string> facet_set;
    long long component_tag = 0;

    bool operator==(const FaceRecord& o) const {
        return id == o.id && codim == o.codim && facet_set == o.facet_set &&
               component_tag == o.component_tag;
    }
};

struct SurfaceMetadata {
    long long genus = 0;
    std::vector<long long> boundary_cycles;

    bool operator==(const SurfaceMetadata& o) const {
        return genus == o.genus && boundary_cycles == o.boundary_cycles;
    }
};

struct CornersComplex {
    std::size_t dim = 0;
    std::vector<std::string> facets;
    std::vector<FaceRecord> faces;
    std::optional<SurfaceMetadata> metadata;

    const FaceRecord* find_face(const std::string& id) const {
        for (const auto& f : faces)
            if (f.id == id) return &f;
        return nullptr;
    }

    std::vector<const FaceRecord*> vertices() const {
        std::vector<const FaceRecord*> out;
        for (const auto& f : faces)
            if (f.codim == dim) out.push_back(&f);
        return out;
    }

    std::size_t vertex_count() const {
        std::size_t n = 0;
        for (const auto& f : faces)
            if (f.codim == dim) ++n;
        return n;
    }

    // Sorts facets and face records (by codim, then id); incidence-equal
    // complexes have equal canonical forms.
    CornersComplex canonical() const {
        CornersComplex c = *this;
        std::sort(c.facets.begin(), c.facets.end());
        std::sort(c.faces.begin(), c.faces.end(), [](const FaceRecord& a, const FaceRecord& b) {
            if (a.codim != b.codim) return a.codim < b.codim;
            return a.id < b.id;
        });
        return c;
    }
};

// Incidence equality: dim, facet set and face records, ignoring metadata.
inline bool same_incidence(const CornersComplex& a, const CornersComplex& b) {
    CornersComplex ca = a.canonical(), cb = b.canonical();
    return ca.dim == cb.dim && ca.facets == cb.facets && ca.faces == cb.faces;
}

struct MarkedManifold {
    CornersComplex base;
    std::vector<std::string> marked;
    std::vector<std::string> remaining;
};

inline ValidityReport validate_nice(const CornersComplex& c) {
    ValidityReport rep;
    if (c.dim == 0) {
        rep.add("bad-dim", "", "dimension must be positive");
        return rep;
    }
    std::set<std::string> facet_ids;
    for (const auto& f : c.facets) {
        if (!facet_ids.insert(f).second) rep.add("duplicate-facet", f, "facet id listed twice");
    }
    std::set<std::string> face_ids;
    std::set<std::pair<std::vector<std::string>, long long>> seen;
    std::set<std::string> facet_records;
    for (const auto& face : c.faces) {
        if (!face_ids.insert(face.id).second)
            rep.add("duplicate-face", face.id, "face id listed twice");
        if (face.codim < 1 || face.codim > c.dim)
            rep.add("bad-codim", face.id, "codim outside 1..dim");
        if (face.facet_set.size() != face.codim)
            rep.add("facet-count", face.id,
                    "codim-" + std::to_string(face.codim) + " face must lie in exactly " +
                        std::to_string(face.codim) + " facets, has " +
                        std::to_string(face.facet_set.size()));
        for (const auto& f : face.facet_set)
            if (!facet_ids.count(f)) rep.add("unknown-facet", face.id, "references facet " + f);
        std::vector<std::string> key(face.facet_set.begin(), face.facet_set.end());
        if (!seen.insert({key, face.component_tag}).second)
            rep.add("duplicate-component", face.id,
                    "same facet set and component tag as another record");
        if (face.codim == 1) {
            if (face.facet_set.size() == 1) {
                const std::string& f = *face.facet_set.begin();
                if (face.id != f)
                    rep.add("facet-record-id", face.id, "codim-1 record id must equal its facet " + f);
                facet_records.insert(f);
            }
        }
    }
    for (const auto& f : c.facets)
        if (facet_ids.count(f) && !facet_records.count(f))
            rep.add("missing-facet-record", f, "facet has no codim-1 record");
    return rep;
}

inline ValidityReport validate_marked(const MarkedManifold& m) {
    ValidityReport rep = validate_nice(m.base);
    std::set<std::string> facet_ids(m.base.facets.begin(), m.base.facets.end());
    std::set<std::string> marked(m.marked.begin(), m.marked.end());
    std::set<std::string> remaining(m.remaining.begin(), m.remaining.end());
    if (marked.size() != m.marked.size()) rep.add("duplicate-marked", "", "marked list has duplicates");
    for (const auto& f : m.marked)
        if (!facet_ids.count(f)) rep.add("unknown-marked", f, "marked id is not a facet");
    for (const auto& f : m.remaining)
        if (!facet_ids.count(f)) rep.add("unknown-remaining", f, "remaining id is not a facet");
    for (const auto& f : facet_ids) {
        bool mk = marked.count(f), rm = remaining.count(f);
        if (mk && rm) rep.add("marked-and-remaining", f, "facet listed as both marked and remaining");
        if (!mk && !rm) rep.add("unlisted-facet", f, "facet neither marked nor remaining");
    }
    for (const auto& face : m.base.faces) {
        std::size_t hits = 0;
        for (const auto& f : face.facet_set)
            if (marked.count(f)) ++hits;
        if (hits > 1)
            rep.add("marked-not-disjoint", face.id, "face lies in more than one marked facet");
        if (face.codim == m.base.dim && hits != 1)
            rep.add("vertex-coverage", face.id,
                    "vertex must lie in exactly one marked facet, lies in " + std::to_string(hits));
    }
    return rep;
}

// Genus-g surface with one boundary component per entry of boundary_cycles:
// 0 = circle (one vertex-free facet), 2 = eye-shape, l >= 3 = l-gon boundary.
inline CornersComplex build_surface_with_corners(long long genus,
                                                 const std::vector<long long>& boundary_cycles) {
    if (genus < 0) throw DomainError("build_surface_with_corners: negative genus");
    CornersComplex c;
    c.dim = 2;
    for (std::size_t b = 0; b < boundary_cycles.size(); ++b) {
        long long len = boundary_cycles[b];
        if (len == 1) throw CycleLengthError("boundary cycle of length 1 violates niceness");
        if (len < 0) throw CycleLengthError("negative cycle length");
        std::string pre = "F" + std::to_string(b) + "_";
        if (len == 0) {
            std::string f = pre + "0";
            c.facets.push_back(f);
            c.faces.push_back({f, 1, {f}, 0});
            continue;
        }
        std::vector<std::string> ids;
        for (long long i = 0; i < len; ++i) {
            std::string f = pre + std::to_string(i);
            ids.push_back(f);
            c.facets.push_back(f);
            c.faces.push_back({f, 1, {f}, 0});
        }
        if (len == 2) {
            // eye-shape: two vertices on the same pair of facets
            c.faces.push_back({"V" + std::to_string(b) + "_0", 2, {ids[0], ids[1]}, 0});
            c.faces.push_back({"V" + std::to_string(b) + "_1", 2, {ids[0], ids[1]}, 1});
        } else {
            for (long long i = 0; i < len; ++i) {
                std::string v = "V" + std::to_string(b) + "_" + std::to_string(i);
                c.faces.push_back({v, 2, {ids[i], ids[(i + 1) % len]}, 0});
            }
        }
    }
    c.metadata = SurfaceMetadata{genus, boundary_cycles};
    return c;
}

inline const std::string kBottomId = "|bottom";
inline const std::string kTopId = "|top";

// Q x [0,1]: every face f of the input contributes f x I (id unchanged +"|I"
// for facets and faces alike), f x {0} (id +"|0") and f x {1} (id kept), plus
// the bottom and top facets. Keeping the plain id on the top copy makes the
// restriction of the top marked facet reproduce the input verbatim.
inline CornersComplex product_with_interval(const CornersComplex& c) {
    ValidityReport nice = validate_nice(c);
    if (!nice.valid()) throw DomainError("product_with_interval: input not nice: " + nice.summary());
    CornersComplex y;
    y.dim = c.dim + 1;

    std::set<std::string> generated;
    auto fresh = [&generated](const std::string& id) {
        if (!generated.insert(id).second)
            throw IdCollisionError("product id collision: " + id);
        return id;
    };

    auto side = [](const std::string& id) { return id + "|I"; };

    for (const auto& f : c.facets) y.facets.push_back(side(f));
    y.facets.push_back(kBottomId);
    y.facets.push_back(kTopId);

    y.faces.push_back({fresh(kBottomId), 1, {kBottomId}, 0});
    y.faces.push_back({fresh(kTopId), 1, {kTopId}, 0});
    for (const auto& g : c.faces) {
        std::set<std::string> side_set;
        for (const auto& f : g.facet_set) side_set.insert(side(f));
        FaceRecord cyl{fresh(g.id + "|I"), g.codim, side_set, g.component_tag};
        std::set<std::string> bot = side_set, top = side_set;
        bot.insert(kBottomId);
        top.insert(kTopId);
        FaceRecord f0{fresh(g.id + "|0"), g.codim + 1, bot, g.component_tag};
        FaceRecord f1{fresh(g.id), g.codim + 1, top, g.component_tag};
        y.faces.push_back(cyl);
        y.faces.push_back(f0);
        y.faces.push_back(f1);
    }
    return y;
}

namespace detail {

// Face records passing through the given vertex: facet_set contained in the
// vertex's, disambiguated by component tag when several records share a
// facet set. Sufficient for builder outputs, where tags are inherited along
// products and cuts.
inline std::vector<const FaceRecord*> faces_at_vertex(const CornersComplex& c,
                                                      const FaceRecord& vertex) {
    std::map<std::vector<std::string>, std::vector<const FaceRecord*>> by_set;
    for (const auto& g : c.faces) {
        if (g.id == vertex.id) continue;
        if (g.codim >= vertex.codim) continue;
        bool subset = std::includes(vertex.facet_set.begin(), vertex.facet_set.end(),
                                    g.facet_set.begin(), g.facet_set.end());
        if (!subset) continue;
        by_set[{g.facet_set.begin(), g.facet_set.end()}].push_back(&g);
    }
    std::vector<const FaceRecord*> out;
    for (auto& [key, group] : by_set) {
        if (group.size() == 1) {
            out.push_back(group.front());
            continue;
        }
        const FaceRecord* match = nullptr;
        for (const FaceRecord* g : group)
            if (g->component_tag == vertex.component_tag) {
                if (match) throw AmbiguousIncidenceError("two components with equal tag at " + vertex.id);
                match = g;
            }
        if (!match)
            throw AmbiguousIncidenceError("cannot resolve component through vertex " + vertex.id);
        out.push_back(match);
    }
    std::sort(out.begin(), out.end(),
              [](const FaceRecord* a, const FaceRecord* b) { return a->id < b->id; });
    return out;
}

// Cuts the listed vertices off, one simplex facet per vertex. Shared by
// vertex_cut_bottom and vertex_cut.
inline MarkedManifold cut_vertices_off(const CornersComplex& y,
                                       const std::vector<std::string>& cut_ids,
                                       const std::vector<std::string>& extra_marked) {
    const std::size_t d = y.dim;
    std::vector<std::string> sorted_ids = cut_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());

    MarkedManifold out;
    out.base.dim = d;
    out.base.facets = y.facets;
    out.base.metadata = std::nullopt;

    std::set<std::string> removed(sorted_ids.begin(), sorted_ids.end());
    for (const auto& g : y.faces)
        if (!removed.count(g.id)) out.base.faces.push_back(g);

    for (const auto& vid : sorted_ids) {
        const FaceRecord* v = y.find_face(vid);
        if (!v) throw NotSimpleError("cut vertex not found: " + vid);
        if (v->codim != d || v->facet_set.size() != d)
            throw NotSimpleError("vertex " + vid + " does not lie in exactly " + std::to_string(d) +
                                 " facets");
        std::string qid = "Q|" + vid;
        out.base.facets.push_back(qid);
        out.base.faces.push_back({qid, 1, {qid}, 0});
        out.marked.push_back(qid);

        auto at_v = faces_at_vertex(y, *v);
        std::size_t edge_count = 0;
        for (const FaceRecord* g : at_v) {
            if (g->codim == d - 1) ++edge_count;
            std::set<std::string> fs = g->facet_set;
            fs.insert(qid);
            out.base.faces.push_back({qid + "/" + g->id, g->codim + 1, fs, g->component_tag});
        }
        // a simplex facet needs one new vertex per edge at the cut vertex
        if (edge_count != d)
            throw NotSimpleError("vertex " + vid + " has " + std::to_string(edge_count) +
                                 " edges, expected " + std::to_string(d));
    }
    for (const auto& m : extra_marked) out.marked.push_back(m);
    std::set<std::string> marked_set(out.marked.begin(), out.marked.end());
    for (const auto& f : y.facets)
        if (!marked_set.count(f)) out.remaining.push_back(f);
    return out;
}

} // namespace detail

// Vertex cut of a product Q x I at its bottom vertices. The cut vertices
// must be exactly the bottom vertex records; the top facet becomes the last
// marked facet. Listing a vertex twice counts as cutting along a shared
// edge and is rejected.
inline MarkedManifold vertex_cut_bottom(const CornersComplex& y,
                                        const std::vector<std::string>& cut_vertices) {
    bool has_bottom = false, has_top = false;
    for (const auto& f : y.facets) {
        if (f == kBottomId) has_bottom = true;
        if (f == kTopId) has_top = true;
    }
    if (!has_bottom || !has_top)
        throw NotBottomError("vertex_cut_bottom: input is not a product with an interval");

    std::set<std::string> expect;
    for (const auto& g : y.faces)
        if (g.codim == y.dim && g.facet_set.count(kBottomId)) expect.insert(g.id);
    std::set<std::string> given;
    for (const auto& v : cut_vertices)
        if (!given.insert(v).second)
            throw AdjacencyError("vertex_cut_bottom: vertex listed twice: " + v);
    if (given != expect) {
        for (const auto& v : given)
            if (!expect.count(v))
                throw NotBottomError("vertex_cut_bottom: not a bottom vertex: " + v);
        throw NotBottomError("vertex_cut_bottom: all bottom vertices must be cut");
    }
    return detail::cut_vertices_off(y, cut_vertices, {kTopId});
}

// Vertex cut VC(p) of a nice complex all of whose vertices lie in exactly
// dim facets with a full set of edges; every vertex becomes a marked
// simplex facet.
inline MarkedManifold vertex_cut(const CornersComplex& p) {
    ValidityReport nice = validate_nice(p);
    if (!nice.valid()) throw NotSimpleError("vertex_cut: input not nice: " + nice.summary());
    std::vector<std::string> ids;
    for (const auto& g : p.faces)
        if (g.codim == p.dim) ids.push_back(g.id);
    return detail::cut_vertices_off(p, ids, {});
}

} // namespace torocob

#endif
