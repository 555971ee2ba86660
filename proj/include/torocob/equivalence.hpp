#ifndef TOROCOB_EQUIVALENCE_HPP
#define TOROCOB_EQUIVALENCE_HPP

// Equivalence of combinatorial-and-topological data: an explicit witness
// (facet bijection psi, unimodular delta, per-facet signs) with
// xi'(psi(F)) = sign(F) * delta * xi(F), or a certified refutation from
// cheap invariants. The facet bijection is the combinatorial shadow of the
// corner-preserving diffeomorphism: a face-poset isomorphism.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charfun.hpp"
#include "corners.hpp"
#include "families.hpp"
#include "lattice.hpp"

namespace torocob {

struct OrbifoldData {
    CornersComplex complex;
    CharFunction charfn;
    BundleFlag bundle = BundleFlag::Trivial;
};

struct EquivalenceWitness {
    std::map<std::string, std::string> psi; // facets of d1 -> facets of d2
    IntMatrix delta;                        // n x n, |det| = 1
    std::map<std::string, int> signs;       // facet of d1 -> +-1
};

struct Refutation {
    std::string invariant;
    std::string detail;
};

inline IntVector apply_matrix(const IntMatrix& m, const IntVector& v) {
    if (m.cols != v.size()) throw DimensionMismatch("apply_matrix: dim mismatch");
    IntVector out(m.nrows(), 0);
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.rows[i][j] * v[j];
    return out;
}

inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.nrows() != m.cols) throw DimensionMismatch("unimodular_inverse: not square");
    const std::size_t n = m.nrows();
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(m.rows[i][j]);
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) throw RankError("unimodular_inverse: singular matrix");
        std::swap(aug[c], aug[p]);
        Rat inv = aug[c][c];
        for (std::size_t j = 0; j < 2 * n; ++j) aug[c][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    IntMatrix out(n);
    out.rows.assign(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat e = aug[i][n + j];
            if (e.get_den() != 1)
                throw RankError("unimodular_inverse: matrix is not unimodular");
            out.rows[i][j] = e.get_num();
        }
    return out;
}

namespace detail {

inline void require_comparable(const OrbifoldData& d) {
    if (d.bundle != BundleFlag::Trivial)
        throw BundleFlagError("equivalence: abstract bundle flags refuse comparison");
    ValidityReport rep = validate_nice(d.complex);
    rep.merge(validate_r_characteristic(d.complex, d.charfn));
    if (!rep.valid()) throw InvalidCharFunctionError("equivalence input", rep);
}

// multiset of (codim, invariant factors) over all faces
inline std::vector<std::pair<std::size_t, std::vector<Int>>> group_profile(const OrbifoldData& d) {
    std::vector<std::pair<std::size_t, std::vector<Int>>> prof;
    for (const auto& face : d.complex.faces) {
        FaceStratum s = face_stratum(d.complex, d.charfn, face.id);
        prof.push_back({face.codim, s.local_group.invariant_factors});
    }
    std::sort(prof.begin(), prof.end());
    return prof;
}

// per-facet incidence signature: how many records of each codim contain it
inline std::map<std::string, std::map<std::size_t, std::size_t>> facet_signatures(
    const CornersComplex& c) {
    std::map<std::string, std::map<std::size_t, std::size_t>> sig;
    for (const auto& f : c.facets) sig[f];
    for (const auto& face : c.faces)
        for (const auto& f : face.facet_set) ++sig[f][face.codim];
    return sig;
}

// records grouped by (codim, facet set); component tags may permute freely
inline std::map<std::pair<std::size_t, std::set<std::string>>, std::size_t> face_groups(
    const CornersComplex& c) {
    std::map<std::pair<std::size_t, std::set<std::string>>, std::size_t> g;
    for (const auto& face : c.faces) ++g[{face.codim, face.facet_set}];
    return g;
}

inline bool psi_face_compatible(const CornersComplex& c1, const CornersComplex& c2,
                                const std::map<std::string, std::string>& psi) {
    auto g1 = face_groups(c1);
    auto g2 = face_groups(c2);
    if (g1.size() != g2.size()) return false;
    for (const auto& [key, count] : g1) {
        std::set<std::string> image;
        for (const auto& f : key.second) image.insert(psi.at(f));
        auto it = g2.find({key.first, image});
        if (it == g2.end() || it->second != count) return false;
    }
    return true;
}

struct DeltaSolution {
    IntMatrix delta;
    std::map<std::string, int> signs;
};

// Solves a * x = b over the rationals for square a; null when singular or
// when the solution is not integral.
inline std::optional<IntMatrix> integral_solve(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.nrows();
    if (a.cols != n || b.nrows() != n) throw DimensionMismatch("integral_solve: shape mismatch");
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + b.cols));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(a.rows[i][j]);
        for (std::size_t j = 0; j < b.cols; ++j) aug[i][n + j] = Rat(b.rows[i][j]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(aug[c], aug[p]);
        Rat inv = aug[c][c];
        for (std::size_t j = 0; j < n + b.cols; ++j) aug[c][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j < n + b.cols; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    IntMatrix x(b.cols);
    x.rows.assign(n, IntVector(b.cols, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            Rat e = aug[i][n + j];
            if (e.get_den() != 1) return std::nullopt;
            x.rows[i][j] = e.get_num();
        }
    return x;
}

// Solves delta from the chosen independent source vectors under the given
// source signs, then verifies unimodularity and the +- condition on every
// facet. Underdetermined directions are completed canonically through
// saturation bases; any completion works because no constraint leaves the
// source span.
inline std::optional<DeltaSolution> solve_delta(const OrbifoldData& d1, const OrbifoldData& d2,
                                                const std::map<std::string, std::string>& psi,
                                                const std::vector<std::string>& sources,
                                                const std::vector<int>& source_signs) {
    const std::size_t n = d1.charfn.n;
    IntMatrix s_rows(n), t_rows(n);
    for (std::size_t i = 0; i < sources.size(); ++i) {
        s_rows.rows.push_back(*d1.charfn.find(sources[i]));
        IntVector t = *d2.charfn.find(psi.at(sources[i]));
        if (source_signs[i] < 0)
            for (Int& x : t) x = -x;
        t_rows.rows.push_back(t);
    }

    IntMatrix delta;
    if (s_rows.nrows() == n) {
        // delta^T solves s_rows * X = t_rows over Q; it must be integral
        auto x = integral_solve(s_rows, t_rows);
        if (!x) return std::nullopt;
        delta = IntMatrix(n);
        delta.rows.assign(n, IntVector(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) delta.rows[i][j] = x->rows[j][i];
    } else {
        IntMatrix sat = saturation(s_rows);
        IntMatrix phi_sat(n);
        for (const auto& h : sat.rows) {
            auto coeff = rational_row_solve(s_rows, h);
            if (!coeff) return std::nullopt;
            IntVector img(n, 0);
            std::vector<Rat> acc(n, Rat(0));
            for (std::size_t i = 0; i < coeff->size(); ++i)
                for (std::size_t j = 0; j < n; ++j) acc[j] += (*coeff)[i] * Rat(t_rows.rows[i][j]);
            for (std::size_t j = 0; j < n; ++j) {
                if (acc[j].get_den() != 1) return std::nullopt; // image not integral
                img[j] = acc[j].get_num();
            }
            phi_sat.rows.push_back(img);
        }
        if (!is_basis_extendable(phi_sat)) return std::nullopt; // image not saturated
        IntMatrix c1 = basis_completion(sat);
        IntMatrix c2 = basis_completion(hermite_normal_form(phi_sat));
        IntMatrix b1 = sat, b2 = phi_sat;
        for (const auto& r : c1.rows) b1.rows.push_back(r);
        for (const auto& r : c2.rows) b2.rows.push_back(r);
        // b1 is unimodular, so delta^T = b1^{-1} b2 is integral by construction
        IntMatrix x = multiply(unimodular_inverse(b1), b2);
        delta = IntMatrix(n);
        delta.rows.assign(n, IntVector(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) delta.rows[i][j] = x.rows[j][i];
    }
    if (abs_det(delta) != 1) return std::nullopt;

    DeltaSolution sol;
    sol.delta = delta;
    for (const auto& f1 : d1.complex.facets) {
        IntVector lhs = apply_matrix(delta, *d1.charfn.find(f1));
        const IntVector& rhs = *d2.charfn.find(psi.at(f1));
        IntVector neg = rhs;
        for (Int& x : neg) x = -x;
        if (lhs == rhs)
            sol.signs[f1] = 1;
        else if (lhs == neg)
            sol.signs[f1] = -1;
        else
            return std::nullopt;
    }
    return sol;
}

} // namespace detail

// Cheap certified refutations: dimension, facet/face/vertex counts, genus
// metadata when both sides carry it, and the multiset of local groups.
inline std::optional<Refutation> invariant_screen(const OrbifoldData& d1, const OrbifoldData& d2) {
    detail::require_comparable(d1);
    detail::require_comparable(d2);
    if (d1.complex.dim != d2.complex.dim)
        return Refutation{"dim", std::to_string(d1.complex.dim) + " vs " +
                                     std::to_string(d2.complex.dim)};
    if (d1.complex.facets.size() != d2.complex.facets.size())
        return Refutation{"facet-count", std::to_string(d1.complex.facets.size()) + " vs " +
                                             std::to_string(d2.complex.facets.size())};
    if (d1.complex.vertex_count() != d2.complex.vertex_count())
        return Refutation{"vertex-count", std::to_string(d1.complex.vertex_count()) + " vs " +
                                              std::to_string(d2.complex.vertex_count())};
    if (d1.complex.faces.size() != d2.complex.faces.size())
        return Refutation{"face-count", std::to_string(d1.complex.faces.size()) + " vs " +
                                            std::to_string(d2.complex.faces.size())};
    if (d1.complex.metadata && d2.complex.metadata) {
        if (d1.complex.metadata->genus != d2.complex.metadata->genus)
            return Refutation{"genus", std::to_string(d1.complex.metadata->genus) + " vs " +
                                           std::to_string(d2.complex.metadata->genus)};
        auto c1 = d1.complex.metadata->boundary_cycles;
        auto c2 = d2.complex.metadata->boundary_cycles;
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        if (c1 != c2) return Refutation{"boundary-cycles", "cycle multisets differ"};
    }
    if (detail::group_profile(d1) != detail::group_profile(d2))
        return Refutation{"local-groups", "multisets of local groups over faces differ"};
    return std::nullopt;
}

// Backtracking over facet bijections constrained by incidence signatures;
// for each candidate psi the map delta is solved from a spanning set of
// source vectors per sign assignment and verified globally. Returns the
// first witness in this canonical search order, or absence.
inline std::optional<EquivalenceWitness> data_equivalent(const OrbifoldData& d1,
                                                         const OrbifoldData& d2) {
    if (invariant_screen(d1, d2)) return std::nullopt;

    const CornersComplex& c1 = d1.complex;
    const CornersComplex& c2 = d2.complex;
    auto sig1 = detail::facet_signatures(c1);
    auto sig2 = detail::facet_signatures(c2);

    std::vector<std::string> order = c1.facets;
    std::sort(order.begin(), order.end());
    std::vector<std::string> pool = c2.facets;
    std::sort(pool.begin(), pool.end());

    // source facets: greedy spanning subset in sorted order
    std::vector<std::string> sources;
    {
        IntMatrix acc(d1.charfn.n);
        for (const auto& f : order) {
            IntMatrix trial = acc;
            trial.rows.push_back(*d1.charfn.find(f));
            if (rank(trial) > rank(acc)) {
                acc = trial;
                sources.push_back(f);
            }
        }
    }

    std::map<std::string, std::string> psi;
    std::set<std::string> used;
    std::optional<EquivalenceWitness> found;

    auto try_complete = [&]() -> bool {
        if (!detail::psi_face_compatible(c1, c2, psi)) return false;
        std::vector<int> signs(sources.size(), 1);
        while (true) {
            auto sol = detail::solve_delta(d1, d2, psi, sources, signs);
            if (sol) {
                found = EquivalenceWitness{psi, sol->delta, sol->signs};
                return true;
            }
            // next sign vector, +1 before -1, first source fastest
            std::size_t i = 0;
            while (i < signs.size() && signs[i] == -1) {
                signs[i] = 1;
                ++i;
            }
            if (i == signs.size()) return false;
            signs[i] = -1;
        }
    };

    std::function<bool(std::size_t)> search = [&](std::size_t idx) -> bool {
        if (idx == order.size()) return try_complete();
        const std::string& f1 = order[idx];
        for (const auto& f2 : pool) {
            if (used.count(f2)) continue;
            if (sig1.at(f1) != sig2.at(f2)) continue;
            psi[f1] = f2;
            used.insert(f2);
            if (search(idx + 1)) return true;
            psi.erase(f1);
            used.erase(f2);
        }
        return false;
    };
    search(0);
    return found;
}

// Independent re-verification of a witness against the data.
inline ValidityReport verify_witness(const OrbifoldData& d1, const OrbifoldData& d2,
                                     const EquivalenceWitness& w) {
    ValidityReport rep;
    std::set<std::string> f1(d1.complex.facets.begin(), d1.complex.facets.end());
    std::set<std::string> f2(d2.complex.facets.begin(), d2.complex.facets.end());
    std::set<std::string> image;
    for (const auto& [a, b] : w.psi) {
        if (!f1.count(a)) rep.add("psi-domain", a, "not a facet of the first datum");
        if (!f2.count(b)) rep.add("psi-range", b, "not a facet of the second datum");
        if (!image.insert(b).second) rep.add("psi-not-injective", b, "hit twice");
    }
    if (w.psi.size() != f1.size() || image.size() != f2.size())
        rep.add("psi-not-bijective", "", "psi is not a facet bijection");
    if (!rep.valid()) return rep;
    if (!detail::psi_face_compatible(d1.complex, d2.complex, w.psi))
        rep.add("psi-incidence", "", "psi does not extend to a face-record bijection");
    if (w.delta.nrows() != d1.charfn.n || w.delta.cols != d1.charfn.n ||
        abs_det(w.delta) != 1)
        rep.add("delta-not-unimodular", "", "delta must be a square matrix with |det| = 1");
    if (d1.complex.metadata && d2.complex.metadata &&
        d1.complex.metadata->genus != d2.complex.metadata->genus)
        rep.add("genus-mismatch", "", "2D bases carry different genus metadata");
    if (!rep.valid()) return rep;
    for (const auto& fid : d1.complex.facets) {
        auto sit = w.signs.find(fid);
        if (sit == w.signs.end() || (sit->second != 1 && sit->second != -1)) {
            rep.add("sign-missing", fid, "facet has no +-1 sign");
            continue;
        }
        IntVector lhs = apply_matrix(w.delta, *d1.charfn.find(fid));
        if (sit->second < 0)
            for (Int& x : lhs) x = -x;
        if (!(lhs == *d2.charfn.find(w.psi.at(fid))))
            rep.add("vector-mismatch", fid, "xi'(psi(F)) != sign(F) * delta * xi(F)");
    }
    return rep;
}

// A witness for (d1,d2) yields one for (d2,d1).
inline EquivalenceWitness invert_witness(const EquivalenceWitness& w) {
    EquivalenceWitness inv;
    inv.delta = unimodular_inverse(w.delta);
    for (const auto& [a, b] : w.psi) {
        inv.psi[b] = a;
        inv.signs[b] = w.signs.at(a);
    }
    return inv;
}

} // namespace torocob

#endif
