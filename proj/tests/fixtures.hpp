#ifndef TOROCOB_TESTS_FIXTURES_HPP
#define TOROCOB_TESTS_FIXTURES_HPP

// Shared fixtures and small generators for the test suites.

#include <random>
#include <torocob/torocob.hpp>

namespace fixtures {

using namespace torocob;

inline CornersComplex simplex3() {
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

inline CornersComplex cube() {
    CornersComplex c;
    c.dim = 3;
    const std::vector<std::string> axes = {"x", "y", "z"};
    for (const auto& a : axes)
        for (int s = 0; s < 2; ++s) {
            std::string fid = a + std::to_string(s);
            c.facets.push_back(fid);
            c.faces.push_back({fid, 1, {fid}, 0});
        }
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

inline CharFunction charfn(const CornersComplex& c, std::vector<IntVector> vectors) {
    std::map<std::string, IntVector> assign;
    for (std::size_t i = 0; i < c.facets.size(); ++i) assign[c.facets[i]] = vectors.at(i);
    return CharFunction(c.dim, std::move(assign));
}

inline IntVector ivec(long a, long b) { return {Int(a), Int(b)}; }

// random nonzero vector with entries in [-bound, bound]
inline IntVector random_vec2(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    while (true) {
        IntVector v{Int(d(rng)), Int(d(rng))};
        if (!is_zero_vector(v)) return v;
    }
}

// random valid r-characteristic function on a polygon: consecutive facets
// (cyclically) get independent vectors
inline CharFunction random_polygon_charfn(const CornersComplex& poly, std::mt19937_64& rng,
                                          long bound) {
    std::size_t m = poly.facets.size();
    while (true) {
        std::vector<IntVector> vs;
        for (std::size_t i = 0; i < m; ++i) vs.push_back(random_vec2(rng, bound));
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            const IntVector& a = vs[i];
            const IntVector& b = vs[(i + 1) % m];
            if (a[0] * b[1] - a[1] * b[0] == 0) ok = false;
        }
        if (!ok) continue;
        return charfn(poly, vs);
    }
}

// random 2x2 unimodular matrix: product of up to `elems` elementary matrices
inline IntMatrix random_unimodular2(std::mt19937_64& rng, int elems) {
    IntMatrix m = IntMatrix::identity(2);
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<int> coeff(1, 2);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int i = 0; i < elems; ++i) {
        IntMatrix e = IntMatrix::identity(2);
        switch (pick(rng)) {
        case 0: e.rows[0][1] = (sgn(rng) ? 1 : -1) * coeff(rng); break;
        case 1: e.rows[1][0] = (sgn(rng) ? 1 : -1) * coeff(rng); break;
        case 2: std::swap(e.rows[0], e.rows[1]); break;
        default: e.rows[0][0] = -1; break;
        }
        m = multiply(m, e);
    }
    return m;
}

} // namespace fixtures

#endif
