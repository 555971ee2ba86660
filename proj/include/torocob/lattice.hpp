#ifndef TOROCOB_LATTICE_HPP
#define TOROCOB_LATTICE_HPP

// Exact integer linear algebra: Smith/Hermite normal forms, lattice
// saturation, primitivity, basis extension and finite-quotient invariants.
// All arithmetic is arbitrary precision (GMP); every function is a pure,
// deterministic map from values to values.

#include <algorithm>
#include <cstddef>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace torocob {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;

inline bool is_zero_vector(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

struct IntMatrix {
    std::size_t cols = 0;
    std::vector<IntVector> rows;

    IntMatrix() = default;
    explicit IntMatrix(std::size_t ncols) : cols(ncols) {}
    IntMatrix(std::size_t ncols, std::vector<IntVector> r) : cols(ncols), rows(std::move(r)) {
        for (const auto& row : rows)
            if (row.size() != cols) throw DimensionMismatch("IntMatrix: ragged rows");
    }

    std::size_t nrows() const { return rows.size(); }
    bool empty() const { return rows.empty(); }

    Int& at(std::size_t i, std::size_t j) { return rows[i][j]; }
    const Int& at(std::size_t i, std::size_t j) const { return rows[i][j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        m.rows.assign(n, IntVector(n, 0));
        for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
        return m;
    }

    static IntMatrix from_rows(std::vector<IntVector> r) {
        if (r.empty()) throw DimensionMismatch("from_rows: need explicit cols for empty matrix");
        std::size_t c = r.front().size();
        return IntMatrix(c, std::move(r));
    }

    bool operator==(const IntMatrix& o) const { return cols == o.cols && rows == o.rows; }
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.nrows()) throw DimensionMismatch("multiply: inner dimensions differ");
    IntMatrix c(b.cols);
    c.rows.assign(a.nrows(), IntVector(b.cols, 0));
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.rows[i][k] == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
        }
    return c;
}

// Finite abelian group in invariant-factor form: factors each >= 2, each
// dividing the next; the empty list is the trivial group.
struct AbelianGroup {
    std::vector<Int> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }
    Int order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }
    bool operator==(const AbelianGroup& o) const { return invariant_factors == o.invariant_factors; }
};

struct SmithDecomposition {
    std::vector<Int> diag;   // min(m,n) nonnegative entries, divisibility chain
    IntMatrix left;          // m x m unimodular
    IntMatrix right;         // n x n unimodular
    IntMatrix right_inv;     // inverse of right, tracked during reduction
};

namespace detail {

inline void row_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    std::swap(m.rows[i], m.rows[j]);
}
// row_i += q * row_j
inline void row_add(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < m.cols; ++c) m.rows[i][c] += q * m.rows[j][c];
}
inline void row_neg(IntMatrix& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols; ++c) m.rows[i][c] = -m.rows[i][c];
}
inline void col_swap(IntMatrix& m, std::size_t i, std::size_t j) {
    for (auto& row : m.rows) std::swap(row[i], row[j]);
}
// col_i += q * col_j
inline void col_add(IntMatrix& m, std::size_t i, std::size_t j, const Int& q) {
    for (auto& row : m.rows) row[i] += q * row[j];
}

// floor division quotient
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace detail

// Smith normal form with unimodular transforms: left * m * right is diagonal.
// Pivot rule: smallest absolute nonzero entry of the working submatrix, ties
// broken by lowest (row, column); this fixes the output for a given input.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    using namespace detail;
    const std::size_t nr = m.nrows(), nc = m.cols;
    SmithDecomposition res;
    res.left = IntMatrix::identity(nr);
    res.right = IntMatrix::identity(nc);
    res.right_inv = IntMatrix::identity(nc);
    IntMatrix a = m;

    auto apply_col_swap = [&](std::size_t i, std::size_t j) {
        col_swap(a, i, j);
        col_swap(res.right, i, j);
        row_swap(res.right_inv, i, j);
    };
    // col_i += q * col_j  on a  <=>  right-multiply by I + q*e_{ji}
    auto apply_col_add = [&](std::size_t i, std::size_t j, const Int& q) {
        col_add(a, i, j, q);
        col_add(res.right, i, j, q);
        row_add(res.right_inv, j, i, -q);
    };
    auto apply_row_swap = [&](std::size_t i, std::size_t j) {
        row_swap(a, i, j);
        row_swap(res.left, i, j);
    };
    auto apply_row_add = [&](std::size_t i, std::size_t j, const Int& q) {
        row_add(a, i, j, q);
        row_add(res.left, i, j, q);
    };
    auto apply_row_neg = [&](std::size_t i) {
        row_neg(a, i);
        row_neg(res.left, i);
    };

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        // smallest |entry| != 0 in the submatrix at (t,t), ties lowest (row,col)
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        Int best;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (a.rows[i][j] == 0) continue;
                Int v = abs(a.rows[i][j]);
                if (!pivot || v < best) {
                    pivot = {i, j};
                    best = v;
                }
            }
        if (!pivot) break; // submatrix is zero

        apply_row_swap(t, pivot->first);
        apply_col_swap(t, pivot->second);

        bool settled = false;
        while (!settled) {
            settled = true;
            // clear column t with the current pivot
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a.rows[i][t] == 0) continue;
                Int q = fdiv(a.rows[i][t], a.rows[t][t]);
                apply_row_add(i, t, -q);
                if (a.rows[i][t] != 0) {
                    // remainder is strictly smaller; promote it to pivot
                    apply_row_swap(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            // clear row t
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a.rows[t][j] == 0) continue;
                Int q = fdiv(a.rows[t][j], a.rows[t][t]);
                apply_col_add(j, t, -q);
                if (a.rows[t][j] != 0) {
                    apply_col_swap(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // enforce divisibility of the remaining submatrix by the pivot
            for (std::size_t i = t + 1; i < nr && settled; ++i)
                for (std::size_t j = t + 1; j < nc && settled; ++j) {
                    if (a.rows[i][j] % a.rows[t][t] != 0) {
                        apply_row_add(t, i, 1);
                        settled = false;
                    }
                }
        }
        if (a.rows[t][t] < 0) apply_row_neg(t);
    }

    res.diag.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t) res.diag.push_back(a.rows[t][t]);
    return res;
}

inline std::size_t rank(const IntMatrix& m) {
    if (m.empty()) return 0;
    // integer row echelon; rank equals the number of nonzero SNF factors
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.nrows(); ++c) {
        while (true) {
            std::optional<std::size_t> piv;
            Int best;
            for (std::size_t i = r; i < a.nrows(); ++i) {
                if (a.rows[i][c] == 0) continue;
                Int v = abs(a.rows[i][c]);
                if (!piv || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (!piv) break;
            detail::row_swap(a, r, *piv);
            bool clear = true;
            for (std::size_t i = r + 1; i < a.nrows(); ++i) {
                if (a.rows[i][c] == 0) continue;
                Int q = detail::fdiv(a.rows[i][c], a.rows[r][c]);
                detail::row_add(a, i, r, -q);
                if (a.rows[i][c] != 0) clear = false;
            }
            if (clear) {
                ++r;
                break;
            }
        }
    }
    return r;
}

// Row-style Hermite normal form: zero rows dropped, pivots positive, entries
// above each pivot reduced into [0, pivot). Canonical for the row lattice, so
// lattice equality is syntactic equality of HNFs.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
    using namespace detail;
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.nrows(); ++c) {
        while (true) {
            std::optional<std::size_t> piv;
            Int best;
            for (std::size_t i = r; i < a.nrows(); ++i) {
                if (a.rows[i][c] == 0) continue;
                Int v = abs(a.rows[i][c]);
                if (!piv || v < best) {
                    piv = i;
                    best = v;
                }
            }
            if (!piv) break;
            row_swap(a, r, *piv);
            bool clear = true;
            for (std::size_t i = r + 1; i < a.nrows(); ++i) {
                if (a.rows[i][c] == 0) continue;
                Int q = fdiv(a.rows[i][c], a.rows[r][c]);
                row_add(a, i, r, -q);
                if (a.rows[i][c] != 0) clear = false;
            }
            if (!clear) continue;
            if (a.rows[r][c] < 0) row_neg(a, r);
            for (std::size_t i = 0; i < r; ++i) {
                Int q = fdiv(a.rows[i][c], a.rows[r][c]);
                if (q != 0) row_add(a, i, r, -q);
            }
            ++r;
            break;
        }
    }
    IntMatrix out(a.cols);
    for (std::size_t i = 0; i < r; ++i) out.rows.push_back(a.rows[i]);
    return out;
}

// Canonical generators (HNF) of the saturation K~ = K_R intersect Z^n of the
// row span K of gens.
inline IntMatrix saturation(const IntMatrix& gens) {
    SmithDecomposition s = smith_normal_form(gens);
    std::size_t r = 0;
    for (const Int& d : s.diag)
        if (d != 0) ++r;
    IntMatrix basis(gens.cols);
    // left*A*right = D, so A = left^-1 * D * right_inv: the row space is
    // spanned over R by the first r rows of right_inv, which generate a
    // saturated sublattice because right_inv is unimodular.
    for (std::size_t i = 0; i < r; ++i) basis.rows.push_back(s.right_inv.rows[i]);
    return hermite_normal_form(basis);
}

// Coordinates of v in the row lattice of an HNF matrix h, if v belongs to it.
inline std::optional<IntVector> hnf_coordinates(const IntMatrix& h, const IntVector& v) {
    if (v.size() != h.cols) throw DimensionMismatch("hnf_coordinates: dim mismatch");
    IntVector w = v;
    IntVector coeff(h.nrows(), 0);
    for (std::size_t i = 0; i < h.nrows(); ++i) {
        std::size_t pc = 0;
        while (pc < h.cols && h.rows[i][pc] == 0) ++pc;
        if (pc == h.cols) continue;
        if (w[pc] % h.rows[i][pc] != 0) return std::nullopt;
        Int q = w[pc] / h.rows[i][pc];
        if (q != 0)
            for (std::size_t c = 0; c < h.cols; ++c) w[c] -= q * h.rows[i][c];
        coeff[i] = q;
    }
    if (!is_zero_vector(w)) return std::nullopt;
    return coeff;
}

// Invariant factors of ktilde-span / k-span. Requires equal rank and
// containment; the order of the result is the lattice index.
inline AbelianGroup quotient_invariants(const IntMatrix& k, const IntMatrix& ktilde) {
    if (k.cols != ktilde.cols) throw DimensionMismatch("quotient_invariants: ambient dims differ");
    std::size_t rk = rank(k), rkt = rank(ktilde);
    if (rk != rkt) throw RankError("quotient_invariants: ranks differ");
    IntMatrix h = hermite_normal_form(ktilde);
    IntMatrix coeffs(h.nrows());
    for (const IntVector& row : k.rows) {
        auto c = hnf_coordinates(h, row);
        if (!c) throw ContainmentError("quotient_invariants: k is not contained in ktilde");
        coeffs.rows.push_back(*c);
    }
    SmithDecomposition s = smith_normal_form(coeffs);
    AbelianGroup g;
    for (const Int& d : s.diag) {
        if (d == 0) throw InternalError("quotient_invariants: unexpected zero factor");
        if (d > 1) g.invariant_factors.push_back(d);
    }
    return g;
}

inline bool is_primitive(const IntVector& v) {
    if (is_zero_vector(v)) throw ZeroVectorError("is_primitive: zero vector");
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return true;
    }
    return g == 1;
}

// True iff the rows extend to a basis of Z^n: at most n rows and every
// invariant factor equal to 1.
inline bool is_basis_extendable(const IntMatrix& vecs) {
    if (vecs.nrows() > vecs.cols) return false;
    SmithDecomposition s = smith_normal_form(vecs);
    for (const Int& d : s.diag)
        if (d != 1) return false;
    return true;
}

// |det| of a square matrix, as the product of its invariant factors.
inline Int abs_det(const IntMatrix& m) {
    if (m.nrows() != m.cols) throw DimensionMismatch("abs_det: not square");
    Int p = 1;
    for (const Int& d : smith_normal_form(m).diag) p *= d;
    return p;
}

// Extends a saturated, full-row-rank lattice basis to a basis of Z^n.
// Returned rows together with the input rows form a unimodular matrix.
inline IntMatrix basis_completion(const IntMatrix& saturated) {
    std::size_t r = saturated.nrows();
    SmithDecomposition s = smith_normal_form(saturated);
    for (const Int& d : s.diag)
        if (d != 1) throw RankError("basis_completion: input not saturated of full row rank");
    IntMatrix comp(saturated.cols);
    for (std::size_t i = r; i < saturated.cols; ++i) comp.rows.push_back(s.right_inv.rows[i]);
    return comp;
}

// Solves x * a = b over the rationals (row vector x), if consistent.
inline std::optional<std::vector<Rat>> rational_row_solve(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.cols) throw DimensionMismatch("rational_row_solve: dim mismatch");
    const std::size_t m = a.nrows(), n = a.cols;
    // Gaussian elimination on the transposed system a^T x^T = b^T.
    std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = Rat(a.rows[j][i]);
        aug[i][m] = Rat(b[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t p = row;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(aug[row], aug[p]);
        Rat inv = aug[row][c];
        for (std::size_t j = 0; j <= m; ++j) aug[row][j] /= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = 0; j <= m; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug[i][m] != 0) return std::nullopt; // inconsistent
    std::vector<Rat> x(m, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][m];
    return x;
}

} // namespace torocob

#endif
