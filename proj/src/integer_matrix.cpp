#include "chow/integer_matrix.hpp"

#include <cstdlib>

namespace chow {

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += q * row[b]
void add_row(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += q * m.at(b, j);
}

void add_col(IntegerMatrix& m, std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += q * m.at(i, b);
}

void negate_row(IntegerMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

} // namespace

BigInt IntegerMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    // fraction-free Gaussian elimination (Bareiss)
    IntegerMatrix a = *this;
    BigInt sign = 1, prev = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return n == 0 ? BigInt(1) : BigInt(sign * a.at(n - 1, n - 1));
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix d = m;
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    IntegerMatrix v = IntegerMatrix::identity(m.cols());
    const std::size_t k = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < k; ++t) {
        // find a pivot of smallest absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        BigInt best = 0;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (d.at(i, j) == 0) continue;
                BigInt a = abs_big(d.at(i, j));
                if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
            }
        if (!found) break;
        if (pi != t) { swap_rows(d, t, pi); swap_rows(u, t, pi); }
        if (pj != t) { swap_cols(d, t, pj); swap_cols(v, t, pj); }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (d.at(i, t) != 0) {
                    // remainder smaller than pivot: swap it up and restart
                    swap_rows(d, t, i); swap_rows(u, t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, t, j); swap_cols(v, t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // enforce divisibility of the remaining block by the pivot
            for (std::size_t i = t + 1; i < m.rows() && !dirty; ++i)
                for (std::size_t j = t + 1; j < m.cols() && !dirty; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(u, t, i, 1);
                        dirty = true;
                    }
        }
        if (d.at(t, t) < 0) { negate_row(d, t); negate_row(u, t); }
    }

    SmithForm out;
    out.diagonal.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.diagonal[i] = d.at(i, i);
    out.U = std::move(u);
    out.V = std::move(v);
    out.rank = 0;
    for (const auto& x : out.diagonal)
        if (x != 0) ++out.rank;
    return out;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    // U M V = D, so M (V e_j) = 0 exactly when the j-th diagonal entry
    // vanishes (or j is past the diagonal).
    SmithForm s = smith_normal_form(m);
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool zero = j >= s.diagonal.size() || s.diagonal[j] == 0;
        if (zero) cols.push_back(j);
    }
    return s.V.columns(cols);
}

IntegerMatrix column_space_basis(const IntegerMatrix& m) {
    // col-span(M) = col-span(U^{-1} D); a basis is d_j * (U^{-1} e_j) over
    // nonzero d_j. Recover U^{-1} by solving U X = I through the SNF of U,
    // or cheaper: apply the inverse row operations. Here we just invert U
    // with Bareiss-free back substitution via adjugate-free elimination:
    // since U is unimodular and small, solve column by column.
    SmithForm s = smith_normal_form(m);
    const std::size_t n = m.rows();
    // invert the unimodular U by Smith machinery: snf(U) gives U' U V' = I.
    SmithForm su = smith_normal_form(s.U);
    // su.U * s.U * su.V = I (diagonal of ones), hence s.U^{-1} = su.V * su.U.
    IntegerMatrix uinv = su.V * su.U;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < s.diagonal.size(); ++j)
        if (s.diagonal[j] != 0) keep.push_back(j);
    IntegerMatrix out(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            out.at(i, c) = s.diagonal[keep[c]] * uinv.at(i, keep[c]);
    return out;
}

std::optional<std::vector<BigInt>> solve(const IntegerMatrix& m, const std::vector<BigInt>& b) {
    if (b.size() != m.rows()) throw Error("right-hand side size mismatch");
    SmithForm s = smith_normal_form(m);
    // M x = b  <=>  D (V^{-1} x) = U b
    std::vector<BigInt> ub(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) ub[i] += s.U.at(i, j) * b[j];
    std::vector<BigInt> z(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt di = i < s.diagonal.size() ? s.diagonal[i] : BigInt(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            z[i] = ub[i] / di;
        }
    }
    std::vector<BigInt> x(m.cols(), 0);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.V.at(i, j) * z[j];
    return x;
}

} // namespace chow
