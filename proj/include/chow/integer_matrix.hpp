#pragma once

#include "chow/numeric.hpp"

#include <optional>
#include <vector>

namespace chow {

/// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
        IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw Error("ragged matrix literal");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const BigInt& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in product");
        IntegerMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Horizontal concatenation [A | B].
    static IntegerMatrix hconcat(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.rows_ != b.rows_) throw Error("row mismatch in hconcat");
        IntegerMatrix out(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
        }
        return out;
    }

    IntegerMatrix columns(const std::vector<std::size_t>& which) const {
        IntegerMatrix out(rows_, which.size());
        for (std::size_t j = 0; j < which.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, which[j]);
        return out;
    }

    BigInt determinant() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

/// Result of the Smith decomposition U * M * V = D with U, V unimodular and
/// D diagonal with d1 | d2 | ... | dk, all nonnegative.
struct SmithForm {
    std::vector<BigInt> diagonal; // length min(rows, cols)
    IntegerMatrix U;              // rows x rows
    IntegerMatrix V;              // cols x cols
    std::size_t rank = 0;         // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Basis (as matrix columns) of the integer kernel lattice {x : M x = 0}.
IntegerMatrix kernel_basis(const IntegerMatrix& m);

/// Basis (as matrix columns) of the column-span lattice of M.
IntegerMatrix column_space_basis(const IntegerMatrix& m);

/// Integer solution x of M x = b, if one exists.
std::optional<std::vector<BigInt>> solve(const IntegerMatrix& m, const std::vector<BigInt>& b);

} // namespace chow
