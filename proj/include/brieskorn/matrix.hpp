#pragma once

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"

#include <vector>

namespace brieskorn {

using IntVector = std::vector<BigInt>;

// Dense integer matrix, row-major, exact entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        require(rows >= 0 && cols >= 0, "IntegerMatrix: negative dimensions");
    }

    static IntegerMatrix identity(int n) {
        IntegerMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_symmetric() const;
    bool is_square() const { return rows_ == cols_; }

    IntegerMatrix transpose() const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator-() const;
    bool operator==(const IntegerMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntVector apply(const IntVector& v) const;   // matrix * column vector

    BigInt determinant() const;                  // fraction-free Bareiss

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

} // namespace brieskorn
