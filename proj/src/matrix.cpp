#include "brieskorn/matrix.hpp"

namespace brieskorn {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "IntegerMatrix: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = BigInt(rows[i][j]);
    }
    return m;
}

bool IntegerMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    require(cols_ == o.rows_, "IntegerMatrix: shape mismatch in product");
    IntegerMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator-() const {
    IntegerMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

IntVector IntegerMatrix::apply(const IntVector& v) const {
    require(static_cast<int>(v.size()) == cols_, "IntegerMatrix: vector length mismatch");
    IntVector r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

BigInt IntegerMatrix::determinant() const {
    require(is_square(), "determinant: square matrix required");
    int n = rows_;
    if (n == 0) return BigInt(1);
    IntegerMatrix m = *this;
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { p = i; break; }
            if (p < 0) return BigInt(0);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;   // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    BigInt d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

} // namespace brieskorn
