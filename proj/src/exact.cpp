#include "brieskorn/exact.hpp"

namespace brieskorn::exact {

std::vector<BigInt> neg_continued_fraction(const BigInt& alpha, const BigInt& beta) {
    require(beta.sign() > 0 && beta < alpha, "neg_continued_fraction: need 0 < beta < alpha");
    require(BigInt::gcd(alpha, beta).is_one(), "neg_continued_fraction: alpha, beta not coprime");
    std::vector<BigInt> out;
    BigInt a = alpha, b = beta;
    while (true) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        if (r.is_zero()) {
            out.push_back(q);
            break;
        }
        BigInt x = q + BigInt(1);   // ceiling quotient
        out.push_back(x);
        BigInt nb = x * b - a;      // in (0, b)
        a = b;
        b = nb;
    }
    for (const BigInt& x : out)
        ensure(x >= BigInt(2), "neg_continued_fraction: entry < 2");
    return out;
}

std::vector<long long> neg_continued_fraction(long long alpha, long long beta) {
    std::vector<BigInt> big = neg_continued_fraction(BigInt(alpha), BigInt(beta));
    std::vector<long long> out;
    out.reserve(big.size());
    for (const BigInt& x : big) out.push_back(x.to_int64());
    return out;
}

Rational evaluate_neg_continued_fraction(const std::vector<BigInt>& entries) {
    require(!entries.empty(), "evaluate_neg_continued_fraction: empty expansion");
    Rational v(entries.back());
    for (size_t i = entries.size() - 1; i-- > 0;)
        v = Rational(entries[i]) - Rational(BigInt(1)) / v;
    return v;
}

Inertia signature(const IntegerMatrix& q) {
    require(q.is_symmetric(), "signature: symmetric matrix required");
    const int n = q.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(q.at(i, j));

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    Inertia out;
    while (!active.empty()) {
        int pivot = -1;
        for (size_t t = 0; t < active.size(); ++t)
            if (!m[active[t]][active[t]].is_zero()) { pivot = static_cast<int>(t); break; }
        if (pivot < 0) {
            // all active diagonal entries vanish; look for an off-diagonal entry
            int ti = -1, tj = -1;
            for (size_t s = 0; s < active.size() && ti < 0; ++s)
                for (size_t t = s + 1; t < active.size(); ++t)
                    if (!m[active[s]][active[t]].is_zero()) { ti = static_cast<int>(s); tj = static_cast<int>(t); break; }
            if (ti < 0) {
                out.n_zero += static_cast<int>(active.size());
                break;
            }
            // symmetric add of row/col j into row/col i makes m[i][i] = 2*m[i][j] != 0
            int i = active[ti], j = active[tj];
            for (int k = 0; k < n; ++k) m[i][k] += m[j][k];
            for (int k = 0; k < n; ++k) m[k][i] += m[k][j];
            pivot = ti;
        }
        int p = active[pivot];
        Rational d = m[p][p];
        if (d.sign() > 0) ++out.n_plus; else ++out.n_minus;
        active.erase(active.begin() + pivot);
        for (int i : active) {
            if (m[i][p].is_zero()) continue;
            Rational f = m[i][p] / d;
            for (int j : active) m[i][j] -= f * m[p][j];
            m[i][p] = Rational();
        }
        for (int j : active) m[p][j] = Rational();
    }
    ensure(out.n_plus + out.n_minus + out.n_zero == n, "signature: rank bookkeeping failed");
    return out;
}

IntVector solve_unimodular(const IntegerMatrix& q, const IntVector& b) {
    require(q.is_square(), "solve_unimodular: square matrix required");
    require(q.is_symmetric(), "solve_unimodular: symmetric matrix required");
    const int n = q.rows();
    require(static_cast<int>(b.size()) == n, "solve_unimodular: vector length mismatch");
    BigInt det = q.determinant();
    require(det.abs().is_one(), "solve_unimodular: matrix is not unimodular");

    // rational Gaussian elimination with partial pivoting by nonzero entry
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(q.at(i, j));
        m[i][n] = Rational(b[i]);
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) { p = i; break; }
        ensure(p >= 0, "solve_unimodular: singular despite unit determinant");
        std::swap(m[k], m[p]);
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational f = m[i][k] / m[k][k];
            for (int j = k; j <= n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    IntVector x(n);
    std::vector<Rational> xr(n);
    for (int i = n; i-- > 0;) {
        Rational s = m[i][n];
        for (int j = i + 1; j < n; ++j) s -= m[i][j] * xr[j];
        xr[i] = s / m[i][i];
        ensure(xr[i].is_integer(), "solve_unimodular: non-integer solution");
        x[i] = xr[i].num();
    }
    IntVector check = q.apply(x);
    for (int i = 0; i < n; ++i)
        ensure(check[i] == b[i], "solve_unimodular: residual not zero");
    return x;
}

std::vector<uint8_t> solve_mod2(const IntegerMatrix& q, const std::vector<uint8_t>& d) {
    require(q.is_square(), "solve_mod2: square matrix required");
    const int n = q.rows();
    require(static_cast<int>(d.size()) == n, "solve_mod2: vector length mismatch");
    require(q.determinant().odd(), "solve_mod2: determinant is even");

    std::vector<std::vector<uint8_t>> m(n, std::vector<uint8_t>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = q.at(i, j).odd() ? 1 : 0;
        m[i][n] = d[i] & 1;
    }
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (m[i][k]) { p = i; break; }
        ensure(p >= 0, "solve_mod2: singular mod 2 despite odd determinant");
        std::swap(m[k], m[p]);
        for (int i = 0; i < n; ++i) {
            if (i == k || !m[i][k]) continue;
            for (int j = k; j <= n; ++j) m[i][j] ^= m[k][j];
        }
    }
    std::vector<uint8_t> w(n);
    for (int i = 0; i < n; ++i) w[i] = m[i][n];
    return w;
}

} // namespace brieskorn::exact
