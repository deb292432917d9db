#pragma once

#include "brieskorn/matrix.hpp"
#include "brieskorn/rational.hpp"

#include <cstdint>
#include <vector>

namespace brieskorn::exact {

// Negative (Hirzebruch-Jung) continued fraction expansion of alpha/beta:
// alpha/beta = x1 - 1/(x2 - 1/(...)), every entry >= 2.
// Requires 0 < beta < alpha and gcd(alpha, beta) = 1.
std::vector<BigInt> neg_continued_fraction(const BigInt& alpha, const BigInt& beta);
std::vector<long long> neg_continued_fraction(long long alpha, long long beta);

// Evaluates [x1,...,xk] as x1 - 1/(x2 - ...), exact.
Rational evaluate_neg_continued_fraction(const std::vector<BigInt>& entries);

struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    bool operator==(const Inertia&) const = default;
};

// Exact inertia of a symmetric integer matrix via rational congruence
// diagonalization. Zero diagonal blocks are handled by the symmetric
// row/column addition trick.
Inertia signature(const IntegerMatrix& q);

inline bool is_negative_definite(const IntegerMatrix& q) {
    Inertia s = signature(q);
    return s.n_plus == 0 && s.n_zero == 0;
}

// Solves Q x = b exactly for symmetric Q with |det Q| = 1; the solution is
// the unique integer vector.
IntVector solve_unimodular(const IntegerMatrix& q, const IntVector& b);

// Solves Q w = d over GF(2) for Q with odd determinant; solution unique.
std::vector<uint8_t> solve_mod2(const IntegerMatrix& q, const std::vector<uint8_t>& d);

} // namespace brieskorn::exact
