#pragma once

#include "brieskorn/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brieskorn::knots {

// Integer polynomial, coefficients ascending by degree, no leading zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial from_int64(const std::vector<long long>& coeffs);

    const std::vector<BigInt>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    bool is_zero() const { return c_.empty(); }

    BigInt evaluate(const BigInt& t) const;
    IntPolynomial reversed() const;              // t^deg * f(1/t)
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial&) const = default;

    // f(t) = +- t^deg f(1/t)
    bool palindromic_up_to_sign() const;

    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

enum class FoxMilnorVerdict { pass, fail, inconclusive };

struct FoxMilnorResult {
    FoxMilnorVerdict verdict = FoxMilnorVerdict::inconclusive;
    std::optional<IntPolynomial> factor;   // delta = +- f * reversed(f) on pass
    BigInt bound_used;
    bool exhaustive = false;               // search covered the default bound
};

// Default coefficient bound for the factor search: max(1, 2^d * max|delta_i|)
// where 2d = deg delta.
BigInt fox_milnor_default_bound(const IntPolynomial& delta);

// Searches for f of degree d with |coefficients| <= bound such that
// delta(t) = +- t^d f(t) f(1/t). FAIL only under the (exhaustive) default
// bound; a smaller user bound yields INCONCLUSIVE on a miss.
FoxMilnorResult fox_milnor_test(const IntPolynomial& delta);
FoxMilnorResult fox_milnor_test(const IntPolynomial& delta, const BigInt& coefficient_bound);

// Signature of the right-handed (p,q) torus knot: the symmetrized Seifert
// form -(V_p (x) V_q) + transpose, V_n the (n-1)x(n-1) band matrix with -1
// on the diagonal and +1 above it. Convention pinned by sigma(T(2,3)) = -2.
long long torus_signature(long long p, long long q);

IntegerMatrix torus_symmetrized_seifert_form(long long p, long long q);

struct SliceObstructionReport {
    long long p = 0, q = 0;
    long long signature = 0;
    bool obstructed = false;   // nonzero signature, p, q >= 2
};

SliceObstructionReport slice_obstruction_report(long long p, long long q);

} // namespace brieskorn::knots
