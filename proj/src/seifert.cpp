#include "brieskorn/seifert.hpp"

#include "brieskorn/rational.hpp"

#include <algorithm>
#include <numeric>

namespace brieskorn::seifert {

BrieskornTriple::BrieskornTriple(long long a1, long long a2, long long a3) : given_{a1, a2, a3} {
    require(a1 >= 1 && a2 >= 1 && a3 >= 1, "BrieskornTriple: components must be >= 1");
    require(std::gcd(a1, a2) == 1 && std::gcd(a1, a3) == 1 && std::gcd(a2, a3) == 1,
            "BrieskornTriple: components must be pairwise coprime");
    int ones = (a1 == 1) + (a2 == 1) + (a3 == 1);
    require(ones <= 1, "BrieskornTriple: at most one component may equal 1");
    sorted_ = given_;
    std::sort(sorted_.begin(), sorted_.end());
}

std::string BrieskornTriple::to_string() const {
    return "Sigma(" + std::to_string(sorted_[0]) + "," + std::to_string(sorted_[1]) + "," +
           std::to_string(sorted_[2]) + ")";
}

namespace {

// modular inverse for coprime arguments
long long inverse_mod(long long a, long long m) {
    long long old_r = a % m, r = m;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
    }
    long long inv = old_s % m;
    return inv < 0 ? inv + m : inv;
}

} // namespace

SeifertData normalize(const BrieskornTriple& t) {
    require(t.all_at_least_two(), "normalize: all components must be >= 2");
    const auto& a = t.sorted();
    SeifertData d;
    d.normalized = true;
    BigInt big_a = BigInt(a[0]) * BigInt(a[1]) * BigInt(a[2]);
    BigInt beta_weighted_sum(0);
    for (int i = 0; i < 3; ++i) {
        long long alpha = a[i];
        BigInt cofactor = big_a / BigInt(alpha);
        long long cof_mod = cofactor.mod_floor(BigInt(alpha)).to_int64();
        // beta * (A/alpha) = -1 (mod alpha)
        long long beta = (inverse_mod(cof_mod, alpha) * ((alpha - 1) % alpha)) % alpha;
        ensure(beta > 0 && beta < alpha, "normalize: beta escaped (0, alpha)");
        d.pairs.push_back({alpha, beta});
        beta_weighted_sum += BigInt(beta) * cofactor;
    }
    BigInt numerator = BigInt(-1) - beta_weighted_sum;
    BigInt q, r;
    BigInt::divmod(numerator, big_a, q, r);
    ensure(r.is_zero(), "normalize: central weight is not an integer");
    d.central = q.to_int64();

    // exact Euler identity A*(b + sum beta/alpha) = -1
    Rational e(BigInt(d.central));
    for (const SeifertPair& p : d.pairs) e += Rational(BigInt(p.beta), BigInt(p.alpha));
    ensure(e * Rational(big_a) == Rational(BigInt(-1)), "normalize: Euler identity failed");
    return d;
}

BrieskornTriple quotient(const BrieskornTriple& t, long long p) {
    require(is_prime(p), "quotient: p must be prime");
    const auto& a = t.sorted();
    int hits = 0, which = -1;
    for (int i = 0; i < 3; ++i)
        if (a[i] % p == 0) { ++hits; which = i; }
    require(hits == 1, "quotient: p must divide exactly one component");
    std::array<long long, 3> out = a;
    out[which] /= p;
    return BrieskornTriple(out[0], out[1], out[2]);
}

namespace {

BrieskornTriple checked_member(long long a, long long b, long long c) {
    require(a >= 2 && b >= 2 && c >= 2, "family: degenerate member with a component < 2");
    require(std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1,
            "family: member is not pairwise coprime");
    return BrieskornTriple(a, b, c);
}

} // namespace

BrieskornTriple family(Family f, const std::vector<long long>& params) {
    switch (f) {
    case Family::casson_harer_even: {
        require(params.size() == 2, "casson_harer_even: expected (p, s)");
        long long p = params[0], s = params[1];
        require(p >= 2 && p % 2 == 0, "casson_harer_even: p must be even and >= 2");
        require(s >= 1 && s % 2 == 1, "casson_harer_even: s must be odd and >= 1");
        return checked_member(p, p * s - 1, p * s + 1);
    }
    case Family::casson_harer_odd: {
        require(params.size() == 3, "casson_harer_odd: expected (p, s, sign)");
        long long p = params[0], s = params[1], sg = params[2];
        require(p >= 3 && p % 2 == 1, "casson_harer_odd: p must be odd and >= 3");
        require(s >= 1, "casson_harer_odd: s must be >= 1");
        require(sg == 1 || sg == -1, "casson_harer_odd: sign must be +1 or -1");
        return checked_member(p, p * s + sg, p * s + 2 * sg);
    }
    case Family::stern: {
        require(params.size() == 3, "stern: expected (r, s, sign)");
        long long r = params[0], s = params[1], sg = params[2];
        require(r >= 2, "stern: r must be >= 2");
        require(s >= 1, "stern: s must be >= 1");
        require(sg == 1 || sg == -1, "stern: sign must be +1 or -1");
        long long mid = r * s + 2 * sg;
        return checked_member(r, mid, 2 * r * mid + r * s + sg);
    }
    case Family::sigma_m: {
        require(params.size() == 1, "sigma_m: expected (m)");
        long long m = params[0];
        require(m >= 2, "sigma_m: m must be >= 2");
        return checked_member(2 * m - 1, 2 * m, 2 * m + 1);
    }
    }
    throw validation_error("family: unknown family");
}

MontesinosParameters montesinos_parameters(const BrieskornTriple& t) {
    SeifertData d = normalize(t);
    return MontesinosParameters{d.central, d.pairs};
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace brieskorn::seifert
