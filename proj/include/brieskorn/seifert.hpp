#pragma once

#include "brieskorn/bigint.hpp"
#include "brieskorn/errors.hpp"

#include <array>
#include <string>
#include <vector>

namespace brieskorn::seifert {

// Pairwise coprime Brieskorn parameters, stored sorted ascending; the
// argument order is kept for display. A component equal to 1 encodes the
// degenerate S^3 quotient and is only ever produced by quotient().
class BrieskornTriple {
public:
    BrieskornTriple(long long a1, long long a2, long long a3);

    const std::array<long long, 3>& sorted() const { return sorted_; }
    const std::array<long long, 3>& as_given() const { return given_; }
    long long product() const { return sorted_[0] * sorted_[1] * sorted_[2]; }
    bool all_at_least_two() const { return sorted_[0] >= 2; }

    bool operator==(const BrieskornTriple& o) const { return sorted_ == o.sorted_; }

    std::string to_string() const;

private:
    std::array<long long, 3> sorted_;
    std::array<long long, 3> given_;
};

struct SeifertPair {
    long long alpha = 0;
    long long beta = 0;
    bool operator==(const SeifertPair&) const = default;
};

// Seifert invariants (b; (alpha_i, beta_i)). Normalized data satisfies
// 0 < beta < alpha for every pair and A*(b + sum beta/alpha) = -1 with
// A = prod alpha.
struct SeifertData {
    long long central = 0;
    std::vector<SeifertPair> pairs;
    bool normalized = false;
};

// Canonical normalization of a Brieskorn triple: beta_i is the unique
// solution in (0, alpha_i) of beta_i * (A / alpha_i) = -1 (mod alpha_i),
// and the central weight makes the Euler identity exact.
SeifertData normalize(const BrieskornTriple& t);

// Quotient of Sigma(pa, b, c) by the standard semi-free Z/p action:
// divides the unique component divisible by p. A component of 1 in the
// output encodes the S^3 quotient with torus-knot branch set.
BrieskornTriple quotient(const BrieskornTriple& t, long long p);

enum class Family { casson_harer_even, casson_harer_odd, stern, sigma_m };

// Named infinite families. Parameters are validated against each family's
// parity/sign rules, and members with a component < 2 are rejected as
// degenerate.
BrieskornTriple family(Family f, const std::vector<long long>& params);

struct MontesinosParameters {
    long long e = 0;                      // central coefficient
    std::vector<SeifertPair> fractions;   // beta_i / alpha_i
};

MontesinosParameters montesinos_parameters(const BrieskornTriple& t);

bool is_prime(long long p);

} // namespace brieskorn::seifert
