#pragma once

#include "brieskorn/equivariant.hpp"
#include "brieskorn/invariants.hpp"
#include "brieskorn/knots.hpp"
#include "brieskorn/lattice.hpp"

#include <optional>
#include <string>

namespace brieskorn::obstruct {

// The sphere configuration fed to the extension obstruction: the fixed
// central node and the invariant first nodes of two distinct arms.
struct Configuration {
    int f1 = -1;   // central, [F1]^2 = -1
    int f2 = -1;   // [F1].[F2] = 1
    int f3 = -1;   // [F1].[F3] = 1, [F2].[F3] = 0
};

struct SelectResult {
    bool central_weight_fails = false;   // central weight != -1: no acyclic bounding exists
    long long central_weight = 0;
    std::optional<Configuration> config;
    std::string detail;
};

// Picks F1 = central and F2, F3 = first nodes of the first two arms (the
// reference labeling of the worked examples) and re-verifies the three intersection
// conditions from Q. A central weight other than -1 is a valid terminal
// outcome, not an error.
SelectResult select_configuration(const plumbing::PlumbingGraph& g,
                                  const equivariant::FixedPointCensus& census);

struct ObstructionCertificate {
    std::string verdict;             // "OBSTRUCTED" or "NO-CERTIFICATE"
    std::string failed_check;        // set on NO-CERTIFICATE
    Configuration config;
    // re-verified premises
    bool premises_verified = false;
    int unit_coordinate = -1;        // the k with column(F1) = +-e_k
    IntVector column_f1, column_f2, column_f3;
    // the support contradiction
    std::vector<int> support_f2, support_f3;
    std::string contradiction;
    // exhaustive search over the diagonal automorphism group (n <= 8)
    bool sign_search_ran = false;
    unsigned long long sign_assignments_checked = 0;
    BigInt signed_permutations_covered;
    bool coherent_basis_found = false;
};

// From a validated embedding B and a verified configuration, certifies that
// no signed permutation of the diagonal basis makes the invariant-sphere
// columns coordinatewise nonnegative: orthogonal sign-coherent vectors have
// disjoint supports, yet both supports contain the unit coordinate of F1.
// Never returns OBSTRUCTED if any premise fails.
ObstructionCertificate certify(const IntegerMatrix& q, const lattice::DiagonalEmbedding& b,
                               const Configuration& config);

enum class CertificateRoute {
    obstructed_certificate,   // configuration certificate emitted
    central_weight_fails,         // central weight != -1: closed model excluded
    donaldson_obstructs,      // no diagonal embedding: closed model excluded
    embedding_limit,          // search budget exhausted, route inconclusive
};

struct PipelineReport {
    long long p = 0;
    std::array<long long, 3> action_triple{};     // (pa, b, c)
    std::array<long long, 3> quotient_triple{};   // (a, b, c)
    bool obstructed = false;
    std::vector<std::string> routes_fired;

    // gauge-theoretic route on Sigma(pa,b,c)
    CertificateRoute certificate_route = CertificateRoute::embedding_limit;
    long long delta = 0;
    std::optional<equivariant::FixedPointCensus> census;
    std::optional<ObstructionCertificate> certificate;

    // quotient route: the extension quotient would be acyclic with boundary
    // Sigma(a,b,c) (or S^3 branched over a torus knot when a = 1)
    std::optional<invariants::BoundingReport> quotient_report;
    std::optional<knots::SliceObstructionReport> torus_knot_report;
};

// Full extension-obstruction pipeline for the standard Z/p action on
// Sigma(pa,b,c), reporting both the configuration-certificate route and the
// quotient-invariants route.
PipelineReport extension_obstruction_pipeline(long long p, long long a, long long b, long long c,
                                  const lattice::SearchOptions& opt = {});

} // namespace brieskorn::obstruct
