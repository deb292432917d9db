#include <doctest.h>

#include "brieskorn/obstruct.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace brieskorn;
using namespace brieskorn::obstruct;
using seifert::BrieskornTriple;

TEST_CASE("configuration selection follows the reference labeling") {
    plumbing::PlumbingGraph g = plumbing::canonical_graph(BrieskornTriple(3, 4, 5));
    equivariant::FixedPointCensus c = equivariant::census(g, 2);
    SelectResult sel = select_configuration(g, c);
    CHECK(!sel.central_weight_fails);
    REQUIRE(sel.config);
    CHECK(sel.config->f1 == 0);
    CHECK(g.weights[sel.config->f2] == -3);
    CHECK(g.weights[sel.config->f3] == -4);
}

TEST_CASE("central weight away from -1 is a terminal outcome") {
    plumbing::PlumbingGraph g = plumbing::canonical_graph(BrieskornTriple(2, 3, 5));
    equivariant::FixedPointCensus c = equivariant::census(g, 7);
    SelectResult sel = select_configuration(g, c);
    CHECK(sel.central_weight_fails);
    CHECK(sel.central_weight == -2);
    CHECK(!sel.config);
}

TEST_CASE("certificate for Sigma(3,4,5) with the reference diagonalization") {
    IntegerMatrix q = test_helpers::q_sigma_3_4_5();
    lattice::DiagonalEmbedding b{test_helpers::c_inverse_3_4_5()};
    Configuration cfg{0, 1, 2};
    ObstructionCertificate cert = certify(q, b, cfg);
    CHECK(cert.verdict == "OBSTRUCTED");
    CHECK(cert.premises_verified);
    CHECK(cert.unit_coordinate == 0);
    // both supports contain the unit coordinate
    CHECK(std::find(cert.support_f2.begin(), cert.support_f2.end(), 0) != cert.support_f2.end());
    CHECK(std::find(cert.support_f3.begin(), cert.support_f3.end(), 0) != cert.support_f3.end());
    CHECK(cert.sign_search_ran);
    CHECK(!cert.coherent_basis_found);
    // n = 5: all 5! permutations iterated literally, each with 2^5 sign
    // patterns and 4 orientation choices
    CHECK(cert.sign_assignments_checked == 120ull * 32 * 4);
    CHECK(cert.signed_permutations_covered == BigInt(32) * BigInt(120) * BigInt(4));
}

TEST_CASE("certificate verdict is independent of the embedding class") {
    IntegerMatrix q345 = test_helpers::q_sigma_3_4_5();
    lattice::EnumerateResult e345 = lattice::enumerate_embeddings(q345);
    REQUIRE(e345.complete);
    for (const lattice::DiagonalEmbedding& e : e345.classes)
        CHECK(certify(q345, e, Configuration{0, 1, 2}).verdict == "OBSTRUCTED");

    IntegerMatrix q358 = test_helpers::q_sigma_3_5_8();
    lattice::EnumerateResult e358 = lattice::enumerate_embeddings(q358);
    REQUIRE(e358.complete);
    // arms of Sigma(3,5,8): (3,2) starts at node 1, (5,1) is node 3
    for (const lattice::DiagonalEmbedding& e : e358.classes)
        CHECK(certify(q358, e, Configuration{0, 1, 3}).verdict == "OBSTRUCTED");
}

TEST_CASE("certify never claims obstruction when a premise fails") {
    IntegerMatrix q = test_helpers::q_sigma_3_4_5();
    lattice::DiagonalEmbedding b{test_helpers::c_inverse_3_4_5()};

    CHECK(certify(q, b, Configuration{0, 1, 1}).verdict == "NO-CERTIFICATE");
    CHECK(certify(q, b, Configuration{0, 1, 9}).verdict == "NO-CERTIFICATE");

    // adjacent arm nodes: [F2].[F3] != 0
    ObstructionCertificate adj = certify(q, b, Configuration{0, 3, 4});
    CHECK(adj.verdict == "NO-CERTIFICATE");

    // wrong central: [F1]^2 != -1
    CHECK(certify(q, b, Configuration{1, 0, 2}).verdict == "NO-CERTIFICATE");

    // perturbed embedding fails validation
    IntegerMatrix bad = test_helpers::c_inverse_3_4_5();
    bad.at(0, 0) = BigInt(2);
    CHECK(certify(q, lattice::DiagonalEmbedding{bad}, Configuration{0, 1, 2}).verdict ==
          "NO-CERTIFICATE");

    // fuzzed perturbations of Q or B
    std::mt19937_64 rng(1122);
    for (int t = 0; t < 200; ++t) {
        IntegerMatrix qq = q;
        IntegerMatrix bb = test_helpers::c_inverse_3_4_5();
        int i = int(rng() % 5), j = int(rng() % 5);
        long long bump = 1 + (long long)(rng() % 3);
        if (rng() & 1) {
            qq.at(i, j) += BigInt(bump);
            qq.at(j, i) = qq.at(i, j);
        } else {
            bb.at(i, j) += BigInt(bump);
        }
        ObstructionCertificate cert = certify(qq, lattice::DiagonalEmbedding{bb},
                                              Configuration{0, 1, 2});
        if (cert.verdict == "OBSTRUCTED") CHECK(cert.premises_verified);
        // a perturbation that breaks any premise must not certify
        lattice::ValidationReport v = lattice::validate_embedding(qq, bb);
        if (!v.valid) CHECK(cert.verdict == "NO-CERTIFICATE");
    }
}

TEST_CASE("pipeline on the flagship involution") {
    PipelineReport rep = extension_obstruction_pipeline(2, 2, 3, 5);
    CHECK(rep.obstructed);
    CHECK(rep.action_triple == std::array<long long, 3>{4, 3, 5});
    CHECK(rep.certificate_route == CertificateRoute::obstructed_certificate);
    REQUIRE(rep.certificate);
    CHECK(rep.certificate->verdict == "OBSTRUCTED");
    REQUIRE(rep.quotient_report);
    CHECK(rep.quotient_report->obstructed);   // the Poincare sphere quotient
    CHECK(rep.routes_fired.size() == 2);
}

TEST_CASE("pipeline handles the S^3 quotient case") {
    PipelineReport rep = extension_obstruction_pipeline(2, 1, 5, 7);
    CHECK(rep.obstructed);
    REQUIRE(rep.torus_knot_report);
    CHECK(rep.torus_knot_report->obstructed);
    CHECK(rep.torus_knot_report->signature == knots::torus_signature(5, 7));
    CHECK(rep.torus_knot_report->signature != 0);
    CHECK(rep.certificate_route == CertificateRoute::obstructed_certificate);
}

TEST_CASE("pipeline on the Sigma_m family quotients") {
    for (long long m = 2; m <= 6; ++m) {
        PipelineReport rep = extension_obstruction_pipeline(2, m, 2 * m - 1, 2 * m + 1);
        CAPTURE(m);
        CHECK(rep.obstructed);
        REQUIRE(rep.quotient_report);
        CHECK(rep.quotient_report->obstructed);
        if (m % 2 == 0)
            CHECK(rep.quotient_report->mu_bar == -m / 2);
        else {
            CHECK(rep.quotient_report->mu_bar == 0);
            CHECK(rep.quotient_report->r == 1);
        }
    }
}

TEST_CASE("pipeline validates its inputs") {
    CHECK_THROWS_AS(extension_obstruction_pipeline(6, 2, 3, 5), validation_error);
    CHECK_THROWS_AS(extension_obstruction_pipeline(3, 2, 3, 5), validation_error);   // p | b
    CHECK_THROWS_AS(extension_obstruction_pipeline(2, 2, 4, 5), validation_error);   // not coprime
}

TEST_CASE("pipeline terminal outcomes for excluded closed models") {
    // Sigma(26,5,7): central weight -2, Remark-4.1 terminal
    PipelineReport rep = extension_obstruction_pipeline(13, 2, 5, 7);
    CHECK(rep.delta == -2);
    CHECK(rep.certificate_route == CertificateRoute::central_weight_fails);
    CHECK(rep.obstructed);
    REQUIRE(rep.quotient_report);
    CHECK(!rep.quotient_report->obstructed);   // Sigma(2,5,7) bounds a Mazur manifold

    // Sigma(56,39,41): delta = -1 but no diagonal embedding exists
    PipelineReport don = extension_obstruction_pipeline(7, 8, 39, 41);
    CHECK(don.delta == -1);
    CHECK(don.certificate_route == CertificateRoute::donaldson_obstructs);
    CHECK(don.obstructed);
}
