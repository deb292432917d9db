// Acceptance suite: runs every criterion at its stated tolerance (all exact)
// and prints one PASS/FAIL line per criterion.

#include "brieskorn/json_io.hpp"
#include "brieskorn/obstruct.hpp"
#include "test_helpers.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#ifndef BRIESKORN_CLI_PATH
#define BRIESKORN_CLI_PATH "brieskorn"
#endif

using namespace brieskorn;
using json_io::Json;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

struct Check {
    bool ok = true;
    std::string why;
    void expect(bool cond, const std::string& message) {
        if (!cond && ok) {
            ok = false;
            why = message;
        }
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(BRIESKORN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

Json cli_json(const std::string& args, Check& c) {
    int code = 0;
    std::string out = run_cli(args, code);
    c.expect(code == 0, "CLI '" + args + "' exited with " + std::to_string(code));
    if (code != 0) return Json();
    return Json::parse(out, nullptr, false);
}

bool matrix_equals(const Json& got, const IntegerMatrix& want) {
    if (!got.is_array() || static_cast<int>(got.size()) != want.rows()) return false;
    for (int i = 0; i < want.rows(); ++i)
        for (int j = 0; j < want.cols(); ++j)
            if (!got[i][j].is_number_integer() ||
                got[i][j].get<long long>() != want.at(i, j).to_int64())
                return false;
    return true;
}

void criterion_1_2() {
    struct Case {
        int num;
        std::string cmd;
        std::vector<long long> weights;
        IntegerMatrix q;
        std::string what;
    };
    std::vector<Case> cases = {
        {1, "resolve 3 4 5", {-1, -3, -4, -3, -2}, test_helpers::q_sigma_3_4_5(),
         "resolve 3 4 5 emits the reference graph and intersection matrix"},
        {2, "resolve 3 5 8", {-1, -2, -2, -5, -8}, test_helpers::q_sigma_3_5_8(),
         "resolve 3 5 8 emits the reference graph and intersection matrix"},
    };
    for (const Case& cs : cases) {
        Check c;
        Json j = cli_json(cs.cmd + " --no-cache", c);
        if (c.ok) {
            c.expect(j["graph"]["central"] == 0, "central node is not node 0");
            std::vector<long long> weights;
            for (const Json& n : j["graph"]["nodes"]) weights.push_back(n["weight"].get<long long>());
            c.expect(weights == cs.weights, "node weights differ from the reference diagram");
            c.expect(matrix_equals(j["intersection_matrix"], cs.q),
                     "intersection matrix differs from the reference matrix");
        }
        report(cs.num, c.ok, cs.what, c.why);
    }
}

void criterion_3() {
    Check c;
    auto t0 = Clock::now();

    IntegerMatrix q345 = test_helpers::q_sigma_3_4_5();
    IntegerMatrix q358 = test_helpers::q_sigma_3_5_8();
    c.expect(lattice::validate_embedding(q345, test_helpers::c_inverse_3_4_5()).valid,
             "reference diagonalization of Sigma(3,4,5) fails validation");
    c.expect(lattice::validate_embedding(q358, test_helpers::c_inverse_3_5_8()).valid,
             "reference diagonalization of Sigma(3,5,8) fails validation");

    auto t345 = Clock::now();
    lattice::FindResult f345 = lattice::find_embedding(q345);
    double d345 = seconds_since(t345);
    c.expect(f345.status == lattice::SearchStatus::found && f345.embedding &&
                 lattice::validate_embedding(q345, f345.embedding->basis).valid,
             "no valid embedding found for Sigma(3,4,5)");
    c.expect(!lattice::entry_profile(*f345.embedding).has_non_unit,
             "Sigma(3,4,5) embedding has a non-unit entry");
    c.expect(d345 < 5.0, "Sigma(3,4,5) search took " + std::to_string(d345) + "s");

    auto t358 = Clock::now();
    lattice::FindResult f358 = lattice::find_embedding(q358);
    double d358 = seconds_since(t358);
    c.expect(f358.status == lattice::SearchStatus::found && f358.embedding &&
                 lattice::validate_embedding(q358, f358.embedding->basis).valid,
             "no valid embedding found for Sigma(3,5,8)");
    c.expect(d358 < 5.0, "Sigma(3,5,8) search took " + std::to_string(d358) + "s");

    lattice::EnumerateResult e358 = lattice::enumerate_embeddings(q358);
    c.expect(e358.complete, "Sigma(3,5,8) enumeration did not complete");
    bool some_non_unit = false;
    bool reference_class = false;
    IntegerMatrix reference = lattice::canonical_embedding_form(test_helpers::c_inverse_3_5_8());
    for (const lattice::DiagonalEmbedding& e : e358.classes) {
        if (lattice::entry_profile(e).has_non_unit) some_non_unit = true;
        if (e.basis == reference) reference_class = true;
    }
    c.expect(some_non_unit, "no enumerated class of Sigma(3,5,8) has an entry >= 2");
    c.expect(reference_class, "the reference embedding class of Sigma(3,5,8) was not enumerated");

    report(3, c.ok,
           "reference diagonalizations validate; searches succeed; entry profiles match "
           "(total " + std::to_string(seconds_since(t0)).substr(0, 5) + "s)",
           c.why);
}

void criterion_4() {
    Check c;
    for (long long m : {2, 4, 6}) {
        plumbing::PlumbingGraph g =
            plumbing::direct_graph(0, {{2 * m - 1, 1}, {m, -1}, {2 * m + 1, 1}});
        c.expect(invariants::mu_bar(g) == -m / 2,
                 "mu_bar(Gamma'_" + std::to_string(m) + ") != -m/2");
        exact::Inertia s = exact::signature(plumbing::intersection_matrix(g));
        c.expect(s.n_plus == s.n_minus && s.n_zero == 0,
                 "sigma(Q(Gamma'_" + std::to_string(m) + ")) != 0");
    }
    for (long long m : {3, 5, 7}) {
        plumbing::PlumbingGraph g =
            plumbing::direct_graph(0, {{2 * m - 1, 1}, {m, -1}, {2 * m + 1, 1}});
        c.expect(invariants::mu_bar(g) == 0, "mu_bar(Gamma'_" + std::to_string(m) + ") != 0");
        invariants::DeltaR dr =
            invariants::fintushel_stern_R(seifert::BrieskornTriple(2 * m - 1, m, 2 * m + 1));
        c.expect(dr.delta == -2 && dr.r == 1,
                 "(delta, R) != (-2, 1) for m = " + std::to_string(m));
    }
    report(4, c.ok, "Sigma'_m family: mu_bar = -m/2 (m even), mu_bar = 0 and (delta, R) = (-2, 1) "
                    "(m odd), sigma(Q(Gamma'_m)) = 0", c.why);
}

void criterion_5() {
    Check c;
    auto t0 = Clock::now();
    long long mu_e8 = invariants::mu_bar(plumbing::canonical_graph(seifert::BrieskornTriple(2, 3, 5)));
    long long mu_gamma = invariants::mu_bar(plumbing::direct_graph(0, {{3, 1}, {2, -1}, {5, 1}}));
    c.expect(mu_e8 == -1, "mu_bar from the E8 graph != -1");
    c.expect(mu_gamma == -1, "mu_bar from Gamma'_2 != -1");
    c.expect(invariants::rokhlin_mu(plumbing::canonical_graph(seifert::BrieskornTriple(2, 3, 5))) == 1,
             "Rokhlin invariant of Sigma(2,3,5) != 1");
    lattice::EnumerateResult e8 = lattice::enumerate_embeddings(test_helpers::q_e8());
    double dt = seconds_since(t0);
    c.expect(e8.complete && e8.classes.empty(), "E8 embedding search not exhaustively empty");
    c.expect(dt < 10.0, "E8 search took " + std::to_string(dt) + "s");
    report(5, c.ok, "Poincare sphere: mu_bar = -1 from both presentations, mu = 1, E8 admits no "
                    "diagonal embedding (" + std::to_string(dt).substr(0, 5) + "s)", c.why);
}

void criterion_6() {
    Check c;
    plumbing::PlumbingGraph g = plumbing::canonical_graph(seifert::BrieskornTriple(3, 4, 5));
    equivariant::FixedPointCensus cen = equivariant::census(g, 2);
    c.expect(cen.isolated_points.size() == 3, "expected exactly 3 isolated fixed points");
    for (const auto& pt : cen.isolated_points)
        c.expect(pt == equivariant::rotation_class(1, -1, 2),
                 "isolated point class differs from (1,-1)");
    c.expect(cen.fixed_spheres.size() == 1 && cen.fixed_spheres[0].node == 0 &&
                 cen.fixed_spheres[0].self_intersection == -1,
             "fixed sphere is not the central -1 node");
    c.expect(cen.fixed_disks.size() == 1 && cen.fixed_disks[0].node == 2 &&
                 cen.fixed_disks[0].fiber_order == 4,
             "fixed disk is not on the -4 node");
    c.expect(cen.euler_fixed_set_closed() == 7, "closed-model Euler count != 7");

    equivariant::FixedSphereClass f = equivariant::fixed_sphere_class(g, 2);
    std::vector<long long> expect{15, 5, 4, 6, 3};
    for (int i = 0; i < 5; ++i)
        c.expect(f.coordinates[i].abs().to_int64() == expect[i],
                 "|[F]| != (15,5,4,6,3) in the plumbing basis");
    c.expect(f.square == BigInt(-4), "[F]^2 != -4");
    c.expect(equivariant::g_signature_solve(cen, g.size(), 2) == -4,
             "G-signature route did not return -4");

    IntVector diag = test_helpers::c_inverse_3_4_5().apply(f.coordinates);
    std::vector<long long> want{0, 1, 1, -1, 1};
    bool plus = true, minus = true;
    for (int i = 0; i < 5; ++i) {
        if (diag[i] != BigInt(want[i])) plus = false;
        if (diag[i] != BigInt(-want[i])) minus = false;
    }
    c.expect(plus || minus, "[F] != +-(0,1,1,-1,1) in the reference diagonal basis");
    report(6, c.ok, "equivariant census of Sigma(3,4,5), p = 2: points, sphere, disk, Euler "
                    "count, [F] and [F]^2 via both routes", c.why);
}

void criterion_7() {
    Check c;
    std::mt19937_64 rng(20240001);
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 100) {
        long long p = primes[rng() % 6];
        long long a = 1 + static_cast<long long>(rng() % 50);
        long long pa = p * a;
        long long q1 = 1 + static_cast<long long>(rng() % (pa - 1));
        if (std::gcd(pa, q1) != 1) continue;
        ++done;
        std::vector<long long> arm;
        for (long long x : exact::neg_continued_fraction(pa, q1)) arm.push_back(-x);
        equivariant::Matrix2 l{};
        for (size_t k = 0; k < arm.size(); ++k) {
            equivariant::Matrix2 t = equivariant::rotation_step(arm[k]);
            l = k == 0 ? t : equivariant::mat2_mul(t, equivariant::mat2_mul(equivariant::kSwap, l));
            c.expect(std::llabs(equivariant::mat2_det(l)) == 1, "det L_k != +-1");
        }
        c.expect(std::llabs(l[1][0]) == pa && std::llabs(l[1][1]) == q1,
                 "bottom row of L_n != (+-pa, +-q1) for pa=" + std::to_string(pa) +
                     ", q1=" + std::to_string(q1));
        c.expect(l[0][0] % p != 0, "r = 0 mod p at the last node");
    }
    report(7, c.ok, "rotation transfer: bottom row of L_n is (+-pa, +-q1) and det L_k = +-1 on "
                    "100 random arms", c.why);
}

void criterion_8() {
    Check c;
    auto t0 = Clock::now();

    // flagship through the CLI
    Json j = cli_json("obstruct 2 2 3 5 --no-cache", c);
    if (c.ok) {
        c.expect(j["verdict"] == "OBSTRUCTED", "flagship verdict is not OBSTRUCTED");
        c.expect(j["certificate_route"] == "obstructed_certificate", "flagship took no certificate route");
        c.expect(j["certificate"]["premises_verified"] == true, "flagship certificate premises unverified");
        c.expect(j["certificate"]["sign_search"]["ran"] == true &&
                     j["certificate"]["sign_search"]["coherent_basis_found"] == false,
                 "flagship sign search did not confirm emptiness");
    }

    // every Casson-Harer member with parameters p <= 8, s <= 5, every
    // admissible prime <= 13
    std::vector<seifert::BrieskornTriple> members;
    for (long long p = 2; p <= 8; p += 2)
        for (long long s = 1; s <= 5; s += 2) {
            if (p == 2 && s == 1) continue;   // degenerate (2,1,3)
            members.push_back(seifert::family(seifert::Family::casson_harer_even, {p, s}));
        }
    for (long long p = 3; p <= 7; p += 2)
        for (long long s = 1; s <= 5; ++s)
            for (long long sg : {1ll, -1ll}) {
                if (p == 3 && s == 1 && sg == -1) continue;   // degenerate (3,2,1)
                members.push_back(seifert::family(seifert::Family::casson_harer_odd, {p, s, sg}));
            }

    int pipelines = 0, certificates = 0, closed_model_excluded = 0;
    for (const seifert::BrieskornTriple& t : members) {
        long long a = t.sorted()[0], b = t.sorted()[1], cc = t.sorted()[2];
        for (long long q : {2ll, 3ll, 5ll, 7ll, 11ll, 13ll}) {
            if (a % q == 0 || b % q == 0 || cc % q == 0) continue;   // admissible primes only
            ++pipelines;
            obstruct::PipelineReport rep = obstruct::extension_obstruction_pipeline(q, a, b, cc);
            c.expect(rep.obstructed, "pipeline not OBSTRUCTED for " + t.to_string() +
                                         ", p = " + std::to_string(q));
            if (rep.certificate_route == obstruct::CertificateRoute::obstructed_certificate) {
                ++certificates;
                c.expect(rep.certificate && rep.certificate->verdict == "OBSTRUCTED" &&
                             rep.certificate->premises_verified,
                         "incomplete certificate for " + t.to_string());
                // every node is classified into exactly one of the two lists
                int n = static_cast<int>(rep.census->invariant_spheres.size() +
                                         rep.census->fixed_spheres.size());
                if (n <= 8) {
                    c.expect(rep.certificate->sign_search_ran,
                             "sign search skipped at rank " + std::to_string(n));
                    c.expect(!rep.certificate->coherent_basis_found,
                             "sign search found a coherent basis for " + t.to_string());
                }
            } else {
                ++closed_model_excluded;
                c.expect(rep.certificate_route != obstruct::CertificateRoute::embedding_limit,
                         "embedding search hit its budget for " + t.to_string());
            }
        }
    }
    double dt = seconds_since(t0);
    c.expect(dt < 30.0, "criterion took " + std::to_string(dt) + "s");
    std::ostringstream what;
    what << "extension obstruction on " << pipelines << " (member, prime) pairs: " << certificates
         << " configuration certificates, " << closed_model_excluded
         << " closed-model exclusions (" << std::to_string(dt).substr(0, 5) << "s)";
    report(8, c.ok, what.str(), c.why);
}

void criterion_9() {
    Check c;
    auto delta_of = [](long long a, long long b, long long cc) {
        return invariants::fintushel_stern_R(seifert::BrieskornTriple(a, b, cc)).delta;
    };
    c.expect(delta_of(2, 5, 7) == -1, "delta(Sigma(2,5,7)) != -1");
    c.expect(delta_of(2, 3, 13) == -1, "delta(Sigma(2,3,13)) != -1");
    c.expect(delta_of(3, 4, 5) == -1, "delta(Sigma(3,4,5)) != -1");
    c.expect(delta_of(3, 5, 34) == -1, "delta(Sigma(3,5,34)) != -1");
    for (long long p = 2; p <= 8; p += 2)
        for (long long s = 1; s <= 5; s += 2) {
            if (p == 2 && s == 1) continue;
            seifert::BrieskornTriple t = seifert::family(seifert::Family::casson_harer_even, {p, s});
            c.expect(delta_of(t.sorted()[0], t.sorted()[1], t.sorted()[2]) == -1,
                     "delta != -1 for " + t.to_string());
        }
    for (long long p = 3; p <= 7; p += 2)
        for (long long s = 1; s <= 5; ++s)
            for (long long sg : {1ll, -1ll}) {
                if (p == 3 && s == 1 && sg == -1) continue;
                seifert::BrieskornTriple t =
                    seifert::family(seifert::Family::casson_harer_odd, {p, s, sg});
                c.expect(delta_of(t.sorted()[0], t.sorted()[1], t.sorted()[2]) == -1,
                         "delta != -1 for " + t.to_string());
            }
    for (auto [a, b, cc] : {std::array<long long, 3>{5, 3, 7}, std::array<long long, 3>{2, 3, 5}}) {
        invariants::DeltaR dr = invariants::fintushel_stern_R(seifert::BrieskornTriple(a, b, cc));
        c.expect(dr.delta == -2 && dr.r == 1,
                 "(delta, R) != (-2, 1) for Sigma(" + std::to_string(a) + "," + std::to_string(b) +
                     "," + std::to_string(cc) + ")");
    }
    report(9, c.ok, "central weights: delta = -1 on the bounding corpus and all swept "
                    "Casson-Harer members; (delta, R) = (-2, 1) for Sigma(5,3,7) and Sigma(2,3,5)",
           c.why);
}

void criterion_10() {
    Check c;
    knots::FoxMilnorResult fail =
        knots::fox_milnor_test(knots::IntPolynomial::from_int64({2, -5, -2, 11, -2, -5, 2}));
    c.expect(fail.verdict == knots::FoxMilnorVerdict::fail && fail.exhaustive,
             "Fox-Milnor did not FAIL exhaustively on the degree-6 polynomial");
    knots::FoxMilnorResult pass =
        knots::fox_milnor_test(knots::IntPolynomial::from_int64({2, -5, 2}));
    c.expect(pass.verdict == knots::FoxMilnorVerdict::pass && pass.factor &&
                 *pass.factor == knots::IntPolynomial::from_int64({2, -1}),
             "Fox-Milnor did not PASS with f = 2 - t");
    c.expect(knots::torus_signature(2, 3) == -2, "sigma(T(2,3)) != -2");
    for (long long q = 3; q <= 21; q += 2)
        c.expect(knots::torus_signature(2, q) == 1 - q,
                 "sigma(T(2," + std::to_string(q) + ")) != 1 - q");
    c.expect(knots::torus_signature(1, 9) == 0, "sigma(T(1,q)) != 0");
    report(10, c.ok, "Fox-Milnor verdicts and torus-knot signatures", c.why);
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << " (total " << std::to_string(seconds_since(t0)).substr(0, 5) << "s)\n";
    return failures == 0 ? 0 : 1;
}
