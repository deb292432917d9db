#include "brieskorn/json_io.hpp"
#include "brieskorn/obstruct.hpp"
#include "embed_cache.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

namespace {

using namespace brieskorn;
using json_io::Json;
using json_io::to_json;

struct GlobalOptions {
    std::string format = "json";          // json | pretty | tsv (sweep only)
    std::string cache_dir;
    bool no_cache = false;
    uint64_t search_limit = lattice::SearchOptions{}.node_limit;
};

void emit(const Json& j, const GlobalOptions& g) {
    if (g.format == "pretty")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

lattice::SearchOptions search_options(const GlobalOptions& g) {
    lattice::SearchOptions opt;
    opt.node_limit = g.search_limit;
    return opt;
}

std::unique_ptr<cli::EmbedCache> make_cache(const GlobalOptions& g) {
    if (g.no_cache) return nullptr;
    std::filesystem::path dir = g.cache_dir.empty() ? cli::EmbedCache::default_dir()
                                                    : std::filesystem::path(g.cache_dir);
    return std::make_unique<cli::EmbedCache>(dir);
}

Json resolve_json(long long a, long long b, long long c) {
    seifert::BrieskornTriple t(a, b, c);
    seifert::SeifertData d = seifert::normalize(t);
    plumbing::PlumbingGraph g = plumbing::canonical_graph(d);
    IntegerMatrix q = plumbing::intersection_matrix(g);
    Json j;
    j["triple"] = to_json(t);
    j["seifert"] = to_json(d);
    j["montesinos"] = to_json(seifert::montesinos_parameters(t));
    j["graph"] = to_json(g);
    j["intersection_matrix"] = to_json(q);
    j["determinant"] = to_json(q.determinant());
    j["signature"] = to_json(exact::signature(q));
    j["wu_class"] = to_json(plumbing::wu_class(g));
    j["euler_characteristic_closed"] = plumbing::euler_characteristic_closed(g);
    return j;
}

Json quotient_json(long long p, long long a1, long long a2, long long a3) {
    seifert::BrieskornTriple total(a1, a2, a3);
    seifert::BrieskornTriple q = seifert::quotient(total, p);
    Json j;
    j["p"] = p;
    j["total"] = to_json(total);
    j["quotient"] = to_json(q);
    bool s3 = q.sorted()[0] == 1;
    j["s3_quotient"] = s3;
    if (s3) j["branch_torus_knot"] = Json{q.sorted()[1], q.sorted()[2]};
    return j;
}

Json embed_json(long long a, long long b, long long c, int enumerate_limit,
                const GlobalOptions& g) {
    seifert::BrieskornTriple t(a, b, c);
    plumbing::PlumbingGraph graph = plumbing::canonical_graph(t);
    IntegerMatrix q = plumbing::intersection_matrix(graph);
    lattice::SearchOptions opt = search_options(g);
    std::unique_ptr<cli::EmbedCache> cache = make_cache(g);
    opt.cache = cache.get();

    Json j;
    j["triple"] = to_json(t);
    j["intersection_matrix"] = to_json(q);
    lattice::FindResult f = lattice::find_embedding(q, opt);
    switch (f.status) {
    case lattice::SearchStatus::found: j["status"] = "found"; break;
    case lattice::SearchStatus::none: j["status"] = "none"; break;
    case lattice::SearchStatus::limit_exceeded: j["status"] = "limit_exceeded"; break;
    }
    if (f.embedding) {
        j["basis"] = to_json(*f.embedding);
        j["entry_profile"] = to_json(lattice::entry_profile(*f.embedding));
    }
    if (enumerate_limit > 0) {
        lattice::SearchOptions eopt = search_options(g);
        eopt.max_classes = static_cast<size_t>(enumerate_limit);
        lattice::EnumerateResult e = lattice::enumerate_embeddings(q, eopt);
        Json classes = Json::array();
        for (const lattice::DiagonalEmbedding& emb : e.classes) {
            Json cj;
            cj["basis"] = to_json(emb);
            cj["entry_profile"] = to_json(lattice::entry_profile(emb));
            classes.push_back(std::move(cj));
        }
        j["classes"] = std::move(classes);
        j["enumeration_complete"] = e.complete;
    }
    return j;
}

Json equivariant_json(long long p, long long a, long long b, long long c) {
    require(a >= 1 && b >= 2 && c >= 2, "equivariant: need a >= 1 and b, c >= 2");
    seifert::BrieskornTriple total(p * a, b, c);
    plumbing::PlumbingGraph g = plumbing::canonical_graph(total);
    equivariant::FixedPointCensus cen = equivariant::census(g, p);
    Json j;
    j["p"] = p;
    j["action_triple"] = to_json(total);
    j["graph"] = to_json(g);
    j["census"] = to_json(cen);
    j["euler_characteristic_closed"] = plumbing::euler_characteristic_closed(g);
    if (cen.fixed_disks.size() == 1) {
        equivariant::FixedSphereClass f = equivariant::fixed_sphere_class(g, p);
        j["fixed_sphere_class"] = to_json(f);
        if (p == 2) j["g_signature_square"] = equivariant::g_signature_solve(cen, g.size(), p);
    }
    return j;
}

Json fox_milnor_json(const std::vector<long long>& coeffs, long long bound) {
    knots::IntPolynomial delta = knots::IntPolynomial::from_int64(coeffs);
    knots::FoxMilnorResult r = bound > 0 ? knots::fox_milnor_test(delta, BigInt(bound))
                                         : knots::fox_milnor_test(delta);
    Json j;
    Json in = Json::array();
    for (long long v : coeffs) in.push_back(v);
    j["delta"] = std::move(in);
    j.update(to_json(r));
    return j;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact computations for Brieskorn homology spheres: plumbing graphs,\n"
                 "lattice embeddings, equivariant fixed-point data and acyclic-bounding\n"
                 "obstructions"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    if (const char* env = std::getenv("BRIESKORN_SEARCH_LIMIT"))
        g.search_limit = std::strtoull(env, nullptr, 10);
    app.add_option("--format", g.format, "output format: json, pretty or tsv (sweep only)")
        ->check(CLI::IsMember({"json", "pretty", "tsv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir,
                   "embedding cache directory (default: $BRIESKORN_CACHE_DIR, else "
                   "$XDG_CACHE_HOME/brieskorn, else ~/.cache/brieskorn)");
    app.add_flag("--no-cache", g.no_cache, "disable the embedding cache");
    app.add_option("--limit", g.search_limit,
                   "embedding search node budget (default: $BRIESKORN_SEARCH_LIMIT or 100000000)")
        ->capture_default_str();

    long long a = 0, b = 0, c = 0, p = 0, q = 0;
    int enumerate_limit = 0;
    long long fm_bound = 0;
    std::vector<long long> fm_coeffs;
    std::string family, range_spec, p_range, s_range, r_range, sign = "both";

    CLI::App* cmd_resolve = app.add_subcommand(
        "resolve", "Seifert data, canonical plumbing graph and intersection form of Sigma(a,b,c)");
    cmd_resolve->add_option("a", a)->required();
    cmd_resolve->add_option("b", b)->required();
    cmd_resolve->add_option("c", c)->required();

    CLI::App* cmd_invariants = app.add_subcommand(
        "invariants", "acyclic-bounding obstruction report (mu, mu_bar, delta, R, Donaldson)");
    cmd_invariants->add_option("a", a)->required();
    cmd_invariants->add_option("b", b)->required();
    cmd_invariants->add_option("c", c)->required();

    CLI::App* cmd_embed = app.add_subcommand(
        "embed", "diagonal lattice embedding of the canonical intersection form");
    cmd_embed->add_option("a", a)->required();
    cmd_embed->add_option("b", b)->required();
    cmd_embed->add_option("c", c)->required();
    cmd_embed->add_option("--enumerate", enumerate_limit,
                          "also enumerate embedding classes (up to N of them)");

    CLI::App* cmd_equivariant = app.add_subcommand(
        "equivariant", "fixed-point census of the standard Z/p action on Sigma(p*a,b,c)");
    cmd_equivariant->add_option("p", p)->required();
    cmd_equivariant->add_option("a", a)->required();
    cmd_equivariant->add_option("b", b)->required();
    cmd_equivariant->add_option("c", c)->required();

    CLI::App* cmd_obstruct = app.add_subcommand(
        "obstruct", "extension obstruction for the standard Z/p action on Sigma(p*a,b,c)");
    cmd_obstruct->add_option("p", p)->required();
    cmd_obstruct->add_option("a", a)->required();
    cmd_obstruct->add_option("b", b)->required();
    cmd_obstruct->add_option("c", c)->required();

    CLI::App* cmd_quotient = app.add_subcommand(
        "quotient", "quotient of Sigma(a1,a2,a3) by the standard Z/p action");
    cmd_quotient->add_option("p", p)->required();
    cmd_quotient->add_option("a1", a)->required();
    cmd_quotient->add_option("a2", b)->required();
    cmd_quotient->add_option("a3", c)->required();

    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "bounding reports across a family (sigma-m, sigma-m-quotient, "
                 "casson-harer-even, casson-harer-odd, stern)");
    cmd_sweep->add_option("family", family)->required();
    cmd_sweep->add_option("range", range_spec, "primary parameter range N..M (sigma-m families)");
    cmd_sweep->add_option("--p", p_range, "p (or m) range N..M");
    cmd_sweep->add_option("--r", r_range, "r range N..M (stern)");
    cmd_sweep->add_option("--s", s_range, "s range N..M");
    cmd_sweep->add_option("--sign", sign, "sign selector: +, - or both")->capture_default_str();

    CLI::App* cmd_fox = app.add_subcommand(
        "fox-milnor", "Fox-Milnor factorization test on an Alexander polynomial");
    cmd_fox->add_option("--coeffs", fm_coeffs, "coefficients, ascending degree")
        ->required()
        ->delimiter(',');
    cmd_fox->add_option("--bound", fm_bound, "coefficient bound (default: exhaustive)");

    CLI::App* cmd_torus = app.add_subcommand(
        "torus-signature", "signature and slice obstruction of the (p,q) torus knot");
    cmd_torus->add_option("p", p)->required();
    cmd_torus->add_option("q", q)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_resolve->parsed()) {
        emit(resolve_json(a, b, c), g);
    } else if (cmd_invariants->parsed()) {
        lattice::SearchOptions opt = search_options(g);
        std::unique_ptr<cli::EmbedCache> cache = make_cache(g);
        opt.cache = cache.get();
        emit(to_json(invariants::bounding_report(seifert::BrieskornTriple(a, b, c), opt)), g);
    } else if (cmd_embed->parsed()) {
        emit(embed_json(a, b, c, enumerate_limit, g), g);
    } else if (cmd_equivariant->parsed()) {
        emit(equivariant_json(p, a, b, c), g);
    } else if (cmd_obstruct->parsed()) {
        lattice::SearchOptions opt = search_options(g);
        std::unique_ptr<cli::EmbedCache> cache = make_cache(g);
        opt.cache = cache.get();
        emit(to_json(obstruct::extension_obstruction_pipeline(p, a, b, c, opt)), g);
    } else if (cmd_quotient->parsed()) {
        emit(quotient_json(p, a, b, c), g);
    } else if (cmd_sweep->parsed()) {
        if (app.get_option("--format")->count() == 0) g.format = "tsv";
        cli::Range primary{0, -1}, secondary{0, -1};
        if (!range_spec.empty()) primary = cli::parse_range(range_spec);
        if (!p_range.empty()) primary = cli::parse_range(p_range);
        if (!r_range.empty()) primary = cli::parse_range(r_range);
        if (!s_range.empty()) secondary = cli::parse_range(s_range);
        lattice::SearchOptions opt = search_options(g);
        std::unique_ptr<cli::EmbedCache> cache = make_cache(g);
        opt.cache = cache.get();
        std::vector<std::string> skipped;
        std::vector<cli::SweepRow> rows =
            cli::run_sweep(family, primary, secondary, sign, opt, skipped);
        for (const std::string& s : skipped) std::cerr << "skipped " << s << "\n";
        if (g.format == "tsv") {
            std::cout << cli::kSweepHeader << "\n";
            for (const cli::SweepRow& row : rows) std::cout << cli::sweep_row_tsv(row) << "\n";
        } else {
            Json arr = Json::array();
            for (const cli::SweepRow& row : rows) {
                Json r;
                r["family"] = row.family;
                r["params"] = row.params;
                r["report"] = to_json(row.report);
                arr.push_back(std::move(r));
            }
            emit(arr, g);
        }
    } else if (cmd_fox->parsed()) {
        emit(fox_milnor_json(fm_coeffs, fm_bound), g);
    } else if (cmd_torus->parsed()) {
        emit(to_json(knots::slice_obstruction_report(p, q)), g);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
