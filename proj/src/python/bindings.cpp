#include "brieskorn/json_io.hpp"
#include "brieskorn/obstruct.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace brieskorn;
using json_io::Json;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const Json& v : j) out.append(json_to_py(v));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

IntegerMatrix matrix_from_py(const py::sequence& rows) {
    int r = static_cast<int>(py::len(rows));
    int c = r ? static_cast<int>(py::len(rows[0])) : 0;
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        require(static_cast<int>(py::len(row)) == c, "matrix rows must have equal length");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = BigInt::from_string(py::str(row[j]).cast<std::string>());
    }
    return m;
}

std::vector<seifert::SeifertPair> pairs_from_py(const std::vector<std::pair<long long, long long>>& v) {
    std::vector<seifert::SeifertPair> out;
    for (auto [alpha, beta] : v) out.push_back({alpha, beta});
    return out;
}

Json resolve_json(long long a, long long b, long long c) {
    seifert::BrieskornTriple t(a, b, c);
    seifert::SeifertData d = seifert::normalize(t);
    plumbing::PlumbingGraph g = plumbing::canonical_graph(d);
    IntegerMatrix q = plumbing::intersection_matrix(g);
    Json j;
    j["triple"] = json_io::to_json(t);
    j["seifert"] = json_io::to_json(d);
    j["montesinos"] = json_io::to_json(seifert::montesinos_parameters(t));
    j["graph"] = json_io::to_json(g);
    j["intersection_matrix"] = json_io::to_json(q);
    j["determinant"] = json_io::to_json(q.determinant());
    j["signature"] = json_io::to_json(exact::signature(q));
    j["wu_class"] = json_io::to_json(plumbing::wu_class(g));
    j["euler_characteristic_closed"] = plumbing::euler_characteristic_closed(g);
    return j;
}

} // namespace

PYBIND11_MODULE(brieskorn, m) {
    m.doc() = "exact computations for Brieskorn homology spheres: plumbing graphs, lattice "
              "embeddings, equivariant fixed-point data and acyclic-bounding obstructions";

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    m.def("neg_continued_fraction",
          [](long long alpha, long long beta) { return exact::neg_continued_fraction(alpha, beta); },
          py::arg("alpha"), py::arg("beta"),
          "negative continued fraction expansion of alpha/beta, entries >= 2");

    m.def("signature",
          [](const py::sequence& q) {
              return json_to_py(json_io::to_json(exact::signature(matrix_from_py(q))));
          },
          py::arg("q"), "exact inertia (n_plus, n_minus, n_zero) of a symmetric integer matrix");

    m.def("solve_unimodular",
          [](const py::sequence& q, const std::vector<long long>& b) {
              IntVector bv;
              for (long long v : b) bv.emplace_back(v);
              return json_to_py(json_io::to_json(exact::solve_unimodular(matrix_from_py(q), bv)));
          },
          py::arg("q"), py::arg("b"), "integer solution of Q x = b for unimodular symmetric Q");

    m.def("resolve",
          [](long long a, long long b, long long c) { return json_to_py(resolve_json(a, b, c)); },
          py::arg("a"), py::arg("b"), py::arg("c"),
          "Seifert data, canonical plumbing graph and intersection form of Sigma(a,b,c)");

    m.def("normalize",
          [](long long a, long long b, long long c) {
              return json_to_py(json_io::to_json(seifert::normalize(seifert::BrieskornTriple(a, b, c))));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("quotient",
          [](long long p, long long a1, long long a2, long long a3) {
              return json_to_py(json_io::to_json(seifert::quotient(seifert::BrieskornTriple(a1, a2, a3), p)));
          },
          py::arg("p"), py::arg("a1"), py::arg("a2"), py::arg("a3"),
          "quotient of Sigma(a1,a2,a3) by the standard Z/p action");

    m.def("mu_bar",
          [](long long a, long long b, long long c) {
              return invariants::mu_bar(plumbing::canonical_graph(seifert::BrieskornTriple(a, b, c)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"),
          "Neumann-Siebenmann mu-bar from the canonical resolution");

    m.def("mu_bar_direct",
          [](long long b, const std::vector<std::pair<long long, long long>>& pairs) {
              return invariants::mu_bar(plumbing::direct_graph(b, pairs_from_py(pairs)));
          },
          py::arg("b"), py::arg("pairs"),
          "mu-bar of the star plumbing with central weight b and single-node arms (beta = +-1)");

    m.def("rokhlin_mu",
          [](long long a, long long b, long long c) {
              return invariants::rokhlin_mu(plumbing::canonical_graph(seifert::BrieskornTriple(a, b, c)));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("fintushel_stern_r",
          [](long long a, long long b, long long c) {
              invariants::DeltaR d = invariants::fintushel_stern_R(seifert::BrieskornTriple(a, b, c));
              return py::make_tuple(d.delta, d.r);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), "(delta, R) with R = -2*delta - 3");

    m.def("bounding_report",
          [](long long a, long long b, long long c) {
              return json_to_py(json_io::to_json(
                  invariants::bounding_report(seifert::BrieskornTriple(a, b, c))));
          },
          py::arg("a"), py::arg("b"), py::arg("c"),
          "aggregate acyclic-bounding obstruction report");

    m.def("find_embedding",
          [](const py::sequence& q, uint64_t limit) {
              lattice::SearchOptions opt;
              if (limit) opt.node_limit = limit;
              lattice::FindResult r = lattice::find_embedding(matrix_from_py(q), opt);
              py::dict out;
              out["status"] = r.status == lattice::SearchStatus::found ? "found"
                              : r.status == lattice::SearchStatus::none ? "none"
                                                                        : "limit_exceeded";
              if (r.embedding) out["basis"] = json_to_py(json_io::to_json(*r.embedding));
              return out;
          },
          py::arg("q"), py::arg("limit") = 0,
          "integer basis B with B^t B = -Q, or proof of non-existence");

    m.def("validate_embedding",
          [](const py::sequence& q, const py::sequence& b) {
              lattice::ValidationReport r =
                  lattice::validate_embedding(matrix_from_py(q), matrix_from_py(b));
              py::dict out;
              out["valid"] = r.valid;
              if (!r.valid) out["detail"] = r.detail;
              return out;
          },
          py::arg("q"), py::arg("b"));

    m.def("enumerate_embeddings",
          [](const py::sequence& q, size_t max_classes) {
              lattice::SearchOptions opt;
              opt.max_classes = max_classes;
              lattice::EnumerateResult r = lattice::enumerate_embeddings(matrix_from_py(q), opt);
              py::dict out;
              out["complete"] = r.complete;
              py::list classes;
              for (const lattice::DiagonalEmbedding& e : r.classes)
                  classes.append(json_to_py(json_io::to_json(e)));
              out["classes"] = classes;
              return out;
          },
          py::arg("q"), py::arg("max_classes") = SIZE_MAX,
          "all embedding classes up to signed permutation of the diagonal basis");

    m.def("entry_profile",
          [](const py::sequence& b) {
              return json_to_py(json_io::to_json(
                  lattice::entry_profile(lattice::DiagonalEmbedding{matrix_from_py(b)})));
          },
          py::arg("b"), "multiset of absolute entries and the has_non_unit flag");

    m.def("family",
          [](const std::string& name, const std::vector<long long>& params) {
              seifert::Family f;
              if (name == "casson_harer_even") f = seifert::Family::casson_harer_even;
              else if (name == "casson_harer_odd") f = seifert::Family::casson_harer_odd;
              else if (name == "stern") f = seifert::Family::stern;
              else if (name == "sigma_m") f = seifert::Family::sigma_m;
              else throw validation_error("unknown family '" + name + "'");
              return json_to_py(json_io::to_json(seifert::family(f, params)));
          },
          py::arg("name"), py::arg("params"),
          "member of a named family: casson_harer_even(p,s), casson_harer_odd(p,s,sign), "
          "stern(r,s,sign), sigma_m(m)");

    m.def("montesinos_parameters",
          [](long long a, long long b, long long c) {
              return json_to_py(json_io::to_json(
                  seifert::montesinos_parameters(seifert::BrieskornTriple(a, b, c))));
          },
          py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("census",
          [](long long p, long long a, long long b, long long c) {
              seifert::BrieskornTriple total(p * a, b, c);
              return json_to_py(json_io::to_json(
                  equivariant::census(plumbing::canonical_graph(total), p)));
          },
          py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"),
          "fixed-point census of the standard Z/p action on Sigma(p*a,b,c)");

    m.def("extension_obstruction_pipeline",
          [](long long p, long long a, long long b, long long c) {
              return json_to_py(json_io::to_json(obstruct::extension_obstruction_pipeline(p, a, b, c)));
          },
          py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"),
          "extension obstruction report for the standard Z/p action on Sigma(p*a,b,c)");

    m.def("fox_milnor",
          [](const std::vector<long long>& coeffs, long long bound) {
              knots::IntPolynomial delta = knots::IntPolynomial::from_int64(coeffs);
              knots::FoxMilnorResult r = bound > 0 ? knots::fox_milnor_test(delta, BigInt(bound))
                                                   : knots::fox_milnor_test(delta);
              return json_to_py(json_io::to_json(r));
          },
          py::arg("coeffs"), py::arg("bound") = 0,
          "Fox-Milnor factorization test on an Alexander polynomial (ascending coefficients)");

    m.def("torus_signature", &knots::torus_signature, py::arg("p"), py::arg("q"),
          "signature of the right-handed (p,q) torus knot");

    m.def("slice_obstruction",
          [](long long p, long long q) {
              return json_to_py(json_io::to_json(knots::slice_obstruction_report(p, q)));
          },
          py::arg("p"), py::arg("q"));
}
