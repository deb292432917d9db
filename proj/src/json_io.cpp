#include "brieskorn/json_io.hpp"

namespace brieskorn::json_io {

Json to_json(const BigInt& v) {
    if (v.fits_int64()) return v.to_int64();
    return v.to_string();
}

Json to_json(const IntVector& v) {
    Json a = Json::array();
    for (const BigInt& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const exact::Inertia& s) {
    return Json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}};
}

Json to_json(const seifert::BrieskornTriple& t) {
    return Json{t.sorted()[0], t.sorted()[1], t.sorted()[2]};
}

Json to_json(const seifert::SeifertData& d) {
    Json pairs = Json::array();
    for (const seifert::SeifertPair& p : d.pairs) pairs.push_back(Json{p.alpha, p.beta});
    return Json{{"b", d.central}, {"pairs", std::move(pairs)}};
}

Json to_json(const seifert::MontesinosParameters& m) {
    Json fr = Json::array();
    for (const seifert::SeifertPair& p : m.fractions)
        fr.push_back(std::to_string(p.beta) + "/" + std::to_string(p.alpha));
    return Json{{"e", m.e}, {"fractions", std::move(fr)}};
}

Json to_json(const plumbing::PlumbingGraph& g) {
    Json nodes = Json::array();
    for (int i = 0; i < g.size(); ++i) nodes.push_back(Json{{"id", i}, {"weight", g.weights[i]}});
    Json edges = Json::array();
    for (auto [u, v] : g.edges) edges.push_back(Json{u, v});
    Json arms = Json::array();
    for (const plumbing::Arm& a : g.arms)
        arms.push_back(Json{{"alpha", a.alpha}, {"beta", a.beta}, {"nodes", a.nodes}});
    return Json{{"nodes", std::move(nodes)},
                {"edges", std::move(edges)},
                {"central", g.central},
                {"arms", std::move(arms)}};
}

Json to_json(const plumbing::WuClass& w) {
    Json coords = Json::array();
    for (uint8_t b : w.coordinates) coords.push_back(int(b));
    return Json{{"coordinates", std::move(coords)}, {"square", to_json(w.square)}};
}

Json to_json(const lattice::DiagonalEmbedding& e) { return to_json(e.basis); }

Json to_json(const lattice::EntryProfile& p) {
    Json counts = Json::object();
    for (auto [value, mult] : p.counts) counts[std::to_string(value)] = mult;
    return Json{{"counts", std::move(counts)}, {"has_non_unit", p.has_non_unit}};
}

Json to_json(const invariants::BoundingReport& r) {
    Json emb;
    switch (r.donaldson_embeddable) {
    case invariants::Embeddable::yes: emb = true; break;
    case invariants::Embeddable::no: emb = false; break;
    case invariants::Embeddable::unknown: emb = nullptr; break;
    }
    return Json{{"triple", to_json(r.triple)},
                {"mu", r.mu},
                {"mu_bar", r.mu_bar},
                {"delta", r.delta},
                {"R", r.r},
                {"donaldson_embeddable", emb},
                {"obstructed", r.obstructed},
                {"reasons", r.reasons},
                {"r_formula_note", r.r_formula_note}};
}

Json to_json(const equivariant::FixedPointCensus& c) {
    Json pts = Json::array();
    for (auto [a, b] : c.isolated_points) pts.push_back(Json{a, b});
    Json spheres = Json::array();
    for (const equivariant::FixedSphere& s : c.fixed_spheres)
        spheres.push_back(Json{{"node", s.node}, {"self_intersection", s.self_intersection}});
    Json disks = Json::array();
    for (const equivariant::FixedDisk& d : c.fixed_disks)
        disks.push_back(Json{{"node", d.node}, {"fiber_order", d.fiber_order}});
    return Json{{"p", c.p},
                {"free_action", c.free_action},
                {"isolated_points", std::move(pts)},
                {"fixed_spheres", std::move(spheres)},
                {"fixed_disks", std::move(disks)},
                {"invariant_spheres", c.invariant_spheres},
                {"euler_fixed_set", c.euler_fixed_set()},
                {"euler_fixed_set_closed", c.euler_fixed_set_closed()}};
}

Json to_json(const equivariant::FixedSphereClass& f) {
    return Json{{"disk_node", f.disk_node},
                {"coordinates", to_json(f.coordinates)},
                {"square", to_json(f.square)},
                {"sign_note", "defined up to a global sign"}};
}

Json to_json(const knots::FoxMilnorResult& r) {
    Json j;
    switch (r.verdict) {
    case knots::FoxMilnorVerdict::pass: j["verdict"] = "PASS"; break;
    case knots::FoxMilnorVerdict::fail: j["verdict"] = "FAIL"; break;
    case knots::FoxMilnorVerdict::inconclusive: j["verdict"] = "INCONCLUSIVE"; break;
    }
    if (r.factor) {
        Json coeffs = Json::array();
        for (const BigInt& c : r.factor->coefficients()) coeffs.push_back(to_json(c));
        j["factor"] = std::move(coeffs);
        j["factor_pretty"] = r.factor->to_string();
    }
    j["bound_used"] = to_json(r.bound_used);
    j["exhaustive"] = r.exhaustive;
    return j;
}

Json to_json(const knots::SliceObstructionReport& r) {
    return Json{{"p", r.p},
                {"q", r.q},
                {"signature", r.signature},
                {"obstructed", r.obstructed},
                {"reason", r.obstructed
                               ? "nonzero signature: the torus knot is not (locally flat) slice"
                               : "no obstruction from the signature"}};
}

Json to_json(const obstruct::ObstructionCertificate& c) {
    Json j{{"verdict", c.verdict}};
    if (!c.failed_check.empty()) j["failed_check"] = c.failed_check;
    j["configuration"] = Json{{"f1", c.config.f1}, {"f2", c.config.f2}, {"f3", c.config.f3}};
    j["premises_verified"] = c.premises_verified;
    if (c.premises_verified) {
        j["checks"] = Json{{"F1_squared", -1},
                           {"F1_dot_F2", 1},
                           {"F1_dot_F3", 1},
                           {"F2_dot_F3", 0},
                           {"unit_coordinate", c.unit_coordinate}};
        j["column_f1"] = to_json(c.column_f1);
        j["column_f2"] = to_json(c.column_f2);
        j["column_f3"] = to_json(c.column_f3);
        j["support_f2"] = c.support_f2;
        j["support_f3"] = c.support_f3;
        j["contradiction"] = c.contradiction;
        j["sign_search"] = Json{{"ran", c.sign_search_ran},
                                {"assignments_checked", c.sign_assignments_checked},
                                {"signed_permutations_covered", to_json(c.signed_permutations_covered)},
                                {"coherent_basis_found", c.coherent_basis_found},
                                {"note", "coordinatewise nonnegativity is invariant under "
                                         "permutations, so sign patterns cover the whole group"}};
    }
    return j;
}

Json to_json(const obstruct::PipelineReport& r) {
    Json j{{"p", r.p},
           {"action_triple", Json{r.action_triple[0], r.action_triple[1], r.action_triple[2]}},
           {"quotient_triple", Json{r.quotient_triple[0], r.quotient_triple[1], r.quotient_triple[2]}},
           {"verdict", r.obstructed ? "OBSTRUCTED" : "NOT-OBSTRUCTED"},
           {"routes_fired", r.routes_fired}};
    switch (r.certificate_route) {
    case obstruct::CertificateRoute::obstructed_certificate:
        j["certificate_route"] = "obstructed_certificate"; break;
    case obstruct::CertificateRoute::central_weight_fails:
        j["certificate_route"] = "central_weight_excludes_acyclic"; break;
    case obstruct::CertificateRoute::donaldson_obstructs:
        j["certificate_route"] = "donaldson_excludes_acyclic"; break;
    case obstruct::CertificateRoute::embedding_limit:
        j["certificate_route"] = "embedding_search_limit"; break;
    }
    j["delta"] = r.delta;
    if (r.census) j["census"] = to_json(*r.census);
    if (r.certificate) j["certificate"] = to_json(*r.certificate);
    if (r.quotient_report) j["quotient_report"] = to_json(*r.quotient_report);
    if (r.torus_knot_report) j["torus_knot_report"] = to_json(*r.torus_knot_report);
    return j;
}

IntegerMatrix matrix_from_json(const Json& j) {
    require(j.is_array(), "matrix_from_json: expected an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(static_cast<int>(j[i].size()) == cols, "matrix_from_json: ragged rows");
        for (int c = 0; c < cols; ++c) {
            const Json& v = j[i][c];
            if (v.is_number_integer())
                m.at(i, c) = BigInt(v.get<long long>());
            else if (v.is_string())
                m.at(i, c) = BigInt::from_string(v.get<std::string>());
            else
                throw validation_error("matrix_from_json: entries must be integers or strings");
        }
    }
    return m;
}

} // namespace brieskorn::json_io
