#include "brieskorn/invariants.hpp"

namespace brieskorn::invariants {

long long mu_bar(const plumbing::PlumbingGraph& g) {
    IntegerMatrix q = plumbing::intersection_matrix(g);
    require(q.determinant().abs().is_one(), "mu_bar: |det Q| must be 1");
    exact::Inertia s = exact::signature(q);
    plumbing::WuClass w = plumbing::wu_class(g);
    BigInt num = BigInt(s.n_plus - s.n_minus) - w.square;
    BigInt quot, rem;
    BigInt::divmod(num, BigInt(8), quot, rem);
    ensure(rem.is_zero(), "mu_bar: sigma - w^2 not divisible by 8 (orientation convention bug)");
    return quot.to_int64();
}

int rokhlin_mu(const plumbing::PlumbingGraph& g) {
    long long m = mu_bar(g);
    return static_cast<int>(((m % 2) + 2) % 2);
}

DeltaR fintushel_stern_R(const seifert::BrieskornTriple& t) {
    require(t.all_at_least_two(), "fintushel_stern_R: all components must be >= 2");
    seifert::SeifertData d = seifert::normalize(t);
    DeltaR out;
    out.delta = d.central;
    out.r = -2 * out.delta - 3;
    return out;
}

BoundingReport bounding_report(const seifert::BrieskornTriple& t, const lattice::SearchOptions& opt) {
    require(t.all_at_least_two(), "bounding_report: all components must be >= 2");
    BoundingReport rep(t);
    plumbing::PlumbingGraph g = plumbing::canonical_graph(t);
    rep.mu_bar = mu_bar(g);
    rep.mu = static_cast<int>(((rep.mu_bar % 2) + 2) % 2);
    DeltaR dr = fintushel_stern_R(t);
    rep.delta = dr.delta;
    rep.r = dr.r;
    rep.r_formula_note =
        "R computed via the central-weight formula R = -2*delta - 3 (Neumann-Zagier); "
        "validity beyond three-fiber Brieskorn spheres is not established";

    lattice::FindResult f = lattice::find_embedding(plumbing::intersection_matrix(g), opt);
    switch (f.status) {
    case lattice::SearchStatus::found: rep.donaldson_embeddable = Embeddable::yes; break;
    case lattice::SearchStatus::none: rep.donaldson_embeddable = Embeddable::no; break;
    case lattice::SearchStatus::limit_exceeded: rep.donaldson_embeddable = Embeddable::unknown; break;
    }

    if (rep.mu_bar != 0)
        rep.reasons.push_back("mu_bar = " + std::to_string(rep.mu_bar) +
                              " != 0: the Neumann-Siebenmann invariant obstructs bounding a smooth "
                              "acyclic 4-manifold");
    if (rep.r > 0)
        rep.reasons.push_back("R = " + std::to_string(rep.r) +
                              " > 0: the Fintushel-Stern invariant obstructs bounding a smooth "
                              "acyclic 4-manifold");
    if (rep.delta != -1)
        rep.reasons.push_back("delta = " + std::to_string(rep.delta) +
                              " != -1: the canonical central weight must be -1 for an acyclic "
                              "bounding 4-manifold to exist");
    if (rep.donaldson_embeddable == Embeddable::no)
        rep.reasons.push_back("the intersection form admits no embedding into the standard "
                              "negative diagonal lattice, so no acyclic bounding 4-manifold "
                              "exists (Donaldson)");
    rep.obstructed = !rep.reasons.empty();
    return rep;
}

} // namespace brieskorn::invariants
