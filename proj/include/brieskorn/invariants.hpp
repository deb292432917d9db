#pragma once

#include "brieskorn/lattice.hpp"
#include "brieskorn/plumbing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brieskorn::invariants {

// Neumann-Siebenmann mu-bar of a unimodular plumbing tree: (sigma - w^2)/8
// with w the Wu class. Divisibility by 8 is asserted; accepts indefinite
// presentations as well as canonical ones.
long long mu_bar(const plumbing::PlumbingGraph& g);

// Rokhlin invariant as the mod-2 reduction of mu_bar.
int rokhlin_mu(const plumbing::PlumbingGraph& g);

struct DeltaR {
    long long delta = 0;   // central weight of the canonical resolution
    long long r = 0;       // -2*delta - 3
};

// Fintushel-Stern R through the central-weight formula R = -2*delta - 3
// (Neumann-Zagier). The formula's scope beyond three-fiber Brieskorn
// spheres is not established; reports carry that caveat.
DeltaR fintushel_stern_R(const seifert::BrieskornTriple& t);

enum class Embeddable { yes, no, unknown };   // unknown: search budget exhausted

struct BoundingReport {
    explicit BoundingReport(seifert::BrieskornTriple t) : triple(std::move(t)) {}

    seifert::BrieskornTriple triple;
    int mu = 0;
    long long mu_bar = 0;
    long long delta = 0;
    long long r = 0;
    Embeddable donaldson_embeddable = Embeddable::unknown;
    bool obstructed = false;
    std::vector<std::string> reasons;
    std::string r_formula_note;
};

// Aggregate acyclic-bounding obstructions: mu_bar != 0, R > 0, delta != -1,
// and non-existence of a diagonal embedding (Donaldson). obstructed is true
// iff at least one reason fires.
BoundingReport bounding_report(const seifert::BrieskornTriple& t,
                               const lattice::SearchOptions& opt = {});

} // namespace brieskorn::invariants
