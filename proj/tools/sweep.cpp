#include "sweep.hpp"

#include "brieskorn/seifert.hpp"

#include <future>
#include <sstream>

namespace brieskorn::cli {

Range parse_range(const std::string& spec) {
    size_t dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            long long v = std::stoll(spec);
            return Range{v, v};
        }
        return Range{std::stoll(spec.substr(0, dots)), std::stoll(spec.substr(dots + 2))};
    } catch (const std::exception&) {
        throw validation_error("bad range '" + spec + "': expected N or N..M");
    }
}

const char* const kSweepHeader =
    "family\tparams\ta1\ta2\ta3\tmu\tmu_bar\tdelta\tR\tdonaldson_embeddable\tobstructed\treasons";

std::string sweep_row_tsv(const SweepRow& row) {
    const invariants::BoundingReport& r = row.report;
    std::ostringstream os;
    os << row.family << '\t' << row.params << '\t' << r.triple.sorted()[0] << '\t'
       << r.triple.sorted()[1] << '\t' << r.triple.sorted()[2] << '\t' << r.mu << '\t' << r.mu_bar
       << '\t' << r.delta << '\t' << r.r << '\t';
    switch (r.donaldson_embeddable) {
    case invariants::Embeddable::yes: os << 1; break;
    case invariants::Embeddable::no: os << 0; break;
    case invariants::Embeddable::unknown: os << '?'; break;
    }
    os << '\t' << (r.obstructed ? 1 : 0) << '\t';
    for (size_t i = 0; i < r.reasons.size(); ++i) {
        if (i) os << "; ";
        os << r.reasons[i];
    }
    return os.str();
}

namespace {

struct Member {
    std::string params;
    seifert::BrieskornTriple triple;
};

std::vector<Member> members_of(const std::string& family_name, Range primary, Range secondary,
                               const std::string& sign, std::vector<std::string>& skipped) {
    using seifert::Family;
    std::vector<Member> out;
    auto add = [&](const std::string& params, Family f, std::vector<long long> ps) {
        try {
            out.push_back(Member{params, seifert::family(f, ps)});
        } catch (const validation_error& e) {
            skipped.push_back(params + ": " + e.what());
        }
    };
    std::vector<long long> signs;
    if (sign == "+") signs = {1};
    else if (sign == "-") signs = {-1};
    else if (sign == "both" || sign.empty()) signs = {1, -1};
    else throw validation_error("bad sign '" + sign + "': expected +, - or both");

    if (family_name == "sigma-m-quotient") {
        // quotient of Sigma(2m-1, 2m, 2m+1) by the standard involution
        for (long long m = primary.lo; m <= primary.hi; ++m) {
            try {
                seifert::BrieskornTriple sigma_m = seifert::family(Family::sigma_m, {m});
                out.push_back(Member{"m=" + std::to_string(m), seifert::quotient(sigma_m, 2)});
            } catch (const validation_error& e) {
                skipped.push_back("m=" + std::to_string(m) + ": " + e.what());
            }
        }
    } else if (family_name == "sigma-m") {
        for (long long m = primary.lo; m <= primary.hi; ++m)
            add("m=" + std::to_string(m), Family::sigma_m, {m});
    } else if (family_name == "casson-harer-even") {
        for (long long p = primary.lo; p <= primary.hi; ++p) {
            if (p % 2) continue;
            for (long long s = secondary.lo; s <= secondary.hi; ++s) {
                if (s % 2 == 0) continue;
                add("p=" + std::to_string(p) + ",s=" + std::to_string(s), Family::casson_harer_even,
                    {p, s});
            }
        }
    } else if (family_name == "casson-harer-odd") {
        for (long long p = primary.lo; p <= primary.hi; ++p) {
            if (p % 2 == 0) continue;
            for (long long s = secondary.lo; s <= secondary.hi; ++s)
                for (long long sg : signs)
                    add("p=" + std::to_string(p) + ",s=" + std::to_string(s) +
                            ",sign=" + (sg > 0 ? "+" : "-"),
                        Family::casson_harer_odd, {p, s, sg});
        }
    } else if (family_name == "stern") {
        for (long long r = primary.lo; r <= primary.hi; ++r)
            for (long long s = secondary.lo; s <= secondary.hi; ++s)
                for (long long sg : signs)
                    add("r=" + std::to_string(r) + ",s=" + std::to_string(s) +
                            ",sign=" + (sg > 0 ? "+" : "-"),
                        Family::stern, {r, s, sg});
    } else {
        throw validation_error("unknown family '" + family_name +
                               "': expected sigma-m, sigma-m-quotient, casson-harer-even, "
                               "casson-harer-odd or stern");
    }
    return out;
}

} // namespace

std::vector<SweepRow> run_sweep(const std::string& family_name, Range primary, Range secondary,
                                const std::string& sign, const lattice::SearchOptions& opt,
                                std::vector<std::string>& skipped) {
    std::vector<Member> members = members_of(family_name, primary, secondary, sign, skipped);
    std::vector<std::future<invariants::BoundingReport>> futures;
    futures.reserve(members.size());
    for (const Member& m : members)
        futures.push_back(std::async(std::launch::async,
                                     [&opt, t = m.triple] { return invariants::bounding_report(t, opt); }));
    std::vector<SweepRow> rows;
    rows.reserve(members.size());
    for (size_t i = 0; i < members.size(); ++i)
        rows.push_back(SweepRow{family_name, members[i].params, futures[i].get()});
    return rows;
}

} // namespace brieskorn::cli
