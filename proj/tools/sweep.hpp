#pragma once

#include "brieskorn/invariants.hpp"

#include <string>
#include <vector>

namespace brieskorn::cli {

struct Range {
    long long lo = 0;
    long long hi = -1;   // empty when hi < lo
};

// "a..b" or a single value "a"
Range parse_range(const std::string& spec);

struct SweepRow {
    std::string family;
    std::string params;
    invariants::BoundingReport report;
};

extern const char* const kSweepHeader;

std::string sweep_row_tsv(const SweepRow& row);

// One bounding report per family member, rows in parameter order; members
// whose construction fails preconditions are skipped with a note.
std::vector<SweepRow> run_sweep(const std::string& family_name, Range primary, Range secondary,
                                const std::string& sign, const lattice::SearchOptions& opt,
                                std::vector<std::string>& skipped);

} // namespace brieskorn::cli
