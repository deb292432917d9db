#pragma once

#include "brieskorn/exact.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brieskorn::lattice {

// Integer matrix B whose column j expresses plumbing basis vector F_j in a
// diagonal basis with pairing e_i . e_j = -delta_ij, so B^t B = -Q and
// |det B| = 1.
struct DiagonalEmbedding {
    IntegerMatrix basis;
};

enum class SearchStatus { found, none, limit_exceeded };

struct SearchOptions;
struct FindResult;

// Optional persistence hook consulted by find_embedding; results must be
// reproduced verbatim so cached and fresh runs are indistinguishable.
struct EmbeddingCacheHook {
    virtual ~EmbeddingCacheHook() = default;
    virtual std::optional<FindResult> lookup(const IntegerMatrix& q, const SearchOptions& opt) = 0;
    virtual void remember(const IntegerMatrix& q, const SearchOptions& opt,
                          const FindResult& r) = 0;
};

struct SearchOptions {
    uint64_t node_limit = 100000000;   // expansion budget before giving up
    size_t max_classes = SIZE_MAX;     // enumeration cap
    EmbeddingCacheHook* cache = nullptr;
};

struct FindResult {
    SearchStatus status = SearchStatus::none;
    std::optional<DiagonalEmbedding> embedding;
    uint64_t nodes_expanded = 0;
};

struct EnumerateResult {
    // canonical class representatives, deterministically ordered
    std::vector<DiagonalEmbedding> classes;
    bool complete = false;             // search ran to exhaustion
    uint64_t nodes_expanded = 0;
};

// Depth-first backtracking over columns ordered by decreasing |Q_jj| (ties
// by graph distance from the highest-degree node). Partial solutions are
// canonicalized under signed permutations fixing the placed columns, so
// exhaustion genuinely proves non-existence.
FindResult find_embedding(const IntegerMatrix& q, const SearchOptions& opt = {});

EnumerateResult enumerate_embeddings(const IntegerMatrix& q, const SearchOptions& opt = {});

struct ValidationReport {
    bool valid = false;
    int witness_i = -1;                // offending Gram entry on failure
    int witness_j = -1;
    std::string detail;
};

// Direct check of B^t B = -Q and |det B| = 1.
ValidationReport validate_embedding(const IntegerMatrix& q, const IntegerMatrix& b);

struct EntryProfile {
    std::map<long long, long long> counts;   // |entry| -> multiplicity
    bool has_non_unit = false;               // some |entry| >= 2
};

EntryProfile entry_profile(const DiagonalEmbedding& e);

// Orbit representative under signed permutations of the rows: each row's
// first nonzero entry is made positive, then rows are sorted.
IntegerMatrix canonical_embedding_form(const IntegerMatrix& b);

} // namespace brieskorn::lattice
