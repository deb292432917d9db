#pragma once

#include "brieskorn/json_io.hpp"
#include "brieskorn/lattice.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace brieskorn::cli {

// Disk cache for embedding searches, keyed by a content hash of Q. Entries
// that fail to parse or do not match the requested matrix are discarded and
// recomputed. Writes are atomic (temp file + rename), so concurrent sweep
// workers can share a directory.
class EmbedCache : public lattice::EmbeddingCacheHook {
public:
    explicit EmbedCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<lattice::FindResult> lookup(const IntegerMatrix& q,
                                              const lattice::SearchOptions& opt) override;
    void remember(const IntegerMatrix& q, const lattice::SearchOptions& opt,
                  const lattice::FindResult& r) override;

    static std::filesystem::path default_dir();

private:
    std::filesystem::path dir_;

    std::filesystem::path path_for(const IntegerMatrix& q) const;
};

} // namespace brieskorn::cli
