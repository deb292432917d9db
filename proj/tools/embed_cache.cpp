#include "embed_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <thread>
#include <sstream>

namespace brieskorn::cli {

namespace {

std::string serialize_matrix(const IntegerMatrix& q) {
    std::ostringstream os;
    os << q.rows() << "x" << q.cols() << ":";
    for (int i = 0; i < q.rows(); ++i)
        for (int j = 0; j < q.cols(); ++j) os << q.at(i, j).to_string() << ",";
    return os.str();
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex16(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace

std::filesystem::path EmbedCache::default_dir() {
    if (const char* env = std::getenv("BRIESKORN_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "brieskorn";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "brieskorn";
    return std::filesystem::temp_directory_path() / "brieskorn-cache";
}

std::filesystem::path EmbedCache::path_for(const IntegerMatrix& q) const {
    return dir_ / ("embed-" + hex16(fnv1a(serialize_matrix(q))) + ".json");
}

std::optional<lattice::FindResult> EmbedCache::lookup(const IntegerMatrix& q,
                                                      const lattice::SearchOptions& opt) {
    std::ifstream in(path_for(q));
    if (!in) return std::nullopt;
    try {
        json_io::Json j;
        in >> j;
        if (json_io::matrix_from_json(j.at("q")) != q) return std::nullopt;   // hash collision
        std::string status = j.at("status").get<std::string>();
        lattice::FindResult r;
        if (status == "found") {
            r.status = lattice::SearchStatus::found;
            IntegerMatrix b = json_io::matrix_from_json(j.at("basis"));
            if (!lattice::validate_embedding(q, b).valid) return std::nullopt;   // corrupt
            r.embedding = lattice::DiagonalEmbedding{std::move(b)};
            return r;
        }
        if (status == "none") {
            // exhaustive result, independent of the budget
            r.status = lattice::SearchStatus::none;
            return r;
        }
        if (status == "limit" && j.at("limit").get<uint64_t>() >= opt.node_limit) {
            r.status = lattice::SearchStatus::limit_exceeded;
            return r;
        }
        return std::nullopt;
    } catch (...) {
        return std::nullopt;   // corrupt entries are recomputed, never trusted
    }
}

void EmbedCache::remember(const IntegerMatrix& q, const lattice::SearchOptions& opt,
                          const lattice::FindResult& r) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    json_io::Json j;
    j["q"] = json_io::to_json(q);
    switch (r.status) {
    case lattice::SearchStatus::found:
        j["status"] = "found";
        j["basis"] = json_io::to_json(r.embedding->basis);
        break;
    case lattice::SearchStatus::none: j["status"] = "none"; break;
    case lattice::SearchStatus::limit_exceeded: j["status"] = "limit"; break;
    }
    j["limit"] = opt.node_limit;
    std::filesystem::path target = path_for(q);
    std::filesystem::path tmp = target;
    tmp += ".tmp" + std::to_string(static_cast<unsigned long long>(
                        std::hash<std::thread::id>{}(std::this_thread::get_id())));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    std::filesystem::rename(tmp, target, ec);
}

} // namespace brieskorn::cli
