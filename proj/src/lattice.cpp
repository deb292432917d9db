#include "brieskorn/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace brieskorn::lattice {

namespace {

struct Engine {
    int n;
    std::vector<std::vector<long long>> gram;   // -Q, int64
    std::vector<int> order;                     // column placement order
    std::vector<long long> norm_suffix;         // sum of norms of columns not yet placed
    SearchOptions opt;
    bool stop_after_first;

    // search state
    std::vector<std::vector<long long>> cols;       // placed columns, original index order kept separately
    std::vector<std::vector<long long>> suffix_sq;  // per placed column: suffix sums of squares
    int used = 0;                                   // touched coordinates form the prefix [0, used)
    uint64_t nodes = 0;
    bool limit_hit = false;

    std::set<std::vector<long long>> seen;          // canonical forms (flattened)
    std::vector<IntegerMatrix> found;
    std::optional<IntegerMatrix> first;

    // scratch for the current column
    std::vector<long long> cur;
    std::vector<long long> want;      // required dot with each placed column
    std::vector<long long> partial;   // accumulated dot with each placed column

    bool budget() {
        if (++nodes > opt.node_limit) { limit_hit = true; return false; }
        return true;
    }

    bool done() const {
        return limit_hit || (stop_after_first && first.has_value()) || found.size() >= opt.max_classes;
    }

    void record() {
        IntegerMatrix b(n, n);
        // columns were placed in search order; restore original column order
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) b.at(i, order[k]) = BigInt(cols[k][i]);
        if (!first) first = b;
        IntegerMatrix canon = canonical_embedding_form(b);
        std::vector<long long> key;
        key.reserve(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) key.push_back(canon.at(i, j).to_int64());
        if (seen.insert(std::move(key)).second) found.push_back(canon);
    }

    void place_column(int k) {
        if (done()) return;
        if (k == n) {
            if (used == n) record();   // every diagonal vector must be hit
            return;
        }
        // remaining columns can touch at most sum-of-norms fresh coordinates
        if (used + norm_suffix[k] < n) return;
        long long target = gram[order[k]][order[k]];
        want.assign(cols.size(), 0);
        for (size_t t = 0; t < cols.size(); ++t) want[t] = gram[order[k]][order[t]];
        partial.assign(cols.size(), 0);
        cur.assign(n, 0);
        extend_used_part(k, 0, target);
    }

    // choose entries on the already-touched coordinates
    void extend_used_part(int k, int i, long long remaining) {
        if (done()) return;
        if (!budget()) return;
        if (i == used) {
            for (size_t t = 0; t < cols.size(); ++t)
                if (partial[t] != want[t]) return;
            place_fresh_part(k, remaining, used, -1);
            return;
        }
        long long max_sq = remaining;
        for (long long v = 0;; v = v > 0 ? -v : -v + 1) {
            if (v * v > max_sq) break;
            bool feasible = true;
            for (size_t t = 0; t < cols.size() && feasible; ++t) {
                long long delta = want[t] - partial[t] - v * cols[t][i];
                long long cap = (remaining - v * v) * suffix_sq[t][i + 1];
                if (delta * delta > cap) feasible = false;
            }
            if (feasible) {
                for (size_t t = 0; t < cols.size(); ++t) partial[t] += v * cols[t][i];
                cur[i] = v;
                extend_used_part(k, i + 1, remaining - v * v);
                cur[i] = 0;
                for (size_t t = 0; t < cols.size(); ++t) partial[t] -= v * cols[t][i];
                if (done()) return;
            }
        }
    }

    // distribute the leftover norm over fresh coordinates as a descending
    // sequence of positive entries (canonical under the stabilizer of the
    // placed columns)
    void place_fresh_part(int k, long long remaining, int next_coord, long long prev_entry) {
        if (done()) return;
        if (remaining == 0) {
            commit(k, next_coord);
            return;
        }
        if (next_coord >= n) return;
        if (!budget()) return;
        long long hi = prev_entry < 0 ? remaining : prev_entry;
        for (long long e = std::min<long long>(hi, isqrt(remaining)); e >= 1; --e) {
            cur[next_coord] = e;
            place_fresh_part(k, remaining - e * e, next_coord + 1, e);
            cur[next_coord] = 0;
            if (done()) return;
        }
    }

    static long long isqrt(long long v) {
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    }

    void commit(int k, int new_used) {
        std::vector<long long> sq(n + 1, 0);
        for (int i = n; i-- > 0;) sq[i] = sq[i + 1] + cur[i] * cur[i];
        cols.push_back(cur);
        suffix_sq.push_back(std::move(sq));
        int prev_used = used;
        used = new_used;
        std::vector<long long> saved_want = want, saved_partial = partial;
        std::vector<long long> saved_cur = cur;
        place_column(k + 1);
        cur = std::move(saved_cur);
        want = std::move(saved_want);
        partial = std::move(saved_partial);
        used = prev_used;
        cols.pop_back();
        suffix_sq.pop_back();
    }
};

// Placement order: depth-first from the highest-degree node, so that every
// column after the first is adjacent to one already placed and the chain
// constraints bite immediately. Subtrees with small maximal norm go first;
// heavy nodes are then pinned down by many orthogonality conditions.
// (Ordering columns by decreasing norm alone leaves the early large-norm
// columns unanchored and the search degenerates on long chains.)
std::vector<int> placement_order(const IntegerMatrix& q) {
    int n = q.rows();
    std::vector<std::vector<int>> adj(n);
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !q.at(i, j).is_zero()) {
                adj[i].push_back(j);
                ++degree[i];
            }
    std::vector<long long> norm(n);
    for (int i = 0; i < n; ++i) norm[i] = -q.at(i, i).to_int64();

    std::vector<int> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    for (int seed = 0; seed < n; ++seed) {
        int root = -1;
        for (int i = 0; i < n; ++i)
            if (!visited[i] && (root < 0 || degree[i] > degree[root])) root = i;
        if (root < 0) break;

        // max norm reachable within each unvisited subtree, by one BFS per child
        auto subtree_max_norm = [&](int from, int child) {
            long long best = norm[child];
            std::deque<int> bfs{child};
            std::vector<char> seen(n, 0);
            seen[from] = seen[child] = 1;
            while (!bfs.empty()) {
                int u = bfs.front();
                bfs.pop_front();
                for (int v : adj[u])
                    if (!visited[v] && !seen[v]) {
                        seen[v] = 1;
                        best = std::max(best, norm[v]);
                        bfs.push_back(v);
                    }
            }
            return best;
        };

        std::vector<int> stack{root};
        visited[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            std::vector<int> children;
            for (int v : adj[u])
                if (!visited[v]) children.push_back(v);
            // light subtrees first: pushed last onto the stack
            std::stable_sort(children.begin(), children.end(), [&](int a, int b) {
                long long ma = subtree_max_norm(u, a), mb = subtree_max_norm(u, b);
                if (ma != mb) return ma > mb;
                return a > b;
            });
            for (int v : children) {
                visited[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return order;
}

Engine make_engine(const IntegerMatrix& q, const SearchOptions& opt, bool stop_after_first) {
    require(q.is_symmetric(), "embedding search: symmetric matrix required");
    require(q.determinant().abs().is_one(), "embedding search: |det Q| must be 1");
    require(exact::is_negative_definite(q), "embedding search: Q must be negative definite");
    int n = q.rows();
    Engine e;
    e.n = n;
    e.gram.assign(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.gram[i][j] = (-q.at(i, j)).to_int64();
    e.order = placement_order(q);
    e.norm_suffix.assign(n + 1, 0);
    for (int k = n; k-- > 0;) e.norm_suffix[k] = e.norm_suffix[k + 1] + e.gram[e.order[k]][e.order[k]];
    e.opt = opt;
    e.stop_after_first = stop_after_first;
    return e;
}

} // namespace

FindResult find_embedding(const IntegerMatrix& q, const SearchOptions& opt) {
    if (opt.cache)
        if (std::optional<FindResult> hit = opt.cache->lookup(q, opt)) return *hit;
    Engine e = make_engine(q, opt, true);
    FindResult r;
    if (e.n == 0) {
        r = FindResult{SearchStatus::found, DiagonalEmbedding{IntegerMatrix(0, 0)}, 0};
    } else {
        e.place_column(0);
        r.nodes_expanded = e.nodes;
        if (e.first) {
            r.status = SearchStatus::found;
            r.embedding = DiagonalEmbedding{*e.first};
        } else {
            r.status = e.limit_hit ? SearchStatus::limit_exceeded : SearchStatus::none;
        }
    }
    if (opt.cache) opt.cache->remember(q, opt, r);
    return r;
}

EnumerateResult enumerate_embeddings(const IntegerMatrix& q, const SearchOptions& opt) {
    Engine e = make_engine(q, opt, false);
    EnumerateResult r;
    if (e.n == 0) {
        r.classes.push_back(DiagonalEmbedding{IntegerMatrix(0, 0)});
        r.complete = true;
        return r;
    }
    e.place_column(0);
    r.nodes_expanded = e.nodes;
    r.complete = !e.limit_hit && e.found.size() < e.opt.max_classes;
    std::sort(e.found.begin(), e.found.end(), [n = e.n](const IntegerMatrix& a, const IntegerMatrix& b) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = a.at(i, j).compare(b.at(i, j));
                if (c != 0) return c < 0;
            }
        return false;
    });
    for (IntegerMatrix& m : e.found) r.classes.push_back(DiagonalEmbedding{std::move(m)});
    return r;
}

ValidationReport validate_embedding(const IntegerMatrix& q, const IntegerMatrix& b) {
    ValidationReport rep;
    if (!q.is_square() || !b.is_square() || q.rows() != b.rows()) {
        rep.detail = "shape mismatch";
        return rep;
    }
    IntegerMatrix gram = b.transpose() * b;
    int n = q.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (gram.at(i, j) != -q.at(i, j)) {
                rep.witness_i = i;
                rep.witness_j = j;
                rep.detail = "B^t B != -Q at (" + std::to_string(i) + "," + std::to_string(j) +
                             "): got " + gram.at(i, j).to_string() + ", want " + (-q.at(i, j)).to_string();
                return rep;
            }
    if (!b.determinant().abs().is_one()) {
        rep.detail = "|det B| != 1: det = " + b.determinant().to_string();
        return rep;
    }
    rep.valid = true;
    return rep;
}

EntryProfile entry_profile(const DiagonalEmbedding& e) {
    EntryProfile p;
    for (int i = 0; i < e.basis.rows(); ++i)
        for (int j = 0; j < e.basis.cols(); ++j) {
            long long v = e.basis.at(i, j).abs().to_int64();
            ++p.counts[v];
            if (v >= 2) p.has_non_unit = true;
        }
    return p;
}

IntegerMatrix canonical_embedding_form(const IntegerMatrix& b) {
    int rows = b.rows(), cols = b.cols();
    std::vector<std::vector<BigInt>> rs(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        int first_nonzero = -1;
        for (int j = 0; j < cols; ++j) {
            rs[i][j] = b.at(i, j);
            if (first_nonzero < 0 && !rs[i][j].is_zero()) first_nonzero = j;
        }
        if (first_nonzero >= 0 && rs[i][first_nonzero].sign() < 0)
            for (int j = 0; j < cols; ++j) rs[i][j] = -rs[i][j];
    }
    auto first_nonzero = [](const std::vector<BigInt>& v) {
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return j;
        return v.size();
    };
    std::sort(rs.begin(), rs.end(), [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b2) {
        size_t fa = first_nonzero(a), fb = first_nonzero(b2);
        if (fa != fb) return fa < fb;
        for (size_t j = 0; j < a.size(); ++j) {
            int c = a[j].compare(b2[j]);
            if (c != 0) return c > 0;
        }
        return false;
    });
    IntegerMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = rs[i][j];
    return out;
}

} // namespace brieskorn::lattice
