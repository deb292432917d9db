#include "brieskorn/plumbing.hpp"

#include <numeric>

namespace brieskorn::plumbing {

bool PlumbingGraph::is_tree() const {
    int n = size();
    if (n == 0) return edges.empty();
    if (static_cast<int>(edges.size()) != n - 1) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

PlumbingGraph canonical_graph(const seifert::SeifertData& d) {
    require(d.normalized, "canonical_graph: normalized Seifert data required");
    PlumbingGraph g;
    g.weights.push_back(d.central);
    g.central = 0;
    for (const seifert::SeifertPair& p : d.pairs) {
        Arm arm;
        arm.alpha = p.alpha;
        arm.beta = p.beta;
        int prev = g.central;
        for (long long x : exact::neg_continued_fraction(p.alpha, p.beta)) {
            int id = g.size();
            g.weights.push_back(-x);
            g.edges.emplace_back(prev, id);
            arm.nodes.push_back(id);
            prev = id;
        }
        g.arms.push_back(std::move(arm));
    }
    ensure(exact::is_negative_definite(intersection_matrix(g)),
           "canonical_graph: resolution form is not negative definite");
    return g;
}

PlumbingGraph canonical_graph(const seifert::BrieskornTriple& t) {
    return canonical_graph(seifert::normalize(t));
}

PlumbingGraph direct_graph(long long b, const std::vector<seifert::SeifertPair>& pairs) {
    PlumbingGraph g;
    g.weights.push_back(b);
    g.central = 0;
    for (const seifert::SeifertPair& p : pairs) {
        require(p.beta == 1 || p.beta == -1, "direct_graph: every beta must be +1 or -1");
        int id = g.size();
        g.weights.push_back(p.alpha * p.beta);
        g.edges.emplace_back(g.central, id);
        g.arms.push_back(Arm{p.alpha, p.beta, {id}});
    }
    return g;
}

IntegerMatrix intersection_matrix(const PlumbingGraph& g) {
    require(g.is_tree(), "intersection_matrix: edge set must form a tree");
    int n = g.size();
    IntegerMatrix q(n, n);
    for (int i = 0; i < n; ++i) q.at(i, i) = BigInt(g.weights[i]);
    for (auto [u, v] : g.edges) {
        q.at(u, v) = BigInt(1);
        q.at(v, u) = BigInt(1);
    }
    return q;
}

WuClass wu_class(const PlumbingGraph& g) {
    IntegerMatrix q = intersection_matrix(g);
    require(q.determinant().odd(), "wu_class: determinant must be odd");
    int n = g.size();
    std::vector<uint8_t> d(n);
    for (int i = 0; i < n; ++i) d[i] = q.at(i, i).odd() ? 1 : 0;
    WuClass w;
    w.coordinates = exact::solve_mod2(q, d);
    IntVector wv(n);
    for (int i = 0; i < n; ++i) wv[i] = BigInt(w.coordinates[i]);
    IntVector qw = q.apply(wv);
    for (int i = 0; i < n; ++i) w.square += wv[i] * qw[i];
    return w;
}

long long euler_characteristic_closed(const PlumbingGraph& g) {
    return g.size() + 2;
}

} // namespace brieskorn::plumbing
