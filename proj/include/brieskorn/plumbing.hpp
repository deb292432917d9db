#pragma once

#include "brieskorn/exact.hpp"
#include "brieskorn/seifert.hpp"

#include <utility>
#include <vector>

namespace brieskorn::plumbing {

struct Arm {
    long long alpha = 0;               // Seifert pair the arm realizes
    long long beta = 0;
    std::vector<int> nodes;            // node ids from the central node outward
};

// Weighted plumbing tree. Star-shaped graphs carry their arms; node 0 is
// the central node and arm nodes follow in pair order, so intersection
// matrices match the F_1..F_n labeling of the worked examples.
struct PlumbingGraph {
    std::vector<long long> weights;
    std::vector<std::pair<int, int>> edges;
    int central = 0;
    std::vector<Arm> arms;

    int size() const { return static_cast<int>(weights.size()); }
    bool is_tree() const;
};

// Canonical negative definite resolution graph of normalized Seifert data:
// central node with weight b, arm i the chain of weights -x_1..-x_k from
// the negative continued fraction of alpha_i/beta_i, attached at x_1.
// Negative definiteness is asserted.
PlumbingGraph canonical_graph(const seifert::SeifertData& d);

PlumbingGraph canonical_graph(const seifert::BrieskornTriple& t);

// Star graph straight from unnormalized data with beta = +-1: each pair
// contributes a single node of weight alpha*beta next to the center.
PlumbingGraph direct_graph(long long b, const std::vector<seifert::SeifertPair>& pairs);

// Symmetric matrix with the weights on the diagonal and 1 for each edge.
IntegerMatrix intersection_matrix(const PlumbingGraph& g);

struct WuClass {
    std::vector<uint8_t> coordinates;   // 0/1 vector over the node basis
    BigInt square;                      // w^t Q w
};

// Unique 0/1 solution of Q w = diag(Q) mod 2; requires odd determinant.
WuClass wu_class(const PlumbingGraph& g);

// Euler characteristic of the closed-up model (node count + 2).
long long euler_characteristic_closed(const PlumbingGraph& g);

} // namespace brieskorn::plumbing
