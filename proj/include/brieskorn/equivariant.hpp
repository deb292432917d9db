#pragma once

#include "brieskorn/plumbing.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace brieskorn::equivariant {

// Rotation pair (base, fiber) of one disk-bundle chart, exact integers.
struct RotationDatum {
    long long base = 0;
    long long fiber = 0;
    bool operator==(const RotationDatum&) const = default;
};

// The two chart pairs of a node: inner faces the central node, outer faces
// away. outer = T(w) * inner with T(w) = [[-1,0],[-w,1]].
struct NodeCharts {
    RotationDatum inner;
    RotationDatum outer;
};

using Matrix2 = std::array<std::array<long long, 2>, 2>;

Matrix2 rotation_step(long long weight);            // T(w)
extern const Matrix2 kSwap;                         // A = [[0,1],[1,0]]
Matrix2 mat2_mul(const Matrix2& a, const Matrix2& b);
long long mat2_det(const Matrix2& m);

// Chart pairs along one arm of weights w_1..w_n (from the central node
// outward): node k carries T_k^{-1} L_k v and L_k v with v = (1,0) and
// L_k = T_k A T_{k-1} ... T_2 A T_1.
std::vector<NodeCharts> propagate_arm(const std::vector<long long>& weights, long long p);

// L_n of the arm realizing alpha/q1 (weights negated from the continued
// fraction); the bottom row is +-(alpha, q1) and the top-left entry is
// nonzero mod every prime dividing alpha.
Matrix2 arm_transfer_matrix(const std::vector<long long>& weights);
std::pair<long long, long long> last_node_form(long long pa, long long q1, long long p);

// Unordered rotation class mod p with (a,b) ~ (-a,-b); canonical
// representative is the lexicographically smaller of the two reductions.
std::pair<long long, long long> rotation_class(long long a, long long b, long long p);

struct FixedSphere {
    int node = -1;
    long long self_intersection = 0;
    bool operator==(const FixedSphere&) const = default;
};

struct FixedDisk {
    int node = -1;               // arm end carrying the disk
    long long fiber_order = 0;   // boundary singular fiber order (= pa)
    bool operator==(const FixedDisk&) const = default;
};

struct FixedPointCensus {
    long long p = 0;
    bool free_action = false;    // p divides no fiber order
    std::vector<std::pair<long long, long long>> isolated_points;   // rotation classes
    std::vector<FixedSphere> fixed_spheres;
    std::vector<FixedDisk> fixed_disks;
    std::vector<int> invariant_spheres;

    // chi of the fixed set inside the plumbed manifold
    long long euler_fixed_set() const {
        return 2 * static_cast<long long>(fixed_spheres.size()) +
               static_cast<long long>(isolated_points.size()) +
               static_cast<long long>(fixed_disks.size());
    }
    // after capping each fixed disk to a sphere in the closed model
    long long euler_fixed_set_closed() const {
        return euler_fixed_set() + static_cast<long long>(fixed_disks.size());
    }
};

// Fixed-point inventory of the Z/p plumbing action on a canonical graph for
// Sigma(pa,b,c). p must divide at most one fiber order; with no divisible
// fiber the census is flagged free_action and carries no fixed disk.
FixedPointCensus census(const plumbing::PlumbingGraph& g, long long p);

struct FixedSphereClass {
    int disk_node = -1;
    IntVector coordinates;   // plumbing-basis coefficients, up to global sign
    BigInt square;           // x^t Q x
};

// Homology class of the capped fixed sphere: solves Q x = b with b = +-1 at
// the fixed-disk node and 0 elsewhere.
FixedSphereClass fixed_sphere_class(const plumbing::PlumbingGraph& g, long long p);

// p = 2 G-signature bookkeeping: isolated (1,-1) points contribute 0 and
// each fixed sphere its square, so the capped sphere's square is
// Sign(X) - sum of the known squares with Sign(X) = -rank.
long long g_signature_solve(const FixedPointCensus& c, int rank, long long p);

} // namespace brieskorn::equivariant
