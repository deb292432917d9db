#include "brieskorn/equivariant.hpp"

#include "brieskorn/seifert.hpp"

#include <numeric>

namespace brieskorn::equivariant {

const Matrix2 kSwap{{{0, 1}, {1, 0}}};

Matrix2 rotation_step(long long weight) {
    return Matrix2{{{-1, 0}, {-weight, 1}}};
}

Matrix2 mat2_mul(const Matrix2& a, const Matrix2& b) {
    Matrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

long long mat2_det(const Matrix2& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

namespace {

RotationDatum apply(const Matrix2& m, const RotationDatum& v) {
    return {m[0][0] * v.base + m[0][1] * v.fiber, m[1][0] * v.base + m[1][1] * v.fiber};
}

} // namespace

std::vector<NodeCharts> propagate_arm(const std::vector<long long>& weights, long long p) {
    require(seifert::is_prime(p), "propagate_arm: p must be prime");
    std::vector<NodeCharts> out;
    RotationDatum v{1, 0};
    Matrix2 l{};   // L_k, built as L_k = T_k A L_{k-1}
    for (size_t k = 0; k < weights.size(); ++k) {
        Matrix2 t = rotation_step(weights[k]);
        l = k == 0 ? t : mat2_mul(t, mat2_mul(kSwap, l));
        ensure(mat2_det(l) == 1 || mat2_det(l) == -1, "propagate_arm: det L_k is not a unit");
        RotationDatum outer = apply(l, v);
        // inner chart: T_k^{-1} L_k = A L_{k-1}, and T(w) is an involution
        RotationDatum inner = apply(t, outer);
        out.push_back(NodeCharts{inner, outer});
    }
    return out;
}

Matrix2 arm_transfer_matrix(const std::vector<long long>& weights) {
    require(!weights.empty(), "arm_transfer_matrix: empty arm");
    Matrix2 l{};
    for (size_t k = 0; k < weights.size(); ++k) {
        Matrix2 t = rotation_step(weights[k]);
        l = k == 0 ? t : mat2_mul(t, mat2_mul(kSwap, l));
    }
    return l;
}

std::pair<long long, long long> last_node_form(long long pa, long long q1, long long p) {
    require(seifert::is_prime(p) && pa % p == 0, "last_node_form: p must be prime and divide pa");
    std::vector<long long> arm;
    for (long long x : exact::neg_continued_fraction(pa, q1)) arm.push_back(-x);
    Matrix2 l = arm_transfer_matrix(arm);
    long long r = l[0][0];   // base rotation of the outer chart at the last node
    ensure(std::llabs(l[1][0]) == pa && std::llabs(l[1][1]) == q1,
           "last_node_form: bottom row of L_n is not (+-pa, +-q1)");
    ensure(r % p != 0, "last_node_form: r = 0 mod p at the last node");
    return {l[1][0], l[1][1]};
}

std::pair<long long, long long> rotation_class(long long a, long long b, long long p) {
    long long am = ((a % p) + p) % p, bm = ((b % p) + p) % p;
    long long an = (p - am) % p, bn = (p - bm) % p;
    if (an < am || (an == am && bn < bm)) return {an, bn};
    return {am, bm};
}

FixedPointCensus census(const plumbing::PlumbingGraph& g, long long p) {
    require(seifert::is_prime(p), "census: p must be prime");
    require(!g.arms.empty(), "census: graph must carry arm data");
    int divisible = 0;
    for (const plumbing::Arm& arm : g.arms)
        if (arm.alpha % p == 0) ++divisible;
    require(divisible <= 1, "census: p divides more than one fiber order");

    FixedPointCensus c;
    c.p = p;
    c.free_action = divisible == 0;

    // the central node is the fixed sphere with charts (0,1),(0,1)
    c.fixed_spheres.push_back({g.central, g.weights[g.central]});

    for (const plumbing::Arm& arm : g.arms) {
        std::vector<long long> w;
        for (int id : arm.nodes) w.push_back(g.weights[id]);
        std::vector<NodeCharts> charts = propagate_arm(w, p);
        const bool is_p_arm = arm.alpha % p == 0;

        // edge meeting the central node: tangent pair = central outer chart (0,1)
        RotationDatum prev_outer{0, 1};
        for (size_t k = 0; k < arm.nodes.size(); ++k) {
            int id = arm.nodes[k];
            long long base = charts[k].inner.base;   // outer base differs by sign only
            bool fixed = base % p == 0;
            // the first node always carries v = (1,0); the last node of the
            // p-divisible arm has base != 0 mod p since det L_n = +-1
            if (k == 0 || (is_p_arm && k + 1 == arm.nodes.size()))
                ensure(!fixed, "census: node forced invariant was classified fixed");
            if (fixed)
                c.fixed_spheres.push_back({id, g.weights[id]});
            else
                c.invariant_spheres.push_back(id);

            // the k-th edge point carries the previous node's outer chart
            if (prev_outer.base % p != 0 && prev_outer.fiber % p != 0)
                c.isolated_points.push_back(rotation_class(prev_outer.base, prev_outer.fiber, p));
            prev_outer = charts[k].outer;
        }

        // far pole of the arm's end node
        if (prev_outer.base % p != 0 && prev_outer.fiber % p != 0) {
            c.isolated_points.push_back(rotation_class(prev_outer.base, prev_outer.fiber, p));
        } else if (prev_outer.fiber % p == 0 && prev_outer.base % p != 0) {
            ensure(is_p_arm, "census: fixed disk on an arm whose fiber order p does not divide");
            c.fixed_disks.push_back({arm.nodes.back(), arm.alpha});
        }
        if (is_p_arm)
            ensure(!c.fixed_disks.empty() && c.fixed_disks.back().node == arm.nodes.back(),
                   "census: missing fixed disk on the p-divisible arm");
    }

    // Lefschetz: chi of the fixed set equals chi of the plumbed manifold
    ensure(c.euler_fixed_set() == g.size() + 1, "census: Lefschetz count failed");
    return c;
}

FixedSphereClass fixed_sphere_class(const plumbing::PlumbingGraph& g, long long p) {
    FixedPointCensus c = census(g, p);
    require(c.fixed_disks.size() == 1, "fixed_sphere_class: census must yield exactly one fixed disk");
    IntegerMatrix q = plumbing::intersection_matrix(g);
    FixedSphereClass out;
    out.disk_node = c.fixed_disks[0].node;
    IntVector b(g.size());
    b[out.disk_node] = BigInt(1);
    out.coordinates = exact::solve_unimodular(q, b);
    IntVector qx = q.apply(out.coordinates);
    for (int i = 0; i < g.size(); ++i) out.square += out.coordinates[i] * qx[i];
    return out;
}

long long g_signature_solve(const FixedPointCensus& c, int rank, long long p) {
    require(p == 2, "g_signature_solve: only p = 2 is implemented exactly");
    for (const auto& pt : c.isolated_points)
        ensure(pt == rotation_class(1, -1, 2), "g_signature_solve: unexpected rotation class");
    long long known = 0;
    for (const FixedSphere& s : c.fixed_spheres) known += s.self_intersection;
    return -rank - known;
}

} // namespace brieskorn::equivariant
