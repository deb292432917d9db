#include "brieskorn/knots.hpp"

#include <algorithm>
#include <numeric>

namespace brieskorn::knots {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPolynomial IntPolynomial::from_int64(const std::vector<long long>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
    BigInt r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

IntPolynomial IntPolynomial::reversed() const {
    std::vector<BigInt> c(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(c));
}

bool IntPolynomial::palindromic_up_to_sign() const {
    if (is_zero()) return true;
    IntPolynomial rev = reversed();
    if (rev == *this) return true;
    for (BigInt& v : rev.c_) v = -v;
    return rev == *this;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
        else if (c_[i].sign() < 0) s += "-";
        std::string mag = c_[i].abs().to_string();
        if (i == 0) s += mag;
        else {
            if (mag != "1") s += mag + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

BigInt fox_milnor_default_bound(const IntPolynomial& delta) {
    BigInt maxc(0);
    for (const BigInt& v : delta.coefficients())
        if (v.abs() > maxc) maxc = v.abs();
    int d = delta.degree() / 2;
    BigInt b(1);
    for (int i = 0; i < d; ++i) b *= BigInt(2);
    b *= maxc;
    return b > BigInt(1) ? b : BigInt(1);
}

namespace {

// canonical representative of {f, -f, rev f, -rev f}
IntPolynomial canonical_factor(const IntPolynomial& f) {
    std::vector<IntPolynomial> reps;
    reps.push_back(f);
    reps.push_back(f.reversed());
    for (int k = 0; k < 2; ++k) {
        std::vector<BigInt> neg;
        for (const BigInt& v : reps[k].coefficients()) neg.push_back(-v);
        reps.push_back(IntPolynomial(std::move(neg)));
    }
    return *std::max_element(reps.begin(), reps.end(),
                             [](const IntPolynomial& a, const IntPolynomial& b) {
                                 const auto& ca = a.coefficients();
                                 const auto& cb = b.coefficients();
                                 for (size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
                                     int c = ca[i].compare(cb[i]);
                                     if (c != 0) return c < 0;
                                 }
                                 return ca.size() < cb.size();
                             });
}

struct FactorSearch {
    int d;
    std::vector<BigInt> target;   // c_j must equal target[j], j = 0..d (autocorrelation)
    BigInt bound;
    std::vector<BigInt> f;        // coefficients 0..d
    std::optional<IntPolynomial> found;

    // autocorrelation at lag j over currently assigned coefficients;
    // returns nullopt when an unassigned coefficient is involved
    BigInt known_part(int j, const std::vector<bool>& set, bool& complete) const {
        BigInt s(0);
        complete = true;
        for (int i = 0; i + j <= d; ++i) {
            if (!set[i] || !set[i + j]) { complete = false; continue; }
            s += f[i] * f[i + j];
        }
        return s;
    }

    bool verify_all(const std::vector<bool>& set) {
        for (int j = 0; j <= d; ++j) {
            bool complete = false;
            BigInt c = known_part(j, set, complete);
            if (!complete || c != target[j]) return false;
        }
        return true;
    }

    void finish(std::vector<bool>& set) {
        if (found) return;
        if (verify_all(set)) {
            std::vector<BigInt> coeffs(f.begin(), f.begin() + d + 1);
            found = canonical_factor(IntPolynomial(std::move(coeffs)));
        }
    }

    // stage t assigns the pair (f_t, f_{d-t}) using c_{d-t}
    void stage(int t, std::vector<bool>& set) {
        if (found) return;
        if (t > d - t) { finish(set); return; }
        if (t == d - t) {
            // middle coefficient: c_t is linear in f_t with slope f_0 + f_d
            bool complete = false;
            set[t] = true;
            f[t] = BigInt(0);
            BigInt base = known_part(t, set, complete);   // value with f_t = 0 contributions
            set[t] = false;
            // terms containing f_t: f_0 * f_t (i = 0) and f_t * f_d (i = t);
            // with f_t = 0 those vanish, so base is the known remainder
            BigInt slope = f[0] + f[d];
            BigInt need = target[t] - base;
            if (slope.is_zero()) {
                if (!need.is_zero()) return;
                for (BigInt v(0);; v += BigInt(1)) {
                    if (v > bound) break;
                    for (int sg = 0; sg < (v.is_zero() ? 1 : 2); ++sg) {
                        f[t] = sg ? -v : v;
                        set[t] = true;
                        finish(set);
                        set[t] = false;
                        if (found) return;
                    }
                }
                return;
            }
            BigInt q, r;
            BigInt::divmod(need, slope, q, r);
            if (!r.is_zero() || q.abs() > bound) return;
            f[t] = q;
            set[t] = true;
            finish(set);
            set[t] = false;
            return;
        }
        if (t == 0) {
            // f_0 * f_d = c_d = target[d], both nonzero divisors
            BigInt prod = target[d];
            for (BigInt a(1); a <= bound; a += BigInt(1)) {
                BigInt q, r;
                BigInt::divmod(prod, a, q, r);
                if (!r.is_zero() || q.abs() > bound) continue;
                for (int sg = 0; sg < 2; ++sg) {
                    f[0] = sg ? -a : a;
                    f[d] = prod / f[0];
                    set[0] = set[d] = true;
                    stage(1, set);
                    set[0] = set[d] = false;
                    if (found) return;
                }
            }
            return;
        }
        // c_{d-t} = f_0 f_{d-t} + f_t f_d + known middle terms
        for (BigInt v(0);; v += BigInt(1)) {
            if (v > bound) break;
            for (int sg = 0; sg < (v.is_zero() ? 1 : 2); ++sg) {
                f[t] = sg ? -v : v;
                set[t] = true;
                bool complete = false;
                f[d - t] = BigInt(0);
                set[d - t] = true;
                BigInt base = known_part(d - t, set, complete);
                set[d - t] = false;
                BigInt need = target[d - t] - base;
                BigInt q, r;
                BigInt::divmod(need, f[0], q, r);
                if (r.is_zero() && q.abs() <= bound) {
                    f[d - t] = q;
                    set[d - t] = true;
                    stage(t + 1, set);
                    set[d - t] = false;
                }
                set[t] = false;
                if (found) return;
            }
        }
    }
};

bool is_perfect_square(const BigInt& v) {
    if (v.sign() < 0) return false;
    if (v.is_zero()) return true;
    BigInt lo(0), hi(1);
    while (hi * hi < v) hi *= BigInt(2);
    while (lo < hi) {
        BigInt mid = (lo + hi + BigInt(1)) / BigInt(2);
        if (mid * mid <= v) lo = mid; else hi = mid - BigInt(1);
    }
    return lo * lo == v;
}

} // namespace

FoxMilnorResult fox_milnor_test(const IntPolynomial& delta) {
    return fox_milnor_test(delta, fox_milnor_default_bound(delta));
}

FoxMilnorResult fox_milnor_test(const IntPolynomial& delta, const BigInt& coefficient_bound) {
    require(!delta.is_zero(), "fox_milnor_test: zero polynomial");
    require(delta.degree() % 2 == 0, "fox_milnor_test: degree must be even");
    require(delta.palindromic_up_to_sign(), "fox_milnor_test: polynomial must be palindromic up to sign");
    require(coefficient_bound.sign() > 0, "fox_milnor_test: bound must be positive");

    FoxMilnorResult res;
    res.bound_used = coefficient_bound;
    res.exhaustive = coefficient_bound >= fox_milnor_default_bound(delta);

    // delta(-1) = +-f(-1)^2, so |delta(-1)| must be a perfect square
    if (!is_perfect_square(delta.evaluate(BigInt(-1)).abs())) {
        res.verdict = FoxMilnorVerdict::fail;
        res.exhaustive = true;
        return res;
    }

    const int d = delta.degree() / 2;
    if (d == 0) {
        BigInt c = delta.coefficients()[0].abs();
        if (is_perfect_square(c)) {
            BigInt root(0);
            while (root * root < c) root += BigInt(1);
            res.verdict = FoxMilnorVerdict::pass;
            res.factor = IntPolynomial({root});
        } else {
            res.verdict = res.exhaustive ? FoxMilnorVerdict::fail : FoxMilnorVerdict::inconclusive;
        }
        return res;
    }

    for (int eps : {1, -1}) {
        FactorSearch s;
        s.d = d;
        s.bound = coefficient_bound;
        s.target.resize(d + 1);
        // c_j = eps * delta_{d-j}
        for (int j = 0; j <= d; ++j) {
            BigInt v = delta.coefficients()[d - j];
            s.target[j] = eps > 0 ? v : -v;
        }
        s.f.assign(d + 1, BigInt(0));
        std::vector<bool> set(static_cast<size_t>(d) + 1, false);
        s.stage(0, set);
        if (s.found) {
            res.verdict = FoxMilnorVerdict::pass;
            res.factor = s.found;
            return res;
        }
    }
    res.verdict = res.exhaustive ? FoxMilnorVerdict::fail : FoxMilnorVerdict::inconclusive;
    return res;
}

IntegerMatrix torus_symmetrized_seifert_form(long long p, long long q) {
    require(p >= 1 && q >= 1, "torus_signature: p, q must be >= 1");
    require(std::gcd(p, q) == 1, "torus_signature: p, q must be coprime");
    auto band = [](long long n) {
        IntegerMatrix v(static_cast<int>(n - 1), static_cast<int>(n - 1));
        for (int i = 0; i + 1 < n; ++i) {
            v.at(i, i) = BigInt(-1);
            if (i + 2 < n) v.at(i, i + 1) = BigInt(1);
        }
        return v;
    };
    IntegerMatrix vp = band(p), vq = band(q);
    int np = vp.rows(), nq = vq.rows(), n = np * nq;
    IntegerMatrix m(n, n);
    for (int i = 0; i < np; ++i)
        for (int k = 0; k < np; ++k) {
            if (vp.at(i, k).is_zero()) continue;
            for (int j = 0; j < nq; ++j)
                for (int l = 0; l < nq; ++l) {
                    if (vq.at(j, l).is_zero()) continue;
                    m.at(i * nq + j, k * nq + l) = -(vp.at(i, k) * vq.at(j, l));
                }
        }
    IntegerMatrix sym(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sym.at(i, j) = m.at(i, j) + m.at(j, i);
    return sym;
}

long long torus_signature(long long p, long long q) {
    IntegerMatrix s = torus_symmetrized_seifert_form(p, q);
    exact::Inertia in = exact::signature(s);
    ensure(in.n_zero == 0, "torus_signature: symmetrized Seifert form is degenerate");
    return in.n_plus - in.n_minus;
}

SliceObstructionReport slice_obstruction_report(long long p, long long q) {
    SliceObstructionReport r;
    r.p = p;
    r.q = q;
    r.signature = torus_signature(p, q);
    r.obstructed = p >= 2 && q >= 2 && r.signature != 0;
    return r;
}

} // namespace brieskorn::knots
