#pragma once

// Reference computations for the test suites. Nothing here calls into the
// library; all checks are plain machine-integer brute force.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using M2 = std::array<long long, 4>;  // row-major a b / c d
using V2 = std::array<long long, 2>;

inline M2 mul(const M2& x, const M2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
inline long long det(const M2& x) { return x[0] * x[3] - x[1] * x[2]; }
inline long long trace(const M2& x) { return x[0] + x[3]; }
// Inverse of a unimodular matrix.
inline M2 inv(const M2& x) {
    long long d = det(x);
    return {d * x[3], -d * x[1], -d * x[2], d * x[0]};
}
inline V2 mat_apply(const M2& x, const V2& v) { return {x[0] * v[0] + x[1] * v[1], x[2] * v[0] + x[3] * v[1]}; }
inline M2 conj(const M2& k, const M2& n) { return mul(mul(k, n), inv(k)); }

inline const std::vector<M2>& gl2_generators() {
    static const std::vector<M2> g{{0, -1, 1, 0}, {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 0, -1}};
    return g;
}

// Product of a random word of length <= max_len in the generators of GL(2,Z).
inline M2 random_gl2(std::mt19937_64& rng, int max_len) {
    const auto& g = gl2_generators();
    std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(g.size()) - 1);
    M2 m{1, 0, 0, 1};
    for (int i = len(rng); i > 0; --i) m = mul(m, g[static_cast<std::size_t>(pick(rng))]);
    return m;
}

// Smallest unit y + x B > 1 of Z[B] with |x|, |y| <= bound, B the larger root of X^2 - t X + n.
struct Unit {
    long long x = 0, y = 0;
    long double value = 0;
};
inline std::optional<Unit> smallest_unit(long long t, long long n, long long bound) {
    long double B = (t + std::sqrt(static_cast<long double>(t * t - 4 * n))) / 2;
    std::optional<Unit> best;
    for (long long x = -bound; x <= bound; ++x)
        for (long long y = -bound; y <= bound; ++y) {
            // N(y + x B) = y^2 + t x y + n x^2
            long long nm = y * y + t * x * y + n * x * x;
            if (nm != 1 && nm != -1) continue;
            long double v = y + x * B;
            if (v <= 1 + 1e-12L) continue;
            if (!best || v < best->value) best = Unit{x, y, v};
        }
    return best;
}

// |Z^2 / (A Z^2 + r Z^2)| by closing the image of A's columns in (Z/r)^2.
inline long long quotient_order(const M2& A, long long r) {
    auto md = [r](long long v) { return ((v % r) + r) % r; };
    std::set<std::pair<long long, long long>> sub{{0, 0}};
    std::queue<std::pair<long long, long long>> q;
    q.push({0, 0});
    std::array<V2, 2> cols{V2{A[0], A[2]}, V2{A[1], A[3]}};
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        for (const auto& c : cols) {
            std::pair<long long, long long> nxt{md(x + c[0]), md(y + c[1])};
            if (sub.insert(nxt).second) q.push(nxt);
        }
    }
    return r * r / static_cast<long long>(sub.size());
}

// Orbits of p -> det(K) K p on Z^2 / (A Z^2 + r Z^2), by brute force over (Z/r)^2.
inline long long orbit_count(const M2& A, long long r, const M2& K) {
    auto md = [r](long long v) { return ((v % r) + r) % r; };
    std::set<std::pair<long long, long long>> sub{{0, 0}};
    std::queue<std::pair<long long, long long>> q;
    q.push({0, 0});
    std::array<V2, 2> cols{V2{A[0], A[2]}, V2{A[1], A[3]}};
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        for (const auto& c : cols) {
            std::pair<long long, long long> nxt{md(x + c[0]), md(y + c[1])};
            if (sub.insert(nxt).second) q.push(nxt);
        }
    }
    // Class label: least element of the coset.
    auto label = [&](long long x, long long y) {
        std::pair<long long, long long> best{r, r};
        for (const auto& [s, t] : sub) best = std::min(best, std::pair{md(x + s), md(y + t)});
        return best;
    };
    long long e = det(K);
    std::set<std::pair<long long, long long>> seen;
    long long orbits = 0;
    for (long long x = 0; x < r; ++x)
        for (long long y = 0; y < r; ++y) {
            auto start = label(x, y);
            if (seen.count(start)) continue;
            ++orbits;
            auto cur = start;
            while (seen.insert(cur).second) {
                V2 v = mat_apply(K, {cur.first, cur.second});
                cur = label(e * v[0], e * v[1]);
            }
        }
    return orbits;
}

// Connected components of the conjugation graph on matrices with trace t,
// det d and entries bounded by box. Two matrices share a component only if
// an explicit chain of generator conjugations links them.
class ConjugationGraph {
public:
    ConjugationGraph(long long t, long long d, long long box) : box_(box) {
        for (long long a = -box; a <= box; ++a) {
            long long dd = t - a;
            if (dd < -box || dd > box) continue;
            long long bc = a * dd - d;
            for (long long b = -box; b <= box; ++b) {
                if (b == 0) {
                    if (bc == 0)
                        for (long long c = -box; c <= box; ++c) add({a, 0, c, dd});
                    continue;
                }
                if (bc % b) continue;
                long long c = bc / b;
                if (c >= -box && c <= box) add({a, b, c, dd});
            }
        }
        parent_.resize(nodes_.size());
        std::iota(parent_.begin(), parent_.end(), 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            for (const auto& g : gl2_generators()) {
                auto it = index_.find(conj(g, nodes_[i]));
                if (it != index_.end()) unite(i, it->second);
            }
    }

    bool contains(const M2& m) const { return index_.count(m) != 0; }
    std::size_t component(const M2& m) { return find(index_.at(m)); }
    const std::vector<M2>& nodes() const { return nodes_; }

private:
    void add(const M2& m) {
        index_.emplace(m, nodes_.size());
        nodes_.push_back(m);
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
        return i;
    }
    void unite(std::size_t i, std::size_t j) { parent_[find(i)] = find(j); }

    long long box_;
    std::vector<M2> nodes_;
    std::map<M2, std::size_t> index_;
    std::vector<std::size_t> parent_;
};

// Left side of the mod-2 congruence for K, L in GL(2,Z).
inline V2 mod2_lhs(const M2& K, const M2& L) {
    M2 LK = mul(L, K);
    V2 kk{K[0] * K[1], K[2] * K[3]};
    V2 ll{L[0] * L[1], L[2] * L[3]};
    V2 lk{LK[0] * LK[1], LK[2] * LK[3]};
    V2 a = mat_apply(L, kk);
    long long dk = det(K);
    return {a[0] + dk * ll[0] - lk[0], a[1] + dk * ll[1] - lk[1]};
}

// Right side of the same identity.
inline V2 mod2_rhs(const M2& K, const M2& L) {
    auto h = [](long long l) { return (l - l * l) / 2; };
    long long p = K[0] * K[1], q = K[2] * K[3];
    return {2 * (h(L[0]) * p + h(L[1]) * q) - 2 * K[1] * K[2] * L[0] * L[1],
            2 * (h(L[2]) * p + h(L[3]) * q) - 2 * K[1] * K[2] * L[2] * L[3]};
}

// (eK K - I)(n11 n12, n21 n22) + eK (I - N)(k11 k12, k21 k22): the bracket of the
// K*[p] formula; the first term equals r/2 times this vector.
inline V2 star_bracket(const M2& K, const M2& N) {
    long long e = det(K);
    M2 A{e * K[0] - 1, e * K[1], e * K[2], e * K[3] - 1};
    M2 B{1 - N[0], -N[1], -N[2], 1 - N[3]};
    V2 x = mat_apply(A, {N[0] * N[1], N[2] * N[3]});
    V2 y = mat_apply(B, {K[0] * K[1], K[2] * K[3]});
    return {x[0] + e * y[0], x[1] + e * y[1]};
}

inline long long gcd3(long long a, long long b, long long c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace oracle
