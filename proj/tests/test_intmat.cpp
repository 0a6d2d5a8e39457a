#include "inoue/intmat.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace inoue;

namespace {

IMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> e(lo, hi);
    IMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
    return m;
}

BigInt gcd_all(const std::vector<BigInt>& xs) {
    BigInt g = 0;
    for (const auto& x : xs) g = gcd(g, x);
    return g;
}

// d1 = gcd of entries, d1 d2 = gcd of 2x2 minors.
std::pair<BigInt, BigInt> minors_divisors(const IMat& A) {
    std::vector<BigInt> e(A.entries()), m;
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t k = j + 1; k < A.cols(); ++k) m.push_back(A(0, j) * A(1, k) - A(0, k) * A(1, j));
    BigInt d1 = gcd_all(e), d12 = gcd_all(m);
    return {d1, d1 == 0 ? BigInt(0) : BigInt(d12 / d1)};
}

}  // namespace

TEST_CASE("determinant and characteristic polynomial") {
    IMat A{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    CHECK(det(A) == 18);
    MatrixInvariants inv = matrix_invariants(A);
    CHECK(inv.trace == 9);
    CHECK(inv.det == 18);
    REQUIRE(inv.charpoly.size() == 4);
    CHECK(inv.charpoly[1] == -9);
    CHECK(inv.charpoly[2] == 24);
    CHECK(inv.charpoly[3] == -18);
    CHECK(det(IMat{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IMat{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("products, powers and unimodular inverse") {
    IMat N{{1, 1}, {1, 2}};
    CHECK(mat_pow(N, 2) == IMat{{2, 3}, {3, 5}});
    CHECK(mat_pow(N, -1) == IMat{{2, -1}, {-1, 1}});
    CHECK(mat_pow(N, 0) == IMat::identity(2));
    CHECK(gl_inverse(N) * N == IMat::identity(2));
    IMat S{{0, -1}, {1, 0}};
    CHECK(mat_pow(S, 4) == IMat::identity(2));
    CHECK_THROWS_AS(gl_inverse(IMat{{2, 0}, {0, 1}}), ArithError);
}

TEST_CASE("Smith form transforms and divisors") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        IMat A = random_mat(rng, 2, 4, -9, 9);
        SNFResult s = smith_normal_form(A);
        CHECK(s.U * A * s.V == s.D);
        CHECK((det(s.U) == 1 || det(s.U) == -1));
        CHECK((det(s.V) == 1 || det(s.V) == -1));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        auto d = s.divisors();
        auto [e1, e2] = minors_divisors(A);
        CHECK(d[0] == e1);
        CHECK(d[1] == e2);
        if (d[0] != 0) CHECK(d[1] % d[0] == 0);
        CHECK(d[0] >= 0);
        CHECK(d[1] >= 0);
    }
    SNFResult s = smith_normal_form(IMat{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto d = s.divisors();
    CHECK(d[0] == 2);
    CHECK(d[1] == 6);
    CHECK(d[2] == 12);
}

TEST_CASE("column Hermite form spans the same lattice") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 100; ++it) {
        IMat A = random_mat(rng, 3, 3, -6, 6);
        if (det(A) == 0) continue;
        IMat H = hermite_columns(A);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(H(i, i) > 0);
            for (std::size_t j = 0; j < i; ++j) CHECK(H(i, j) == 0);
            for (std::size_t j = i + 1; j < 3; ++j) {
                CHECK(H(i, j) >= 0);
                CHECK(H(i, j) < H(i, i));
            }
        }
        CHECK(det(H) == abs(det(A)));
        // Each column of A is an integer combination of H's columns (back substitution).
        for (std::size_t j = 0; j < 3; ++j) {
            BigInt v[3] = {A(0, j), A(1, j), A(2, j)};
            for (int i = 2; i >= 0; --i) {
                CHECK(v[i] % H(i, i) == 0);
                BigInt q = v[i] / H(i, i);
                for (int k = 0; k <= i; ++k) v[k] -= q * H(k, i);
            }
        }
    }
    // Wider input: lattice generated by six columns.
    IMat W{{2, 0, 4, 1, 0, 3}, {0, 3, 3, 0, 6, 0}, {0, 0, 0, 5, 5, 5}};
    IMat H = hermite_columns(W);
    // Index = gcd of the 3x3 minors.
    BigInt g = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            for (std::size_t k = j + 1; k < 6; ++k) {
                IMat S(3, 3);
                for (std::size_t r = 0; r < 3; ++r) {
                    S(r, 0) = W(r, i);
                    S(r, 1) = W(r, j);
                    S(r, 2) = W(r, k);
                }
                g = gcd(g, det(S));
            }
    CHECK(det(H) == g);
}

TEST_CASE("finite quotient matches brute-force closure") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 150; ++it) {
        IMat A = random_mat(rng, 2, 2, -6, 6);
        long r = std::uniform_int_distribution<long>(1, 8)(rng);
        FiniteQuotient Q(A, r);
        oracle::M2 a{A(0, 0).get_si(), A(0, 1).get_si(), A(1, 0).get_si(), A(1, 1).get_si()};
        CHECK(Q.order() == static_cast<long>(oracle::quotient_order(a, r)));
        CHECK(static_cast<long>(Q.representatives().size()) == Q.order().get_si());
        std::set<std::size_t> idx;
        for (const auto& p : Q.representatives()) {
            CHECK(p[0] >= 0);
            CHECK(p[0] < r);
            CHECK(p[1] >= 0);
            CHECK(p[1] < r);
            CHECK(Q.reduce(p) == p);
            idx.insert(Q.index_of(p));
        }
        CHECK(idx.size() == Q.representatives().size());
        for (long x = -5; x <= 5; ++x)
            for (long y = -5; y <= 5; ++y) {
                IVec2 p{x, y};
                IVec2 q = Q.reduce(p);
                CHECK(Q.contains({p[0] - q[0], p[1] - q[1]}));
            }
        CHECK(Q.contains({A(0, 0), A(1, 0)}));
        CHECK(Q.contains({BigInt(r), 0}));
    }
    // theta = 4: I - N' for N' = [[1,2],[1,3]] gives divisors (1, gcd(2, r)).
    IMat M{{0, -2}, {-1, -2}};
    for (long r = 1; r <= 10; ++r) {
        FiniteQuotient Q = quotient_group(M, r);
        CHECK(Q.all_divisors()[0] == 1);
        CHECK(Q.all_divisors()[1] == std::gcd(2L, r));
    }
    CHECK_THROWS_AS(FiniteQuotient(M, 0), ArithError);
}
