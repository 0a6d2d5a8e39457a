#include "inoue/centralizer.hpp"
#include "inoue/conjugacy.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace inoue;

TEST_CASE("centralizer lattice") {
    CentralizerLattice l0 = centralizer_lattice(IMat{{1, 1}, {1, 2}});
    CHECK(l0.g == 1);
    CHECK(l0.B == IMat{{0, 1}, {1, 1}});
    CentralizerLattice l1 = centralizer_lattice(IMat{{1, 2}, {1, 3}});
    CHECK(l1.g == 1);
    CHECK(l1.B == IMat{{0, 2}, {1, 2}});
    CentralizerLattice l2 = centralizer_lattice(IMat{{0, 2}, {3, 3}});
    CHECK(l2.g == 1);
    CHECK(l2.B == IMat{{0, 2}, {3, 3}});
    // Eigenvalues 4 and -1.
    CHECK_THROWS_AS(centralizer_lattice(IMat{{0, 2}, {2, 3}}), ArithError);
    CentralizerLattice l3 = centralizer_lattice(IMat{{1, 2}, {4, 9}});
    CHECK(l3.g == 2);
    CHECK(l3.B == IMat{{0, 1}, {2, 4}});
    CHECK_THROWS_AS(centralizer_lattice(IMat{{2, 0}, {0, 3}}), ArithError);
}

TEST_CASE("generators of the positive centralizer") {
    CentralizerGen g0 = positive_centralizer_generator(IMat{{1, 1}, {1, 2}});
    CHECK(g0.K == IMat{{0, 1}, {1, 1}});
    CHECK(g0.eps == -1);
    CHECK(g0.power_to_N == 2);

    CentralizerGen g1 = positive_centralizer_generator(IMat{{1, 2}, {1, 3}});
    CHECK(g1.K == IMat{{1, 2}, {1, 3}});
    CHECK(g1.eps == 1);
    CHECK(g1.power_to_N == 1);

    CentralizerGen g2 = positive_centralizer_generator(IMat{{2, 1}, {1, 1}});
    CHECK(g2.K == IMat{{1, 1}, {1, 0}});
    CHECK(g2.eps == -1);
    CHECK(g2.K * g2.K == IMat{{2, 1}, {1, 1}});
}

TEST_CASE("generator invariants and brute-force minimality") {
    std::vector<IMat> Ns;
    for (long t = 3; t <= 9; ++t)
        for (const auto& c : similarity_classes(t, 1)) Ns.push_back(c.representative);
    for (long t = 1; t <= 6; ++t)
        for (const auto& c : similarity_classes(t, -1)) Ns.push_back(c.representative);
    Ns.push_back(IMat{{1, 2}, {4, 9}});
    for (const IMat& N : Ns) {
        CAPTURE(N.str());
        CentralizerGen g = positive_centralizer_generator(N);
        CHECK(g.K * N == N * g.K);
        CHECK(det(g.K) == g.eps);
        CHECK(g.theta_eig > QuadElem(g.theta_eig.d(), 1));
        // theta(K^m) = theta(K)^m and the values are pairwise distinct.
        QuadElem acc(g.theta_eig.d(), 1);
        std::vector<QuadElem> seen;
        for (long m = 1; m <= 6; ++m) {
            acc = acc * g.theta_eig;
            CentralizerLattice lat = centralizer_lattice(N);
            IMat P = mat_pow(g.K, m);
            // B(0,0) = 0, so P = x B + y I reads off directly.
            BigInt y = P(0, 0), x = P(0, 1) / lat.B(0, 1);
            CHECK(eigen_on_expanding(N, lat, x, y) == acc);
            for (const auto& s : seen) CHECK_FALSE(s == acc);
            seen.push_back(acc);
        }
        // Oracle: smallest unit of Z[B] over a box, independent of the continued fraction.
        CentralizerLattice lat = centralizer_lattice(N);
        long long t = BigInt(lat.B(0, 0) + lat.B(1, 1)).get_si();
        long long n = det(lat.B).get_si();
        auto best = oracle::smallest_unit(t, n, 1000);
        REQUIRE(best);
        IMat K = BigInt(static_cast<long>(best->x)) * lat.B + BigInt(static_cast<long>(best->y)) * IMat::identity(2);
        CHECK(K == g.K);
    }
}

TEST_CASE("power expansion") {
    IMat N0{{1, 1}, {1, 2}};
    CHECK(power_expand(N0, 2) == std::pair<BigInt, BigInt>(3, -1));
    CHECK(power_expand(N0, 0) == std::pair<BigInt, BigInt>(0, 1));
    CHECK(power_expand(N0, -1) == std::pair<BigInt, BigInt>(-1, 3));
    for (const IMat& N : {N0, IMat{{1, 2}, {1, 3}}, IMat{{0, 1}, {1, 1}}, IMat{{1, 2}, {2, 3}}}) {
        for (long k = -12; k <= 12; ++k) {
            auto [a, b] = power_expand(N, k);
            CHECK(mat_pow(N, k) == a * N + b * IMat::identity(2));
        }
    }
}
