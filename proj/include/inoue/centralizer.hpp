#pragma once

#include "inoue/intmat.hpp"

#include <optional>
#include <utility>

namespace inoue {

struct CentralizerLattice {
    IMat B;    // (N - n11 I) / g; the lattice is Z I + Z B
    BigInt g;  // gcd(n12, n21, n22 - n11)
};

struct CentralizerGen {
    IMat K;
    int eps = 1;                   // det K
    QuadElem theta_eig;            // eigenvalue of K on the expanding eigenvector of N
    std::optional<long> power_to_N;  // e with K^e = N
    BigInt x, y;                   // K = x B + y I
};

CentralizerLattice centralizer_lattice(const IMat& N);

// Expanding eigenvalue (theta + sqrt(theta^2 - 4 det)) / 2 of a hyperbolic 2x2 matrix.
QuadElem expanding_eigenvalue(const IMat& N);

// Eigenvalue of x B + y I on the expanding eigenvector of N.
QuadElem eigen_on_expanding(const IMat& N, const CentralizerLattice& lat, const BigInt& x, const BigInt& y);

CentralizerGen positive_centralizer_generator(const IMat& N);

// N^k = a_k N + b_k I for |det N| = 1.
std::pair<BigInt, BigInt> power_expand(const IMat& N, long k);

}  // namespace inoue
