#include "inoue/centralizer.hpp"

namespace inoue {

namespace {

void check_2x2_hyperbolic(const IMat& N) {
    if (N.rows() != 2 || N.cols() != 2) throw ArithError("expected a 2x2 matrix");
    MatrixInvariants inv = matrix_invariants(N);
    BigInt D = inv.trace * inv.trace - 4 * inv.det;
    if (D <= 0 || is_square(D)) throw ArithError("matrix spectrum is not irrational real");
}

}  // namespace

CentralizerLattice centralizer_lattice(const IMat& N) {
    check_2x2_hyperbolic(N);
    BigInt g = gcd(gcd(N(0, 1), N(1, 0)), N(1, 1) - N(0, 0));
    IMat B = N - N(0, 0) * IMat::identity(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) B(i, j) /= g;
    return {B, g};
}

QuadElem expanding_eigenvalue(const IMat& N) {
    check_2x2_hyperbolic(N);
    MatrixInvariants inv = matrix_invariants(N);
    BigInt D = inv.trace * inv.trace - 4 * inv.det;
    BigInt f, s;
    squarefree_split(D, f, s);
    return QuadElem(s.get_si(), make_rat(inv.trace, 2), make_rat(f, 2));
}

QuadElem eigen_on_expanding(const IMat& N, const CentralizerLattice& lat, const BigInt& x, const BigInt& y) {
    QuadElem alpha = expanding_eigenvalue(N);
    QuadElem lamB = (alpha - BigRat(N(0, 0))) * make_rat(1, lat.g);
    return lamB * BigRat(x) + BigRat(y);
}

CentralizerGen positive_centralizer_generator(const IMat& N) {
    MatrixInvariants inv = matrix_invariants(N);
    if (inv.det != 1 && inv.det != -1) throw ArithError("centralizer generator needs |det N| = 1");
    CentralizerLattice lat = centralizer_lattice(N);
    MatrixInvariants binv = matrix_invariants(lat.B);
    UnitResult u = fundamental_unit(binv.trace, binv.det);

    CentralizerGen gen;
    gen.x = u.x;
    gen.y = u.y;
    gen.K = u.x * lat.B + u.y * IMat::identity(2);
    gen.eps = u.norm;
    gen.theta_eig = eigen_on_expanding(N, lat, u.x, u.y);

    if (!(gen.K * N == N * gen.K)) throw InvariantViolation("generator does not commute with N");
    if (det(gen.K) != gen.eps) throw InvariantViolation("generator determinant mismatch");
    if (!(gen.theta_eig > QuadElem(gen.theta_eig.d(), 1)))
        throw InvariantViolation("generator eigenvalue on the expanding line is not > 1");

    QuadElem alpha = expanding_eigenvalue(N);
    QuadElem pw(alpha.d(), 1);
    IMat P = IMat::identity(2);
    for (long e = 1; e <= 256; ++e) {
        pw = pw * gen.theta_eig;
        P = P * gen.K;
        if (P == N) {
            gen.power_to_N = e;
            break;
        }
        if (pw > alpha) break;
    }

    // Known generators when gcd = 1 and det N = 1.
    if (inv.det == 1 && lat.g == 1) {
        if (inv.trace > 3 && !(gen.K == N)) throw InvariantViolation("expected generator N for trace > 3");
        if (inv.trace == 3 && !(gen.K * gen.K == N && gen.eps == -1))
            throw InvariantViolation("expected a square root of N with det -1 for trace 3");
    }
    return gen;
}

std::pair<BigInt, BigInt> power_expand(const IMat& N, long k) {
    MatrixInvariants inv = matrix_invariants(N);
    if (inv.det != 1 && inv.det != -1) throw ArithError("power_expand needs |det N| = 1");
    const BigInt& th = inv.trace;
    const BigInt& d = inv.det;
    BigInt a = 0, b = 1;
    if (k >= 0) {
        // N^{j+1} = (theta a + b) N - d a I
        for (long j = 0; j < k; ++j) {
            BigInt na = th * a + b;
            BigInt nb = -d * a;
            a = na;
            b = nb;
        }
    } else {
        // N^{-1} = d (theta I - N)
        for (long j = 0; j > k; --j) {
            BigInt na = -d * b;
            BigInt nb = a + d * th * b;
            a = na;
            b = nb;
        }
    }
    return {a, b};
}

}  // namespace inoue
