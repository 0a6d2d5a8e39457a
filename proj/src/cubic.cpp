#include "inoue/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

namespace inoue {

BigInt cubic_disc(const BigInt& theta2, const BigInt& theta1) {
    // X^3 + a X^2 + b X + c with a = -theta2, b = theta1, c = -1.
    BigInt a = -theta2, b = theta1, c = -1;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

CubicDiagnosis admissible_cubic(const BigInt& theta2, const BigInt& theta1) {
    CubicDiagnosis d;
    d.disc = cubic_disc(theta2, theta1);
    d.p_at_1 = theta1 - theta2;
    BigInt p_at_m1 = -2 - theta2 - theta1;
    d.has_rational_root = d.p_at_1 == 0 || p_at_m1 == 0;
    if (d.disc >= 0) d.reason = "discriminant is not negative (P needs one real and two non-real roots)";
    else if (d.p_at_1 >= 0) d.reason = "P(1) >= 0 (real root is not > 1; needs theta1 < theta2)";
    else d.admissible = true;
    if (d.admissible && d.has_rational_root) throw InvariantViolation("admissible cubic has a rational root");
    return d;
}

IMat companion_matrix(const CubicInput& P) {
    IMat A(3, 3);
    A(0, 2) = 1;
    A(1, 0) = 1;
    A(1, 2) = -P.theta1;
    A(2, 1) = 1;
    A(2, 2) = P.theta2;
    return A;
}

IMat mult_matrix(const CubicInput& P, const BigInt& y0, const BigInt& y1, const BigInt& y2) {
    IMat A = companion_matrix(P);
    return y0 * IMat::identity(3) + y1 * A + y2 * (A * A);
}

namespace {

// Solves H x = v for upper-triangular H; false if x is not integral.
bool in_lattice(const IMat& H, IMat v) {
    for (std::size_t i = 3; i-- > 0;) {
        if (!mpz_divisible_p(v(i, 0).get_mpz_t(), H(i, i).get_mpz_t())) return false;
        BigInt x = v(i, 0) / H(i, i);
        for (std::size_t r = 0; r <= i; ++r) v(r, 0) -= x * H(r, i);
    }
    return true;
}

bool in_lattice64(const long H[3][3], long v0, long v1, long v2) {
    if (v2 % H[2][2]) return false;
    long x2 = v2 / H[2][2];
    v0 -= x2 * H[0][2];
    v1 -= x2 * H[1][2];
    if (v1 % H[1][1]) return false;
    long x1 = v1 / H[1][1];
    v0 -= x1 * H[0][1];
    return v0 % H[0][0] == 0;
}

IMat adjugate3(const IMat& M) {
    IMat adj(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            adj(i, j) = M(r0, c0) * M(r1, c1) - M(r0, c1) * M(r1, c0);
        }
    return adj;
}

struct Roots {
    long double alpha;
    std::complex<long double> beta;
};

Roots cubic_roots(const CubicInput& P) {
    long double t2 = P.theta2.get_d(), t1 = P.theta1.get_d();
    auto f = [&](long double x) { return ((x - t2) * x + t1) * x - 1; };
    long double lo = 1, hi = 2 + std::fabs(t2) + std::fabs(t1);
    for (int i = 0; i < 200; ++i) {
        long double mid = (lo + hi) / 2;
        (f(mid) < 0 ? lo : hi) = mid;
    }
    Roots r;
    r.alpha = (lo + hi) / 2;
    long double s = t2 - r.alpha;
    long double disc = s * s - 4 / r.alpha;
    r.beta = {s / 2, std::sqrt(std::fabs(disc)) / 2};
    return r;
}

std::array<long double, 3> embed(const Roots& rt, const IMat& Y, std::size_t k) {
    long double y0 = Y(0, k).get_d(), y1 = Y(1, k).get_d(), y2 = Y(2, k).get_d();
    long double s1 = y0 + y1 * rt.alpha + y2 * rt.alpha * rt.alpha;
    std::complex<long double> s2 = y0 + y1 * rt.beta + y2 * rt.beta * rt.beta;
    const long double r2 = std::sqrt(2.0L);
    return {s1, r2 * s2.real(), r2 * s2.imag()};
}

// LLL on the columns of Y with respect to the Minkowski embedding.
IMat lll_reduce(const Roots& rt, IMat Y) {
    const double delta = 0.99;
    auto gram = [&](std::array<std::array<long double, 3>, 3>& b) {
        for (std::size_t k = 0; k < 3; ++k) b[k] = embed(rt, Y, k);
    };
    for (int guard = 0; guard < 10000; ++guard) {
        std::array<std::array<long double, 3>, 3> b;
        gram(b);
        std::array<std::array<long double, 3>, 3> bs{};
        long double mu[3][3] = {};
        long double Bn[3];
        for (int i = 0; i < 3; ++i) {
            bs[i] = b[i];
            for (int j = 0; j < i; ++j) {
                long double dp = 0;
                for (int t = 0; t < 3; ++t) dp += b[i][t] * bs[j][t];
                mu[i][j] = dp / Bn[j];
                for (int t = 0; t < 3; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
            }
            Bn[i] = 0;
            for (int t = 0; t < 3; ++t) Bn[i] += bs[i][t] * bs[i][t];
        }
        bool changed = false;
        for (int k = 1; k < 3 && !changed; ++k) {
            for (int j = k - 1; j >= 0; --j) {
                long double q = std::round(mu[k][j]);
                if (q != 0) {
                    BigInt qi(static_cast<double>(q));
                    for (std::size_t r = 0; r < 3; ++r) Y(r, k) -= qi * Y(r, j);
                    changed = true;
                    break;
                }
            }
            if (changed) break;
            if (Bn[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1]) {
                for (std::size_t r = 0; r < 3; ++r) std::swap(Y(r, k), Y(r, k - 1));
                changed = true;
            }
        }
        if (!changed) return Y;
    }
    return Y;
}

IMat lattice_of_columns(const std::vector<IMat>& cols) {
    IMat G(3, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) G(i, j) = cols[j](i, 0);
    return hermite_columns(G);
}

// Rational lattices L(Y1)/n1 and L(Y2)/n2 are equal.
bool same_rational_lattice(const ColonLattice& x, const ColonLattice& y) {
    return hermite_columns(y.den * x.basis) == hermite_columns(x.den * y.basis);
}

}  // namespace

bool is_alpha_stable(const CubicInput& P, const IMat& H) {
    IMat AH = companion_matrix(P) * H;
    for (std::size_t j = 0; j < 3; ++j)
        if (!in_lattice(H, AH.col(j))) return false;
    return true;
}

std::vector<OrderIdeal> enumerate_ideals(const CubicInput& P, long bound) {
    if (bound < 1) throw ArithError("norm bound must be >= 1");
    if (bound > 100000) throw ArithError("norm bound overflow guard");
    const long t2 = P.theta2.get_si(), t1 = P.theta1.get_si();
    std::vector<OrderIdeal> out;
    for (long n = 1; n <= bound; ++n)
        for (long d0 = 1; d0 <= n; ++d0) {
            if (n % d0) continue;
            for (long d1 = 1; d1 <= n / d0; ++d1) {
                if ((n / d0) % d1) continue;
                long d2 = n / d0 / d1;
                // alpha * column 0 = (0, d0, 0) must lie in the lattice: forces d1 | d0.
                if (d0 % d1) continue;
                for (long h01 = 0; h01 < d0; ++h01)
                    for (long h12 = 0; h12 < d1; ++h12)
                        for (long h02 = 0; h02 < d0; ++h02) {
                            long H[3][3] = {{d0, h01, h02}, {0, d1, h12}, {0, 0, d2}};
                            bool ok = true;
                            for (int j = 0; j < 3 && ok; ++j) {
                                long v0 = H[0][j], v1 = H[1][j], v2 = H[2][j];
                                ok = in_lattice64(H, v2, v0 - t1 * v2, v1 + t2 * v2);
                            }
                            if (!ok) continue;
                            OrderIdeal I;
                            I.hnf = IMat{{d0, h01, h02}, {0, d1, h12}, {0, 0, d2}};
                            I.norm = n;
                            out.push_back(std::move(I));
                        }
            }
        }
    std::stable_sort(out.begin(), out.end(), [](const OrderIdeal& x, const OrderIdeal& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        return x.hnf < y.hnf;
    });
    return out;
}

ColonLattice colon_lattice(const CubicInput& P, const OrderIdeal& J, const OrderIdeal& I) {
    // x in (J:I) has n x in Z^3 with n = index(I) in I; condition adj(H_J) M_e y in n det(H_J) Z^3.
    BigInt n = I.norm;
    BigInt m = n * det(J.hnf);
    IMat adj = adjugate3(J.hnf);
    IMat C(9, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        IMat blk = adj * mult_matrix(P, I.hnf(0, j), I.hnf(1, j), I.hnf(2, j));
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) C(3 * j + r, c) = blk(r, c);
    }
    SNFResult s = smith_normal_form(C);
    IMat B(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        BigInt di = s.D(i, i);
        BigInt step = di == 0 ? BigInt(1) : BigInt(m / gcd(m, di));
        for (std::size_t r = 0; r < 3; ++r) B(r, i) = s.V(r, i) * step;
    }
    return {hermite_columns(B), n};
}

namespace {

using i128 = __int128;

i128 det3(const i128 M[3][3]) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

bool lambda_maps(const CubicInput& P, const std::array<BigInt, 3>& y, const BigInt& den, const OrderIdeal& I,
                 const OrderIdeal& J) {
    IMat My = mult_matrix(P, y[0], y[1], y[2]);
    IMat img = My * I.hnf;
    std::vector<IMat> cols;
    for (std::size_t j = 0; j < 3; ++j) {
        IMat c = img.col(j);
        for (std::size_t r = 0; r < 3; ++r) {
            if (!mpz_divisible_p(c(r, 0).get_mpz_t(), den.get_mpz_t())) return false;
            c(r, 0) /= den;
        }
        cols.push_back(c);
    }
    return lattice_of_columns(cols) == J.hnf;
}

}  // namespace

EquivalenceResult ideals_equivalent(const CubicInput& P, const OrderIdeal& I, const OrderIdeal& J, long height) {
    EquivalenceResult res;
    ColonLattice ringI = colon_lattice(P, I, I), ringJ = colon_lattice(P, J, J);
    if (!same_rational_lattice(ringI, ringJ)) {
        res.verdict = EquivalenceVerdict::inequivalent_proven;
        return res;
    }
    ColonLattice col = colon_lattice(P, J, I);
    BigInt n = col.den;
    BigInt num = n * n * n * J.norm;
    if (!mpz_divisible_p(num.get_mpz_t(), I.norm.get_mpz_t())) {
        res.verdict = EquivalenceVerdict::inequivalent_proven;
        return res;
    }
    BigInt target = num / I.norm;

    IMat Y = lll_reduce(cubic_roots(P), col.basis);
    IMat M[3];
    BigInt bound = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        M[k] = mult_matrix(P, Y(0, k), Y(1, k), Y(2, k));
        BigInt e = 0;
        for (const auto& v : M[k].entries()) e = std::max(e, BigInt(abs(v)));
        bound += e;
    }
    bound *= height;
    const bool fast = bound < (BigInt(1) << 40) && target < (BigInt(1) << 120);

    auto try_point = [&](long z0, long z1, long z2) -> bool {
        bool hit;
        if (fast) {
            i128 E[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    E[i][j] = static_cast<i128>(z0) * M[0](i, j).get_si() + static_cast<i128>(z1) * M[1](i, j).get_si() +
                              static_cast<i128>(z2) * M[2](i, j).get_si();
            i128 d = det3(E);
            if (d < 0) d = -d;
            // target fits in 120 bits: compare via two 64-bit halves.
            BigInt t = target;
            unsigned long lo = mpz_get_ui(BigInt(t & BigInt("18446744073709551615")).get_mpz_t());
            BigInt hiB = t >> 64;
            i128 tt = (static_cast<i128>(hiB.get_ui()) << 64) | lo;
            hit = d == tt;
        } else {
            IMat E = BigInt(z0) * M[0] + BigInt(z1) * M[1] + BigInt(z2) * M[2];
            hit = abs(det(E)) == target;
        }
        if (!hit) return false;
        std::array<BigInt, 3> y;
        for (std::size_t r = 0; r < 3; ++r) y[r] = Y(r, 0) * z0 + Y(r, 1) * z1 + Y(r, 2) * z2;
        if (!lambda_maps(P, y, n, I, J)) return false;
        res.verdict = EquivalenceVerdict::equivalent;
        res.y = y;
        res.den = n;
        return true;
    };

    // Complete search: multiplying by powers of the unit alpha, a solution exists with
    // T^(1/3) <= |sigma1| < alpha T^(1/3), hence |embedding|^2 <= T^(2/3) (alpha^2 + 2).
    Roots rt = cubic_roots(P);
    long double T = target.get_d();
    long double R = std::sqrt(std::pow(T, 2.0L / 3) * (rt.alpha * rt.alpha + 2)) * 1.01L;
    long double Bm[3][3], Binv[3][3];
    for (std::size_t k = 0; k < 3; ++k) {
        auto e = embed(rt, Y, k);
        for (int i = 0; i < 3; ++i) Bm[i][k] = e[i];
    }
    long double dB = Bm[0][0] * (Bm[1][1] * Bm[2][2] - Bm[1][2] * Bm[2][1]) -
                     Bm[0][1] * (Bm[1][0] * Bm[2][2] - Bm[1][2] * Bm[2][0]) +
                     Bm[0][2] * (Bm[1][0] * Bm[2][1] - Bm[1][1] * Bm[2][0]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            Binv[i][j] = (Bm[r0][c0] * Bm[r1][c1] - Bm[r0][c1] * Bm[r1][c0]) / dB;
        }
    long box[3];
    long double volume = 1;
    for (int i = 0; i < 3; ++i) {
        long double rn = std::sqrt(Binv[i][0] * Binv[i][0] + Binv[i][1] * Binv[i][1] + Binv[i][2] * Binv[i][2]);
        long double b = std::ceil(rn * R) + 1;
        box[i] = b > 1e6L ? 1000000L : static_cast<long>(b);
        volume *= 2 * box[i] + 1;
    }
    if (volume <= 2e7L) {
        for (long z0 = 0; z0 <= box[0]; ++z0)
            for (long z1 = (z0 == 0 ? 0 : -box[1]); z1 <= box[1]; ++z1)
                for (long z2 = (z0 == 0 && z1 == 0 ? 1 : -box[2]); z2 <= box[2]; ++z2) {
                    long double n2 = 0;
                    for (int i = 0; i < 3; ++i) {
                        long double x = Bm[i][0] * z0 + Bm[i][1] * z1 + Bm[i][2] * z2;
                        n2 += x * x;
                    }
                    if (n2 > R * R) continue;
                    if (try_point(z0, z1, z2)) return res;
                }
        res.verdict = EquivalenceVerdict::inequivalent_proven;
        return res;
    }

    // Box too large: fall back to shells of growing sup-norm up to the height cap.
    // z and -z give the same |norm|, so the first nonzero coordinate is positive.
    for (long h = 1; h <= height; ++h)
        for (long z0 = 0; z0 <= h; ++z0)
            for (long z1 = (z0 == 0 ? 0 : -h); z1 <= h; ++z1)
                for (long z2 = (z0 == 0 && z1 == 0 ? 1 : -h); z2 <= h; ++z2) {
                    if (std::max({std::labs(z0), std::labs(z1), std::labs(z2)}) != h) {
                        if (std::labs(z0) != h && std::labs(z1) != h && z2 > -h && z2 < h) z2 = h - 1;
                        continue;
                    }
                    if (try_point(z0, z1, z2)) return res;
                }
    res.verdict = EquivalenceVerdict::inequivalent_search;
    return res;
}

long default_norm_bound(const BigInt& disc) {
    double v = 0.2829 * std::sqrt(std::fabs(disc.get_d()));
    return std::max(1L, static_cast<long>(std::ceil(v)));
}

IdealClassResult ideal_classes_at(const CubicInput& P, long bound, long height) {
    IdealClassResult res;
    res.bound = bound;
    res.height = height;
    res.ideals = enumerate_ideals(P, bound);
    std::vector<ColonLattice> ring;
    for (const auto& I : res.ideals) ring.push_back(colon_lattice(P, I, I));
    std::vector<std::size_t> rep_index;
    res.class_of.assign(res.ideals.size(), -1);
    for (std::size_t i = 0; i < res.ideals.size(); ++i) {
        bool placed = false;
        bool unproven = false;
        for (std::size_t c = 0; c < rep_index.size() && !placed; ++c) {
            std::size_t j = rep_index[c];
            if (!same_rational_lattice(ring[i], ring[j])) continue;
            EquivalenceResult e = ideals_equivalent(P, res.ideals[j], res.ideals[i], height);
            if (e.verdict == EquivalenceVerdict::equivalent) {
                res.class_of[i] = static_cast<long>(c);
                placed = true;
            } else if (e.verdict == EquivalenceVerdict::inequivalent_search) {
                unproven = true;
            }
        }
        if (!placed) {
            if (unproven) ++res.unproven_separations;
            res.class_of[i] = static_cast<long>(rep_index.size());
            rep_index.push_back(i);
            res.representatives.push_back(res.ideals[i]);
        }
    }
    res.h = static_cast<long>(rep_index.size());
    return res;
}

IdealClassResult ideal_classes(const BigInt& theta2, const BigInt& theta1, std::optional<long> norm_bound,
                               long height) {
    CubicDiagnosis diag = admissible_cubic(theta2, theta1);
    if (!diag.admissible) throw ArithError("inadmissible cubic: " + diag.reason);
    CubicInput P{theta2, theta1};
    long B = norm_bound ? *norm_bound : default_norm_bound(diag.disc);
    IdealClassResult res = ideal_classes_at(P, B, height);
    IdealClassResult twice = ideal_classes_at(P, 2 * B, height);
    res.doubled_h = twice.h;
    res.stable = twice.h == res.h;
    return res;
}

TypeIReport classify_type1(const BigInt& theta2, const BigInt& theta1, std::optional<long> norm_bound) {
    TypeIReport rep;
    rep.theta2 = theta2;
    rep.theta1 = theta1;
    CubicDiagnosis diag = admissible_cubic(theta2, theta1);
    rep.disc = diag.disc;
    rep.admissible = diag.admissible;
    if (!diag.admissible) throw ArithError("inadmissible cubic: " + diag.reason);
    IdealClassResult ic = ideal_classes(theta2, theta1, norm_bound);
    rep.h = ic.h;
    rep.bound = ic.bound;
    rep.stable = ic.stable;
    for (long c = 0; c < ic.h; ++c)
        for (const char* label : {"beta", "beta_bar"})
            rep.classes.push_back({ic.representatives[static_cast<std::size_t>(c)], label, c});
    rep.biholo_count = static_cast<long>(rep.classes.size());
    if (rep.biholo_count != 2 * rep.h) throw InvariantViolation("type I count is not 2h");
    return rep;
}

BigRat order_index_ratio(const CubicInput& P, const CubicInput& P2) {
    BigInt d1 = cubic_disc(P.theta2, P.theta1), d2 = cubic_disc(P2.theta2, P2.theta1);
    if (d1 == 0 || d2 == 0) throw ArithError("degenerate discriminant");
    BigRat q = make_rat(d1, d2);
    if (sgn(q) < 0 || !is_square(q.get_num()) || !is_square(q.get_den()))
        throw ArithError("discriminant ratio is not a rational square");
    BigRat root = make_rat(isqrt(q.get_num()), isqrt(q.get_den()));

    CubicDiagnosis a1 = admissible_cubic(P.theta2, P.theta1), a2 = admissible_cubic(P2.theta2, P2.theta1);
    if (!a1.admissible || !a2.admissible) throw ArithError("field comparison needs admissible cubics");
    if (P.theta2 == P2.theta2 && P.theta1 == P2.theta1) return root;

    // Look for a root of P2 in Q(alpha): x = (x0 + x1 alpha + x2 alpha^2) / f, with f^2 | disc(P).
    BigInt f = 1, sq;
    squarefree_split(abs(d1), f, sq);
    Roots r1 = cubic_roots(P), r2 = cubic_roots(P2);
    for (int conj = 0; conj < 2; ++conj) {
        std::complex<long double> b2 = conj ? std::conj(r2.beta) : r2.beta;
        // Rows: real embedding, real and imaginary parts of the complex embedding.
        long double A[3][4] = {{1, r1.alpha, r1.alpha * r1.alpha, r2.alpha},
                               {1, r1.beta.real(), (r1.beta * r1.beta).real(), b2.real()},
                               {0, r1.beta.imag(), (r1.beta * r1.beta).imag(), b2.imag()}};
        for (int c = 0; c < 3; ++c) {
            int p = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::fabs(A[r][c]) > std::fabs(A[p][c])) p = r;
            for (int k = 0; k < 4; ++k) std::swap(A[c][k], A[p][k]);
            for (int r = 0; r < 3; ++r) {
                if (r == c) continue;
                long double m = A[r][c] / A[c][c];
                for (int k = 0; k < 4; ++k) A[r][k] -= m * A[c][k];
            }
        }
        long double fd = f.get_d();
        BigInt x[3];
        for (int i = 0; i < 3; ++i) x[i] = BigInt(static_cast<double>(std::round(A[i][3] / A[i][i] * fd)));
        IMat M = mult_matrix(P, x[0], x[1], x[2]);
        // P2(M / f) = 0  <=>  M^3 - theta2' f M^2 + theta1' f^2 M - f^3 I = 0
        IMat Z = M * M * M - (P2.theta2 * f) * (M * M) + (P2.theta1 * f * f) * M - (f * f * f) * IMat::identity(3);
        bool zero = true;
        for (const auto& v : Z.entries()) zero = zero && v == 0;
        if (zero) return root;
    }
    throw ArithError("could not confirm that the two cubics define the same field");
}

}  // namespace inoue
