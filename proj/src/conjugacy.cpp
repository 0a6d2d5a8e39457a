#include "inoue/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace inoue {

bool operator<(const BQForm& x, const BQForm& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
}

std::string BQForm::str() const {
    std::ostringstream os;
    os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ")";
    return os.str();
}

namespace {

void check_hyperbolic(const BigInt& D) {
    if (D <= 0 || is_square(D)) throw ArithError("form discriminant must be positive and nonsquare");
}

}  // namespace

BQForm associated_form(const IMat& N) {
    if (N.rows() != 2 || N.cols() != 2) throw ArithError("associated_form expects 2x2");
    BQForm f{N(1, 0), N(1, 1) - N(0, 0), -N(0, 1)};
    check_hyperbolic(f.disc());
    return f;
}

IMat matrix_of_form(const BQForm& f, const BigInt& trace) {
    BigInt tb = trace - f.b;
    if (!mpz_even_p(tb.get_mpz_t())) throw ArithError("form middle coefficient and trace differ in parity");
    IMat N(2, 2);
    N(0, 0) = tb / 2;
    N(0, 1) = -f.c;
    N(1, 0) = f.a;
    N(1, 1) = (trace + f.b) / 2;
    return N;
}

bool is_reduced(const BQForm& f) {
    BigInt D = f.disc();
    BigInt sq = isqrt(D);
    if (f.b <= 0 || f.b > sq) return false;
    BigInt a2 = 2 * abs(f.a);
    BigInt lo = a2 + f.b;
    if (lo * lo <= D) return false;
    BigInt hi = a2 - f.b;
    return hi <= 0 || hi * hi < D;
}

BQForm rho(const BQForm& f, IMat* M) {
    BigInt D = f.disc();
    check_hyperbolic(D);
    BigInt sq = isqrt(D);
    BigInt ac = abs(f.c);
    BigInt m = 2 * ac;
    BigInt r;
    if (f.c * f.c > D) {
        r = mod_floor(-f.b, m);
        if (r > ac) r -= m;
    } else {
        r = sq - mod_floor(sq + f.b, m);
    }
    BQForm g{f.c, r, (r * r - D) / (4 * f.c)};
    if (M) {
        BigInt s = (r + f.b) / (2 * f.c);
        *M = IMat(2, 2);
        (*M)(0, 1) = -1;
        (*M)(1, 0) = 1;
        (*M)(1, 1) = s;
    }
    return g;
}

namespace {

// Applies rho until reduced; M accumulates the transform (g = f o M).
BQForm reduce_tracked(BQForm f, IMat& M, long max_steps) {
    M = IMat::identity(2);
    for (long i = 0; i < max_steps; ++i) {
        if (is_reduced(f)) return f;
        IMat step;
        f = rho(f, &step);
        M = M * step;
    }
    throw ArithError("reduction did not terminate within the step cap");
}

}  // namespace

std::vector<BQForm> reduction_cycle(const BQForm& f) {
    IMat M;
    BQForm g = reduce_tracked(f, M, 1000000);
    std::vector<BQForm> cyc{g};
    BQForm h = rho(g);
    while (!(h == g)) {
        cyc.push_back(h);
        h = rho(h);
    }
    return cyc;
}

std::vector<BQForm> canonical_cycle(std::vector<BQForm> cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

BQForm mirror(const BQForm& f) { return BQForm{-f.a, f.b, -f.c}; }

std::vector<SimilarityClass> similarity_classes(const BigInt& trace, int det, bool sl_only) {
    if (det != 1 && det != -1) throw ArithError("det must be +1 or -1");
    if (det == 1 && trace < 3) throw ArithError("det +1 requires trace >= 3");
    if (det == -1 && trace < 1) throw ArithError("det -1 requires trace >= 1");
    BigInt D = trace * trace - 4 * det;
    check_hyperbolic(D);
    BigInt sq = isqrt(D);

    std::vector<BQForm> reduced;
    for (BigInt b = 1; b <= sq; ++b) {
        BigInt num = b * b - D;  // = 4ac, negative
        if (mpz_divisible_ui_p(num.get_mpz_t(), 4) == 0) continue;
        BigInt ac = num / 4;
        BigInt aac = abs(ac);
        for (BigInt a = 1; a <= aac; ++a) {
            if (!mpz_divisible_p(aac.get_mpz_t(), a.get_mpz_t())) continue;
            for (int s : {1, -1}) {
                BQForm f{s * a, b, ac / (s * a)};
                if (is_reduced(f)) reduced.push_back(f);
            }
        }
    }
    std::sort(reduced.begin(), reduced.end());

    std::map<BQForm, std::size_t> cycle_of;
    std::vector<std::vector<BQForm>> cycles;
    for (const auto& f : reduced) {
        if (cycle_of.count(f)) continue;
        auto cyc = canonical_cycle(reduction_cycle(f));
        for (const auto& g : cyc) cycle_of[g] = cycles.size();
        cycles.push_back(cyc);
    }

    std::vector<SimilarityClass> out;
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (used.count(i)) continue;
        used.insert(i);
        std::size_t j = sl_only ? i : cycle_of.at(mirror(cycles[i][0]));
        used.insert(j);
        std::vector<BQForm> pool = cycles[i];
        pool.insert(pool.end(), cycles[j].begin(), cycles[j].end());
        std::optional<BQForm> best;
        for (const auto& f : pool)
            if (f.a > 0 && (!best || f < *best)) best = f;
        if (!best) throw ArithError("reduced cycle without positive leading coefficient");
        SimilarityClass cls;
        cls.representative = matrix_of_form(*best, trace);
        cls.trace = trace;
        cls.det = det;
        cls.cycle = canonical_cycle(reduction_cycle(*best));
        cls.mirror_cycle = canonical_cycle(reduction_cycle(mirror(*best)));
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const SimilarityClass& x, const SimilarityClass& y) {
        return associated_form(x.representative) < associated_form(y.representative);
    });
    return out;
}

namespace {

std::optional<IMat> proper_conjugator(const IMat& N, const IMat& N2, long max_steps) {
    BQForm f1 = associated_form(N), f2 = associated_form(N2);
    IMat M1, M2;
    BQForm g1 = reduce_tracked(f1, M1, max_steps);
    BQForm g2 = reduce_tracked(f2, M2, max_steps);
    IMat R = IMat::identity(2);
    BQForm h = g1;
    for (long i = 0; i < max_steps; ++i) {
        if (h == g2) {
            // f2 = f1 o (M1 R M2^{-1}); K = (M1 R M2^{-1})^{-1}.
            IMat M = M1 * R * gl_inverse(M2);
            return gl_inverse(M);
        }
        IMat step;
        h = rho(h, &step);
        R = R * step;
        if (h == g1) return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

SimilarityVerdict are_similar(const IMat& N, const IMat& N2, long max_steps) {
    SimilarityVerdict v;
    MatrixInvariants i1 = matrix_invariants(N), i2 = matrix_invariants(N2);
    if (i1.trace != i2.trace || i1.det != i2.det) {
        v.status = SimilarityVerdict::Status::invariant_mismatch;
        v.witness = "trace/det differ";
        return v;
    }
    try {
        if (auto K = proper_conjugator(N, N2, max_steps)) {
            v.status = SimilarityVerdict::Status::similar;
            v.conjugator = *K;
        } else {
            IMat J{{1, 0}, {0, -1}};
            if (auto K2 = proper_conjugator(J * N * J, N2, max_steps)) {
                v.status = SimilarityVerdict::Status::similar;
                v.conjugator = *K2 * J;
            }
        }
    } catch (const ArithError& e) {
        v.status = SimilarityVerdict::Status::inconclusive;
        v.witness = e.what();
        return v;
    }
    if (v.conjugator) {
        const IMat& K = *v.conjugator;
        if (!(K * N * gl_inverse(K) == N2)) throw ArithError("conjugator failed verification");
        return v;
    }
    v.status = SimilarityVerdict::Status::not_similar;
    auto c1 = canonical_cycle(reduction_cycle(associated_form(N)));
    auto c2 = canonical_cycle(reduction_cycle(associated_form(N2)));
    v.witness = "reduced cycles differ: " + c1.front().str() + " vs " + c2.front().str();
    return v;
}

}  // namespace inoue
