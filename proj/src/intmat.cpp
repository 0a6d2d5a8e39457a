#include "inoue/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace inoue {

IMat::IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

IMat::IMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ArithError("ragged matrix literal");
        for (long v : r) e_.emplace_back(v);
    }
}

IMat IMat::identity(std::size_t n) {
    IMat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

IMat IMat::transpose() const {
    IMat T(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

IMat IMat::col(std::size_t j) const {
    IMat c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

std::string IMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

IMat operator*(const IMat& x, const IMat& y) {
    if (x.cols_ != y.rows_) throw ArithError("dimension mismatch in product");
    IMat z(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const BigInt& a = x(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += a * y(k, j);
        }
    return z;
}

IMat operator+(const IMat& x, const IMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ArithError("dimension mismatch in sum");
    IMat z = x;
    for (std::size_t i = 0; i < z.e_.size(); ++i) z.e_[i] += y.e_[i];
    return z;
}

IMat operator-(const IMat& x, const IMat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw ArithError("dimension mismatch in difference");
    IMat z = x;
    for (std::size_t i = 0; i < z.e_.size(); ++i) z.e_[i] -= y.e_[i];
    return z;
}

IMat operator*(const BigInt& s, const IMat& x) {
    IMat z = x;
    for (auto& v : z.e_) v *= s;
    return z;
}

bool operator<(const IMat& x, const IMat& y) {
    if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
    if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
    return x.e_ < y.e_;
}

IVec2 mat_vec(const IMat& A, const IVec2& v) {
    return {A(0, 0) * v[0] + A(0, 1) * v[1], A(1, 0) * v[0] + A(1, 1) * v[1]};
}

IMat hstack(const IMat& A, const IMat& B) {
    if (A.rows() != B.rows()) throw ArithError("hstack row mismatch");
    IMat C(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
        for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
    }
    return C;
}

IMat mat_pow(const IMat& A, long k) {
    IMat base = k < 0 ? gl_inverse(A) : A;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    IMat r = IMat::identity(A.rows());
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

BigInt det(const IMat& A) {
    if (!A.is_square()) throw ArithError("determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IMat M = A;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

MatrixInvariants matrix_invariants(const IMat& A) {
    if (!A.is_square()) throw ArithError("invariants of non-square matrix");
    const std::size_t n = A.rows();
    MatrixInvariants inv;
    inv.det = det(A);
    inv.trace = 0;
    for (std::size_t i = 0; i < n; ++i) inv.trace += A(i, i);
    // Faddeev-LeVerrier.
    inv.charpoly.assign(n + 1, 0);
    inv.charpoly[0] = 1;
    IMat M(n, n);
    IMat I = IMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        M = A * M + inv.charpoly[k - 1] * I;
        IMat AM = A * M;
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
        inv.charpoly[k] = -tr / static_cast<long>(k);
    }
    return inv;
}

std::vector<BigInt> SNFResult::divisors() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

void swap_rows(IMat& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}

void swap_cols(IMat& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}

// row_dst += q * row_src
void add_row(IMat& M, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += q * M(src, j);
}

// col_dst += q * col_src
void add_col(IMat& M, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += q * M(i, src);
}

}  // namespace

SNFResult smith_normal_form(const IMat& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SNFResult res{IMat::identity(m), A, IMat::identity(n)};
    IMat& D = res.D;
    IMat& U = res.U;
    IMat& V = res.V;
    for (std::size_t k = 0; k < std::min(m, n); ++k) {
        while (true) {
            // Pivot: smallest nonzero |entry|, first in row-major order.
            std::size_t pi = m, pj = n;
            BigInt best;
            for (std::size_t i = k; i < m; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    if (D(i, j) == 0) continue;
                    BigInt a = abs(D(i, j));
                    if (pi == m || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) return res;
            swap_rows(D, k, pi);
            swap_rows(U, k, pi);
            swap_cols(D, k, pj);
            swap_cols(V, k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (D(i, k) == 0) continue;
                BigInt q = D(i, k) / D(k, k);
                add_row(D, i, k, -q);
                add_row(U, i, k, -q);
                if (D(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (D(k, j) == 0) continue;
                BigInt q = D(k, j) / D(k, k);
                add_col(D, j, k, -q);
                add_col(V, j, k, -q);
                if (D(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            bool divisible = true;
            for (std::size_t i = k + 1; i < m && divisible; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(k, k).get_mpz_t())) {
                        add_row(D, k, i, 1);
                        add_row(U, k, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (D(k, k) < 0) {
            for (std::size_t j = 0; j < n; ++j) D(k, j) = -D(k, j);
            for (std::size_t j = 0; j < m; ++j) U(k, j) = -U(k, j);
        }
    }
    return res;
}

IMat hermite_columns(const IMat& A) {
    const std::size_t m = A.rows();
    IMat W = A;
    std::vector<std::size_t> active(W.cols());
    for (std::size_t j = 0; j < active.size(); ++j) active[j] = j;
    IMat H(m, m);
    for (std::size_t ii = m; ii-- > 0;) {
        std::size_t piv = 0;
        while (true) {
            std::size_t best = W.cols();
            for (std::size_t c : active)
                if (W(ii, c) != 0 && (best == W.cols() || abs(W(ii, c)) < abs(W(ii, best)))) best = c;
            if (best == W.cols()) throw ArithError("hermite_columns: lattice not of full rank");
            bool single = true;
            for (std::size_t c : active) {
                if (c == best || W(ii, c) == 0) continue;
                BigInt q = floor_div(W(ii, c), W(ii, best));
                add_col(W, c, best, -q);
                if (W(ii, c) != 0) single = false;
            }
            if (single) {
                piv = best;
                break;
            }
        }
        if (W(ii, piv) < 0)
            for (std::size_t r = 0; r < m; ++r) W(r, piv) = -W(r, piv);
        for (std::size_t r = 0; r < m; ++r) H(r, ii) = W(r, piv);
        active.erase(std::find(active.begin(), active.end(), piv));
    }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = j; i-- > 0;) {
            BigInt q = floor_div(H(i, j), H(i, i));
            if (q != 0) add_col(H, j, i, -q);
        }
    return H;
}

IMat gl_inverse(const IMat& A) {
    if (!A.is_square()) throw ArithError("inverse of non-square matrix");
    BigInt d = det(A);
    if (d != 1 && d != -1) throw ArithError("gl_inverse: |det| != 1");
    SNFResult s = smith_normal_form(A);
    // U A V = I, so A^{-1} = V U.
    return s.V * s.U;
}

FiniteQuotient::FiniteQuotient(const IMat& A, const BigInt& r) : A_(A), r_(r) {
    if (A.rows() != 2 || A.cols() != 2) throw ArithError("quotient_group expects a 2x2 matrix");
    if (r < 1) throw ArithError("quotient_group expects r >= 1");
    SNFResult s = smith_normal_form(hstack(A, r * IMat::identity(2)));
    U_ = s.U;
    Uinv_ = gl_inverse(U_);
    div_ = s.divisors();
    for (BigInt q0 = 0; q0 < div_[0]; ++q0)
        for (BigInt q1 = 0; q1 < div_[1]; ++q1) reps_.push_back(reduce(mat_vec(Uinv_, {q0, q1})));
}

std::vector<BigInt> FiniteQuotient::divisors() const {
    std::vector<BigInt> d;
    for (const auto& v : div_)
        if (v != 1) d.push_back(v);
    return d;
}

BigInt FiniteQuotient::order() const { return div_[0] * div_[1]; }

IVec2 FiniteQuotient::reduce(const IVec2& p) const {
    IVec2 q = mat_vec(U_, p);
    q[0] = mod_floor(q[0], div_[0]);
    q[1] = mod_floor(q[1], div_[1]);
    // r Z^2 lies in the relation lattice, so coordinates may be taken in [0, r).
    IVec2 v = mat_vec(Uinv_, q);
    return {mod_floor(v[0], r_), mod_floor(v[1], r_)};
}

bool FiniteQuotient::contains(const IVec2& p) const {
    IVec2 q = mat_vec(U_, p);
    return mod_floor(q[0], div_[0]) == 0 && mod_floor(q[1], div_[1]) == 0;
}

std::size_t FiniteQuotient::index_of(const IVec2& reduced) const {
    IVec2 q = mat_vec(U_, reduced);
    q[0] = mod_floor(q[0], div_[0]);
    q[1] = mod_floor(q[1], div_[1]);
    return static_cast<std::size_t>(BigInt(q[0] * div_[1] + q[1]).get_ui());
}

FiniteQuotient quotient_group(const IMat& A, const BigInt& r) { return FiniteQuotient(A, r); }

}  // namespace inoue
