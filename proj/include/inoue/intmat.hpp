#pragma once

#include "inoue/exact_arith.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

namespace inoue {

class IMat {
public:
    IMat() = default;
    IMat(std::size_t rows, std::size_t cols);
    IMat(std::initializer_list<std::initializer_list<long>> rows);
    static IMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const std::vector<BigInt>& entries() const { return e_; }

    IMat transpose() const;
    IMat col(std::size_t j) const;
    bool is_square() const { return rows_ == cols_; }
    std::string str() const;

    friend IMat operator*(const IMat& x, const IMat& y);
    friend IMat operator+(const IMat& x, const IMat& y);
    friend IMat operator-(const IMat& x, const IMat& y);
    friend IMat operator*(const BigInt& s, const IMat& x);
    friend bool operator==(const IMat& x, const IMat& y) = default;
    friend bool operator<(const IMat& x, const IMat& y);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> e_;
};

using IVec2 = std::array<BigInt, 2>;

IVec2 mat_vec(const IMat& A, const IVec2& v);
IMat hstack(const IMat& A, const IMat& B);
IMat mat_pow(const IMat& A, long k);

struct MatrixInvariants {
    BigInt det;
    BigInt trace;
    // Monic characteristic polynomial, highest degree first: x^n + c1 x^{n-1} + ...
    std::vector<BigInt> charpoly;
};

MatrixInvariants matrix_invariants(const IMat& A);
BigInt det(const IMat& A);

struct SNFResult {
    IMat U;
    IMat D;
    IMat V;
    std::vector<BigInt> divisors() const;
};

SNFResult smith_normal_form(const IMat& A);

// Upper-triangular column Hermite form of the lattice spanned by the columns
// of A (A must have full row rank): positive diagonal, 0 <= H(i,j) < H(i,i) for j > i.
IMat hermite_columns(const IMat& A);

IMat gl_inverse(const IMat& A);

// Z^2 / (A Z^2 + r Z^2).
class FiniteQuotient {
public:
    FiniteQuotient() = default;
    FiniteQuotient(const IMat& A, const BigInt& r);

    const IMat& relation_matrix() const { return A_; }
    const BigInt& modulus() const { return r_; }
    // All elementary divisors d1 | d2 (including ones equal to 1).
    const std::vector<BigInt>& all_divisors() const { return div_; }
    std::vector<BigInt> divisors() const;
    BigInt order() const;
    IVec2 reduce(const IVec2& p) const;
    bool contains(const IVec2& p) const;  // p in A Z^2 + r Z^2
    const std::vector<IVec2>& representatives() const { return reps_; }
    std::size_t index_of(const IVec2& reduced) const;

private:
    IMat A_;
    BigInt r_;
    IMat U_, Uinv_;
    std::vector<BigInt> div_;
    std::vector<IVec2> reps_;
};

FiniteQuotient quotient_group(const IMat& A, const BigInt& r);

}  // namespace inoue
