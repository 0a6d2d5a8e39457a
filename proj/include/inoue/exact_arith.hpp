#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace inoue {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proven identity failed to hold on computed data.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Canonical rational n/d (throws on d == 0).
BigRat make_rat(const BigInt& n, const BigInt& d = 1);

BigInt isqrt(const BigInt& n);
bool is_square(const BigInt& n);
// n = f^2 * s with s squarefree and positive (n > 0).
void squarefree_split(const BigInt& n, BigInt& f, BigInt& s);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);

// a + b*sqrt(d), d squarefree > 1, real embedding with sqrt(d) > 0.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(long d, BigRat a, BigRat b = 0);
    static QuadElem sqrt_of(long d) { return QuadElem(d, 0, 1); }

    long d() const { return d_; }
    const BigRat& a() const { return a_; }
    const BigRat& b() const { return b_; }

    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_integer() const { return is_rational() && a_.get_den() == 1; }

    QuadElem conj() const { return QuadElem(d_, a_, -b_); }
    BigRat norm() const { return a_ * a_ - b_ * b_ * d_; }
    BigRat trace() const { return 2 * a_; }
    int sign() const;
    QuadElem inverse() const;
    // Largest integer <= value.
    BigInt floor() const;
    double to_double() const;
    std::string str() const;

    QuadElem operator-() const { return QuadElem(d_, -a_, -b_); }
    QuadElem& operator+=(const QuadElem& y);
    QuadElem& operator-=(const QuadElem& y);
    QuadElem& operator*=(const QuadElem& y);
    QuadElem& operator/=(const QuadElem& y);
    QuadElem& operator*=(const BigRat& q);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
    friend QuadElem operator*(QuadElem x, const BigRat& q) { return x *= q; }
    friend QuadElem operator*(const BigRat& q, QuadElem x) { return x *= q; }
    friend QuadElem operator+(QuadElem x, const BigRat& q) { x.a_ += q; return x; }
    friend QuadElem operator-(QuadElem x, const BigRat& q) { x.a_ -= q; return x; }

    friend bool operator==(const QuadElem& x, const QuadElem& y);
    friend std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y);

private:
    void check_same(const QuadElem& y) const;
    long d_ = 2;
    BigRat a_ = 0;
    BigRat b_ = 0;
};

enum class QuadOp { add, sub, mul, div };
QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op);
std::strong_ordering quad_compare(const QuadElem& x, const QuadElem& y);

struct CFExpansion {
    std::vector<BigInt> pre;
    std::vector<BigInt> period;
    // i-th partial quotient of the infinite expansion.
    const BigInt& term(std::size_t i) const;
};

CFExpansion cf_expand(const QuadElem& x);

struct UnitResult {
    BigInt x;
    BigInt y;
    int norm;
};

// Smallest unit x*B + y > 1 of Z[B] with B^2 = t*B - n, B the larger root.
UnitResult fundamental_unit(const BigInt& t, const BigInt& n);

}  // namespace inoue
