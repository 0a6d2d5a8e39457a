#pragma once

#include "inoue/exact_arith.hpp"

#include <mpfr.h>

#include <string>

namespace inoue {

// Closed real interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
public:
    static constexpr mpfr_prec_t default_prec = 256;

    Interval();
    explicit Interval(long v, mpfr_prec_t prec = default_prec);
    explicit Interval(const BigInt& v, mpfr_prec_t prec = default_prec);
    explicit Interval(const BigRat& v, mpfr_prec_t prec = default_prec);
    Interval(const Interval& x);
    Interval(Interval&& x) noexcept;
    Interval& operator=(const Interval& x);
    Interval& operator=(Interval&& x) noexcept;
    ~Interval();

    // Hull of two intervals.
    static Interval hull(const Interval& x, const Interval& y);

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }
    long double mid() const;
    // A degenerate interval at a representable point of [lo, hi].
    Interval midpoint() const;
    long double width() const;
    bool contains_zero() const;
    bool positive() const;
    bool negative() const;
    // Contained in [-2^log2_radius, 2^log2_radius].
    bool within(long log2_radius = -128) const;
    // The unique integer in the interval, if there is exactly one.
    bool unique_integer(BigInt& out) const;
    std::string str(int digits = 20) const;

    Interval operator-() const;
    friend Interval operator+(const Interval& x, const Interval& y);
    friend Interval operator-(const Interval& x, const Interval& y);
    friend Interval operator*(const Interval& x, const Interval& y);
    friend Interval operator/(const Interval& x, const Interval& y);
    friend Interval sqrt(const Interval& x);

private:
    void init(mpfr_prec_t prec);
    mpfr_t lo_;
    mpfr_t hi_;
};

// Isolates the real root > 1 of X^3 - theta2 X^2 + theta1 X - 1 and the complex root
// with positive imaginary part.
struct CubicRootBalls {
    Interval alpha;
    Interval beta_re;
    Interval beta_im;
};

CubicRootBalls refine_cubic_roots(const BigInt& theta2, const BigInt& theta1,
                                  mpfr_prec_t prec = Interval::default_prec);

}  // namespace inoue
