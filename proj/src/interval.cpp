#include "inoue/interval.hpp"

#include <algorithm>
#include <cmath>

namespace inoue {

void Interval::init(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Interval::Interval() : Interval(0L) {}

Interval::Interval(long v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const BigInt& v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const BigRat& v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& x) {
    init(x.prec());
    mpfr_set(lo_, x.lo_, MPFR_RNDD);
    mpfr_set(hi_, x.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& x) noexcept : Interval(x) {}

Interval& Interval::operator=(const Interval& x) {
    if (this != &x) {
        mpfr_set_prec(lo_, x.prec());
        mpfr_set_prec(hi_, x.prec());
        mpfr_set(lo_, x.lo_, MPFR_RNDD);
        mpfr_set(hi_, x.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& x) noexcept {
    if (this != &x) {
        mpfr_swap(lo_, x.lo_);
        mpfr_swap(hi_, x.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::hull(const Interval& x, const Interval& y) {
    Interval r(0L, std::max(x.prec(), y.prec()));
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

long double Interval::mid() const {
    return (mpfr_get_ld(lo_, MPFR_RNDN) + mpfr_get_ld(hi_, MPFR_RNDN)) / 2;
}

Interval Interval::midpoint() const {
    Interval r(0L, prec());
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

long double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    long double r = mpfr_get_ld(w, MPFR_RNDU);
    mpfr_clear(w);
    return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::within(long log2_radius) const {
    mpfr_t e;
    mpfr_init2(e, 64);
    mpfr_set_ui_2exp(e, 1, log2_radius, MPFR_RNDN);
    bool ok = mpfr_cmp(hi_, e) <= 0;
    mpfr_neg(e, e, MPFR_RNDN);
    ok = ok && mpfr_cmp(lo_, e) >= 0;
    mpfr_clear(e);
    return ok;
}

bool Interval::unique_integer(BigInt& out) const {
    mpz_t a, b;
    mpz_init(a);
    mpz_init(b);
    mpfr_get_z(a, lo_, MPFR_RNDU);
    mpfr_get_z(b, hi_, MPFR_RNDD);
    bool ok = mpz_cmp(a, b) == 0;
    if (ok) out = BigInt(a);
    mpz_clear(a);
    mpz_clear(b);
    return ok;
}

std::string Interval::str(int digits) const {
    auto render = [digits](const mpfr_t x, mpfr_rnd_t rnd) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*R*g", digits, rnd, x);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    };
    return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

Interval Interval::operator-() const {
    Interval r(0L, prec());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& x, const Interval& y) {
    Interval r(0L, std::max(x.prec(), y.prec()));
    mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& x, const Interval& y) {
    Interval r(0L, std::max(x.prec(), y.prec()));
    mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& x, const Interval& y) {
    const mpfr_prec_t p = std::max(x.prec(), y.prec());
    Interval r(0L, p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_t* xs[2] = {&x.lo_, &x.hi_};
    const mpfr_t* ys[2] = {&y.lo_, &y.hi_};
    bool first = true;
    for (auto xa : xs)
        for (auto yb : ys) {
            mpfr_mul(t, *xa, *yb, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *xa, *yb, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& x, const Interval& y) {
    if (y.contains_zero()) throw ArithError("interval division by an interval containing 0");
    Interval inv(0L, y.prec());
    mpfr_ui_div(inv.lo_, 1, y.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, y.lo_, MPFR_RNDU);
    return x * inv;
}

Interval sqrt(const Interval& x) {
    if (x.negative() || mpfr_sgn(x.lo_) < 0) throw ArithError("interval sqrt of a possibly negative value");
    Interval r(0L, x.prec());
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
    return r;
}

CubicRootBalls refine_cubic_roots(const BigInt& theta2, const BigInt& theta1, mpfr_prec_t prec) {
    if (theta1 >= theta2) throw ArithError("no real root > 1 (needs theta1 < theta2)");
    const Interval t2(theta2, prec), t1(theta1, prec), one(1L, prec);
    auto P = [&](const Interval& x) { return ((x - t2) * x + t1) * x - one; };
    // P(1) < 0 and P(hi) > 0 for hi beyond the Cauchy bound.
    BigInt hi_bound = 2 + abs(theta2) + abs(theta1);
    Interval lo(1L, prec), hi(hi_bound, prec);
    const Interval two(2L, prec);
    for (long i = 0; i < prec + 64; ++i) {
        Interval pt = Interval::hull(lo, hi).midpoint();
        if (mpfr_equal_p(pt.lo(), lo.lo()) || mpfr_equal_p(pt.lo(), hi.lo())) break;
        Interval v = P(pt);
        if (v.negative()) lo = pt;
        else if (v.positive()) hi = pt;
        else break;
    }
    CubicRootBalls out;
    out.alpha = Interval::hull(lo, hi);
    // beta, beta_bar are the roots of X^2 - (theta2 - alpha) X + 1/alpha.
    Interval s = t2 - out.alpha;
    Interval q = Interval(4L, prec) / out.alpha - s * s;
    if (!q.positive()) throw ArithError("complex roots not isolated (discriminant not negative?)");
    out.beta_re = s / two;
    out.beta_im = sqrt(q) / two;
    return out;
}

}  // namespace inoue
