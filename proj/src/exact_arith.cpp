#include "inoue/exact_arith.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <utility>

namespace inoue {

BigRat make_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw ArithError("zero denominator");
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw ArithError("isqrt of negative");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

void squarefree_split(const BigInt& n, BigInt& f, BigInt& s) {
    if (n <= 0) throw ArithError("squarefree_split needs n > 0");
    f = 1;
    s = 1;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) s *= p;
    }
    s *= m;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

QuadElem::QuadElem(long d, BigRat a, BigRat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
    if (d_ <= 1) throw ArithError("radicand must exceed 1");
    a_.canonicalize();
    b_.canonicalize();
}

void QuadElem::check_same(const QuadElem& y) const {
    if (d_ != y.d_) throw ArithError("radicand mismatch");
}

int QuadElem::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
    if (sa <= 0 && sb <= 0) return -1;
    BigRat diff = a_ * a_ - b_ * b_ * d_;
    // a and b have opposite signs; the term with larger square wins.
    return sa > 0 ? sgn(diff) : -sgn(diff);
}

QuadElem QuadElem::inverse() const {
    BigRat n = norm();
    if (sgn(n) == 0) throw ArithError("division by zero");
    return QuadElem(d_, a_ / n, -b_ / n);
}

BigInt QuadElem::floor() const {
    if (is_rational()) return floor_div(a_.get_num(), a_.get_den());
    BigInt A = a_.get_num() * b_.get_den();
    BigInt B = b_.get_num() * a_.get_den();
    BigInt C = a_.get_den() * b_.get_den();
    BigInt s = isqrt(B * B * d_);
    if (B > 0) return floor_div(A + s, C);
    return floor_div(A - s - 1, C);
}

double QuadElem::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadElem::str() const {
    std::ostringstream os;
    if (is_rational()) {
        os << a_.get_str();
        return os.str();
    }
    if (sgn(a_) != 0) os << a_.get_str() << (sgn(b_) > 0 ? "+" : "-");
    else if (sgn(b_) < 0) os << "-";
    BigRat ab = abs(b_);
    if (ab != 1) os << ab.get_str() << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

QuadElem& QuadElem::operator+=(const QuadElem& y) {
    check_same(y);
    a_ += y.a_;
    b_ += y.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& y) {
    check_same(y);
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& y) {
    check_same(y);
    BigRat na = a_ * y.a_ + b_ * y.b_ * d_;
    BigRat nb = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& y) {
    check_same(y);
    return *this *= y.inverse();
}

QuadElem& QuadElem::operator*=(const BigRat& q) {
    a_ *= q;
    b_ *= q;
    return *this;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
    x.check_same(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadElem quad_arith(const QuadElem& x, const QuadElem& y, QuadOp op) {
    switch (op) {
    case QuadOp::add: return x + y;
    case QuadOp::sub: return x - y;
    case QuadOp::mul: return x * y;
    case QuadOp::div: return x / y;
    }
    throw ArithError("unknown op");
}

std::strong_ordering quad_compare(const QuadElem& x, const QuadElem& y) { return x <=> y; }

const BigInt& CFExpansion::term(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
}

namespace {

// floor((P + sqrt(D)) / Q) for D > 0 nonsquare, Q != 0.
BigInt floor_surd(const BigInt& P, const BigInt& D, const BigInt& Q) {
    BigInt s = isqrt(D);
    if (Q > 0) return floor_div(P + s, Q);
    return floor_div(-P - s - 1, -Q);
}

}  // namespace

CFExpansion cf_expand(const QuadElem& x) {
    if (x.is_rational()) throw ArithError("cf_expand needs an irrational input");
    // x = (A + B sqrt(d)) / C, rewritten as (P + sqrt(D)) / Q with Q | D - P^2.
    BigInt A = x.a().get_num() * x.b().get_den();
    BigInt B = x.b().get_num() * x.a().get_den();
    BigInt C = x.a().get_den() * x.b().get_den();
    BigInt D = B * B * x.d();
    BigInt P = A, Q = C;
    if (B < 0) {
        P = -P;
        Q = -Q;
    }
    BigInt aq = abs(Q);
    P *= aq;
    Q *= aq;
    D *= aq * aq;

    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    std::vector<BigInt> terms;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            CFExpansion cf;
            cf.pre.assign(terms.begin(), terms.begin() + static_cast<long>(it->second));
            cf.period.assign(terms.begin() + static_cast<long>(it->second), terms.end());
            return cf;
        }
        seen.emplace(key, terms.size());
        BigInt a = floor_surd(P, D, Q);
        terms.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
}

UnitResult fundamental_unit(const BigInt& t, const BigInt& n) {
    BigInt disc = t * t - 4 * n;
    if (disc <= 0 || is_square(disc)) throw ArithError("degenerate discriminant for unit search");
    BigInt f, s;
    squarefree_split(disc, f, s);
    long d = s.get_si();
    QuadElem B(d, make_rat(t, 2), make_rat(f, 2));
    QuadElem Bc = B.conj();

    auto norm_of = [&](const BigInt& x, const BigInt& y) -> BigInt { return x * x * n + x * y * t + y * y; };
    auto value = [&](const BigInt& x, const BigInt& y) { return B * BigRat(x) + BigRat(y); };

    // Small x are outside the range where Legendre's criterion guarantees
    // a convergent, so they are checked directly.
    for (long xs = 1; xs <= 3; ++xs) {
        BigInt x = xs;
        BigInt y0 = (-(Bc * BigRat(x))).floor();
        for (BigInt y = y0 - 1; y <= y0 + 2; ++y) {
            BigInt nm = norm_of(x, y);
            if ((nm == 1 || nm == -1) && value(x, y).sign() > 0 && value(x, y) > QuadElem(d, 1))
                return {x, y, static_cast<int>(nm.get_si())};
        }
    }

    // Units x*B + y > 1 have y/x a convergent of -B'.
    CFExpansion cf = cf_expand(-Bc);
    BigInt p0 = 1, q0 = 0, p1 = cf.term(0), q1 = 1;
    const std::size_t cap = 200000;
    for (std::size_t i = 1; i < cap; ++i) {
        if (q1 >= 4) {
            BigInt nm = norm_of(q1, p1);
            if ((nm == 1 || nm == -1) && value(q1, p1) > QuadElem(d, 1)) return {q1, p1, static_cast<int>(nm.get_si())};
        }
        const BigInt& a = cf.term(i);
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = std::move(p1);
        q0 = std::move(q1);
        p1 = std::move(p2);
        q1 = std::move(q2);
    }
    throw ArithError("fundamental unit search exceeded iteration cap");
}

}  // namespace inoue
