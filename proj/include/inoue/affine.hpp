#pragma once

#include "inoue/cubic.hpp"
#include "inoue/interval.hpp"
#include "inoue/moduli.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace inoue {

// Scalar helpers shared by the exact and the interval kernels.
inline QuadElem zero_like(const QuadElem& p) { return QuadElem(p.d(), 0); }
inline QuadElem one_like(const QuadElem& p) { return QuadElem(p.d(), 1); }
inline bool scalar_eq(const QuadElem& x, const QuadElem& y) { return x == y; }
inline Interval zero_like(const Interval& p) { return Interval(0L, p.prec()); }
inline Interval one_like(const Interval& p) { return Interval(1L, p.prec()); }
// Certified agreement within 2^-128.
inline bool scalar_eq(const Interval& x, const Interval& y) { return (x - y).within(-128); }

template <class R>
struct Complex {
    R re;
    R im;

    static Complex real(const R& x) { return {x, zero_like(x)}; }
    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
    friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
    friend Complex operator*(const Complex& x, const Complex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Complex operator*(const R& s, const Complex& x) { return {s * x.re, s * x.im}; }
    Complex inverse() const {
        R n = re * re + im * im;
        return {re / n, -im / n};
    }
    friend bool equal(const Complex& x, const Complex& y) { return scalar_eq(x.re, y.re) && scalar_eq(x.im, y.im); }
};

// (w, z) -> (mu w + u, lambda w + nu z + zeta)
template <class R>
struct AffineMap {
    R mu;
    Complex<R> lambda;
    Complex<R> nu;
    R u;
    Complex<R> zeta;

    static AffineMap identity(const R& proto) {
        R z = zero_like(proto), o = one_like(proto);
        return {o, {z, z}, {o, z}, z, {z, z}};
    }
    // Translation (w + u, z + zeta).
    static AffineMap translation(const R& u, const Complex<R>& zeta) {
        AffineMap m = identity(u);
        m.u = u;
        m.zeta = zeta;
        return m;
    }

    friend AffineMap operator*(const AffineMap& f, const AffineMap& g) {
        return {f.mu * g.mu, f.lambda * Complex<R>::real(g.mu) + f.nu * g.lambda, f.nu * g.nu, f.mu * g.u + f.u,
                Complex<R>::real(g.u) * f.lambda + f.nu * g.zeta + f.zeta};
    }

    AffineMap inverse() const {
        R mi = one_like(mu) / mu;
        Complex<R> ni = nu.inverse();
        Complex<R> li = -(ni * Complex<R>::real(mi)) * lambda;
        Complex<R> zi = ni * (Complex<R>::real(u * mi) * lambda - zeta);
        return {mi, li, ni, -(u * mi), zi};
    }

    AffineMap pow(long n) const {
        AffineMap base = n < 0 ? inverse() : *this;
        AffineMap acc = identity(mu);
        for (unsigned long e = n < 0 ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n); e; e >>= 1) {
            if (e & 1) acc = acc * base;
            if (e > 1) base = base * base;
        }
        return acc;
    }

    friend bool equal(const AffineMap& f, const AffineMap& g) {
        return scalar_eq(f.mu, g.mu) && equal(f.lambda, g.lambda) && equal(f.nu, g.nu) && scalar_eq(f.u, g.u) &&
               equal(f.zeta, g.zeta);
    }
};

using ExactMap = AffineMap<QuadElem>;
using BallMap = AffineMap<Interval>;
using ExactComplex = Complex<QuadElem>;

// Subgroups of Aff(U).
template <class R>
bool in_aff1(const AffineMap<R>& f) {
    return equal(f.nu, Complex<R>::real(one_like(f.mu)));
}
template <class R>
bool in_aff11(const AffineMap<R>& f) {
    return in_aff1(f) && scalar_eq(f.mu, one_like(f.mu));
}
template <class R>
bool in_translations(const AffineMap<R>& f) {
    return in_aff11(f) && equal(f.lambda, Complex<R>::real(zero_like(f.mu)));
}
template <class R>
bool in_translations0(const AffineMap<R>& f) {
    return in_translations(f) && scalar_eq(f.u, zero_like(f.mu));
}

// A word is a list of (generator index 0..3, exponent).
using Word = std::vector<std::pair<int, long>>;

// Generators g0..g3 of a type II (plus) or type III (minus) group.
struct ExactGenerators {
    CompatContext ctx;
    QVec2 c;
    ExactComplex t;  // type II only
    std::array<ExactMap, 4> g;
};

ExactGenerators build_generators(const CompatContext& ctx, const QVec2& c, const ExactComplex& t);
ExactGenerators build_generators(const CompatContext& ctx, const IVec2& p);  // c from p, t = 0

ExactMap g_i_of(const QuadElem& a, const QuadElem& b, const QuadElem& c);
ExactMap g3_of(const QVec2& a, const QVec2& b, const BigInt& r);

// Type I: g0 = (alpha w, beta z), g_i = translation by (a_i, b_i), with a = H^T (1, alpha, alpha^2),
// b = H^T (1, beta, beta^2) for an ideal basis H, and M = (H^{-1} A H)^T.
struct BallGenerators {
    CubicInput P;
    IMat H;
    IMat M;
    CubicRootBalls roots;
    std::array<Interval, 3> a;
    std::array<Complex<Interval>, 3> b;
    std::array<BallMap, 4> g;
};

BallGenerators build_type1_generators(const CubicInput& P, const IMat& ideal_hnf = IMat::identity(3),
                                      mpfr_prec_t prec = Interval::default_prec);

template <class Gens>
auto evaluate(const Word& w, const Gens& gs) {
    auto acc = std::decay_t<decltype(gs.g[0])>::identity(gs.g[0].mu);
    for (const auto& [i, e] : w) acc = acc * gs.g[static_cast<std::size_t>(i)].pow(e);
    return acc;
}

struct RelationReport {
    bool ok = true;
    std::vector<std::string> findings;  // failures only
    // Type II/III: n_ij and p_i read back from g0 g_i g0^{-1} = g1^{n_i1} g2^{n_i2} g3^{p_i}.
    // Type I: m_ij read back from g0 g_i g0^{-1} = g1^{m_i1} g2^{m_i2} g3^{m_i3}.
    IMat exponents;
    IVec2 p{};
    bool p_matches = false;
    long checked = 0;
};

RelationReport verify_relations(const ExactGenerators& gs);
RelationReport verify_relations(const BallGenerators& gs);

// g = g0^l g1^n1 g2^n2 g3^k
struct NormalForm {
    long l = 0;
    BigInt n1, n2, k;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};
// g = g3^k3 g2^k2 g1^k1 g0^k0
struct NormalFormI {
    BigInt k3, k2, k1;
    long k0 = 0;
    friend bool operator==(const NormalFormI&, const NormalFormI&) = default;
};

// Reads the exponents back from an element of the group; nullopt if it is not one.
std::optional<NormalForm> read_normal_form(const ExactMap& f, const ExactGenerators& gs);
std::optional<NormalFormI> read_normal_form(const BallMap& f, const BallGenerators& gs);
ExactMap expand(const NormalForm& nf, const ExactGenerators& gs);
BallMap expand(const NormalFormI& nf, const BallGenerators& gs);
// Throws InvariantViolation if the expansion differs from the word.
NormalForm normal_form(const Word& w, const ExactGenerators& gs);
NormalFormI normal_form(const Word& w, const BallGenerators& gs);

struct TauOptions {
    std::optional<ExactComplex> zeta_type2;  // free for type II; 0 if unset
    std::optional<QuadElem> lambda;          // replaces the closed-form lambda
};

struct TauReport {
    bool forward = false;   // (ii) implies (i)
    bool backward = false;  // (i) implies (ii)
    std::string mismatch;
    QuadElem lambda, u;
    ExactComplex zeta;
    QVec2 c_prime;
    ExactComplex t_prime;
};

TauReport verify_tau_conjugation(const CompatContext& ctx, const QVec2& c, const ExactComplex& t, const IVec2& k,
                                 const BigInt& s0, const IVec2& s, const TauOptions& opt = {});

// G1 = g1^k11 g2^k12, G2 = g1^k21 g2^k22, G3 = g3^det K against g_i(A,B,C), g3(A,B,r).
struct AbcTriple {
    QVec2 A, B, C;
};
AbcTriple abc_action(const CompatContext& ctx, const QVec2& c, const IMat& K);
bool verify_abc_bridge(const CompatContext& ctx, const QVec2& c, const IMat& K);

}  // namespace inoue
