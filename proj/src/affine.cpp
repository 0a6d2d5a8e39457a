#include "inoue/affine.hpp"

#include <cmath>

namespace inoue {

namespace {

QuadElem qzero(const CompatContext& ctx) { return QuadElem(ctx.alpha.alpha.d(), 0); }

ExactComplex creal(const QuadElem& x) { return ExactComplex::real(x); }

BigRat choose2(const BigInt& k) { return make_rat(k * (k - 1), 2); }

}  // namespace

ExactMap g_i_of(const QuadElem& a, const QuadElem& b, const QuadElem& c) {
    ExactMap m = ExactMap::identity(a);
    m.lambda = creal(b);
    m.u = a;
    m.zeta = creal(c);
    return m;
}

ExactMap g3_of(const QVec2& a, const QVec2& b, const BigInt& r) {
    QuadElem w = b[0] * a[1] - b[1] * a[0];
    return ExactMap::translation(zero_like(w), creal(w * make_rat(1, r)));
}

ExactGenerators build_generators(const CompatContext& ctx, const QVec2& c, const ExactComplex& t) {
    if (!is_compatible(ctx, c)) throw ArithError("triple (a, b, c) is not compatible");
    ExactGenerators gs;
    gs.ctx = ctx;
    gs.c = c;
    QuadElem z = qzero(ctx);
    gs.t = ctx.alpha.kind == Kind::plus ? t : ExactComplex{z, z};
    ExactMap g0 = ExactMap::identity(z);
    g0.mu = ctx.alpha.alpha;
    if (ctx.alpha.kind == Kind::plus) g0.zeta = gs.t;
    else g0.nu = creal(-one_like(z));
    gs.g[0] = g0;
    for (std::size_t i = 0; i < 2; ++i) gs.g[i + 1] = g_i_of(ctx.ep.a[i], ctx.ep.b[i], c[i]);
    gs.g[3] = g3_of(ctx.ep.a, ctx.ep.b, ctx.r);
    return gs;
}

ExactGenerators build_generators(const CompatContext& ctx, const IVec2& p) {
    QuadElem z = qzero(ctx);
    return build_generators(ctx, compat_c_from_p(ctx, p), {z, z});
}

std::optional<NormalForm> read_normal_form(const ExactMap& f, const ExactGenerators& gs) {
    const CompatContext& ctx = gs.ctx;
    const QuadElem& al = ctx.alpha.alpha;
    QuadElem one = one_like(al);
    // mu = alpha^l
    NormalForm nf;
    QuadElem m = f.mu;
    if (m.sign() <= 0) return std::nullopt;
    for (int guard = 0; m > one && guard < 100000; ++guard, ++nf.l) m = m / al;
    for (int guard = 0; m < one && guard < 100000; ++guard, --nf.l) m = m * al;
    if (!(m == one)) return std::nullopt;
    ExactMap h = gs.g[0].pow(-nf.l) * f;
    if (!equal(h.nu, creal(one)) || !(h.mu == one)) return std::nullopt;
    if (!h.lambda.im.is_zero()) return std::nullopt;
    const QVec2& a = ctx.ep.a;
    const QVec2& b = ctx.ep.b;
    // [a1 a2; b1 b2] (n1, n2) = (u, lambda)
    QuadElem d = a[0] * b[1] - a[1] * b[0];
    QuadElem n1 = (h.u * b[1] - a[1] * h.lambda.re) / d;
    QuadElem n2 = (a[0] * h.lambda.re - h.u * b[0]) / d;
    if (!n1.is_integer() || !n2.is_integer()) return std::nullopt;
    nf.n1 = n1.a().get_num();
    nf.n2 = n2.a().get_num();
    ExactMap rest = (gs.g[1].pow(nf.n1.get_si()) * gs.g[2].pow(nf.n2.get_si())).inverse() * h;
    if (!in_translations0(rest) || !rest.zeta.im.is_zero()) return std::nullopt;
    QuadElem kq = rest.zeta.re / gs.g[3].zeta.re;
    if (!kq.is_integer()) return std::nullopt;
    nf.k = kq.a().get_num();
    if (!equal(expand(nf, gs), f)) return std::nullopt;
    return nf;
}

ExactMap expand(const NormalForm& nf, const ExactGenerators& gs) {
    return gs.g[0].pow(nf.l) * gs.g[1].pow(nf.n1.get_si()) * gs.g[2].pow(nf.n2.get_si()) * gs.g[3].pow(nf.k.get_si());
}

NormalForm normal_form(const Word& w, const ExactGenerators& gs) {
    ExactMap f = evaluate(w, gs);
    auto nf = read_normal_form(f, gs);
    if (!nf) throw InvariantViolation("word does not reduce to a normal form");
    return *nf;
}

RelationReport verify_relations(const ExactGenerators& gs) {
    RelationReport rep;
    const auto& g = gs.g;
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checked;
        if (!ok) {
            rep.ok = false;
            rep.findings.push_back(what);
        }
    };
    check(equal(g[1].inverse() * g[2].inverse() * g[1] * g[2], g[3].pow(gs.ctx.r.get_si())),
          "[g1,g2] != g3^r");
    for (int i = 1; i <= 2; ++i) check(equal(g[i] * g[3], g[3] * g[i]), "g" + std::to_string(i) + " g3 != g3 g" + std::to_string(i));
    if (gs.ctx.alpha.kind == Kind::plus) check(equal(g[0] * g[3], g[3] * g[0]), "g0 g3 != g3 g0");
    else check(equal(g[0] * g[3] * g[0].inverse(), g[3].inverse()), "g0 g3 g0^-1 != g3^-1");

    rep.exponents = IMat(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        ExactMap X = g[0] * g[i + 1] * g[0].inverse();
        auto nf = read_normal_form(X, gs);
        check(nf && nf->l == 0, "g0 g" + std::to_string(i + 1) + " g0^-1 is not in <g1,g2,g3>");
        if (!nf) continue;
        rep.exponents(i, 0) = nf->n1;
        rep.exponents(i, 1) = nf->n2;
        rep.p[i] = nf->k;
    }
    check(rep.exponents == gs.ctx.N, "read-back exponents differ from N");
    rep.p_matches = rep.p == compat_p_from_c(gs.ctx, gs.c);
    check(rep.p_matches, "read-back p differs from p(a,b,c,r)");
    return rep;
}

// ---------------------------------------------------------------- type I

namespace {

// Solves the 3x3 real system rows . x = rhs in long double.
std::array<long double, 3> solve3(long double A[3][3], std::array<long double, 3> y) {
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::fabs(A[r][c]) > std::fabs(A[p][c])) p = r;
        std::swap(A[c], A[p]);
        std::swap(y[c], y[p]);
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            long double m = A[r][c] / A[c][c];
            for (int k = 0; k < 3; ++k) A[r][k] -= m * A[c][k];
            y[r] -= m * y[c];
        }
    }
    return {y[0] / A[0][0], y[1] / A[1][1], y[2] / A[2][2]};
}

// Integer coefficients m with sum m_j (a_j, b_j) = (x, y), certified.
std::optional<std::array<BigInt, 3>> read_translation(const BallGenerators& gs, const BallMap& T) {
    long double A[3][3];
    for (int j = 0; j < 3; ++j) {
        A[0][j] = gs.a[static_cast<std::size_t>(j)].mid();
        A[1][j] = gs.b[static_cast<std::size_t>(j)].re.mid();
        A[2][j] = gs.b[static_cast<std::size_t>(j)].im.mid();
    }
    auto x = solve3(A, {T.u.mid(), T.zeta.re.mid(), T.zeta.im.mid()});
    std::array<BigInt, 3> m;
    for (int j = 0; j < 3; ++j) {
        long double v = std::round(x[static_cast<std::size_t>(j)]);
        if (!std::isfinite(v) || std::fabs(v) > 9e15L) return std::nullopt;
        m[static_cast<std::size_t>(j)] = BigInt(static_cast<double>(v));
    }
    BallMap back = gs.g[1].pow(m[0].get_si()) * gs.g[2].pow(m[1].get_si()) * gs.g[3].pow(m[2].get_si());
    if (!equal(back, T)) return std::nullopt;
    return m;
}

}  // namespace

BallGenerators build_type1_generators(const CubicInput& P, const IMat& H, mpfr_prec_t prec) {
    CubicDiagnosis diag = admissible_cubic(P.theta2, P.theta1);
    if (!diag.admissible) throw ArithError("inadmissible cubic: " + diag.reason);
    if (!is_alpha_stable(P, H)) throw ArithError("ideal basis is not alpha-stable");
    BallGenerators gs;
    gs.P = P;
    gs.H = H;
    // X = H^{-1} A H by back-substitution on the upper-triangular H.
    IMat AH = companion_matrix(P) * H;
    IMat X(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        BigInt v[3] = {AH(0, j), AH(1, j), AH(2, j)};
        for (std::size_t i = 3; i-- > 0;) {
            if (!mpz_divisible_p(v[i].get_mpz_t(), H(i, i).get_mpz_t()))
                throw InvariantViolation("multiplication matrix on the ideal is not integral");
            X(i, j) = v[i] / H(i, i);
            for (std::size_t r = 0; r <= i; ++r) v[r] -= X(i, j) * H(r, i);
        }
    }
    gs.M = X.transpose();
    gs.roots = refine_cubic_roots(P.theta2, P.theta1, prec);
    const Interval& al = gs.roots.alpha;
    Complex<Interval> be{gs.roots.beta_re, gs.roots.beta_im};
    Interval one(1L, prec), zero(0L, prec);
    std::array<Interval, 3> pa{one, al, al * al};
    std::array<Complex<Interval>, 3> pb{Complex<Interval>{one, zero}, be, be * be};
    for (std::size_t j = 0; j < 3; ++j) {
        gs.a[j] = zero;
        gs.b[j] = {zero, zero};
        for (std::size_t i = 0; i < 3; ++i) {
            Interval h(H(i, j), prec);
            gs.a[j] = gs.a[j] + h * pa[i];
            gs.b[j] = gs.b[j] + h * pb[i];
        }
    }
    BallMap g0 = BallMap::identity(one);
    g0.mu = al;
    g0.nu = be;
    gs.g[0] = g0;
    for (std::size_t j = 0; j < 3; ++j) gs.g[j + 1] = BallMap::translation(gs.a[j], gs.b[j]);
    // |beta|^-2 = alpha
    if (!scalar_eq(one / (be.re * be.re + be.im * be.im), al)) throw InvariantViolation("|beta|^-2 != alpha");
    return gs;
}

RelationReport verify_relations(const BallGenerators& gs) {
    RelationReport rep;
    const auto& g = gs.g;
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checked;
        if (!ok) {
            rep.ok = false;
            rep.findings.push_back(what);
        }
    };
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            check(equal(g[i] * g[j], g[j] * g[i]), "g" + std::to_string(i) + " and g" + std::to_string(j) + " do not commute");
    rep.exponents = IMat(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        BallMap X = g[0] * g[i + 1] * g[0].inverse();
        auto m = in_translations(X) ? read_translation(gs, X) : std::nullopt;
        check(m.has_value(), "g0 g" + std::to_string(i + 1) + " g0^-1 is not a certified word in g1,g2,g3");
        if (!m) continue;
        for (std::size_t j = 0; j < 3; ++j) rep.exponents(i, j) = (*m)[j];
    }
    check(rep.exponents == gs.M, "read-back exponents differ from M");
    return rep;
}

std::optional<NormalFormI> read_normal_form(const BallMap& f, const BallGenerators& gs) {
    long double la = std::log(gs.roots.alpha.mid());
    long double lm = std::log(f.mu.mid());
    long double k0 = std::round(lm / la);
    if (!std::isfinite(k0) || std::fabs(k0) > 1e6L) return std::nullopt;
    NormalFormI nf;
    nf.k0 = static_cast<long>(k0);
    BallMap T = f * gs.g[0].pow(-nf.k0);
    if (!in_translations(T)) return std::nullopt;
    auto m = read_translation(gs, T);
    if (!m) return std::nullopt;
    nf.k1 = (*m)[0];
    nf.k2 = (*m)[1];
    nf.k3 = (*m)[2];
    if (!equal(expand(nf, gs), f)) return std::nullopt;
    return nf;
}

BallMap expand(const NormalFormI& nf, const BallGenerators& gs) {
    return gs.g[3].pow(nf.k3.get_si()) * gs.g[2].pow(nf.k2.get_si()) * gs.g[1].pow(nf.k1.get_si()) * gs.g[0].pow(nf.k0);
}

NormalFormI normal_form(const Word& w, const BallGenerators& gs) {
    BallMap f = evaluate(w, gs);
    auto nf = read_normal_form(f, gs);
    if (!nf) throw InvariantViolation("word does not reduce to a certified normal form");
    return *nf;
}

// ---------------------------------------------------------------- conjugation lemma

TauReport verify_tau_conjugation(const CompatContext& ctx, const QVec2& c, const ExactComplex& t, const IVec2& k,
                                 const BigInt& s0, const IVec2& s, const TauOptions& opt) {
    TauReport rep;
    const QuadElem& al = ctx.alpha.alpha;
    const QVec2& a = ctx.ep.a;
    const QVec2& b = ctx.ep.b;
    const QuadElem& wba = ctx.ep.wedge_ba;
    QuadElem zero = qzero(ctx), one = one_like(zero);
    QuadElem wr = wba * make_rat(1, ctx.r);
    QuadElem ka = dot(k, a), kb = dot(k, b);
    QuadElem zeta_h = dot(k, c) + a[0] * b[0] * choose2(k[0]) + a[1] * b[1] * choose2(k[1]) +
                      b[0] * a[1] * BigRat(k[0] * k[1]) + wr * BigRat(s0);
    const bool plus = ctx.alpha.kind == Kind::plus;

    // Closed forms of condition (ii).
    rep.u = al * ka / (one - al);
    if (plus) {
        rep.lambda = kb / (al - one);
        rep.zeta = opt.zeta_type2 ? *opt.zeta_type2 : ExactComplex{zero, zero};
        for (std::size_t i = 0; i < 2; ++i)
            rep.c_prime[i] = c[i] - al * ka / (al - one) * b[i] - kb / (al - one) * a[i] + wr * BigRat(s[i]);
        rep.t_prime = t + creal(al * ka * kb / (one - al) + zeta_h);
    } else {
        rep.lambda = -kb / (one + al);
        for (std::size_t i = 0; i < 2; ++i)
            rep.c_prime[i] = c[i] + kb / (one + al) * a[i] + al * ka / (one - al) * b[i] + wr * BigRat(s[i]);
        rep.t_prime = {zero, zero};
    }
    if (opt.lambda) rep.lambda = *opt.lambda;
    if (!plus) rep.zeta = creal((rep.lambda * rep.u * (one + al) - zeta_h) * make_rat(1, 2));

    ExactMap tau = ExactMap::identity(zero);
    tau.lambda = creal(rep.lambda);
    tau.u = rep.u;
    tau.zeta = rep.zeta;
    ExactMap tinv = tau.inverse();

    ExactGenerators G = build_generators(ctx, c, t);
    const auto& g = G.g;
    // G' shares a, b, r; its c', t' may fail compatibility only if the lemma is violated.
    std::array<ExactMap, 4> gp;
    gp[0] = g[0];
    if (plus) gp[0].zeta = rep.t_prime;
    for (std::size_t i = 0; i < 2; ++i) gp[i + 1] = g_i_of(a[i], b[i], rep.c_prime[i]);
    gp[3] = g[3];

    // (ii) => (i)
    ExactMap R = g[0] * g[1].pow(k[0].get_si()) * g[2].pow(k[1].get_si()) * g[3].pow(s0.get_si());
    std::vector<std::string> bad;
    if (!equal(tau * gp[0] * tinv, R)) bad.push_back("tau g0' tau^-1");
    for (std::size_t i = 0; i < 2; ++i)
        if (!equal(tau * gp[i + 1] * tinv, g[i + 1] * g[3].pow(s[i].get_si())))
            bad.push_back("tau g" + std::to_string(i + 1) + "' tau^-1");
    if (!equal(tau * gp[3] * tinv, g[3])) bad.push_back("tau g3' tau^-1");
    rep.forward = bad.empty();

    // (i) => (ii): solve tau g0' = R tau for tau, then read c', t' off the other relations.
    QuadElem nuR = R.nu.re;
    QuadElem lam = R.lambda.re / (al - nuR);
    QuadElem u = R.u / (one - al);
    ExactComplex zeta = plus ? rep.zeta : creal((R.lambda.re * u + R.zeta.re) / (one - nuR));
    ExactMap tau2 = ExactMap::identity(zero);
    tau2.lambda = creal(lam);
    tau2.u = u;
    tau2.zeta = zeta;
    bool back = lam == rep.lambda && u == rep.u && equal(zeta, rep.zeta);
    if (plus) {
        ExactComplex tp = creal(R.lambda.re * u) + R.zeta;
        back = back && equal(tp, rep.t_prime);
    }
    for (std::size_t i = 0; i < 2; ++i) {
        ExactMap X = tau2.inverse() * g[i + 1] * g[3].pow(s[i].get_si()) * tau2;
        bool shape = in_aff11(X) && equal(X.lambda, creal(b[i])) && X.u == a[i] && X.zeta.im.is_zero();
        back = back && shape && X.zeta.re == rep.c_prime[i];
    }
    rep.backward = back;
    if (!rep.backward) bad.push_back("solved tau differs from the closed form");
    for (const auto& m : bad) rep.mismatch += (rep.mismatch.empty() ? "" : "; ") + m;
    return rep;
}

AbcTriple abc_action(const CompatContext& ctx, const QVec2& c, const IMat& K) {
    const QVec2& a = ctx.ep.a;
    const QVec2& b = ctx.ep.b;
    AbcTriple r;
    r.A = mat_vec(K, a);
    r.B = mat_vec(K, b);
    QVec2 shifted{c[0] - a[0] * b[0] * make_rat(1, 2), c[1] - a[1] * b[1] * make_rat(1, 2)};
    QVec2 Ks = mat_vec(K, shifted);
    QuadElem h = ctx.ep.wedge_ba * make_rat(1, 2);
    for (std::size_t i = 0; i < 2; ++i)
        r.C[i] = r.A[i] * r.B[i] * make_rat(1, 2) + Ks[i] + h * BigRat(K(i, 0) * K(i, 1));
    return r;
}

bool verify_abc_bridge(const CompatContext& ctx, const QVec2& c, const IMat& K) {
    BigInt d = det(K);
    if (d != 1 && d != -1) throw ArithError("K is not in GL(2,Z)");
    QuadElem z = qzero(ctx);
    ExactGenerators G = build_generators(ctx, c, {z, z});
    const auto& g = G.g;
    AbcTriple abc = abc_action(ctx, c, K);
    for (std::size_t i = 0; i < 2; ++i) {
        ExactMap Gi = g[1].pow(K(i, 0).get_si()) * g[2].pow(K(i, 1).get_si());
        if (!equal(Gi, g_i_of(abc.A[i], abc.B[i], abc.C[i]))) return false;
    }
    return equal(g[3].pow(d.get_si()), g3_of(abc.A, abc.B, ctx.r));
}

}  // namespace inoue
