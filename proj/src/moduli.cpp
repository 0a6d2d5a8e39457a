#include "inoue/moduli.hpp"

#include <numeric>

namespace inoue {

BigInt ClassReport::total_orbits() const {
    BigInt n = 0;
    for (const auto& c : classes) n += static_cast<unsigned long>(c.orbits.size());
    return n;
}

const char* kind_name(Kind k) { return k == Kind::plus ? "plus" : "minus"; }

const char* component_name(Component c) { return c == Component::C ? "C" : "Cstar"; }

std::string component_description(Component c) {
    if (c == Component::C) return "t-parameter line folded by an orientation-reversing centraliser element; component is C";
    return "t-parameter line modulo translations only; component is C*";
}

AdmissibleAlpha admissible_alpha(const BigInt& theta, Kind kind) {
    if (kind == Kind::plus && theta < 3) throw ArithError("type II needs theta >= 3");
    if (kind == Kind::minus && theta < 1) throw ArithError("type III needs theta >= 1");
    BigInt D = theta * theta;
    D += kind == Kind::plus ? -4 : 4;
    BigInt f, s;
    squarefree_split(D, f, s);
    AdmissibleAlpha al;
    al.theta = theta;
    al.kind = kind;
    al.d = s.get_si();
    al.scale = make_rat(f, 2);
    al.alpha = QuadElem(al.d, make_rat(theta, 2), al.scale);
    al.alpha_conj = al.alpha.conj();
    // alpha * alpha' = +-1, so the conjugate root is +-alpha^{-1}.
    if (kind == Kind::plus && !(al.alpha * al.alpha_conj == QuadElem(al.d, 1)))
        throw InvariantViolation("alpha * alpha^{-1} != 1");
    if (kind == Kind::minus && !(al.alpha * al.alpha_conj == QuadElem(al.d, -1)))
        throw InvariantViolation("alpha * conj != -1");
    return al;
}

QVec2 mat_vec(const IMat& A, const QVec2& v) {
    return {v[0] * BigRat(A(0, 0)) + v[1] * BigRat(A(0, 1)), v[0] * BigRat(A(1, 0)) + v[1] * BigRat(A(1, 1))};
}

QuadElem dot(const IVec2& k, const QVec2& v) { return v[0] * BigRat(k[0]) + v[1] * BigRat(k[1]); }

EigenPair canonical_eigenpair(const IMat& N, const AdmissibleAlpha& al) {
    MatrixInvariants inv = matrix_invariants(N);
    int want = al.kind == Kind::plus ? 1 : -1;
    if (inv.trace != al.theta || inv.det != want) throw ArithError("alpha is not an eigenvalue of N");
    if (N(0, 1) == 0) throw ArithError("N has a rational eigenvector");
    BigRat inv12 = make_rat(1, N(0, 1));
    QuadElem one(al.d, 1);
    EigenPair ep;
    ep.a = {one, (al.alpha - BigRat(N(0, 0))) * inv12};
    ep.b = {one, (al.alpha_conj - BigRat(N(0, 0))) * inv12};
    QVec2 Na = mat_vec(N, ep.a), Nb = mat_vec(N, ep.b);
    for (int i = 0; i < 2; ++i)
        if (!(Na[i] == al.alpha * ep.a[i]) || !(Nb[i] == al.alpha_conj * ep.b[i]))
            throw InvariantViolation("eigenvector identity failed");
    ep.wedge_ba = ep.b[0] * ep.a[1] - ep.b[1] * ep.a[0];
    ep.wedge = al.kind == Kind::plus ? ep.wedge_ba : -ep.wedge_ba;
    if (ep.wedge.is_zero()) throw InvariantViolation("eigenvectors are dependent");
    return ep;
}

IMat shifted_matrix(const IMat& N, Kind kind) {
    return kind == Kind::plus ? IMat::identity(2) - N : IMat::identity(2) + N;
}

CompatContext make_context(const IMat& N, const BigInt& r, Kind kind) {
    if (r < 1) throw ArithError("r must be >= 1");
    CompatContext ctx;
    ctx.alpha = admissible_alpha(matrix_invariants(N).trace, kind);
    ctx.N = N;
    ctx.ep = canonical_eigenpair(N, ctx.alpha);
    ctx.r = r;
    return ctx;
}

namespace {

// A^{-1} v for a nonsingular 2x2 integer A.
QVec2 solve2(const IMat& A, const QVec2& v) {
    BigInt dA = det(A);
    if (dA == 0) throw InvariantViolation("I -+ N is singular");
    BigRat s = make_rat(1, dA);
    return {(v[0] * BigRat(A(1, 1)) - v[1] * BigRat(A(0, 1))) * s,
            (v[1] * BigRat(A(0, 0)) - v[0] * BigRat(A(1, 0))) * s};
}

QVec2 half_ab(const EigenPair& ep) {
    BigRat h = make_rat(1, 2);
    return {ep.a[0] * ep.b[0] * h, ep.a[1] * ep.b[1] * h};
}

// (n11 n12, n21 n22) scaled by q.
QVec2 nn_scaled(const IMat& N, const QuadElem& q) {
    return {q * BigRat(N(0, 0) * N(0, 1)), q * BigRat(N(1, 0) * N(1, 1))};
}

QVec2 add(const QVec2& x, const QVec2& y) { return {x[0] + y[0], x[1] + y[1]}; }
QVec2 sub(const QVec2& x, const QVec2& y) { return {x[0] - y[0], x[1] - y[1]}; }

}  // namespace

QVec2 compat_c_from_p(const CompatContext& ctx, const IVec2& p) {
    const QuadElem& w = ctx.ep.wedge;
    QuadElem wr = w * make_rat(1, ctx.r);
    QVec2 rhs = add(nn_scaled(ctx.N, w * make_rat(1, 2)), {wr * BigRat(p[0]), wr * BigRat(p[1])});
    return add(half_ab(ctx.ep), solve2(shifted_matrix(ctx.N, ctx.alpha.kind), rhs));
}

namespace {

// (r / wedge) * [(I -+ N)(c - ab/2) - (wedge/2) nn]
QVec2 p_rational(const CompatContext& ctx, const QVec2& c) {
    const QuadElem& w = ctx.ep.wedge;
    QVec2 q = sub(mat_vec(shifted_matrix(ctx.N, ctx.alpha.kind), sub(c, half_ab(ctx.ep))),
                  nn_scaled(ctx.N, w * make_rat(1, 2)));
    QuadElem f = QuadElem(w.d(), BigRat(ctx.r)) / w;
    return {q[0] * f, q[1] * f};
}

}  // namespace

bool is_compatible(const CompatContext& ctx, const QVec2& c) {
    QVec2 p = p_rational(ctx, c);
    return p[0].is_integer() && p[1].is_integer();
}

IVec2 compat_p_from_c(const CompatContext& ctx, const QVec2& c) {
    QVec2 p = p_rational(ctx, c);
    if (!p[0].is_integer() || !p[1].is_integer()) throw ArithError("c is not compatible with (a,b,r)");
    return {p[0].a().get_num(), p[1].a().get_num()};
}

QVec2 shift_c(const CompatContext& ctx, const QVec2& c, const IVec2& s) {
    QuadElem wr = ctx.ep.wedge * make_rat(1, ctx.r);
    QVec2 v{wr * BigRat(s[0]), wr * BigRat(s[1])};
    return add(c, solve2(shifted_matrix(ctx.N, ctx.alpha.kind), v));
}

QVec2 k_dot_c(const CompatContext& ctx, const QVec2& c, const IVec2& k) {
    const QuadElem& al = ctx.alpha.alpha;
    const EigenPair& ep = ctx.ep;
    QuadElem ka = dot(k, ep.a), kb = dot(k, ep.b);
    QuadElem one(al.d(), 1);
    if (ctx.alpha.kind == Kind::plus) {
        QuadElem fb = al * ka / (al - one);
        QuadElem fa = kb / (al - one);
        return {c[0] - fb * ep.b[0] - fa * ep.a[0], c[1] - fb * ep.b[1] - fa * ep.a[1]};
    }
    QuadElem fa = kb / (one + al);
    QuadElem fb = al * ka / (one - al);
    return {c[0] + fa * ep.a[0] + fb * ep.b[0], c[1] + fa * ep.a[1] + fb * ep.b[1]};
}

QuadElem k_dot_t(const CompatContext& ctx, const QVec2& c, const QuadElem& t, const IVec2& k) {
    if (ctx.alpha.kind != Kind::plus) throw ArithError("k . t is defined for type II only");
    const QuadElem& al = ctx.alpha.alpha;
    const EigenPair& ep = ctx.ep;
    QuadElem ka = dot(k, ep.a), kb = dot(k, ep.b), kc = dot(k, c);
    QuadElem one(al.d(), 1);
    BigInt k1 = k[0], k2 = k[1];
    QuadElem quad = (ep.a[0] * ep.b[0] * BigRat(k1 * (k1 - 1)) + ep.a[1] * ep.b[1] * BigRat(k2 * (k2 - 1))) *
                    make_rat(1, 2);
    return t + al * ka * kb / (one - al) + kc + quad + ep.b[0] * ep.a[1] * BigRat(k1 * k2);
}

IVec2 star_action(const IMat& K, const IVec2& p, const FiniteQuotient& Q) {
    const IMat& A = Q.relation_matrix();
    if (!(K * A == A * K)) throw ArithError("K does not commute with N");
    BigInt e = det(K);
    IVec2 v = mat_vec(K, p);
    v[0] *= e;
    v[1] *= e;
    return Q.reduce(v);
}

long action_period(const IMat& K, const FiniteQuotient& Q) {
    const auto& reps = Q.representatives();
    std::vector<std::size_t> perm(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) perm[i] = Q.index_of(star_action(K, reps[i], Q));
    long period = 1;
    std::vector<bool> seen(reps.size(), false);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        period = std::lcm(period, len);
    }
    return period;
}

Component component_type(const IMat& N, const BigInt& r, const OrbitRecord& orbit, const CentralizerGen& gen,
                         const FiniteQuotient& Q) {
    (void)N;
    (void)r;
    if (gen.eps == 1) return Component::Cstar;
    const IVec2& p = orbit.representatives.front();
    long period = action_period(gen.K, Q);
    // (K*)^m [p] = [p] for some odd m; odd m in [1, 2*period) cover every residue class of odd exponents.
    IVec2 q = p;
    for (long m = 1; m < 2 * period; ++m) {
        q = star_action(gen.K, q, Q);
        if (m % 2 == 1 && q == p) return Component::C;
    }
    return Component::Cstar;
}

ClassReport classify(const BigInt& theta, const BigInt& r, Kind kind) {
    admissible_alpha(theta, kind);
    if (r < 1) throw ArithError("r must be >= 1");
    ClassReport rep;
    rep.theta = theta;
    rep.r = r;
    rep.kind = kind;
    for (const auto& cls : similarity_classes(theta, kind == Kind::plus ? 1 : -1)) {
        ClassEntry e;
        e.N = cls.representative;
        e.gen = positive_centralizer_generator(e.N);
        FiniteQuotient Q = quotient_group(shifted_matrix(e.N, kind), r);
        e.divisors = Q.all_divisors();
        e.quotient_order = Q.order();
        e.action_period = action_period(e.gen.K, Q);
        const auto& reps = Q.representatives();
        std::vector<bool> seen(reps.size(), false);
        std::size_t covered = 0;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (seen[i]) continue;
            OrbitRecord orb;
            IVec2 q = reps[i];
            while (!seen[Q.index_of(q)]) {
                seen[Q.index_of(q)] = true;
                orb.representatives.push_back(q);
                q = star_action(e.gen.K, q, Q);
            }
            covered += orb.representatives.size();
            if (kind == Kind::plus) orb.component = component_type(e.N, r, orb, e.gen, Q);
            e.orbits.push_back(std::move(orb));
        }
        if (BigInt(static_cast<unsigned long>(covered)) != e.quotient_order)
            throw InvariantViolation("orbits do not partition the quotient");
        rep.classes.push_back(std::move(e));
    }
    return rep;
}

}  // namespace inoue
