// Acceptance checks: one [PASS]/[FAIL] line per criterion.

#include "inoue/affine.hpp"
#include "inoue/centralizer.hpp"
#include "inoue/conjugacy.hpp"
#include "inoue/cubic.hpp"
#include "inoue/moduli.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace inoue;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

oracle::M2 to_m2(const IMat& m) { return {m(0, 0).get_si(), m(0, 1).get_si(), m(1, 0).get_si(), m(1, 1).get_si()}; }
IMat from_m2(const oracle::M2& m) { return IMat{{m[0], m[1]}, {m[2], m[3]}}; }

std::string vstr(const IVec2& v) { return "(" + v[0].get_str() + "," + v[1].get_str() + ")"; }

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        body();
    } catch (const Failure& f) {
        ok = false;
        detail = f.what;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && dt > budget_s) {
        ok = false;
        detail = "over budget of " + std::to_string(budget_s) + " s";
    }
    if (!ok) ++failures;
    std::printf("[%s] %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), dt, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
}

void theta3_golden() {
    const IMat N0{{1, 1}, {1, 2}};
    for (long r = 1; r <= 10; ++r) {
        ClassReport rep = classify(3, r, Kind::plus);
        require(rep.classes.size() == 1, "theta=3 class count");
        const ClassEntry& e = rep.classes[0];
        require(are_similar(e.N, N0).status == SimilarityVerdict::Status::similar, "representative not similar to N0");
        require(e.quotient_order == 1, "|Z_{N,r}| != 1");
        require(e.orbits.size() == 1, "orbit count");
        require(e.orbits[0].component == Component::C, "component is not C");
        require(e.gen.K * e.gen.K == e.N && e.gen.eps == -1, "generator is not a det -1 square root of N");
        require(rep.total_orbits() == 1, "deformation classes");
    }
}

void theta4_golden() {
    for (long r = 1; r <= 10; ++r) {
        ClassReport rep = classify(4, r, Kind::plus);
        require(rep.classes.size() == 1, "theta=4 class count");
        const ClassEntry& e = rep.classes[0];
        long g = std::gcd(2L, r);
        require(rep.total_orbits() == g, "orbit count r=" + std::to_string(r));
        for (const auto& o : e.orbits) require(o.component == Component::Cstar, "component is not Cstar");
        SNFResult s = smith_normal_form(hstack(shifted_matrix(e.N, Kind::plus), BigInt(r) * IMat::identity(2)));
        auto d = s.divisors();
        require(d[0] == 1 && d[1] == g, "SNF divisors");
        oracle::M2 A = to_m2(shifted_matrix(e.N, Kind::plus));
        require(oracle::orbit_count(A, r, to_m2(e.gen.K)) == g, "brute-force orbit count");
    }
}

void cubic_golden() {
    require(cubic_disc(2, -2) == -83, "disc(2,-2)");
    require(cubic_disc(8, 0) == -2075, "disc(8,0)");
    require(order_index_ratio({8, 0}, {2, -2}) == 5, "index ratio");
}

void centralizer_conformance() {
    long checked = 0;
    for (long t = 3; t <= 8; ++t)
        for (const auto& cls : similarity_classes(t, 1)) {
            const IMat& N = cls.representative;
            if (oracle::gcd3(N(0, 1).get_si(), N(1, 0).get_si(), BigInt(N(1, 1) - N(0, 0)).get_si()) != 1) continue;
            CentralizerGen g = positive_centralizer_generator(N);
            if (t > 3) require(g.K == N && g.eps == 1, "case (2) for " + N.str());
            else require(g.K * g.K == N && g.eps == -1, "case (3) for " + N.str());
            CentralizerLattice lat = centralizer_lattice(N);
            long long tb = BigInt(lat.B(0, 0) + lat.B(1, 1)).get_si(), nb = det(lat.B).get_si();
            auto best = oracle::smallest_unit(tb, nb, 1000);
            require(best.has_value(), "no unit in box");
            IMat K = BigInt(static_cast<long>(best->x)) * lat.B + BigInt(static_cast<long>(best->y)) * IMat::identity(2);
            require(K == g.K, "brute force finds a different minimal unit for " + N.str());
            ++checked;
        }
    require(checked > 0, "no matrices checked");
}

void suite_a() {
    // pi(k.c) = pi(c) + r(-k2, k1).
    for (long t = 3; t <= 6; ++t)
        for (const auto& cls : similarity_classes(t, 1))
            for (long r = 1; r <= 4; ++r) {
                CompatContext ctx = make_context(cls.representative, r, Kind::plus);
                IVec2 p{1, -1};
                QVec2 c = compat_c_from_p(ctx, p);
                for (long k1 = -2; k1 <= 2; ++k1)
                    for (long k2 = -2; k2 <= 2; ++k2) {
                        IVec2 q = compat_p_from_c(ctx, k_dot_c(ctx, c, {k1, k2}));
                        require(q == IVec2{p[0] - r * k2, p[1] + r * k1}, "pi law at k=" + vstr({k1, k2}));
                    }
            }
    // N^j acts trivially.
    for (long t = 3; t <= 8; ++t)
        for (const auto& cls : similarity_classes(t, 1))
            for (long r = 1; r <= 6; ++r) {
                const IMat& N = cls.representative;
                FiniteQuotient Q(shifted_matrix(N, Kind::plus), r);
                for (long j = 1; j <= 3; ++j)
                    for (const auto& p : Q.representatives())
                        require(star_action(mat_pow(N, j), p, Q) == p, "N^j moves " + vstr(p));
            }
    // First term of the K*[p] formula lies in rZ^2: its bracket is even.
    for (long t = 3; t <= 8; ++t)
        for (const auto& cls : similarity_classes(t, 1)) {
            const IMat& N = cls.representative;
            CentralizerGen g = positive_centralizer_generator(N);
            for (long m = -3; m <= 3; ++m) {
                oracle::V2 v = oracle::star_bracket(to_m2(mat_pow(g.K, m)), to_m2(N));
                require(v[0] % 2 == 0 && v[1] % 2 == 0, "odd bracket for " + N.str());
            }
        }
    // k in delta Z^2: k ._c t - t in (b^a / r) Z.
    for (long t = 3; t <= 6; ++t)
        for (const auto& cls : similarity_classes(t, 1))
            for (long r = 1; r <= 4; ++r) {
                CompatContext ctx = make_context(cls.representative, r, Kind::plus);
                QVec2 c = compat_c_from_p(ctx, {2, 1});
                QuadElem t0(ctx.alpha.d, make_rat(1, 7), 2);
                long delta = 2 - t;
                for (long m1 = -2; m1 <= 2; ++m1)
                    for (long m2 = -2; m2 <= 2; ++m2) {
                        QuadElem q = (k_dot_t(ctx, c, t0, {delta * m1, delta * m2}) - t0) / ctx.ep.wedge_ba;
                        require(q.is_rational(), "shift is not a rational multiple of b^a");
                        BigRat qr = q.a() * r;
                        require(qr.get_den() == 1, "shift not in (b^a / r) Z");
                    }
            }
}

void suite_b() {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 500; ++i) {
        oracle::M2 K = oracle::random_gl2(rng, 12), L = oracle::random_gl2(rng, 12);
        oracle::V2 lhs = oracle::mod2_lhs(K, L);
        require(lhs[0] % 2 == 0 && lhs[1] % 2 == 0, "left side not in 2Z^2");
        require(lhs == oracle::mod2_rhs(K, L), "left and right sides differ");
    }
}

void suite_c() {
    long type2 = 0, type3 = 0;
    for (long t = 3; t <= 6 && type2 < 20; ++t)
        for (const auto& cls : similarity_classes(t, 1))
            for (long r = 1; r <= 4 && type2 < 20; ++r)
                for (IVec2 p : {IVec2{0, 0}, IVec2{1, 2}}) {
                    if (type2 >= 20) break;
                    CompatContext ctx = make_context(cls.representative, r, Kind::plus);
                    RelationReport rep = verify_relations(build_generators(ctx, p));
                    require(rep.ok && rep.p == p, "type II relations at theta=" + std::to_string(t));
                    ++type2;
                }
    for (long t = 1; t <= 6 && type3 < 10; ++t)
        for (const auto& cls : similarity_classes(t, -1))
            for (long r = 1; r <= 4 && type3 < 10; r += 3) {
                CompatContext ctx = make_context(cls.representative, r, Kind::minus);
                IVec2 p{1, 1};
                RelationReport rep = verify_relations(build_generators(ctx, p));
                require(rep.ok && rep.p == p, "type III relations at theta=" + std::to_string(t));
                ++type3;
            }
    require(type2 == 20 && type3 == 10, "sample counts");
    std::mt19937_64 rng(77);
    CompatContext ctx = make_context(IMat{{1, 2}, {1, 3}}, 3, Kind::plus);
    QVec2 c = compat_c_from_p(ctx, {1, 2});
    for (int i = 0; i < 50; ++i) {
        IMat K = from_m2(oracle::random_gl2(rng, 6));
        require(verify_abc_bridge(ctx, c, K), "ABC bridge for K=" + K.str());
    }
}

void oracle_agreement() {
    const long box = 20, graph_box = 200;
    for (int d : {1, -1})
        for (long t = d == 1 ? 3 : 1; t <= 6; ++t) {
            auto cls = similarity_classes(t, d);
            oracle::ConjugationGraph G(t, d, graph_box);
            std::vector<std::size_t> comp;
            for (const auto& c : cls) {
                oracle::M2 m = to_m2(c.representative);
                require(G.contains(m), "representative outside the search box");
                comp.push_back(G.component(m));
            }
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j)
                    require(comp[i] != comp[j], "cross-class certificate at trace " + std::to_string(t));
            long corpus = 0;
            for (const auto& m : G.nodes()) {
                if (std::abs(m[0]) > box || std::abs(m[1]) > box || std::abs(m[2]) > box || std::abs(m[3]) > box)
                    continue;
                ++corpus;
                std::size_t cm = G.component(m);
                long hits = static_cast<long>(std::count(comp.begin(), comp.end(), cm));
                require(hits == 1, "matrix " + from_m2(m).str() + " certified into " + std::to_string(hits) + " classes");
                // Library verdicts against every representative.
                IMat M = from_m2(m);
                long similar = 0;
                for (std::size_t i = 0; i < cls.size(); ++i) {
                    SimilarityVerdict v = are_similar(cls[i].representative, M);
                    if (v.status == SimilarityVerdict::Status::similar) {
                        ++similar;
                        require(v.conjugator.has_value(), "similar verdict without conjugator");
                        oracle::M2 K = to_m2(*v.conjugator);
                        require(oracle::det(K) == 1 || oracle::det(K) == -1, "conjugator not unimodular");
                        require(oracle::conj(K, to_m2(cls[i].representative)) == m, "conjugator fails");
                        require(comp[i] == cm, "library and oracle disagree on " + M.str());
                    } else {
                        require(v.status == SimilarityVerdict::Status::not_similar, "inconclusive verdict on " + M.str());
                    }
                }
                require(similar == 1, "matrix " + M.str() + " similar to " + std::to_string(similar) + " representatives");
            }
            require(corpus > 0, "empty corpus");
        }
}

void type3_sanity() {
    for (long r = 1; r <= 10; ++r) {
        ClassReport r1 = classify(1, r, Kind::minus);
        require(r1.classes.size() == 1 && r1.total_orbits() == 1, "theta=1 count at r=" + std::to_string(r));
        require(r1.classes[0].quotient_order == 1, "theta=1 quotient");
        ClassReport r2 = classify(2, r, Kind::minus);
        long g = std::gcd(2L, r);
        BigInt orbits = 0;
        for (const auto& e : r2.classes) {
            require(e.quotient_order == g, "theta=2 |Z_{N,r}| at r=" + std::to_string(r));
            oracle::M2 A = to_m2(shifted_matrix(e.N, Kind::minus));
            require(oracle::quotient_order(A, r) == g, "brute-force quotient order");
            long long oc = oracle::orbit_count(A, r, to_m2(e.gen.K));
            require(static_cast<long long>(e.orbits.size()) == oc, "orbit count disagrees with brute force");
            orbits += static_cast<long>(oc);
        }
        require(r2.total_orbits() == orbits, "theta=2 total");
    }
}

void ideal_stability() {
    for (auto [t2, t1] : {std::pair{2L, -2L}, std::pair{8L, 0L}}) {
        CubicInput P{t2, t1};
        long b = default_norm_bound(cubic_disc(t2, t1));
        IdealClassResult r1 = ideal_classes_at(P, b), r2 = ideal_classes_at(P, 2 * b), r4 = ideal_classes_at(P, 4 * b);
        require(r1.h == r2.h && r2.h == r4.h, "h changes with the bound");
        require(r1.unproven_separations == 0 && r2.unproven_separations == 0 && r4.unproven_separations == 0,
                "unproven separation");
        // Exhaustive pairwise verdicts at the doubled bound form an equivalence relation matching the classes.
        const auto& ids = r2.ideals;
        std::size_t n = ids.size();
        std::vector<std::vector<int>> eq(n, std::vector<int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                EquivalenceResult e = ideals_equivalent(P, ids[i], ids[j]);
                require(e.verdict != EquivalenceVerdict::inequivalent_search, "pair left undecided");
                eq[i][j] = e.verdict == EquivalenceVerdict::equivalent;
            }
        for (std::size_t i = 0; i < n; ++i) {
            require(eq[i][i], "not reflexive");
            for (std::size_t j = 0; j < n; ++j) {
                require(eq[i][j] == eq[j][i], "not symmetric");
                require(eq[i][j] == (r2.class_of[i] == r2.class_of[j]), "verdict disagrees with the class labels");
                for (std::size_t k = 0; k < n; ++k)
                    if (eq[i][j] && eq[j][k]) require(eq[i][k], "not transitive");
            }
        }
        TypeIReport rep = classify_type1(t2, t1);
        require(rep.biholo_count == 2 * r1.h, "2h count");
        std::printf("  type I (%ld,%ld): disc %s, h = %ld, 2h = %ld\n", t2, t1, rep.disc.get_str().c_str(), rep.h,
                    rep.biholo_count);
    }
}

}  // namespace

int main() {
    criterion("theta3_golden", 1.0, theta3_golden);
    criterion("theta4_golden", 1.0, theta4_golden);
    criterion("cubic_golden", 0.1, cubic_golden);
    criterion("centralizer_conformance", 30.0, centralizer_conformance);
    criterion("suite_a_actions", 10.0, suite_a);
    criterion("suite_b_mod2_congruence", 5.0, suite_b);
    criterion("suite_c_relations", 60.0, suite_c);
    criterion("oracle_agreement", 300.0, oracle_agreement);
    criterion("type3_sanity", 1.0, type3_sanity);
    criterion("ideal_class_stability", 300.0, ideal_stability);
    return failures == 0 ? 0 : 1;
}
